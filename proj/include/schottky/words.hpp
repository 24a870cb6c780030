// Copyright 2026 The schottky-lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace schottky {

/// Letter of a word in the free group of rank g. Letters are 0-based:
/// letter i < g is generator i, letter i + g is its inverse. The inverse of
/// letter l is (l + g) mod 2g throughout the library.
using Letter = int;

inline Letter inverse_letter(Letter l, int rank) { return (l + rank) % (2 * rank); }

/// Reduced word: no letter is followed by its inverse. The empty word is the
/// identity.
struct Word {
  std::vector<Letter> letters;

  bool empty() const { return letters.empty(); }
  std::size_t size() const { return letters.size(); }
  Letter back() const { return letters.back(); }
  bool operator==(const Word&) const = default;
  auto operator<=>(const Word&) const = default;
};

bool is_reduced(const Word& w, int rank);

/// Concatenation followed by free reduction.
Word multiply(const Word& u, const Word& v, int rank);
Word inverse(const Word& w, int rank);

/// True iff the image of disk `disk` under w nests strictly inside the
/// cover, i.e. the last letter of w is not `disk`. The empty word is
/// admissible for every disk.
bool is_admissible_for_disk(const Word& w, int disk);

/// 1-based dotted form ("1.3.3"); "e" for the empty word.
std::string to_string(const Word& w);
Word parse_word(const std::string& text, int rank);

/// Number of reduced words of length exactly k: 2g(2g-1)^(k-1), and 1 for k=0.
std::uint64_t reduced_word_count(int rank, int length);
/// Number of reduced words of length at most k (identity included).
std::uint64_t reduced_word_count_upto(int rank, int length);

/// Streams the reduced words of length `length` in lexicographic order of
/// letters without materializing the list.
class ReducedWordStream {
 public:
  ReducedWordStream(int rank, int length, std::vector<Letter> prefix = {});

  /// Advances to the next word; false once exhausted.
  bool next(Word& out);

 private:
  bool advance_from(std::size_t pos);
  int rank_;
  int length_;
  std::size_t fixed_;
  std::vector<Letter> current_;
  bool started_ = false;
  bool done_ = false;
};

std::vector<Word> enumerate_reduced_words(int rank, int length);

/// Depth-first visit of every reduced word of length 1..max_length in
/// lexicographic (prefix) order. The visitor receives the word and a value
/// accumulated along the path: acc(child) = step(acc(parent), letter).
template <class T, class Step, class Visit>
void visit_words(int rank, int max_length, const T& root, Step step, Visit visit,
                 std::vector<Letter> prefix = {}) {
  std::vector<Letter> letters = prefix;
  std::function<void(const T&)> rec = [&](const T& acc) {
    if (static_cast<int>(letters.size()) >= max_length) return;
    for (Letter l = 0; l < 2 * rank; ++l) {
      if (!letters.empty() && l == inverse_letter(letters.back(), rank)) continue;
      letters.push_back(l);
      const T next = step(acc, l);
      visit(letters, next);
      rec(next);
      letters.pop_back();
    }
  };
  rec(root);
}

}  // namespace schottky
