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

#include "schottky/words.hpp"

#include <sstream>
#include <stdexcept>

namespace schottky {

bool is_reduced(const Word& w, int rank) {
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    const Letter l = w.letters[i];
    if (l < 0 || l >= 2 * rank) return false;
    if (i > 0 && l == inverse_letter(w.letters[i - 1], rank)) return false;
  }
  return true;
}

Word multiply(const Word& u, const Word& v, int rank) {
  Word out = u;
  for (Letter l : v.letters) {
    if (!out.letters.empty() && out.letters.back() == inverse_letter(l, rank))
      out.letters.pop_back();
    else
      out.letters.push_back(l);
  }
  return out;
}

Word inverse(const Word& w, int rank) {
  Word out;
  out.letters.reserve(w.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    out.letters.push_back(inverse_letter(*it, rank));
  return out;
}

bool is_admissible_for_disk(const Word& w, int disk) {
  return w.empty() || w.back() != disk;
}

std::string to_string(const Word& w) {
  if (w.empty()) return "e";
  std::string s;
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    if (i) s += '.';
    s += std::to_string(w.letters[i] + 1);
  }
  return s;
}

Word parse_word(const std::string& text, int rank) {
  Word w;
  if (text.empty() || text == "e") return w;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, '.')) {
    const int v = std::stoi(item);
    if (v < 1 || v > 2 * rank) throw std::invalid_argument("letter out of range: " + item);
    w.letters.push_back(v - 1);
  }
  return w;
}

std::uint64_t reduced_word_count(int rank, int length) {
  if (length == 0) return 1;
  std::uint64_t n = 2ULL * rank;
  for (int i = 1; i < length; ++i) n *= 2ULL * rank - 1;
  return n;
}

std::uint64_t reduced_word_count_upto(int rank, int length) {
  std::uint64_t total = 0;
  for (int k = 0; k <= length; ++k) total += reduced_word_count(rank, k);
  return total;
}

ReducedWordStream::ReducedWordStream(int rank, int length, std::vector<Letter> prefix)
    : rank_(rank), length_(length), fixed_(prefix.size()), current_(std::move(prefix)) {
  if (rank < 1 || length < 0) throw std::invalid_argument("rank >= 1 and length >= 0 required");
  if (static_cast<int>(fixed_) > length_) done_ = true;
  if (!is_reduced(Word{current_}, rank_)) done_ = true;
}

// Fill positions pos..length-1 with the lexicographically smallest valid
// letters; returns false if impossible (never for rank >= 1 except rank 1
// edge cases, which still always have one continuation).
bool ReducedWordStream::advance_from(std::size_t pos) {
  current_.resize(pos);
  while (static_cast<int>(current_.size()) < length_) {
    Letter l = 0;
    if (!current_.empty() && l == inverse_letter(current_.back(), rank_)) ++l;
    current_.push_back(l);
  }
  return true;
}

bool ReducedWordStream::next(Word& out) {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    advance_from(current_.size());
    out.letters = current_;
    return true;
  }
  // Odometer: bump the last free position that can still increase.
  for (std::size_t pos = current_.size(); pos-- > fixed_;) {
    Letter l = current_[pos] + 1;
    if (pos > 0 && l == inverse_letter(current_[pos - 1], rank_)) ++l;
    if (l < 2 * rank_) {
      current_[pos] = l;
      advance_from(pos + 1);
      out.letters = current_;
      return true;
    }
  }
  done_ = true;
  return false;
}

std::vector<Word> enumerate_reduced_words(int rank, int length) {
  std::vector<Word> out;
  out.reserve(reduced_word_count(rank, length));
  ReducedWordStream stream(rank, length);
  Word w;
  while (stream.next(w)) out.push_back(w);
  return out;
}

}  // namespace schottky
