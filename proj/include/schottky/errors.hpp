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

#include <stdexcept>
#include <string>

namespace schottky {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Derivative requested at the pole of a map.
class PoleError : public Error {
 public:
  using Error::Error;
};

/// Operation undefined for the identity transformation.
class IdentityError : public Error {
 public:
  using Error::Error;
};

/// The map fixes infinity, so it has no isometric circle.
class CIsZeroError : public Error {
 public:
  using Error::Error;
};

class NonLoxodromicError : public Error {
 public:
  using Error::Error;
};

/// Image of a circle collapsed below representable size.
class DegenerateImage : public Error {
 public:
  using Error::Error;
};

class NonConvergedError : public Error {
 public:
  using Error::Error;
};

class NoPairingError : public Error {
 public:
  using Error::Error;
};

class DegenerateFit : public Error {
 public:
  using Error::Error;
};

class DisjointnessError : public Error {
 public:
  using Error::Error;
};

class OrderingError : public Error {
 public:
  using Error::Error;
};

class InconsistentSequence : public Error {
 public:
  using Error::Error;
};

/// A candidate classical domain failed one of the three checks. `index`
/// names the offending circle or generator (0-based).
class ClassicalityViolation : public Error {
 public:
  enum class Kind { Disjointness, Pairing, Orientation };

  ClassicalityViolation(Kind kind, int index, int other, const std::string& what)
      : Error(what), kind_(kind), index_(index), other_(other) {}

  Kind kind() const noexcept { return kind_; }
  int index() const noexcept { return index_; }
  /// Second circle of a disjointness violation, -1 otherwise.
  int other() const noexcept { return other_; }

 private:
  Kind kind_;
  int index_;
  int other_;
};

/// Malformed input document; `field` is a JSON-pointer-like location.
class ParseError : public Error {
 public:
  ParseError(std::string field, const std::string& what)
      : Error(field.empty() ? what : field + ": " + what), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

}  // namespace schottky
