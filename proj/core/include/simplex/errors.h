// Copyright 2026 The Simplex Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SIMPLEX_ERRORS_H_
#define SIMPLEX_ERRORS_H_

#include <stdexcept>
#include <string>

namespace simplex {

// Base of every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A precondition on caller-supplied values failed (empty corpus, rating out
// of range, single-class training set, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// A file or wire payload could not be parsed. `line()` is 1-based, 0 when
// not applicable.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line = 0)
      : Error(what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// A file could not be opened, read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

// A remote provider (thesaurus or sentence-embedding endpoint) failed.
class ProviderError : public Error {
 public:
  using Error::Error;
};

// A cache-file embedding provider has no vector for the requested sentence.
class MissingEmbeddingError : public Error {
 public:
  using Error::Error;
};

// Cosine similarity with a zero-norm operand.
class UndefinedSimilarityError : public Error {
 public:
  using Error::Error;
};

}  // namespace simplex

#endif  // SIMPLEX_ERRORS_H_
