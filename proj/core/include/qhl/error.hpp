//
// Project qhl - Copyright 2026 The qhl Authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <stdexcept>
#include <string>

namespace qhl {

// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text (quiver DSL, multiplicity literals, JSON payloads).
class ParseError : public Error {
 public:
  using Error::Error;
};

// Well-formed input that violates a domain precondition, e.g. a non-Dynkin
// quiver or an invalid height function.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A consistency check inside an algorithm failed. Never expected on valid
// input; indicates a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace qhl
