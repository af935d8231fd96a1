//
// Project qhl - Copyright 2026 The qhl Authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace qhl {

using Rational = mpq_class;

// "p/q" in lowest terms, or "p" for integers.
std::string to_string(const Rational& value);

// Accepts "p", "-p", "p/q". Throws ParseError.
Rational parse_rational(std::string_view text);

inline bool is_zero(const Rational& value) { return sgn(value) == 0; }

}  // namespace qhl
