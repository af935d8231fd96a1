//
// Project qhl - Copyright 2026 The qhl Authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <string>
#include <string_view>

#include "qhl/ar_quiver.hpp"
#include "qhl/bound_quiver.hpp"
#include "qhl/bq_algebra.hpp"
#include "qhl/hl.hpp"
#include "qhl/lambda.hpp"
#include "qhl/rep.hpp"

// JSON and DOT renderings. All JSON is emitted with two-space indentation
// and rational numbers as strings "p/q".
namespace qhl {

std::string quiver_json(const Quiver& q);
std::string roots_json(const RootSystem& rs);
std::string height_json(const HeightFunction& xi);
std::string coxeter_json(const CoxeterWord& c);

std::string ar_json(const ARData& ar);
std::string ar_dot(const ARData& ar);

std::string phi_json(const RootSystem& rs, const PhiTable& t);
// Staggered grid (one column per vertex, rows by decreasing degree) when the
// roots have interval names; otherwise one line per entry.
std::string phi_text(const RootSystem& rs, const PhiTable& t);

std::string bound_quiver_json(const BoundQuiver& bq);
std::string bound_quiver_dot(const BoundQuiver& bq, std::string_view name);

std::string matrix_json(const Matrix& m);

std::string rep_json(const Quiver& q, const Rep& m);
Rep parse_rep_json(const Quiver& q, std::string_view text);

std::string bound_rep_json(const BoundQuiver& bq, const BoundRep& f);
// relations_hold is never trusted from input; it is recomputed.
BoundRep parse_bound_rep_json(const BoundQuiver& bq, std::string_view text);

std::string hat_dim_json(const BoundQuiver& bq, const HatDimVector& d);

// "a12:1,a11:2" or "[1,1,0]:2"; a missing count means 1.
MultVector parse_mult(const ARData& ar, std::string_view text);
std::string mult_string(const ARData& ar, const MultVector& m);

}  // namespace qhl
