//
// Project qhl - Copyright 2026 The qhl Authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qhl/quiver.hpp"
#include "qhl/rep.hpp"

namespace qhl {

// Caps for the acceptance suite. The defaults are the full suite; smaller
// values give a quick smoke run.
struct SelftestConfig {
  std::uint64_t seed = kDefaultSeed;
  int max_rank_a = 6;          // A_n orientations for the iso and sign checks
  int max_rank_d = 6;          // D_n likewise
  bool include_e6 = true;
  int oracle_max_rank_a = 5;   // A_n orientations for the hom oracle
  int samples = 100;           // random modules per quiver in the round trip
  int max_total = 12;          // total dimension cap of those modules
  int injectivity_total = 8;   // cap for the exhaustive d-hat injectivity check
  int exact_sequence_samples = 50;
  unsigned threads = 0;        // 0 picks hardware concurrency
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

// Quivers of the test matrix: every orientation of A_2..A_{max_rank_a},
// D_4..D_{max_rank_d} and optionally E_6.
std::vector<Quiver> test_matrix(const SelftestConfig& config);

CriterionResult run_criterion(int id, const SelftestConfig& config);
std::vector<CriterionResult> run_acceptance(const SelftestConfig& config);

inline constexpr int kNumCriteria = 13;

}  // namespace qhl
