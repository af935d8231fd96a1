//
// Project qhl - Copyright 2026 The qhl Authors.
// SPDX-License-Identifier: Apache-2.0
//

// Runs the thirteen acceptance criteria at full size and prints one line per
// criterion. Exit status is nonzero if any criterion fails.

#include <cstdio>
#include <cstdlib>
#include <string>

#include "qhl/selftest.hpp"

int main(int argc, char** argv) {
  qhl::SelftestConfig config;
  if (const char* env = std::getenv("QHL_SEED")) config.seed = std::strtoull(env, nullptr, 10);
  int first = 1, last = qhl::kNumCriteria;
  if (argc == 2) first = last = std::atoi(argv[1]);
  int failed = 0;
  double total = 0;
  for (int id = first; id <= last; ++id) {
    qhl::CriterionResult r = qhl::run_criterion(id, config);
    total += r.seconds;
    if (!r.passed) ++failed;
    std::printf("[%s] criterion %2d: %s (%.2fs) -- %s\n", r.passed ? "PASS" : "FAIL", r.id, r.title.c_str(),
                r.seconds, r.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%d criteria passed in %.2fs\n", last - first + 1 - failed, last - first + 1, total);
  return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
