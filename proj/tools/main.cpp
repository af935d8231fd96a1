//
// Project qhl - Copyright 2026 The qhl Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) { return qhl::cli::run(argc, argv, std::cout, std::cerr); }
