// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wdqual Authors

#include <iostream>

#include "wdqual/cli.hpp"

int main(int argc, char** argv) {
  return wdqual::cli::run(argc, argv, std::cout, std::cerr);
}
