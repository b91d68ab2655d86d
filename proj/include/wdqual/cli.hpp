// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wdqual Authors

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wdqual::cli {

// Entry point behind the wdqual binary; exposed so the test suites can
// drive commands end to end. Exit codes: 0 success, 1 usage error,
// 2 data error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace wdqual::cli
