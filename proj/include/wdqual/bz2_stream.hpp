// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wdqual Authors

#pragma once

#include <filesystem>
#include <memory>
#include <string>

#include "wdqual/dump_reader.hpp"

namespace wdqual {

// bzip2 stream access. Built against the stable BZ2_* C ABI; the build
// links whatever libbz2 the platform provides (dev headers are not
// required, see src/bz2_stream.cpp).
std::unique_ptr<ByteSource> make_bz2_source(const std::filesystem::path& file);

// One-shot helpers, used by tests to produce fixture data.
std::string bz2_compress(const std::string& bytes);

}  // namespace wdqual
