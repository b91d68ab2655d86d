// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wdqual Authors

#pragma once

#include <cstdint>
#include <filesystem>
#include <istream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace wdqual {

// Small RFC 4180-style CSV reader: quoted fields, embedded commas,
// doubled quotes, CRLF tolerance. Enough for classification files and
// score tables; not a general dialect machine.
class CsvReader {
 public:
  explicit CsvReader(const std::filesystem::path& file);
  explicit CsvReader(std::unique_ptr<std::istream> stream, std::string name = "<stream>");

  std::optional<std::vector<std::string>> next_row();
  std::uint64_t row_number() const { return row_number_; }  // 1-based, header included
  const std::string& name() const { return name_; }

 private:
  std::unique_ptr<std::istream> stream_;
  std::string name_;
  std::uint64_t row_number_ = 0;
};

// Quotes a field when it contains commas, quotes or newlines.
std::string csv_escape(const std::string& field);

}  // namespace wdqual
