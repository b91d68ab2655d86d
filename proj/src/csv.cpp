// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wdqual Authors

#include "wdqual/csv.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace wdqual {

CsvReader::CsvReader(const std::filesystem::path& file) : name_(file.string()) {
  auto f = std::make_unique<std::ifstream>(file, std::ios::binary);
  if (!*f) throw std::runtime_error("cannot open " + name_);
  stream_ = std::move(f);
}

CsvReader::CsvReader(std::unique_ptr<std::istream> stream, std::string name)
    : stream_(std::move(stream)), name_(std::move(name)) {}

std::optional<std::vector<std::string>> CsvReader::next_row() {
  std::istream& in = *stream_;
  if (in.peek() == EOF) return std::nullopt;

  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;

  for (int ci = in.get(); ; ci = in.get()) {
    if (ci == EOF) {
      if (quoted) throw std::runtime_error(name_ + ": unterminated quoted field");
      break;
    }
    const char c = static_cast<char>(ci);
    if (quoted) {
      if (c == '"') {
        if (in.peek() == '"') {
          field += '"';
          in.get();
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
      continue;
    }
    if (c == '"' && field.empty()) {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else if (c == '\n') {
      break;
    } else if (c == '\r') {
      if (in.peek() == '\n') in.get();
      break;
    } else {
      field += c;
    }
  }

  fields.push_back(std::move(field));
  ++row_number_;
  return fields;
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace wdqual
