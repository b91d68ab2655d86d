// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wdqual Authors

#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace wdqual {

std::string sha256_hex(const void* data, std::size_t size);
std::string sha256_hex(const std::string& bytes);
std::string sha256_file_hex(const std::filesystem::path& file);

// Reproducibility record written next to a command's outputs. Output
// digests let a rerun be byte-verified; inputs are recorded by path and
// size (dumps run to hundreds of gigabytes, hashing them every run is
// not realistic).
class RunManifest {
 public:
  explicit RunManifest(std::string command);

  void add_input(const std::filesystem::path& path);
  void add_output(const std::filesystem::path& path);  // digested immediately
  void set_counter(const std::string& name, std::uint64_t value);
  void set_argv(const std::vector<std::string>& argv);

  // Serializes and writes atomically (temp file + rename).
  void write(const std::filesystem::path& file) const;
  std::string to_json_text() const;

 private:
  std::string command_;
  std::vector<std::string> argv_;
  std::string started_at_;
  std::vector<std::pair<std::string, std::uint64_t>> inputs_;  // path, bytes
  std::map<std::string, std::string> output_digests_;
  std::map<std::string, std::uint64_t> counters_;
};

// Atomic text-file write used for all command outputs.
void write_file_atomic(const std::filesystem::path& file, const std::string& content);

}  // namespace wdqual
