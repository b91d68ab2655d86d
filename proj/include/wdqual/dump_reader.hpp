// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wdqual Authors

#pragma once

#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wdqual/entity_record.hpp"

namespace wdqual {

enum class Compression { Auto, None, Gzip, Bzip2 };

// Sniffs magic bytes (gzip 1f 8b, bzip2 "BZh"); anything else is plain.
Compression detect_compression(const std::filesystem::path& file);

// Pull-based byte stream over a possibly compressed file. read() throws
// std::runtime_error with the input position on I/O or stream damage;
// end of input is a 0 return.
class ByteSource {
 public:
  virtual ~ByteSource() = default;
  virtual std::size_t read(char* buf, std::size_t max) = 0;
};

std::unique_ptr<ByteSource> open_byte_source(const std::filesystem::path& file, Compression compression);
std::unique_ptr<ByteSource> memory_byte_source(std::string bytes);

bool bzip2_supported();

// Splits a byte source into lines, tracking position for diagnostics.
// Lines are returned without the terminating newline; a trailing \r is
// stripped. The final line needs no newline.
class LineReader {
 public:
  explicit LineReader(std::unique_ptr<ByteSource> source);
  ~LineReader();

  // The returned view is valid until the next call.
  std::optional<std::string_view> next_line();

  std::uint64_t line_number() const { return line_number_; }   // 1-based, of last returned line
  std::uint64_t byte_offset() const { return consumed_; }      // decompressed bytes consumed

 private:
  bool fill();

  std::unique_ptr<ByteSource> source_;
  std::vector<char> buffer_;
  std::size_t begin_ = 0;
  std::size_t end_ = 0;
  bool eof_ = false;
  std::string pending_;
  std::uint64_t line_number_ = 0;
  std::uint64_t consumed_ = 0;
};

// Classification of one dump line after framing cleanup.
struct DumpLine {
  std::string_view json;       // entity object text, comma stripped
  std::uint64_t line_number = 0;
};

// Strips array brackets and trailing commas from a raw dump line.
// Returns false for lines that carry no entity (bare "[", "]", blanks).
bool frame_dump_line(std::string_view raw, std::string_view& json_out);

struct StreamStats {
  std::uint64_t lines = 0;            // entity-bearing lines seen
  std::uint64_t entities = 0;         // successfully decoded
  std::uint64_t skipped = 0;          // malformed lines skipped
  std::vector<std::string> error_samples;  // first few diagnostics

  void note_error(std::uint64_t line_number, const std::string& message);
  void merge(const StreamStats& other);
};

// Sequential entity iterator over a dump file: one entity per call, in
// file order. Malformed lines are skipped and counted, not fatal.
class EntityStream {
 public:
  EntityStream(std::unique_ptr<ByteSource> source);
  std::optional<EntityRecord> next();
  const StreamStats& stats() const { return stats_; }

 private:
  LineReader lines_;
  StreamStats stats_;
};

EntityStream open_dump(const std::filesystem::path& file, Compression compression = Compression::Auto);

}  // namespace wdqual
