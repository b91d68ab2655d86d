// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wdqual Authors

#include "wdqual/dump_reader.hpp"

#include <algorithm>
#include <cstdio>
#include <cstring>
#include <stdexcept>

#include <zlib.h>

#ifdef WDQUAL_HAVE_BZIP2
#include "wdqual/bz2_stream.hpp"
#endif

namespace wdqual {

namespace {

constexpr std::size_t kChunk = 1 << 16;

class FileSource : public ByteSource {
 public:
  explicit FileSource(const std::filesystem::path& file) : path_(file.string()) {
    fp_ = std::fopen(path_.c_str(), "rb");
    if (!fp_) throw std::runtime_error("cannot open " + path_);
  }
  ~FileSource() override {
    if (fp_) std::fclose(fp_);
  }
  std::size_t read(char* buf, std::size_t max) override {
    std::size_t n = std::fread(buf, 1, max, fp_);
    if (n < max && std::ferror(fp_)) {
      throw std::runtime_error("read error in " + path_ + " at byte " + std::to_string(offset_));
    }
    offset_ += n;
    return n;
  }

 private:
  std::string path_;
  std::FILE* fp_ = nullptr;
  std::uint64_t offset_ = 0;
};

class GzipSource : public ByteSource {
 public:
  explicit GzipSource(const std::filesystem::path& file) : path_(file.string()) {
    gz_ = gzopen(path_.c_str(), "rb");
    if (!gz_) throw std::runtime_error("cannot open " + path_);
    gzbuffer(gz_, kChunk);
  }
  ~GzipSource() override {
    if (gz_) gzclose(gz_);
  }
  std::size_t read(char* buf, std::size_t max) override {
    int n = gzread(gz_, buf, static_cast<unsigned>(std::min<std::size_t>(max, 1u << 30)));
    if (n < 0) {
      int errnum = 0;
      const char* msg = gzerror(gz_, &errnum);
      throw std::runtime_error("gzip error in " + path_ + " at offset " +
                               std::to_string(gzoffset(gz_)) + ": " + (msg ? msg : "unknown"));
    }
    return static_cast<std::size_t>(n);
  }

 private:
  std::string path_;
  gzFile gz_ = nullptr;
};

class MemorySource : public ByteSource {
 public:
  explicit MemorySource(std::string bytes) : bytes_(std::move(bytes)) {}
  std::size_t read(char* buf, std::size_t max) override {
    std::size_t n = std::min(max, bytes_.size() - pos_);
    std::memcpy(buf, bytes_.data() + pos_, n);
    pos_ += n;
    return n;
  }

 private:
  std::string bytes_;
  std::size_t pos_ = 0;
};

}  // namespace

Compression detect_compression(const std::filesystem::path& file) {
  std::FILE* fp = std::fopen(file.string().c_str(), "rb");
  if (!fp) throw std::runtime_error("cannot open " + file.string());
  unsigned char magic[3] = {0, 0, 0};
  std::size_t n = std::fread(magic, 1, sizeof(magic), fp);
  std::fclose(fp);
  if (n >= 2 && magic[0] == 0x1f && magic[1] == 0x8b) return Compression::Gzip;
  if (n >= 3 && magic[0] == 'B' && magic[1] == 'Z' && magic[2] == 'h') return Compression::Bzip2;
  return Compression::None;
}

std::unique_ptr<ByteSource> open_byte_source(const std::filesystem::path& file, Compression compression) {
  if (compression == Compression::Auto) compression = detect_compression(file);
  switch (compression) {
    case Compression::Gzip:
      return std::make_unique<GzipSource>(file);
    case Compression::Bzip2:
#ifdef WDQUAL_HAVE_BZIP2
      return make_bz2_source(file);
#else
      throw std::runtime_error("bzip2 input not supported in this build: " + file.string());
#endif
    default:
      return std::make_unique<FileSource>(file);
  }
}

std::unique_ptr<ByteSource> memory_byte_source(std::string bytes) {
  return std::make_unique<MemorySource>(std::move(bytes));
}

bool bzip2_supported() {
#ifdef WDQUAL_HAVE_BZIP2
  return true;
#else
  return false;
#endif
}

LineReader::LineReader(std::unique_ptr<ByteSource> source)
    : source_(std::move(source)), buffer_(kChunk) {}

LineReader::~LineReader() = default;

bool LineReader::fill() {
  if (eof_) return false;
  std::size_t n = source_->read(buffer_.data(), buffer_.size());
  begin_ = 0;
  end_ = n;
  if (n == 0) eof_ = true;
  return n > 0;
}

std::optional<std::string_view> LineReader::next_line() {
  pending_.clear();
  while (true) {
    if (begin_ == end_ && !fill()) {
      if (pending_.empty()) return std::nullopt;
      break;  // final line without newline
    }
    const char* nl = static_cast<const char*>(std::memchr(buffer_.data() + begin_, '\n', end_ - begin_));
    if (nl) {
      std::size_t len = static_cast<std::size_t>(nl - (buffer_.data() + begin_));
      pending_.append(buffer_.data() + begin_, len);
      begin_ += len + 1;
      consumed_ += len + 1;
      break;
    }
    pending_.append(buffer_.data() + begin_, end_ - begin_);
    consumed_ += end_ - begin_;
    begin_ = end_;
  }
  if (!pending_.empty() && pending_.back() == '\r') pending_.pop_back();
  ++line_number_;
  return std::string_view(pending_);
}

bool frame_dump_line(std::string_view raw, std::string_view& json_out) {
  auto first = raw.find_first_not_of(" \t");
  if (first == std::string_view::npos) return false;
  auto last = raw.find_last_not_of(" \t");
  std::string_view body = raw.substr(first, last - first + 1);
  if (body.back() == ',') {
    body.remove_suffix(1);
    auto l = body.find_last_not_of(" \t");
    if (l == std::string_view::npos) return false;
    body = body.substr(0, l + 1);
  }
  if (body == "[" || body == "]") return false;
  json_out = body;
  return true;
}

void StreamStats::note_error(std::uint64_t line_number, const std::string& message) {
  ++skipped;
  if (error_samples.size() < 10) {
    error_samples.push_back("line " + std::to_string(line_number) + ": " + message);
  }
}

void StreamStats::merge(const StreamStats& other) {
  lines += other.lines;
  entities += other.entities;
  skipped += other.skipped;
  for (const auto& e : other.error_samples) {
    if (error_samples.size() >= 10) break;
    error_samples.push_back(e);
  }
}

EntityStream::EntityStream(std::unique_ptr<ByteSource> source) : lines_(std::move(source)) {}

std::optional<EntityRecord> EntityStream::next() {
  while (auto raw = lines_.next_line()) {
    std::string_view body;
    if (!frame_dump_line(*raw, body)) continue;
    ++stats_.lines;
    EntityRecord record;
    EntityParseError error;
    if (parse_entity_json(body, record, error)) {
      ++stats_.entities;
      return record;
    }
    stats_.note_error(lines_.line_number(), error.message);
  }
  return std::nullopt;
}

EntityStream open_dump(const std::filesystem::path& file, Compression compression) {
  return EntityStream(open_byte_source(file, compression));
}

}  // namespace wdqual
