// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wdqual Authors

#include "wdqual/bz2_stream.hpp"

#include <cstdio>
#include <stdexcept>
#include <vector>

// Minimal declarations of the stable bzip2 C ABI, matching bzlib.h.
// Declared locally so the build only needs the runtime library.
extern "C" {

typedef struct {
  char* next_in;
  unsigned int avail_in;
  unsigned int total_in_lo32;
  unsigned int total_in_hi32;
  char* next_out;
  unsigned int avail_out;
  unsigned int total_out_lo32;
  unsigned int total_out_hi32;
  void* state;
  void* (*bzalloc)(void*, int, int);
  void (*bzfree)(void*, void*);
  void* opaque;
} bz_stream;

int BZ2_bzDecompressInit(bz_stream* strm, int verbosity, int small);
int BZ2_bzDecompress(bz_stream* strm);
int BZ2_bzDecompressEnd(bz_stream* strm);
int BZ2_bzCompressInit(bz_stream* strm, int blockSize100k, int verbosity, int workFactor);
int BZ2_bzCompress(bz_stream* strm, int action);
int BZ2_bzCompressEnd(bz_stream* strm);

}  // extern "C"

namespace {
constexpr int kBzRun = 0;
constexpr int kBzFinish = 2;
constexpr int kBzOk = 0;
constexpr int kBzRunOk = 1;
constexpr int kBzFinishOk = 3;
constexpr int kBzStreamEnd = 4;
}  // namespace

namespace wdqual {

namespace {

constexpr std::size_t kChunk = 1 << 16;

class Bz2Source : public ByteSource {
 public:
  explicit Bz2Source(const std::filesystem::path& file) : path_(file.string()), in_(kChunk) {
    fp_ = std::fopen(path_.c_str(), "rb");
    if (!fp_) throw std::runtime_error("cannot open " + path_);
    init_stream();
  }

  ~Bz2Source() override {
    if (stream_active_) BZ2_bzDecompressEnd(&strm_);
    if (fp_) std::fclose(fp_);
  }

  std::size_t read(char* buf, std::size_t max) override {
    strm_.next_out = buf;
    strm_.avail_out = static_cast<unsigned>(max);
    while (strm_.avail_out > 0) {
      if (!stream_active_) {
        // between member streams; pbzip2-style files concatenate them
        if (strm_.avail_in == 0 && !refill()) break;
        init_stream();
      }
      if (strm_.avail_in == 0 && !input_eof_) refill();
      int rc = BZ2_bzDecompress(&strm_);
      if (rc == kBzStreamEnd) {
        BZ2_bzDecompressEnd(&strm_);
        stream_active_ = false;
        continue;
      }
      if (rc != kBzOk) {
        throw std::runtime_error("bzip2 error " + std::to_string(rc) + " in " + path_ +
                                 " near byte " + std::to_string(raw_offset_));
      }
      if (input_eof_ && strm_.avail_in == 0 && strm_.avail_out > 0) {
        throw std::runtime_error("truncated bzip2 stream in " + path_);
      }
    }
    return max - strm_.avail_out;
  }

 private:
  // Pulls the next chunk of raw bytes; false at end of file.
  bool refill() {
    const std::size_t n = std::fread(in_.data(), 1, in_.size(), fp_);
    if (n < in_.size() && std::ferror(fp_)) {
      throw std::runtime_error("read error in " + path_ + " at byte " + std::to_string(raw_offset_));
    }
    raw_offset_ += n;
    strm_.next_in = in_.data();
    strm_.avail_in = static_cast<unsigned>(n);
    if (n == 0) {
      input_eof_ = true;
      return false;
    }
    return true;
  }

  // Re-arms the decompressor for the next member stream, keeping both
  // the input and output cursors where they are.
  void init_stream() {
    char* keep_in = strm_.next_in;
    const unsigned keep_avail_in = strm_.avail_in;
    char* keep_out = strm_.next_out;
    const unsigned keep_avail_out = strm_.avail_out;
    strm_ = bz_stream{};
    strm_.next_in = keep_in;
    strm_.avail_in = keep_avail_in;
    strm_.next_out = keep_out;
    strm_.avail_out = keep_avail_out;
    if (BZ2_bzDecompressInit(&strm_, 0, 0) != kBzOk) {
      throw std::runtime_error("bzip2 init failed for " + path_);
    }
    stream_active_ = true;
  }

  std::string path_;
  std::FILE* fp_ = nullptr;
  std::vector<char> in_;
  bz_stream strm_{};
  bool stream_active_ = false;
  bool input_eof_ = false;
  std::uint64_t raw_offset_ = 0;
};

}  // namespace

std::unique_ptr<ByteSource> make_bz2_source(const std::filesystem::path& file) {
  return std::make_unique<Bz2Source>(file);
}

std::string bz2_compress(const std::string& bytes) {
  bz_stream strm{};
  if (BZ2_bzCompressInit(&strm, 9, 0, 0) != kBzOk) throw std::runtime_error("bzip2 compress init failed");
  std::string out;
  std::vector<char> buf(kChunk);
  strm.next_in = const_cast<char*>(bytes.data());
  strm.avail_in = static_cast<unsigned>(bytes.size());
  int rc = kBzRunOk;
  while (rc != kBzStreamEnd) {
    strm.next_out = buf.data();
    strm.avail_out = static_cast<unsigned>(buf.size());
    rc = BZ2_bzCompress(&strm, strm.avail_in > 0 ? kBzRun : kBzFinish);
    if (rc != kBzRunOk && rc != kBzFinishOk && rc != kBzOk && rc != kBzStreamEnd) {
      BZ2_bzCompressEnd(&strm);
      throw std::runtime_error("bzip2 compress error " + std::to_string(rc));
    }
    out.append(buf.data(), buf.size() - strm.avail_out);
  }
  BZ2_bzCompressEnd(&strm);
  return out;
}

}  // namespace wdqual
