#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

namespace cosetlab {

using Bytes = std::vector<uint8_t>;

// SHA-256 of `data` (32 bytes out).
Bytes sha256(const Bytes& data);
Bytes sha256(const uint8_t* data, size_t len);

// Deterministic byte stream: SHA-256 in counter mode over a 32-byte key.
// All randomness in the project flows through these streams; a stream is
// fully determined by its key, and named substreams let one master seed
// drive independent per-module / per-trial streams.
//
// An optional draw budget models the "randomness stream long enough"
// precondition of CosetGen: exceeding it throws RandomnessError.
class ByteStream {
 public:
  explicit ByteStream(uint64_t seed);
  explicit ByteStream(const Bytes& key);

  // Derived stream whose key commits to (parent key, name).
  ByteStream substream(std::string_view name) const;
  // Indexed variant for per-trial streams.
  ByteStream substream(std::string_view name, uint64_t index) const;

  void set_budget(uint64_t max_bytes) { budget_ = max_bytes; }
  uint64_t bytes_drawn() const { return drawn_; }

  uint8_t next_byte();
  void fill(uint8_t* out, size_t len);
  Bytes bytes(size_t len);

  uint64_t next_u64();
  // Uniform in [0, bound) by rejection; bound > 0.
  uint64_t uniform_u64(uint64_t bound);
  // Uniform in [0, 1) with 53 bits of precision.
  double uniform_double();
  bool next_bit() { return next_byte() & 1; }

  const Bytes& key() const { return key_; }

 private:
  void refill();

  Bytes key_;  // 32 bytes
  Bytes buf_;
  size_t pos_ = 0;
  uint64_t counter_ = 0;
  uint64_t drawn_ = 0;
  uint64_t budget_ = std::numeric_limits<uint64_t>::max();
};

}  // namespace cosetlab
