#include "bytestream.hpp"

#include <openssl/sha.h>

#include <cstring>

#include "errors.hpp"

namespace cosetlab {

Bytes sha256(const uint8_t* data, size_t len) {
  Bytes out(SHA256_DIGEST_LENGTH);
  SHA256(data, len, out.data());
  return out;
}

Bytes sha256(const Bytes& data) { return sha256(data.data(), data.size()); }

ByteStream::ByteStream(uint64_t seed) {
  uint8_t raw[8];
  for (int i = 0; i < 8; ++i) raw[i] = static_cast<uint8_t>(seed >> (8 * i));
  key_ = sha256(raw, 8);
}

ByteStream::ByteStream(const Bytes& key) {
  if (key.size() != 32) throw ParameterError("ByteStream key must be 32 bytes");
  key_ = key;
}

ByteStream ByteStream::substream(std::string_view name) const {
  Bytes material = key_;
  material.push_back(0x00);
  material.insert(material.end(), name.begin(), name.end());
  return ByteStream(sha256(material));
}

ByteStream ByteStream::substream(std::string_view name, uint64_t index) const {
  Bytes material = key_;
  material.push_back(0x01);
  material.insert(material.end(), name.begin(), name.end());
  material.push_back(0x00);
  for (int i = 0; i < 8; ++i) material.push_back(static_cast<uint8_t>(index >> (8 * i)));
  return ByteStream(sha256(material));
}

void ByteStream::refill() {
  Bytes block = key_;
  for (int i = 0; i < 8; ++i) block.push_back(static_cast<uint8_t>(counter_ >> (8 * i)));
  counter_++;
  buf_ = sha256(block);
  pos_ = 0;
}

uint8_t ByteStream::next_byte() {
  if (drawn_ >= budget_) throw RandomnessError("byte stream budget exhausted");
  if (pos_ >= buf_.size()) refill();
  drawn_++;
  return buf_[pos_++];
}

void ByteStream::fill(uint8_t* out, size_t len) {
  for (size_t i = 0; i < len; ++i) out[i] = next_byte();
}

Bytes ByteStream::bytes(size_t len) {
  Bytes out(len);
  fill(out.data(), len);
  return out;
}

uint64_t ByteStream::next_u64() {
  uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= static_cast<uint64_t>(next_byte()) << (8 * i);
  return v;
}

uint64_t ByteStream::uniform_u64(uint64_t bound) {
  if (bound == 0) throw ParameterError("uniform_u64: bound must be positive");
  if ((bound & (bound - 1)) == 0) return next_u64() & (bound - 1);
  // Rejection sampling over the largest multiple of bound below 2^64.
  uint64_t limit = UINT64_MAX - (UINT64_MAX % bound);
  for (;;) {
    uint64_t v = next_u64();
    if (v < limit) return v % bound;
  }
}

double ByteStream::uniform_double() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

}  // namespace cosetlab
