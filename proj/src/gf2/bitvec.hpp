#pragma once

#include <cstdint>
#include <string>

#include "../common/errors.hpp"

namespace cosetlab::gf2 {

// Fixed-length vector over F_2, length <= 64, packed into one word.
// Convention: vector component 0 is the MOST significant position.
// Component i lives at integer bit (len - 1 - i), so unsigned comparison
// of the packed words is exactly MSB-first lexicographic order.
class BitVector {
 public:
  BitVector() = default;
  BitVector(int len, uint64_t word) : len_(len), word_(word) { check(); }

  static BitVector zero(int len) { return BitVector(len, 0); }

  int size() const { return len_; }
  uint64_t word() const { return word_; }

  bool get(int i) const {
    bounds(i);
    return (word_ >> (len_ - 1 - i)) & 1;
  }
  void set(int i, bool v) {
    bounds(i);
    uint64_t mask = uint64_t(1) << (len_ - 1 - i);
    if (v)
      word_ |= mask;
    else
      word_ &= ~mask;
  }

  BitVector operator^(const BitVector& o) const {
    match(o);
    return BitVector(len_, word_ ^ o.word_);
  }
  BitVector& operator^=(const BitVector& o) {
    match(o);
    word_ ^= o.word_;
    return *this;
  }
  bool operator==(const BitVector& o) const = default;
  // MSB-first lexicographic order on equal lengths.
  bool operator<(const BitVector& o) const {
    match(o);
    return word_ < o.word_;
  }

  bool is_zero() const { return word_ == 0; }

  // Standard F_2 inner product.
  int dot(const BitVector& o) const {
    match(o);
    return __builtin_popcountll(word_ & o.word_) & 1;
  }

  // Amplitude index of the basis state |v>: component 0 is the MSB,
  // which is exactly the packed word.
  uint64_t index() const { return word_; }
  static BitVector from_index(int len, uint64_t idx) { return BitVector(len, idx); }

  std::string to_string() const {
    std::string s(len_, '0');
    for (int i = 0; i < len_; ++i)
      if (get(i)) s[i] = '1';
    return s;
  }

 private:
  void check() const {
    if (len_ < 0 || len_ > 64) throw ParameterError("BitVector length must be in [0,64]");
    if (len_ < 64 && (word_ >> len_) != 0)
      throw ParameterError("BitVector word has bits beyond its length");
  }
  void bounds(int i) const {
    if (i < 0 || i >= len_) throw ParameterError("BitVector index out of range");
  }
  void match(const BitVector& o) const {
    if (len_ != o.len_) throw ParameterError("BitVector length mismatch");
  }

  int len_ = 0;
  uint64_t word_ = 0;
};

}  // namespace cosetlab::gf2
