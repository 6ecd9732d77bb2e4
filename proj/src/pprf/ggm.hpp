#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "../common/bytestream.hpp"
#include "../common/errors.hpp"

namespace cosetlab::pprf {

// Length-doubling expander: seed -> (left child seed, right child seed),
// both the same length as the input. Injected so tests can substitute a
// toy counter-based expander.
using Expander = std::function<std::pair<Bytes, Bytes>(const Bytes&)>;

// Default expander: SHA-256(seed || 'L' / 'R') truncated/extended to the
// seed length.
Expander sha256_expander();
// Deterministic toy expander for tests: bytewise seed+1 / seed+2.
Expander counter_expander();

struct GgmKey {
  Bytes root_seed;
  int input_len = 0;   // bits, <= 64
  int output_len = 0;  // bits
};

struct CopathNode {
  uint64_t prefix;  // path bits, MSB-first in the low `depth` positions
  int depth;
  Bytes seed;
};

struct PuncturedKey {
  std::vector<uint64_t> punctured_points;  // sorted
  std::vector<CopathNode> copath;          // no node an ancestor of another
  int input_len = 0;
  int output_len = 0;
};

GgmKey prf_keygen(int security_bytes, int input_len, int output_len, ByteStream& rng);

// GGM descent: at depth i take the left/right child per bit i of x
// (MSB-first), then stretch the leaf seed to output_len bits.
Bytes prf_eval(const GgmKey& k, uint64_t x, const Expander& exp = sha256_expander());

PuncturedKey prf_puncture(const GgmKey& k, const std::vector<uint64_t>& points,
                          const Expander& exp = sha256_expander());

Bytes eval_punctured(const PuncturedKey& pk, uint64_t x,
                     const Expander& exp = sha256_expander());

Bytes serialize_key(const GgmKey& k);
GgmKey deserialize_key(const Bytes& data);
Bytes serialize_punctured(const PuncturedKey& pk);
PuncturedKey deserialize_punctured(const Bytes& data);

}  // namespace cosetlab::pprf
