#pragma once

#include <optional>

#include "../common/bytestream.hpp"
#include "../common/errors.hpp"

namespace cosetlab::crypto {

// Toy ElGamal-style PKE over Z_p^* with a 61-bit prime. Key pair is
// derived deterministically from the supplied coins, which is what lets
// identity keys be regenerated from PRF output. The message frame is
// sealed with an expander-derived pad plus an authenticity tag, so
// decrypting with the wrong key fails cleanly instead of yielding garbage.
// Toy security only; the group is far too small for real use.

// Plaintext: ordinary bytes, or the distinguished out-of-space symbol
// (top = true, data empty).
struct Plaintext {
  bool top = false;
  Bytes data;

  bool operator==(const Plaintext&) const = default;
};

inline Plaintext top_symbol() { return Plaintext{true, {}}; }

struct PkeKeyPair {
  uint64_t pk;  // g^x mod p
  uint64_t sk;  // x
};

struct PkeCiphertext {
  uint64_t c1;  // g^k mod p
  Bytes sealed;  // pad XOR frame
  Bytes tag;     // 16 bytes

  bool operator==(const PkeCiphertext&) const = default;
};

// Deterministic: same coins give the same pair.
PkeKeyPair pke_keygen(const Bytes& coins);

PkeCiphertext pke_enc(uint64_t pk, const Plaintext& m, const Bytes& coins);

// nullopt when the authenticity tag fails (wrong key or tampering).
std::optional<Plaintext> pke_dec(uint64_t sk, const PkeCiphertext& ct);

Bytes serialize_ct(const PkeCiphertext& ct);
PkeCiphertext deserialize_ct(const Bytes& data);

}  // namespace cosetlab::crypto
