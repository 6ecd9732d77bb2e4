#include "toy_pke.hpp"

#include "../common/serial.hpp"

namespace cosetlab::crypto {

namespace {

// p = 2^61 - 1 (Mersenne prime), g = 37 generates a large subgroup.
constexpr uint64_t kPrime = 2305843009213693951ull;
constexpr uint64_t kGen = 37;
constexpr size_t kTagLen = 16;

uint64_t mulmod(uint64_t a, uint64_t b) {
  return static_cast<uint64_t>((__int128)a * b % kPrime);
}

uint64_t powmod(uint64_t base, uint64_t e) {
  uint64_t acc = 1;
  while (e) {
    if (e & 1) acc = mulmod(acc, base);
    base = mulmod(base, base);
    e >>= 1;
  }
  return acc;
}

// Exponent in [1, p-2] derived from coins.
uint64_t derive_exponent(ByteStream& s) { return 1 + s.uniform_u64(kPrime - 2); }

Bytes shared_bytes(uint64_t shared) {
  Bytes b(8);
  for (int i = 0; i < 8; ++i) b[i] = static_cast<uint8_t>(shared >> (8 * i));
  return b;
}

Bytes pad_for(uint64_t shared, size_t len) {
  Bytes key = shared_bytes(shared);
  key.insert(key.begin(), 'P');
  ByteStream pad_stream(sha256(key));
  return pad_stream.bytes(len);
}

Bytes tag_for(uint64_t shared, const Bytes& frame) {
  Bytes material = shared_bytes(shared);
  material.push_back('T');
  material.insert(material.end(), frame.begin(), frame.end());
  Bytes full = sha256(material);
  full.resize(kTagLen);
  return full;
}

// Frame byte 0: 0 = ordinary message, 1 = the reserved top symbol.
Bytes frame_of(const Plaintext& m) {
  Bytes f;
  f.push_back(m.top ? 1 : 0);
  if (!m.top) f.insert(f.end(), m.data.begin(), m.data.end());
  return f;
}

}  // namespace

PkeKeyPair pke_keygen(const Bytes& coins) {
  ByteStream s(sha256(coins));
  uint64_t x = derive_exponent(s);
  return PkeKeyPair{powmod(kGen, x), x};
}

PkeCiphertext pke_enc(uint64_t pk, const Plaintext& m, const Bytes& coins) {
  if (pk == 0 || pk >= kPrime) throw ParameterError("invalid public key");
  Bytes salted = coins;
  salted.push_back('E');
  ByteStream s(sha256(salted));
  uint64_t k = derive_exponent(s);
  uint64_t c1 = powmod(kGen, k);
  uint64_t shared = powmod(pk, k);
  Bytes frame = frame_of(m);
  Bytes pad = pad_for(shared, frame.size());
  Bytes sealed(frame.size());
  for (size_t i = 0; i < frame.size(); ++i) sealed[i] = frame[i] ^ pad[i];
  return PkeCiphertext{c1, std::move(sealed), tag_for(shared, frame)};
}

std::optional<Plaintext> pke_dec(uint64_t sk, const PkeCiphertext& ct) {
  if (ct.c1 == 0 || ct.c1 >= kPrime) return std::nullopt;
  uint64_t shared = powmod(ct.c1, sk);
  Bytes pad = pad_for(shared, ct.sealed.size());
  Bytes frame(ct.sealed.size());
  for (size_t i = 0; i < frame.size(); ++i) frame[i] = ct.sealed[i] ^ pad[i];
  if (tag_for(shared, frame) != ct.tag) return std::nullopt;
  if (frame.empty()) return std::nullopt;
  Plaintext m;
  m.top = frame[0] == 1;
  if (!m.top) m.data.assign(frame.begin() + 1, frame.end());
  return m;
}

Bytes serialize_ct(const PkeCiphertext& ct) {
  Writer w;
  w.u8(1);
  w.u64(ct.c1);
  w.blob(ct.sealed);
  w.blob(ct.tag);
  return w.take();
}

PkeCiphertext deserialize_ct(const Bytes& data) {
  Reader r(data);
  if (r.u8() != 1) throw DecodeError("unknown ciphertext version");
  PkeCiphertext ct;
  ct.c1 = r.u64();
  ct.sealed = r.blob();
  ct.tag = r.blob();
  if (!r.done()) throw DecodeError("trailing bytes in ciphertext");
  return ct;
}

}  // namespace cosetlab::crypto
