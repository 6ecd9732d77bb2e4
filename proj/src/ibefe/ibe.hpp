#pragma once

#include <optional>

#include "../obf/program.hpp"

namespace cosetlab::ibefe {

// IBE with puncturable master secret key: per-identity PKE key pairs are
// derived from F(msk, id), the public key is an obfuscated PKeyGen
// program, and puncturing the master key is puncturing the PRF. Identity
// key generation is deterministic, so strong punctured correctness is
// byte equality of the derived keys.

struct IbeInstance {
  obf::ObfProgram pk;  // PKeyGen program
  pprf::GgmKey msk;
  int id_len;  // bits
};

struct IbePuncturedMsk {
  pprf::PuncturedKey key;  // punctured at exactly one identity
};

// Identity secret key: the exponent of the per-identity PKE pair.
struct IbeSecretKey {
  uint64_t sk;

  bool operator==(const IbeSecretKey&) const = default;
};

IbeInstance ibe_setup(int id_len, ByteStream& rng,
                      obf::ObfMode mode = obf::ObfMode::Sealed);

IbeSecretKey ibe_keygen(const pprf::GgmKey& msk, uint64_t id);
// Throws PuncturedPointError on the punctured identity.
IbeSecretKey ibe_keygen(const IbePuncturedMsk& pmsk, uint64_t id);

IbePuncturedMsk ibe_punc(const pprf::GgmKey& msk, uint64_t id);

crypto::PkeCiphertext ibe_enc(const obf::ObfProgram& pk, uint64_t id,
                              const crypto::Plaintext& m, const Bytes& coins);

std::optional<crypto::Plaintext> ibe_dec(const IbeSecretKey& sk,
                                         const crypto::PkeCiphertext& ct);

}  // namespace cosetlab::ibefe
