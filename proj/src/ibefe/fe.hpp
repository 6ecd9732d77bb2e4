#pragma once

#include <optional>

#include "ibe.hpp"

namespace cosetlab::ibefe {

// Puncturable functional encryption over the puncturable IBE: functions
// are circuits canonically serialized to exactly q_bytes and used as
// encryption identities; a ciphertext is an obfuscated program that, on
// input f, emits the identity-f encryption of f(m).

struct FeInstance {
  IbeInstance ibe;
  size_t q_bytes;  // <= 8 so identities stay numeric
  int n_inputs;    // message bit width
};

struct FeFunctionalKey {
  Bytes f_bytes;  // padded canonical circuit, doubles as the identity
  IbeSecretKey sk;

  bool operator==(const FeFunctionalKey&) const = default;
};

struct FePuncturedMsk {
  obf::ObfProgram program;  // PKey program hardwiring (imsk, m0, m1)
};

using FeCiphertext = obf::ObfProgram;

FeInstance fe_setup(size_t q_bytes, int n_inputs, ByteStream& rng,
                    obf::ObfMode mode = obf::ObfMode::Sealed);

Bytes fe_function_bytes(const FeInstance& inst, const crypto::Circuit& f);

FeFunctionalKey fe_keygen(const FeInstance& inst, const crypto::Circuit& f);
// nullopt exactly when f differentiates the punctured message pair.
std::optional<FeFunctionalKey> fe_keygen(const FeInstance& inst, const FePuncturedMsk& pmsk,
                                         const crypto::Circuit& f);

FePuncturedMsk fe_punc(const FeInstance& inst, uint64_t m0, uint64_t m1,
                       obf::ObfMode mode = obf::ObfMode::Sealed);

FeCiphertext fe_enc(const FeInstance& inst, uint64_t m, ByteStream& rng,
                    obf::ObfMode mode = obf::ObfMode::Sealed);

std::optional<int> fe_dec(const FeFunctionalKey& fkey, const FeCiphertext& ct);

}  // namespace cosetlab::ibefe
