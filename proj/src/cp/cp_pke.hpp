#pragma once

#include <optional>

#include "../ibefe/ibe.hpp"
#include "joint.hpp"

namespace cosetlab::cp {

// Copy-protected PKE: the quantum secret key is a tuple of coset states
// derived from F1(K1, id), usable to satisfy the membership check inside
// the obfuscated ciphertext program without revealing the cosets.

struct CpParams {
  gf2::CosetParams coset{4, 2, 3, false};
  int id_len = 32;  // bits
  obf::ObfMode mode = obf::ObfMode::Sealed;
};

struct CpPkeInstance {
  obf::ObfProgram cpk;    // per-identity PKE keygen program
  obf::ObfProgram opmem;  // membership program over K1
  pprf::GgmKey cmsk;
  pprf::GgmKey k1;
  CpParams params;
};

struct QuantumKey {
  uint64_t id;
  ibefe::IbeSecretKey ck;
  // Joint state of the c coset registers (register 0 most significant);
  // a product of coset states at issuance, mutated by decryption.
  sim::StateVector joint;

  // Per-register views; throws SamplingError when entangled.
  std::vector<sim::StateVector> states(const CpParams& params) const;
};

struct CpCiphertext {
  obf::ObfProgram opct;
  uint64_t r;  // challenge bits, bit i for register i
  int count;
};

CpPkeInstance cp_pke_setup(const CpParams& params, ByteStream& rng);

QuantumKey cp_pke_qkeygen(const CpPkeInstance& inst, ByteStream& rng);

CpCiphertext cp_pke_enc(const CpPkeInstance& inst, const crypto::Plaintext& m,
                        ByteStream& rng);

// Coherent decryption: conditional Hadamards per r, one coherent run of
// the ciphertext program, measurement of the output register, reversal of
// the Hadamards. Honest inputs return m with probability 1 and leave the
// key state unchanged; mismatched inputs return nullopt.
std::optional<crypto::Plaintext> cp_pke_dec(QuantumKey& key, const CpCiphertext& ct,
                                            ByteStream& rng);

// Shared with cp_fe: coherently evaluates an opened ciphertext program
// over the key registers and returns the measured program output.
obf::Output coherent_ct_run(QuantumKey& key, const obf::ProgramDesc& opct_desc,
                            uint64_t r, const CpParams& params, ByteStream& rng);

}  // namespace cosetlab::cp
