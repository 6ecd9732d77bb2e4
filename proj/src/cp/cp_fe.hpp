#pragma once

#include "cp_pke.hpp"

namespace cosetlab::cp {

// Copy-protected FE: identities are id || f with f's padded canonical
// serialization in the low q_bytes, so one master key serves every
// (holder, function) pair and the ciphertext program can recover f to
// compute f(m).

struct CpFeInstance {
  obf::ObfProgram cpk;
  obf::ObfProgram opmem;
  pprf::GgmKey cmsk;  // identities id || f, id_len + 8*q_bytes bits
  pprf::GgmKey k1;
  CpParams params;    // id_len here is the random-id part only
  size_t q_bytes;
  int n_inputs;
};

// Quantum functional key: a QuantumKey whose id field already holds the
// composite identity id || f.
struct CpFeKey {
  QuantumKey key;
  Bytes f_bytes;
};

// Punctured master key: obfuscated program releasing the classical part
// of a functional key iff f(m0) = f(m1).
struct CpFePmsk {
  obf::ObfProgram program;
};

CpFeInstance cp_fe_setup(const CpParams& params, size_t q_bytes, int n_inputs,
                         ByteStream& rng);

CpFeKey cp_fe_qkeygen(const CpFeInstance& inst, const crypto::Circuit& f, ByteStream& rng);

CpCiphertext cp_fe_enc(const CpFeInstance& inst, uint64_t m, ByteStream& rng);

// Returns f(m) for honest inputs, with the key state preserved.
std::optional<int> cp_fe_dec(CpFeKey& fkey, const CpCiphertext& ct, ByteStream& rng);

CpFePmsk cp_fe_pmsk(const CpFeInstance& inst, uint64_t m0, uint64_t m1);

// Classical key release from the punctured master key; nullopt on
// differentiating f. On success the key is byte-identical to the ck a
// fresh cp_fe_qkeygen with the same random id would carry.
std::optional<ibefe::IbeSecretKey> cp_fe_pmsk_keygen(const CpFePmsk& pmsk, uint64_t id,
                                                     const Bytes& f_bytes);

// Composite identity id || f.
uint64_t cp_fe_identity(const CpFeInstance& inst, uint64_t id, const Bytes& f_bytes);

}  // namespace cosetlab::cp
