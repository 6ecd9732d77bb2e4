#pragma once

#include <optional>
#include <vector>

#include "../crypto/circuit.hpp"
#include "../crypto/toy_pke.hpp"
#include "../gf2/subspace.hpp"
#include "../pprf/ggm.hpp"

namespace cosetlab::obf {

// Functional stand-in for obfuscation. Guarantees correctness and
// size-hiding only: sealed programs are scrambled, integrity-tagged blobs
// with a declared (padded) size, but carry no hardness assumption. Every
// consumer's security game degrades to a correctness / structure check.

enum class ProgramKind : uint8_t { PMem = 0, PCt = 1, PKeyGen = 2, PKey = 3, CC = 4, Custom = 5 };
enum class ObfMode : uint8_t { Transparent = 0, Sealed = 1 };

struct ProgramDesc {
  ProgramKind kind;
  Bytes payload;
  size_t declared_size;  // >= payload.size(), padded per kind

  bool operator==(const ProgramDesc&) const = default;
};

struct ObfProgram {
  Bytes blob;

  bool operator==(const ObfProgram&) const = default;
};

// Program output: either the reserved refusal symbol or a value.
struct Output {
  bool bot = true;
  Bytes value;

  bool operator==(const Output&) const = default;
};

inline Output bot() { return Output{}; }
inline Output ok(Bytes v) { return Output{false, std::move(v)}; }

// Padding quantum shared by all kinds; declared_size = payload rounded up.
size_t padded_size(size_t payload_size);

ObfProgram obfuscate(const ProgramDesc& p, ObfMode mode);
// Parses, verifies the integrity tag, and unseals. Throws IntegrityError
// on tampering, DecodeError on malformed blobs.
ProgramDesc open_program(const ObfProgram& op);
Output run(const ObfProgram& op, const Bytes& input);
Output run_desc(const ProgramDesc& p, const Bytes& input);

// --- payload builders -----------------------------------------------------

// PMem_{K1}: input (id, u_1..u_c, r); accepts iff every u_i lies in the
// r-selected coset of the tuple derived from F1(K1, id).
ProgramDesc make_pmem_desc(const pprf::GgmKey& k1, const gf2::CosetParams& params);

// PKeyGen_K: input id; output the per-identity PKE public key.
ProgramDesc make_pkeygen_desc(const pprf::GgmKey& msk);

// PCt: input (id, u_1..u_c); if OPMem(id, u, r) = 1, output
// IBE.Enc(cpk, id, m; F2(K2, id)), else refuse.
ProgramDesc make_pct_desc(const ObfProgram& opmem, const ObfProgram& opkeygen,
                          const pprf::GgmKey& k2, int count, uint64_t r,
                          const crypto::Plaintext& m);

// Plain-FE ciphertext program: input a padded serialized circuit f; output
// the identity-f encryption of f(m).
ProgramDesc make_fe_ct_desc(const ObfProgram& opkeygen, const pprf::GgmKey& k2,
                            size_t q_bytes, int n_inputs, uint64_t m);

// CP-FE ciphertext program: input (id || f, u_1..u_c); checks membership
// like PCt, recovers f from the identity's low q_bytes, and encrypts f(m)
// under identity id || f.
ProgramDesc make_cp_fe_ct_desc(const ObfProgram& opmem, const ObfProgram& opkeygen,
                               const pprf::GgmKey& k2, int count, uint64_t r,
                               size_t q_bytes, int n_inputs, uint64_t m);

// PKey: punctured master key program. Plain flavor takes a serialized
// circuit f and releases the identity key for f iff f(m0) = f(m1).
// The cp flavor takes (id, f) and uses identity id || f.
enum class PKeyFlavor : uint8_t { Plain = 0, Cp = 1 };
ProgramDesc make_pkey_desc(PKeyFlavor flavor, const pprf::GgmKey& imsk, size_t q_bytes,
                           int n_inputs, uint64_t m0, uint64_t m1);

// Compute-and-compare: release z iff f(x) = y.
ProgramDesc make_cc_circuit_desc(const crypto::Circuit& f, const Bytes& y, const Bytes& z);
// f(x) = canonical coset element Can_A(x), compared against y.
ProgramDesc make_cc_coset_desc(const gf2::Subspace& a, const Bytes& y, const Bytes& z);
ProgramDesc make_custom_identity_desc();

ObfProgram cc_obfuscate(const ProgramDesc& cc_desc, ObfMode mode);
// Depends only on the sizes: same declared_size as the real program, and
// refuses every input.
ObfProgram cc_simulate(size_t f_size, size_t y_size, size_t z_size);

// --- input encoders -------------------------------------------------------

Bytes encode_u64_input(uint64_t x);
Bytes encode_pmem_input(uint64_t id, const std::vector<uint64_t>& vectors, uint64_t r);
Bytes encode_pct_input(uint64_t id, const std::vector<uint64_t>& vectors);
Bytes encode_pkey_input_plain(const Bytes& f_bytes);
Bytes encode_pkey_input_cp(uint64_t id, const Bytes& f_bytes);

// Coset tuple derived from F1(K1, id); shared by PMem evaluation and
// QKeyGen so the two agree bit for bit.
std::vector<gf2::CosetTriple> derive_cosets(const pprf::GgmKey& k1,
                                            const gf2::CosetParams& params, uint64_t id);

// Parsed-once evaluator for the hot decryption loop: caches the opened
// descriptor and the per-id coset tuples of an embedded PMem.
class ProgramEvaluator {
 public:
  explicit ProgramEvaluator(const ObfProgram& op) : desc_(open_program(op)) {}
  const ProgramDesc& desc() const { return desc_; }
  Output run(const Bytes& input) const { return run_desc(desc_, input); }

 private:
  ProgramDesc desc_;
};

}  // namespace cosetlab::obf
