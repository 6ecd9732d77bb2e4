#include "cp_fe.hpp"

#include "../common/serial.hpp"

namespace cosetlab::cp {

uint64_t cp_fe_identity(const CpFeInstance& inst, uint64_t id, const Bytes& f_bytes) {
  uint64_t f_num = 0;
  for (size_t i = 0; i < f_bytes.size(); ++i)
    f_num |= static_cast<uint64_t>(f_bytes[i]) << (8 * i);
  return (id << (8 * inst.q_bytes)) | f_num;
}

CpFeInstance cp_fe_setup(const CpParams& params, size_t q_bytes, int n_inputs,
                         ByteStream& rng) {
  if (q_bytes < 1 || q_bytes > 8) throw ParameterError("q_bytes must be in [1,8]");
  int total_id = params.id_len + static_cast<int>(8 * q_bytes);
  if (total_id > 64) throw ParameterError("id_len + 8*q_bytes must be <= 64");
  if (params.coset.ambient_dim * params.coset.count > 14)
    throw ResourceError("joint key state exceeds the qubit cap");

  ByteStream k1_rng = rng.substream("k1");
  ByteStream ibe_rng = rng.substream("ibe");
  pprf::GgmKey k1 = pprf::prf_keygen(32, total_id, 256, k1_rng);
  ibefe::IbeInstance ibe = ibefe::ibe_setup(total_id, ibe_rng, params.mode);
  obf::ObfProgram opmem = obf::obfuscate(obf::make_pmem_desc(k1, params.coset), params.mode);
  return CpFeInstance{std::move(ibe.pk), std::move(opmem), std::move(ibe.msk),
                      std::move(k1),     params,           q_bytes,
                      n_inputs};
}

CpFeKey cp_fe_qkeygen(const CpFeInstance& inst, const crypto::Circuit& f, ByteStream& rng) {
  if (f.n_inputs != inst.n_inputs) throw ParameterError("function arity mismatch");
  Bytes f_bytes = crypto::serialize_circuit(f, inst.q_bytes);
  uint64_t id = rng.uniform_u64(uint64_t(1) << inst.params.id_len);
  uint64_t identity = cp_fe_identity(inst, id, f_bytes);

  auto cosets = obf::derive_cosets(inst.k1, inst.params.coset, identity);
  std::vector<sim::StateVector> states;
  for (const auto& t : cosets) states.push_back(sim::prepare_coset_state(t));
  QuantumKey key{identity, ibefe::ibe_keygen(inst.cmsk, identity), tensor_states(states)};
  return CpFeKey{std::move(key), std::move(f_bytes)};
}

CpCiphertext cp_fe_enc(const CpFeInstance& inst, uint64_t m, ByteStream& rng) {
  if (inst.n_inputs < 64 && (m >> inst.n_inputs) != 0)
    throw ParameterError("message has bits beyond the configured width");
  int c = inst.params.coset.count;
  uint64_t r = rng.uniform_u64(uint64_t(1) << c);
  int total_id = inst.params.id_len + static_cast<int>(8 * inst.q_bytes);
  pprf::GgmKey k2 = pprf::prf_keygen(32, total_id, 256, rng);
  auto desc = obf::make_cp_fe_ct_desc(inst.opmem, inst.cpk, k2, c, r, inst.q_bytes,
                                      inst.n_inputs, m);
  return CpCiphertext{obf::obfuscate(desc, inst.params.mode), r, c};
}

std::optional<int> cp_fe_dec(CpFeKey& fkey, const CpCiphertext& ct, ByteStream& rng) {
  obf::ProgramDesc desc = obf::open_program(ct.opct);
  int total = fkey.key.joint.n_qubits();
  CpParams params;
  params.coset.count = ct.count;
  params.coset.ambient_dim = total / ct.count;
  obf::Output out = coherent_ct_run(fkey.key, desc, ct.r, params, rng);
  if (out.bot) return std::nullopt;
  auto m = ibefe::ibe_dec(fkey.key.ck, crypto::deserialize_ct(out.value));
  if (!m || m->top || m->data.size() != 1) return std::nullopt;
  return m->data[0];
}

CpFePmsk cp_fe_pmsk(const CpFeInstance& inst, uint64_t m0, uint64_t m1) {
  auto desc = obf::make_pkey_desc(obf::PKeyFlavor::Cp, inst.cmsk, inst.q_bytes,
                                  inst.n_inputs, m0, m1);
  return CpFePmsk{obf::obfuscate(desc, inst.params.mode)};
}

std::optional<ibefe::IbeSecretKey> cp_fe_pmsk_keygen(const CpFePmsk& pmsk, uint64_t id,
                                                     const Bytes& f_bytes) {
  obf::Output out = obf::run(pmsk.program, obf::encode_pkey_input_cp(id, f_bytes));
  if (out.bot) return std::nullopt;
  Reader r(out.value);
  return ibefe::IbeSecretKey{r.u64()};
}

}  // namespace cosetlab::cp
