#include "cp_pke.hpp"

#include <map>

namespace cosetlab::cp {

using sim::cdouble;
using sim::StateVector;

std::vector<StateVector> QuantumKey::states(const CpParams& params) const {
  std::vector<StateVector> out;
  for (int i = 0; i < params.coset.count; ++i)
    out.push_back(factor_register(joint, params.coset.ambient_dim, params.coset.count, i));
  return out;
}

CpPkeInstance cp_pke_setup(const CpParams& params, ByteStream& rng) {
  if (params.coset.ambient_dim * params.coset.count > 14)
    throw ResourceError("joint key state exceeds the qubit cap");
  if (params.id_len < 1 || params.id_len > 64)
    throw ParameterError("id_len must be in [1,64]");
  ByteStream k1_rng = rng.substream("k1");
  ByteStream ibe_rng = rng.substream("ibe");
  pprf::GgmKey k1 = pprf::prf_keygen(32, params.id_len, 256, k1_rng);
  ibefe::IbeInstance ibe = ibefe::ibe_setup(params.id_len, ibe_rng, params.mode);
  obf::ObfProgram opmem = obf::obfuscate(obf::make_pmem_desc(k1, params.coset), params.mode);
  return CpPkeInstance{std::move(ibe.pk), std::move(opmem), std::move(ibe.msk),
                       std::move(k1), params};
}

namespace {

uint64_t fresh_id(int id_len, ByteStream& rng) {
  return rng.uniform_u64(id_len >= 64 ? 0 : (uint64_t(1) << id_len));
}

}  // namespace

QuantumKey cp_pke_qkeygen(const CpPkeInstance& inst, ByteStream& rng) {
  uint64_t id = fresh_id(inst.params.id_len, rng);
  auto cosets = obf::derive_cosets(inst.k1, inst.params.coset, id);
  std::vector<StateVector> states;
  for (const auto& t : cosets) states.push_back(sim::prepare_coset_state(t));
  return QuantumKey{id, ibefe::ibe_keygen(inst.cmsk, id), tensor_states(states)};
}

CpCiphertext cp_pke_enc(const CpPkeInstance& inst, const crypto::Plaintext& m,
                        ByteStream& rng) {
  int c = inst.params.coset.count;
  uint64_t r = rng.uniform_u64(uint64_t(1) << c);
  pprf::GgmKey k2 = pprf::prf_keygen(32, inst.params.id_len, 256, rng);
  auto desc = obf::make_pct_desc(inst.opmem, inst.cpk, k2, c, r, m);
  return CpCiphertext{obf::obfuscate(desc, inst.params.mode), r, c};
}

obf::Output coherent_ct_run(QuantumKey& key, const obf::ProgramDesc& opct_desc,
                            uint64_t r, const CpParams& params, ByteStream& rng) {
  int n = params.coset.ambient_dim;
  int c = params.coset.count;
  StateVector psi = block_hadamard(key.joint, n, c, r);

  // Coherent run: the program output is a function of the register bits;
  // evaluate only on the support, measure the output register.
  std::map<uint64_t, obf::Output> cache;
  auto f = [&](uint64_t idx) -> const obf::Output& {
    auto it = cache.find(idx);
    if (it != cache.end()) return it->second;
    std::vector<uint64_t> us(c);
    for (int i = 0; i < c; ++i) us[i] = register_bits(idx, n, c, i);
    return cache.emplace(idx, obf::run_desc(opct_desc, obf::encode_pct_input(key.id, us)))
        .first->second;
  };

  // Outcome masses keyed by the serialized output.
  std::map<Bytes, double> mass;
  for (size_t i = 0; i < psi.dim(); ++i) {
    double w = std::norm(psi.amp(i));
    if (w == 0.0) continue;
    const obf::Output& out = f(i);
    Bytes k = out.bot ? Bytes{} : out.value;
    if (!out.bot) k.insert(k.begin(), 1);
    mass[k] += w;
  }
  double u = rng.uniform_double();
  double acc = 0;
  Bytes picked = mass.rbegin()->first;
  double prob = mass.rbegin()->second;
  for (const auto& [k, w] : mass) {
    acc += w;
    if (u < acc) {
      picked = k;
      prob = w;
      break;
    }
  }

  // Collapse to the selected branch set, then undo the basis change.
  std::vector<cdouble> post(psi.dim(), 0.0);
  double scale = 1.0 / std::sqrt(prob);
  for (size_t i = 0; i < psi.dim(); ++i) {
    if (std::norm(psi.amp(i)) == 0.0) continue;
    const obf::Output& out = f(i);
    Bytes k = out.bot ? Bytes{} : out.value;
    if (!out.bot) k.insert(k.begin(), 1);
    if (k == picked) post[i] = psi.amp(i) * scale;
  }
  key.joint = block_hadamard(StateVector(n * c, std::move(post)), n, c, r);

  if (picked.empty()) return obf::bot();
  return obf::ok(Bytes(picked.begin() + 1, picked.end()));
}

std::optional<crypto::Plaintext> cp_pke_dec(QuantumKey& key, const CpCiphertext& ct,
                                            ByteStream& rng) {
  obf::ProgramDesc desc = obf::open_program(ct.opct);
  // The ciphertext carries its own parameter shape; reconstruct it from
  // the key's register layout.
  int total = key.joint.n_qubits();
  CpParams params;
  params.coset.count = ct.count;
  params.coset.ambient_dim = total / ct.count;
  obf::Output out = coherent_ct_run(key, desc, ct.r, params, rng);
  if (out.bot) return std::nullopt;
  return ibefe::ibe_dec(key.ck, crypto::deserialize_ct(out.value));
}

}  // namespace cosetlab::cp
