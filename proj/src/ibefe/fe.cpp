#include "fe.hpp"

#include "../common/serial.hpp"

namespace cosetlab::ibefe {

namespace {

uint64_t identity_of(const Bytes& f_bytes) {
  uint64_t v = 0;
  for (size_t i = 0; i < f_bytes.size(); ++i) v |= static_cast<uint64_t>(f_bytes[i]) << (8 * i);
  return v;
}

}  // namespace

FeInstance fe_setup(size_t q_bytes, int n_inputs, ByteStream& rng, obf::ObfMode mode) {
  if (q_bytes < 1 || q_bytes > 8) throw ParameterError("q_bytes must be in [1,8]");
  if (n_inputs < 1 || n_inputs > 64) throw ParameterError("n_inputs must be in [1,64]");
  IbeInstance ibe = ibe_setup(static_cast<int>(8 * q_bytes), rng, mode);
  return FeInstance{std::move(ibe), q_bytes, n_inputs};
}

Bytes fe_function_bytes(const FeInstance& inst, const crypto::Circuit& f) {
  if (f.n_inputs != inst.n_inputs) throw ParameterError("function arity mismatch");
  return crypto::serialize_circuit(f, inst.q_bytes);
}

FeFunctionalKey fe_keygen(const FeInstance& inst, const crypto::Circuit& f) {
  Bytes fb = fe_function_bytes(inst, f);
  return FeFunctionalKey{fb, ibe_keygen(inst.ibe.msk, identity_of(fb))};
}

std::optional<FeFunctionalKey> fe_keygen(const FeInstance& inst, const FePuncturedMsk& pmsk,
                                         const crypto::Circuit& f) {
  Bytes fb = fe_function_bytes(inst, f);
  obf::Output out = obf::run(pmsk.program, obf::encode_pkey_input_plain(fb));
  if (out.bot) return std::nullopt;
  Reader r(out.value);
  return FeFunctionalKey{fb, IbeSecretKey{r.u64()}};
}

FePuncturedMsk fe_punc(const FeInstance& inst, uint64_t m0, uint64_t m1, obf::ObfMode mode) {
  auto desc = obf::make_pkey_desc(obf::PKeyFlavor::Plain, inst.ibe.msk, inst.q_bytes,
                                  inst.n_inputs, m0, m1);
  return FePuncturedMsk{obf::obfuscate(desc, mode)};
}

FeCiphertext fe_enc(const FeInstance& inst, uint64_t m, ByteStream& rng, obf::ObfMode mode) {
  if (inst.n_inputs < 64 && (m >> inst.n_inputs) != 0)
    throw ParameterError("message has bits beyond the configured width");
  // Fresh per-ciphertext PRF key supplying the encryption coins per f.
  pprf::GgmKey k2 = pprf::prf_keygen(32, static_cast<int>(8 * inst.q_bytes), 256, rng);
  auto desc = obf::make_fe_ct_desc(inst.ibe.pk, k2, inst.q_bytes, inst.n_inputs, m);
  return obf::obfuscate(desc, mode);
}

std::optional<int> fe_dec(const FeFunctionalKey& fkey, const FeCiphertext& ct) {
  obf::Output out = obf::run(ct, obf::encode_pkey_input_plain(fkey.f_bytes));
  if (out.bot) return std::nullopt;
  auto inner = crypto::deserialize_ct(out.value);
  auto m = crypto::pke_dec(fkey.sk.sk, inner);
  if (!m || m->top || m->data.size() != 1) return std::nullopt;
  return m->data[0];
}

}  // namespace cosetlab::ibefe
