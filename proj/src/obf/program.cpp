#include "program.hpp"

#include "../common/serial.hpp"

namespace cosetlab::obf {

namespace {

constexpr size_t kPadQuantum = 256;
constexpr size_t kTagLen = 16;

Bytes scramble_pad(ProgramKind kind, size_t declared, size_t len) {
  Bytes key;
  const char* label = "cosetlab-seal";
  key.insert(key.end(), label, label + 13);
  key.push_back(static_cast<uint8_t>(kind));
  for (int i = 0; i < 8; ++i) key.push_back(static_cast<uint8_t>(declared >> (8 * i)));
  ByteStream s(sha256(key));
  return s.bytes(len);
}

Bytes integrity_tag(const Bytes& prefix) {
  Bytes t = sha256(prefix);
  t.resize(kTagLen);
  return t;
}

// ---- payload parsing helpers --------------------------------------------

struct PMemPayload {
  pprf::GgmKey k1;
  gf2::CosetParams params;
};

PMemPayload parse_pmem(const Bytes& payload) {
  Reader r(payload);
  if (r.u8() != 1) throw DecodeError("unknown PMem payload version");
  PMemPayload p;
  p.k1 = pprf::deserialize_key(r.blob());
  p.params.ambient_dim = r.u8();
  p.params.subspace_dim = r.u8();
  p.params.count = r.u8();
  return p;
}

struct PCtPayload {
  ObfProgram opmem;
  ObfProgram opkeygen;
  pprf::GgmKey k2;
  int count;
  uint64_t r;
  crypto::Plaintext m;
};

PCtPayload parse_pct(const Bytes& payload) {
  Reader r(payload);
  if (r.u8() != 1) throw DecodeError("unknown PCt payload version");
  PCtPayload p;
  p.opmem.blob = r.blob();
  p.opkeygen.blob = r.blob();
  p.k2 = pprf::deserialize_key(r.blob());
  p.count = r.u8();
  p.r = r.u64();
  p.m.top = r.u8() == 1;
  p.m.data = r.blob();
  return p;
}

// Plain-FE ciphertext program: on input f, encrypt f(m) under identity f.
struct FeCtPayload {
  ObfProgram opkeygen;
  pprf::GgmKey k2;
  size_t q_bytes;
  int n_inputs;
  uint64_t m;
};

FeCtPayload parse_fe_ct(const Bytes& payload) {
  Reader r(payload);
  if (r.u8() != 2) throw DecodeError("unknown PCt payload version");
  FeCtPayload p;
  p.opkeygen.blob = r.blob();
  p.k2 = pprf::deserialize_key(r.blob());
  p.q_bytes = r.u32();
  p.n_inputs = r.u8();
  p.m = r.u64();
  return p;
}

struct PKeyPayload {
  PKeyFlavor flavor;
  pprf::GgmKey imsk;
  size_t q_bytes;
  int n_inputs;
  uint64_t m0, m1;
};

PKeyPayload parse_pkey(const Bytes& payload) {
  Reader r(payload);
  if (r.u8() != 1) throw DecodeError("unknown PKey payload version");
  PKeyPayload p;
  p.flavor = static_cast<PKeyFlavor>(r.u8());
  p.imsk = pprf::deserialize_key(r.blob());
  p.q_bytes = r.u32();
  p.n_inputs = r.u8();
  p.m0 = r.u64();
  p.m1 = r.u64();
  return p;
}

// Serialized circuit bytes interpreted as an identity number (the
// function-as-number view). Injective because the encoding is canonical
// and q_bytes <= 8.
uint64_t circuit_identity(const Bytes& f_bytes) {
  if (f_bytes.size() > 8) throw ParameterError("circuit identity exceeds 64 bits");
  uint64_t v = 0;
  for (size_t i = 0; i < f_bytes.size(); ++i) v |= static_cast<uint64_t>(f_bytes[i]) << (8 * i);
  return v;
}

Output eval_pmem(const Bytes& payload, const Bytes& input) {
  PMemPayload p = parse_pmem(payload);
  Reader r(input);
  uint64_t id = r.u64();
  std::vector<uint64_t> us;
  for (int i = 0; i < p.params.count; ++i) us.push_back(r.u64());
  uint64_t rbits = r.u64();
  if (!r.done()) throw DecodeError("trailing PMem input bytes");

  auto cosets = derive_cosets(p.k1, p.params, id);
  int n = p.params.ambient_dim;
  for (int i = 0; i < p.params.count; ++i) {
    gf2::BitVector u(n, us[i]);
    bool okv;
    if ((rbits >> i) & 1) {
      okv = gf2::coset_contains(cosets[i].space.dual(), cosets[i].s_prime, u);
    } else {
      okv = gf2::coset_contains(cosets[i].space, cosets[i].s, u);
    }
    if (!okv) return ok({0});
  }
  return ok({1});
}

Output eval_pkeygen(const Bytes& payload, const Bytes& input) {
  Reader pr(payload);
  if (pr.u8() != 1) throw DecodeError("unknown PKeyGen payload version");
  pprf::GgmKey msk = pprf::deserialize_key(pr.blob());
  Reader r(input);
  uint64_t id = r.u64();
  if (!r.done()) throw DecodeError("trailing PKeyGen input bytes");
  Bytes coins = pprf::prf_eval(msk, id);
  crypto::PkeKeyPair kp = crypto::pke_keygen(coins);
  Writer w;
  w.u64(kp.pk);
  return ok(w.take());
}

Output eval_fe_ct(const Bytes& payload, const Bytes& input) {
  FeCtPayload p = parse_fe_ct(payload);
  Reader r(input);
  Bytes f_bytes = r.blob();
  if (!r.done()) throw DecodeError("trailing PCt input bytes");
  if (f_bytes.size() != p.q_bytes) throw DecodeError("function bytes must be exactly padded");
  crypto::Circuit f = crypto::deserialize_circuit(f_bytes);
  if (f.n_inputs != p.n_inputs) throw DecodeError("function arity mismatch");
  uint8_t a = static_cast<uint8_t>(crypto::eval_circuit(f, p.m));
  uint64_t identity = circuit_identity(f_bytes);

  Output pk_out = run(p.opkeygen, encode_u64_input(identity));
  if (pk_out.bot) return bot();
  Reader pkr(pk_out.value);
  uint64_t ipk = pkr.u64();
  Bytes coins = pprf::prf_eval(p.k2, identity);
  crypto::PkeCiphertext ct = crypto::pke_enc(ipk, crypto::Plaintext{false, {a}}, coins);
  return ok(crypto::serialize_ct(ct));
}

// CP-FE ciphertext program: identity is id || f; the plaintext is f(m)
// with f recovered from the identity's low bytes.
struct CpFeCtPayload {
  ObfProgram opmem;
  ObfProgram opkeygen;
  pprf::GgmKey k2;
  int count;
  uint64_t r;
  size_t q_bytes;
  int n_inputs;
  uint64_t m;
};

CpFeCtPayload parse_cp_fe_ct(const Bytes& payload) {
  Reader r(payload);
  if (r.u8() != 3) throw DecodeError("unknown PCt payload version");
  CpFeCtPayload p;
  p.opmem.blob = r.blob();
  p.opkeygen.blob = r.blob();
  p.k2 = pprf::deserialize_key(r.blob());
  p.count = r.u8();
  p.r = r.u64();
  p.q_bytes = r.u32();
  p.n_inputs = r.u8();
  p.m = r.u64();
  return p;
}

Output eval_cp_fe_ct(const Bytes& payload, const Bytes& input) {
  CpFeCtPayload p = parse_cp_fe_ct(payload);
  Reader r(input);
  uint64_t id = r.u64();
  std::vector<uint64_t> us;
  for (int i = 0; i < p.count; ++i) us.push_back(r.u64());
  if (!r.done()) throw DecodeError("trailing PCt input bytes");

  Output mem = run(p.opmem, encode_pmem_input(id, us, p.r));
  if (mem.bot || mem.value != Bytes{1}) return bot();

  Bytes f_bytes(p.q_bytes);
  for (size_t i = 0; i < p.q_bytes; ++i) f_bytes[i] = static_cast<uint8_t>(id >> (8 * i));
  crypto::Circuit f = crypto::deserialize_circuit(f_bytes);
  if (f.n_inputs != p.n_inputs) return bot();
  uint8_t a = static_cast<uint8_t>(crypto::eval_circuit(f, p.m));

  Output pk_out = run(p.opkeygen, encode_u64_input(id));
  if (pk_out.bot) return bot();
  Reader pkr(pk_out.value);
  uint64_t ipk = pkr.u64();
  Bytes coins = pprf::prf_eval(p.k2, id);
  crypto::PkeCiphertext ct = crypto::pke_enc(ipk, crypto::Plaintext{false, {a}}, coins);
  return ok(crypto::serialize_ct(ct));
}

Output eval_pct(const Bytes& payload, const Bytes& input) {
  if (!payload.empty() && payload[0] == 2) return eval_fe_ct(payload, input);
  if (!payload.empty() && payload[0] == 3) return eval_cp_fe_ct(payload, input);
  PCtPayload p = parse_pct(payload);
  Reader r(input);
  uint64_t id = r.u64();
  std::vector<uint64_t> us;
  for (int i = 0; i < p.count; ++i) us.push_back(r.u64());
  if (!r.done()) throw DecodeError("trailing PCt input bytes");

  Output mem = run(p.opmem, encode_pmem_input(id, us, p.r));
  if (mem.bot || mem.value != Bytes{1}) return bot();

  Output pk_out = run(p.opkeygen, encode_u64_input(id));
  if (pk_out.bot) return bot();
  Reader pkr(pk_out.value);
  uint64_t ipk = pkr.u64();
  Bytes coins = pprf::prf_eval(p.k2, id);
  crypto::PkeCiphertext ct = crypto::pke_enc(ipk, p.m, coins);
  return ok(crypto::serialize_ct(ct));
}

Output eval_pkey(const Bytes& payload, const Bytes& input) {
  PKeyPayload p = parse_pkey(payload);
  Reader r(input);
  uint64_t id = 0;
  if (p.flavor == PKeyFlavor::Cp) id = r.u64();
  Bytes f_bytes = r.blob();
  if (!r.done()) throw DecodeError("trailing PKey input bytes");
  if (f_bytes.size() != p.q_bytes) throw DecodeError("function bytes must be exactly padded");

  crypto::Circuit f = crypto::deserialize_circuit(f_bytes);
  if (f.n_inputs != p.n_inputs) throw DecodeError("function arity mismatch");
  if (crypto::eval_circuit(f, p.m0) != crypto::eval_circuit(f, p.m1)) return bot();

  uint64_t f_num = circuit_identity(f_bytes);
  uint64_t identity = p.flavor == PKeyFlavor::Cp
                          ? ((id << (8 * p.q_bytes)) | f_num)
                          : f_num;
  Bytes coins = pprf::prf_eval(p.imsk, identity);
  crypto::PkeKeyPair kp = crypto::pke_keygen(coins);
  Writer w;
  w.u64(kp.sk);
  return ok(w.take());
}

Output eval_cc(const Bytes& payload, const Bytes& input) {
  Reader pr(payload);
  uint8_t fkind = pr.u8();
  if (fkind == 255) return bot();  // simulated program
  Reader r(input);
  uint64_t x = r.u64();
  if (!r.done()) throw DecodeError("trailing CC input bytes");

  Bytes fx;
  if (fkind == 0) {
    uint8_t n_inputs = pr.u8();
    crypto::Circuit f = crypto::deserialize_circuit(pr.blob());
    if (f.n_inputs != n_inputs) throw DecodeError("CC circuit arity mismatch");
    fx = {static_cast<uint8_t>(crypto::eval_circuit(f, x))};
  } else if (fkind == 1) {
    int n = pr.u8();
    int rank = pr.u8();
    std::vector<gf2::BitVector> rows;
    for (int i = 0; i < rank; ++i) rows.emplace_back(n, pr.u64());
    gf2::Subspace a(n, rows);
    gf2::BitVector can = gf2::canonical(a, gf2::BitVector(n, x));
    Writer w;
    w.u64(can.word());
    fx = w.take();
  } else {
    throw DecodeError("unknown CC function kind");
  }
  Bytes y = pr.blob();
  Bytes z = pr.blob();
  if (fx == y) return ok(z);
  return bot();
}

Output eval_custom(const Bytes& payload, const Bytes& input) {
  Reader pr(payload);
  if (pr.u8() != 0) throw DecodeError("unknown custom program tag");
  return ok(input);
}

}  // namespace

size_t padded_size(size_t payload_size) {
  size_t q = (payload_size + kPadQuantum - 1) / kPadQuantum;
  return std::max<size_t>(1, q) * kPadQuantum;
}

ObfProgram obfuscate(const ProgramDesc& p, ObfMode mode) {
  if (p.declared_size < p.payload.size())
    throw ParameterError("declared_size smaller than payload");
  Writer w;
  w.u8(1);
  w.u8(static_cast<uint8_t>(mode));
  w.u8(static_cast<uint8_t>(p.kind));
  w.u32(static_cast<uint32_t>(p.declared_size));
  w.u32(static_cast<uint32_t>(p.payload.size()));
  Bytes region = p.payload;
  region.resize(p.declared_size, 0);
  if (mode == ObfMode::Sealed) {
    Bytes pad = scramble_pad(p.kind, p.declared_size, region.size());
    for (size_t i = 0; i < region.size(); ++i) region[i] ^= pad[i];
  }
  w.raw(region);
  Bytes tag = integrity_tag(w.bytes());
  w.raw(tag);
  return ObfProgram{w.take()};
}

ProgramDesc open_program(const ObfProgram& op) {
  if (op.blob.size() < kTagLen) throw DecodeError("blob too short");
  Bytes body(op.blob.begin(), op.blob.end() - kTagLen);
  Bytes tag(op.blob.end() - kTagLen, op.blob.end());
  if (integrity_tag(body) != tag) throw IntegrityError("program integrity tag mismatch");

  Reader r(body);
  if (r.u8() != 1) throw DecodeError("unknown program version");
  ObfMode mode = static_cast<ObfMode>(r.u8());
  ProgramKind kind = static_cast<ProgramKind>(r.u8());
  size_t declared = r.u32();
  size_t payload_len = r.u32();
  if (payload_len > declared) throw DecodeError("payload length exceeds declared size");
  Bytes region = r.raw(declared);
  if (!r.done()) throw DecodeError("trailing program bytes");
  if (mode == ObfMode::Sealed) {
    Bytes pad = scramble_pad(kind, declared, region.size());
    for (size_t i = 0; i < region.size(); ++i) region[i] ^= pad[i];
  }
  region.resize(payload_len);
  return ProgramDesc{kind, std::move(region), declared};
}

Output run_desc(const ProgramDesc& p, const Bytes& input) {
  switch (p.kind) {
    case ProgramKind::PMem:
      return eval_pmem(p.payload, input);
    case ProgramKind::PCt:
      return eval_pct(p.payload, input);
    case ProgramKind::PKeyGen:
      return eval_pkeygen(p.payload, input);
    case ProgramKind::PKey:
      return eval_pkey(p.payload, input);
    case ProgramKind::CC:
      return eval_cc(p.payload, input);
    case ProgramKind::Custom:
      return eval_custom(p.payload, input);
  }
  throw DecodeError("unknown program kind");
}

Output run(const ObfProgram& op, const Bytes& input) {
  return run_desc(open_program(op), input);
}

ProgramDesc make_pmem_desc(const pprf::GgmKey& k1, const gf2::CosetParams& params) {
  if (params.count > 64) throw ParameterError("coset count exceeds the r-word width");
  Writer w;
  w.u8(1);
  w.blob(pprf::serialize_key(k1));
  w.u8(static_cast<uint8_t>(params.ambient_dim));
  w.u8(static_cast<uint8_t>(params.subspace_dim));
  w.u8(static_cast<uint8_t>(params.count));
  Bytes payload = w.take();
  size_t declared = padded_size(payload.size());
  return ProgramDesc{ProgramKind::PMem, std::move(payload), declared};
}

ProgramDesc make_pkeygen_desc(const pprf::GgmKey& msk) {
  Writer w;
  w.u8(1);
  w.blob(pprf::serialize_key(msk));
  Bytes payload = w.take();
  size_t declared = padded_size(payload.size());
  return ProgramDesc{ProgramKind::PKeyGen, std::move(payload), declared};
}

ProgramDesc make_pct_desc(const ObfProgram& opmem, const ObfProgram& opkeygen,
                          const pprf::GgmKey& k2, int count, uint64_t r,
                          const crypto::Plaintext& m) {
  Writer w;
  w.u8(1);
  w.blob(opmem.blob);
  w.blob(opkeygen.blob);
  w.blob(pprf::serialize_key(k2));
  w.u8(static_cast<uint8_t>(count));
  w.u64(r);
  w.u8(m.top ? 1 : 0);
  w.blob(m.data);
  Bytes payload = w.take();
  size_t declared = padded_size(payload.size());
  return ProgramDesc{ProgramKind::PCt, std::move(payload), declared};
}

ProgramDesc make_fe_ct_desc(const ObfProgram& opkeygen, const pprf::GgmKey& k2,
                            size_t q_bytes, int n_inputs, uint64_t m) {
  if (q_bytes > 8) throw ParameterError("q_bytes must be <= 8 for numeric identities");
  Writer w;
  w.u8(2);
  w.blob(opkeygen.blob);
  w.blob(pprf::serialize_key(k2));
  w.u32(static_cast<uint32_t>(q_bytes));
  w.u8(static_cast<uint8_t>(n_inputs));
  w.u64(m);
  Bytes payload = w.take();
  size_t declared = padded_size(payload.size());
  return ProgramDesc{ProgramKind::PCt, std::move(payload), declared};
}

ProgramDesc make_cp_fe_ct_desc(const ObfProgram& opmem, const ObfProgram& opkeygen,
                               const pprf::GgmKey& k2, int count, uint64_t r,
                               size_t q_bytes, int n_inputs, uint64_t m) {
  if (q_bytes > 8) throw ParameterError("q_bytes must be <= 8 for numeric identities");
  Writer w;
  w.u8(3);
  w.blob(opmem.blob);
  w.blob(opkeygen.blob);
  w.blob(pprf::serialize_key(k2));
  w.u8(static_cast<uint8_t>(count));
  w.u64(r);
  w.u32(static_cast<uint32_t>(q_bytes));
  w.u8(static_cast<uint8_t>(n_inputs));
  w.u64(m);
  Bytes payload = w.take();
  size_t declared = padded_size(payload.size());
  return ProgramDesc{ProgramKind::PCt, std::move(payload), declared};
}

ProgramDesc make_pkey_desc(PKeyFlavor flavor, const pprf::GgmKey& imsk, size_t q_bytes,
                           int n_inputs, uint64_t m0, uint64_t m1) {
  if (q_bytes > 8) throw ParameterError("q_bytes must be <= 8 for numeric identities");
  Writer w;
  w.u8(1);
  w.u8(static_cast<uint8_t>(flavor));
  w.blob(pprf::serialize_key(imsk));
  w.u32(static_cast<uint32_t>(q_bytes));
  w.u8(static_cast<uint8_t>(n_inputs));
  w.u64(m0);
  w.u64(m1);
  Bytes payload = w.take();
  size_t declared = padded_size(payload.size());
  return ProgramDesc{ProgramKind::PKey, std::move(payload), declared};
}

ProgramDesc make_cc_circuit_desc(const crypto::Circuit& f, const Bytes& y, const Bytes& z) {
  Writer w;
  w.u8(0);
  w.u8(static_cast<uint8_t>(f.n_inputs));
  w.blob(crypto::serialize_circuit(f, crypto::circuit_natural_size(f)));
  w.blob(y);
  w.blob(z);
  Bytes payload = w.take();
  size_t declared = padded_size(payload.size());
  return ProgramDesc{ProgramKind::CC, std::move(payload), declared};
}

ProgramDesc make_cc_coset_desc(const gf2::Subspace& a, const Bytes& y, const Bytes& z) {
  Writer w;
  w.u8(1);
  w.u8(static_cast<uint8_t>(a.ambient_dim()));
  w.u8(static_cast<uint8_t>(a.rank()));
  for (const auto& row : a.basis()) w.u64(row.word());
  w.blob(y);
  w.blob(z);
  Bytes payload = w.take();
  size_t declared = padded_size(payload.size());
  return ProgramDesc{ProgramKind::CC, std::move(payload), declared};
}

ProgramDesc make_custom_identity_desc() {
  Bytes payload{0};
  return ProgramDesc{ProgramKind::Custom, payload, padded_size(payload.size())};
}

ObfProgram cc_obfuscate(const ProgramDesc& cc_desc, ObfMode mode) {
  if (cc_desc.kind != ProgramKind::CC) throw ParameterError("cc_obfuscate needs a CC program");
  return obfuscate(cc_desc, mode);
}

ObfProgram cc_simulate(size_t f_size, size_t y_size, size_t z_size) {
  // Payload shaped exactly like the circuit-flavored CC payload of these
  // sizes, but with the refusal sentinel; contents beyond the sentinel are
  // zero, so two simulations with equal sizes coincide byte for byte.
  size_t real_len = 1 + 1 + (4 + f_size) + (4 + y_size) + (4 + z_size);
  Bytes payload(real_len, 0);
  payload[0] = 255;
  size_t declared = padded_size(payload.size());
  return obfuscate(ProgramDesc{ProgramKind::CC, std::move(payload), declared},
                   ObfMode::Sealed);
}

Bytes encode_u64_input(uint64_t x) {
  Writer w;
  w.u64(x);
  return w.take();
}

Bytes encode_pmem_input(uint64_t id, const std::vector<uint64_t>& vectors, uint64_t r) {
  Writer w;
  w.u64(id);
  for (uint64_t v : vectors) w.u64(v);
  w.u64(r);
  return w.take();
}

Bytes encode_pct_input(uint64_t id, const std::vector<uint64_t>& vectors) {
  Writer w;
  w.u64(id);
  for (uint64_t v : vectors) w.u64(v);
  return w.take();
}

Bytes encode_pkey_input_plain(const Bytes& f_bytes) {
  Writer w;
  w.blob(f_bytes);
  return w.take();
}

Bytes encode_pkey_input_cp(uint64_t id, const Bytes& f_bytes) {
  Writer w;
  w.u64(id);
  w.blob(f_bytes);
  return w.take();
}

std::vector<gf2::CosetTriple> derive_cosets(const pprf::GgmKey& k1,
                                            const gf2::CosetParams& params, uint64_t id) {
  Bytes coins = pprf::prf_eval(k1, id);
  ByteStream stream(sha256(coins));
  return gf2::coset_gen(params, stream);
}

}  // namespace cosetlab::obf
