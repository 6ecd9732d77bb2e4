#include "moe.hpp"

#include <algorithm>

#include <json.hpp>

#include "../common/serial.hpp"

namespace cosetlab::games {

using gf2::BitVector;
using gf2::CosetTriple;
using gf2::Subspace;

namespace {

// Uniform element of span(sp) + off: classical simulation of measuring a
// coset state in the matching basis.
uint64_t sample_coset(const Subspace& sp, const BitVector& off, ByteStream& rng) {
  uint64_t v = off.index();
  for (const auto& row : sp.basis())
    if (rng.next_bit()) v ^= row.index();
  return v;
}

bool in_coset(const CosetTriple& t, bool dual, uint64_t v) {
  int n = t.space.ambient_dim();
  if (dual) return gf2::coset_contains(t.space.dual(), t.s_prime, BitVector(n, v));
  return gf2::coset_contains(t.space, t.s, BitVector(n, v));
}

Bytes can_bytes(const Subspace& a, const BitVector& v) {
  Writer w;
  w.u64(gf2::canonical(a, v).word());
  return w.take();
}

// The membership programs handed to the adversary; none of the built-in
// strategies consult them, but the challenger samples them per the game.
void build_membership_programs(const CosetTriple& t, obf::ObfMode mode) {
  obf::cc_obfuscate(obf::make_cc_coset_desc(t.space, can_bytes(t.space, t.s), {1}), mode);
  Subspace dual = t.space.dual();
  obf::cc_obfuscate(obf::make_cc_coset_desc(dual, can_bytes(dual, t.s_prime), {1}), mode);
}

// Vectors both freeloaders answer, plus per-freeloader overrides.
struct Answers {
  std::vector<uint64_t> v1, v2;
};

Answers answer_multi(const AdversaryStrategy& adv, const std::vector<CosetTriple>& ts,
                     uint64_t r1, uint64_t r2, ByteStream& rng) {
  int c = static_cast<int>(ts.size());
  int n = ts[0].space.ambient_dim();
  Answers a;
  a.v1.resize(c);
  a.v2.resize(c);
  switch (adv.kind) {
    case StrategyKind::OracleOmniscient:
      // Test-only: handed the offsets, answers each challenge exactly.
      for (int i = 0; i < c; ++i) {
        a.v1[i] = ((r1 >> i) & 1) ? ts[i].s_prime.index() : ts[i].s.index();
        a.v2[i] = ((r2 >> i) & 1) ? ts[i].s_prime.index() : ts[i].s.index();
      }
      break;
    case StrategyKind::TwoCopyCloner:
      // Cheat mode: with two copies, measure one per basis and answer
      // whichever the challenge asks for.
      for (int i = 0; i < c; ++i) {
        uint64_t primal = sample_coset(ts[i].space, ts[i].s, rng);
        uint64_t dual = sample_coset(ts[i].space.dual(), ts[i].s_prime, rng);
        a.v1[i] = ((r1 >> i) & 1) ? dual : primal;
        a.v2[i] = ((r2 >> i) & 1) ? dual : primal;
      }
      break;
    case StrategyKind::BasisGuesser: {
      // Guess the challenge bits, measure accordingly, answer the same
      // vectors to both freeloaders (the split destroys the state).
      for (int i = 0; i < c; ++i) {
        bool g = rng.next_bit();
        uint64_t v = g ? sample_coset(ts[i].space.dual(), ts[i].s_prime, rng)
                       : sample_coset(ts[i].space, ts[i].s, rng);
        a.v1[i] = a.v2[i] = v;
      }
      break;
    }
    case StrategyKind::HonestForwarder:
      // Measures everything in the computational basis.
      for (int i = 0; i < c; ++i) a.v1[i] = a.v2[i] = sample_coset(ts[i].space, ts[i].s, rng);
      break;
    case StrategyKind::AllGuess:
    case StrategyKind::Custom:
      for (int i = 0; i < c; ++i) {
        a.v1[i] = rng.uniform_u64(uint64_t(1) << n);
        a.v2[i] = rng.uniform_u64(uint64_t(1) << n);
      }
      break;
  }
  return a;
}

bool check_vectors(const std::vector<CosetTriple>& ts, uint64_t r,
                   const std::vector<uint64_t>& vs) {
  for (size_t i = 0; i < ts.size(); ++i)
    if (!in_coset(ts[i], (r >> i) & 1, vs[i])) return false;
  return true;
}

}  // namespace

GameReport run_moe(MoeVariant variant, const AdversaryStrategy& adversary,
                   const MoeParams& params, int trials, ByteStream& rng) {
  if (trials < 1) throw ParameterError("trials must be >= 1");
  if (params.coset.ambient_dim > 64) throw ResourceError("ambient dimension above 64");

  nlohmann::json trace = nlohmann::json::array();
  int wins = 0, voided = 0;
  for (int t = 0; t < trials; ++t) {
    ByteStream trial = rng.substream("trial", t);
    bool win = false;
    nlohmann::json row;

    if (variant == MoeVariant::Single) {
      gf2::CosetParams cp = params.coset;
      cp.count = 1;
      auto ts = gf2::coset_gen(cp, trial);
      build_membership_programs(ts[0], params.mode);
      uint64_t v1, v2;
      switch (adversary.kind) {
        case StrategyKind::OracleOmniscient:
          v1 = ts[0].s.index();
          v2 = ts[0].s_prime.index();
          break;
        case StrategyKind::TwoCopyCloner:
          v1 = sample_coset(ts[0].space, ts[0].s, trial);
          v2 = sample_coset(ts[0].space.dual(), ts[0].s_prime, trial);
          break;
        case StrategyKind::HonestForwarder:
        case StrategyKind::BasisGuesser:
          v1 = v2 = sample_coset(ts[0].space, ts[0].s, trial);
          break;
        default:
          v1 = trial.uniform_u64(uint64_t(1) << cp.ambient_dim);
          v2 = trial.uniform_u64(uint64_t(1) << cp.ambient_dim);
          break;
      }
      win = in_coset(ts[0], false, v1) && in_coset(ts[0], true, v2);
      if (params.trace)
        row = {{"challenges", nlohmann::json::array()}, {"answers", {v1, v2}}};
    } else if (variant == MoeVariant::Multi) {
      auto ts = gf2::coset_gen(params.coset, trial);
      for (const auto& tr : ts) build_membership_programs(tr, params.mode);
      int c = params.coset.count;
      uint64_t r1 = trial.uniform_u64(uint64_t(1) << c);
      uint64_t r2 = trial.uniform_u64(uint64_t(1) << c);
      Answers a = answer_multi(adversary, ts, r1, r2, trial);
      win = check_vectors(ts, r1, a.v1) && check_vectors(ts, r2, a.v2);
      if (params.trace)
        row = {{"challenges", {r1, r2}}, {"answers", {a.v1, a.v2}}};
    } else {
      // Coll: pseudorandom per-identity coset tuples behind OPMem; the
      // challenge identity must appear in the query list at most once.
      pprf::GgmKey k1 = pprf::prf_keygen(32, params.id_len, 256, trial);
      obf::ObfProgram opmem =
          obf::obfuscate(obf::make_pmem_desc(k1, params.coset), params.mode);
      (void)opmem;
      std::vector<uint64_t> queried;
      uint64_t id_star = trial.uniform_u64(uint64_t(1) << params.id_len);
      queried.push_back(id_star);
      if (adversary.duplicate_id_query) queried.push_back(id_star);
      auto ts = obf::derive_cosets(k1, params.coset, id_star);
      int c = params.coset.count;
      uint64_t r1 = trial.uniform_u64(uint64_t(1) << c);
      uint64_t r2 = trial.uniform_u64(uint64_t(1) << c);
      Answers a = answer_multi(adversary, ts, r1, r2, trial);
      bool unique =
          std::count(queried.begin(), queried.end(), id_star) <= 1;
      win = unique && check_vectors(ts, r1, a.v1) && check_vectors(ts, r2, a.v2);
      if (params.trace)
        row = {{"queries", queried}, {"challenges", {r1, r2}}, {"answers", {a.v1, a.v2}}};
    }

    if (win) ++wins;
    if (params.trace) {
      row["verdict"] = win ? 1 : 0;
      trace.push_back(row);
    }
  }

  std::string variant_name = variant == MoeVariant::Single  ? "moe-single"
                             : variant == MoeVariant::Multi ? "moe-multi"
                                                            : "moe-coll";
  std::string trace_json;
  if (params.trace) trace_json = trace.dump();
  return make_report(variant_name, trials, wins, voided, std::move(trace_json));
}

}  // namespace cosetlab::games
