#include "experiment.hpp"

#include <algorithm>
#include <cmath>

#include <json.hpp>

#include "../cp/cp_fe.hpp"
#include "../games/antipiracy.hpp"
#include "../measure/lemmas.hpp"

#ifndef COSETLAB_VERSION
#define COSETLAB_VERSION "0.0.0-dev"
#endif

namespace cosetlab::runner {

using nlohmann::json;

namespace {

struct Config {
  std::string command;
  uint64_t seed = 0;
  int trials = 0;
  std::string scheme;
  std::string variant;
  std::string strategy;
  int n = 0, d = 0, c = 0;
  int k = 1;
  int dims = 6;
  bool trace = false;
  bool cheat_duplicate = false;
  bool duplicate_id = false;
  json echo;
};

int get_int(const json& j, const char* name, int fallback, int lo, int hi) {
  if (!j.contains(name)) return fallback;
  if (!j[name].is_number_integer())
    throw ParameterError(std::string(name) + " must be an integer");
  int v = j[name].get<int>();
  if (v < lo || v > hi)
    throw ParameterError(std::string(name) + " out of range [" + std::to_string(lo) +
                         ", " + std::to_string(hi) + "]");
  return v;
}

bool get_bool(const json& j, const char* name, bool fallback) {
  if (!j.contains(name)) return fallback;
  if (!j[name].is_boolean()) throw ParameterError(std::string(name) + " must be a boolean");
  return j[name].get<bool>();
}

std::string get_enum(const json& j, const char* name, const std::string& fallback,
                     std::initializer_list<const char*> allowed) {
  std::string v = fallback;
  if (j.contains(name)) {
    if (!j[name].is_string()) throw ParameterError(std::string(name) + " must be a string");
    v = j[name].get<std::string>();
  }
  for (const char* a : allowed)
    if (v == a) return v;
  throw ParameterError(std::string(name) + ": unknown value '" + v + "'");
}

games::StrategyKind parse_strategy(const std::string& s) {
  if (s == "honest-forwarder") return games::StrategyKind::HonestForwarder;
  if (s == "basis-guesser") return games::StrategyKind::BasisGuesser;
  if (s == "two-copy-cloner") return games::StrategyKind::TwoCopyCloner;
  if (s == "all-guess") return games::StrategyKind::AllGuess;
  if (s == "oracle-omniscient") return games::StrategyKind::OracleOmniscient;
  throw ParameterError("unknown strategy '" + s + "'");
}

Config parse(const std::string& config_json) {
  json j;
  try {
    j = json::parse(config_json);
  } catch (const json::parse_error& e) {
    throw ParameterError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParameterError("config must be a JSON object");

  Config cfg;
  cfg.command = get_enum(j, "command", "",
                         {"correctness", "moe", "antipiracy", "lemmas", "bench"});
  if (!j.contains("seed") || !j["seed"].is_number_unsigned())
    throw ParameterError("seed is mandatory and must be an unsigned integer");
  cfg.seed = j["seed"].get<uint64_t>();

  cfg.echo = json{{"command", cfg.command}, {"seed", cfg.seed}};

  auto coset_defaults = [&](int n, int d, int c) {
    cfg.n = get_int(j, "n", n, 1, 64);
    cfg.d = get_int(j, "d", d, 0, cfg.n);
    cfg.c = get_int(j, "c", c, 1, 16);
    cfg.echo["n"] = cfg.n;
    cfg.echo["d"] = cfg.d;
    cfg.echo["c"] = cfg.c;
  };
  auto trials_default = [&](int def) {
    cfg.trials = get_int(j, "trials", def, 1, 1000000);
    cfg.echo["trials"] = cfg.trials;
  };

  if (cfg.command == "correctness") {
    cfg.scheme = get_enum(j, "scheme", "cp-pke", {"cp-pke", "cp-fe", "duality"});
    cfg.echo["scheme"] = cfg.scheme;
    coset_defaults(4, 2, 3);
    trials_default(100);
  } else if (cfg.command == "moe") {
    cfg.variant = get_enum(j, "variant", "multi", {"single", "multi", "coll"});
    cfg.strategy = get_enum(j, "strategy", "basis-guesser",
                            {"honest-forwarder", "basis-guesser", "two-copy-cloner",
                             "all-guess", "oracle-omniscient"});
    cfg.duplicate_id = get_bool(j, "duplicate_id", false);
    cfg.trace = get_bool(j, "trace", false);
    cfg.echo["variant"] = cfg.variant;
    cfg.echo["strategy"] = cfg.strategy;
    cfg.echo["duplicate_id"] = cfg.duplicate_id;
    cfg.echo["trace"] = cfg.trace;
    coset_defaults(16, 8, 3);
    trials_default(2000);
  } else if (cfg.command == "antipiracy") {
    cfg.scheme = get_enum(j, "scheme", "cp-pke", {"cp-pke", "cp-fe"});
    cfg.strategy = get_enum(j, "strategy", "honest-forwarder",
                            {"honest-forwarder", "two-copy-cloner", "all-guess"});
    cfg.k = get_int(j, "k", 1, 0, 8);
    cfg.cheat_duplicate = get_bool(j, "cheat_duplicate", false);
    cfg.trace = get_bool(j, "trace", false);
    cfg.echo["scheme"] = cfg.scheme;
    cfg.echo["strategy"] = cfg.strategy;
    cfg.echo["k"] = cfg.k;
    cfg.echo["cheat_duplicate"] = cfg.cheat_duplicate;
    cfg.echo["trace"] = cfg.trace;
    coset_defaults(4, 2, 3);
    trials_default(2000);
  } else if (cfg.command == "lemmas") {
    cfg.dims = get_int(j, "dims", 6, 2, 8);
    cfg.echo["dims"] = cfg.dims;
    trials_default(200);
  } else {  // bench
    coset_defaults(4, 2, 3);
    trials_default(20);
  }
  return cfg;
}

json ci_json(const std::pair<double, double>& ci) { return json::array({ci.first, ci.second}); }

json game_results(const games::GameReport& r, const json& baseline, bool trace) {
  json res{{"game_id", r.game_id}, {"trials", r.trials},     {"wins", r.wins},
           {"voided", r.voided},   {"win_rate", r.win_rate}, {"ci95", ci_json(r.ci95)},
           {"baseline", baseline}};
  if (trace) res["trace"] = json::parse(r.trace_json);
  return res;
}

bool game_pass(const games::GameReport& r, const json& baseline) {
  if (baseline.is_null()) return true;
  double b = baseline.get<double>();
  if (b == 0.0) return r.wins == 0;
  if (b == 1.0) return r.wins == r.trials - r.voided;
  return r.ci_contains(b);
}

void run_correctness(const Config& cfg, json& results, bool& pass) {
  ByteStream rng(cfg.seed);
  if (cfg.scheme == "duality") {
    static const int kDims[] = {2, 4, 6, 8};
    double worst = 0;
    for (int t = 0; t < cfg.trials; ++t) {
      ByteStream sub = rng.substream("trial", t);
      int n = kDims[t % 4];
      gf2::CosetParams cp{n, n / 2, 1, false};
      auto ts = gf2::coset_gen(cp, sub);
      sim::StateVector lhs = sim::hadamard_all(sim::prepare_coset_state(ts[0]));
      sim::StateVector rhs = sim::prepare_coset_state(
          gf2::CosetTriple{ts[0].space.dual(), ts[0].s_prime, ts[0].s});
      worst = std::max(worst, lhs.distance_up_to_phase(rhs));
    }
    results = {{"max_distance", worst}, {"tolerance", 1e-9}};
    pass = worst <= 1e-9;
    return;
  }

  cp::CpParams params;
  params.coset = gf2::CosetParams{cfg.n, cfg.d, cfg.c, false};
  ByteStream setup_rng = rng.substream("setup");
  int successes = 0;
  double drift = 0;
  if (cfg.scheme == "cp-pke") {
    cp::CpPkeInstance inst = cp::cp_pke_setup(params, setup_rng);
    ByteStream key_rng = rng.substream("key");
    cp::QuantumKey key = cp::cp_pke_qkeygen(inst, key_rng);
    for (int t = 0; t < cfg.trials; ++t) {
      ByteStream sub = rng.substream("trial", t);
      crypto::Plaintext m{false, sub.bytes(4)};
      cp::CpCiphertext ct = cp::cp_pke_enc(inst, m, sub);
      sim::StateVector before = key.joint;
      auto got = cp::cp_pke_dec(key, ct, sub);
      if (got && *got == m) ++successes;
      drift = std::max(drift, key.joint.distance(before));
    }
  } else {
    params.id_len = 24;
    const size_t q_bytes = 5;
    const int n_inputs = 3;
    cp::CpFeInstance inst = cp::cp_fe_setup(params, q_bytes, n_inputs, setup_rng);
    ByteStream key_rng = rng.substream("key");
    std::vector<cp::CpFeKey> keys;
    std::vector<crypto::Circuit> fs;
    for (int b = 0; b < n_inputs; ++b) {
      fs.push_back(crypto::bit_circuit(n_inputs, b));
      keys.push_back(cp::cp_fe_qkeygen(inst, fs.back(), key_rng));
    }
    for (int t = 0; t < cfg.trials; ++t) {
      ByteStream sub = rng.substream("trial", t);
      int which = t % n_inputs;
      uint64_t m = sub.uniform_u64(uint64_t(1) << n_inputs);
      cp::CpCiphertext ct = cp::cp_fe_enc(inst, m, sub);
      sim::StateVector before = keys[which].key.joint;
      auto got = cp::cp_fe_dec(keys[which], ct, sub);
      if (got && *got == crypto::eval_circuit(fs[which], m)) ++successes;
      drift = std::max(drift, keys[which].key.joint.distance(before));
    }
  }
  results = {{"round_trips", cfg.trials},
             {"successes", successes},
             {"max_key_drift", drift},
             {"drift_tolerance", 1e-9}};
  pass = successes == cfg.trials && drift <= 1e-9;
}

void run_moe_cmd(const Config& cfg, json& results, bool& pass) {
  games::MoeParams params;
  params.coset = gf2::CosetParams{cfg.n, cfg.d, cfg.c, false};
  params.trace = cfg.trace;
  games::AdversaryStrategy adv{parse_strategy(cfg.strategy), cfg.duplicate_id};
  games::MoeVariant variant = cfg.variant == "single" ? games::MoeVariant::Single
                              : cfg.variant == "multi" ? games::MoeVariant::Multi
                                                       : games::MoeVariant::Coll;
  ByteStream rng(cfg.seed);
  ByteStream game = rng.substream("moe");
  games::GameReport r = games::run_moe(variant, adv, params, cfg.trials, game);

  json baseline;
  if (cfg.variant == "coll" && cfg.duplicate_id)
    baseline = 0.0;
  else if (adv.kind == games::StrategyKind::OracleOmniscient ||
           adv.kind == games::StrategyKind::TwoCopyCloner)
    baseline = 1.0;
  else if (adv.kind == games::StrategyKind::BasisGuesser && cfg.variant != "single")
    baseline = std::pow(0.25, cfg.c);
  results = game_results(r, baseline, cfg.trace);
  pass = game_pass(r, baseline);
}

void run_antipiracy_cmd(const Config& cfg, json& results, bool& pass) {
  games::AntiPiracyParams params;
  params.cp.coset = gf2::CosetParams{cfg.n, cfg.d, cfg.c, false};
  params.k = cfg.k;
  params.cheat_duplicate = cfg.cheat_duplicate;
  params.trace = cfg.trace;
  games::AdversaryStrategy adv{parse_strategy(cfg.strategy)};
  games::Scheme scheme = cfg.scheme == "cp-pke" ? games::Scheme::CpPke : games::Scheme::CpFe;
  ByteStream rng(cfg.seed);
  ByteStream game = rng.substream("antipiracy");
  games::GameReport r = games::run_antipiracy(scheme, adv, params, cfg.trials, game);

  json baseline;
  if (adv.kind == games::StrategyKind::HonestForwarder)
    baseline = 0.5;
  else if (adv.kind == games::StrategyKind::AllGuess)
    baseline = std::pow(0.5, cfg.k + 1);
  else if (adv.kind == games::StrategyKind::TwoCopyCloner)
    baseline = 1.0;
  results = game_results(r, baseline, cfg.trace);
  pass = game_pass(r, baseline);
}

void run_lemmas_cmd(const Config& cfg, json& results, bool& pass) {
  auto reports = measure::lemma_suite(cfg.seed, cfg.dims, cfg.trials);
  results = json::parse(measure::lemma_reports_json(reports));
  pass = std::all_of(reports.begin(), reports.end(),
                     [](const measure::LemmaReport& r) { return r.pass; });
}

void run_bench_cmd(const Config& cfg, json& results, bool& pass) {
  // Deterministic workload sweep; timings are the caller's business so
  // the report stays byte-identical across runs.
  ByteStream rng(cfg.seed);
  json workloads = json::array();

  ByteStream duality_rng = rng.substream("duality");
  for (int t = 0; t < cfg.trials; ++t) {
    auto ts = gf2::coset_gen(gf2::CosetParams{8, 4, 1, false}, duality_rng);
    sim::hadamard_all(sim::prepare_coset_state(ts[0]));
  }
  workloads.push_back({{"name", "coset-duality"}, {"n", 8}, {"iterations", cfg.trials}});

  cp::CpParams params;
  params.coset = gf2::CosetParams{cfg.n, cfg.d, cfg.c, false};
  ByteStream setup_rng = rng.substream("setup");
  cp::CpPkeInstance inst = cp::cp_pke_setup(params, setup_rng);
  ByteStream key_rng = rng.substream("key");
  cp::QuantumKey key = cp::cp_pke_qkeygen(inst, key_rng);
  for (int t = 0; t < cfg.trials; ++t) {
    ByteStream sub = rng.substream("trial", t);
    crypto::Plaintext m{false, sub.bytes(4)};
    cp::CpCiphertext ct = cp::cp_pke_enc(inst, m, sub);
    cp::cp_pke_dec(key, ct, sub);
  }
  workloads.push_back({{"name", "cp-pke-round-trip"},
                       {"n", cfg.n},
                       {"d", cfg.d},
                       {"c", cfg.c},
                       {"iterations", cfg.trials}});

  results = {{"workloads", workloads}};
  pass = true;
}

}  // namespace

std::string version() { return COSETLAB_VERSION; }

std::string validate_config(const std::string& config_json) {
  return parse(config_json).echo.dump(2);
}

ExperimentResult run_experiment(const std::string& config_json) {
  Config cfg = parse(config_json);
  json results;
  bool pass = false;
  if (cfg.command == "correctness")
    run_correctness(cfg, results, pass);
  else if (cfg.command == "moe")
    run_moe_cmd(cfg, results, pass);
  else if (cfg.command == "antipiracy")
    run_antipiracy_cmd(cfg, results, pass);
  else if (cfg.command == "lemmas")
    run_lemmas_cmd(cfg, results, pass);
  else
    run_bench_cmd(cfg, results, pass);

  json report{{"schema_version", 1},
              {"version", version()},
              {"config", cfg.echo},
              {"results", results},
              {"pass", pass}};
  return ExperimentResult{report.dump(2) + "\n", pass};
}

}  // namespace cosetlab::runner
