#include "antipiracy.hpp"

#include <json.hpp>

namespace cosetlab::games {

namespace {

crypto::Plaintext pke_message(int ell, int bit) {
  // Distinct pair per freeloader.
  return crypto::Plaintext{false, {static_cast<uint8_t>(bit ? 0xff : 0x00),
                                   static_cast<uint8_t>(ell)}};
}

int run_pke_trial(const AdversaryStrategy& pirate, const AntiPiracyParams& params,
                  ByteStream& trial, nlohmann::json* row) {
  cp::CpPkeInstance inst = cp::cp_pke_setup(params.cp, trial);

  std::vector<cp::QuantumKey> keys;
  bool uses_keys = pirate.kind == StrategyKind::HonestForwarder ||
                   pirate.kind == StrategyKind::TwoCopyCloner;
  for (int q = 0; q < params.k; ++q) keys.push_back(cp::cp_pke_qkeygen(inst, trial));
  if (pirate.kind == StrategyKind::TwoCopyCloner) {
    if (!params.cheat_duplicate || params.k != 1)
      throw ParameterError("TwoCopyCloner needs cheat_duplicate and k = 1");
    keys.push_back(keys[0]);  // the impossible step: a second copy
  }

  int wins = 1;
  nlohmann::json challenges = nlohmann::json::array();
  nlohmann::json answers = nlohmann::json::array();
  for (int ell = 0; ell <= params.k; ++ell) {
    int b = trial.next_bit();
    cp::CpCiphertext ct = cp::cp_pke_enc(inst, pke_message(ell, b), trial);
    int guess;
    bool has_key = uses_keys && ell < static_cast<int>(keys.size());
    if (has_key) {
      auto dec = cp::cp_pke_dec(keys[ell], ct, trial);
      if (dec && *dec == pke_message(ell, 1))
        guess = 1;
      else if (dec && *dec == pke_message(ell, 0))
        guess = 0;
      else
        guess = trial.next_bit();
    } else {
      guess = trial.next_bit();
    }
    if (guess != b) wins = 0;
    if (row) {
      challenges.push_back(b);
      answers.push_back(guess);
    }
  }
  if (row) *row = {{"queries", params.k}, {"challenges", challenges}, {"answers", answers}};
  return wins;
}

int run_fe_trial(const AdversaryStrategy& pirate, const AntiPiracyParams& params,
                 ByteStream& trial, nlohmann::json* row) {
  cp::CpParams cpp = params.cp;
  cpp.id_len = 24;  // leaves room for the function bytes in the identity
  cp::CpFeInstance inst = cp_fe_setup(cpp, params.q_bytes, params.n_inputs, trial);

  // Challenge pair differing in the low message bit; the protected key
  // function reads exactly that bit (circuit wires are MSB-first), so
  // honest freeloaders can distinguish.
  uint64_t m0 = 0, m1 = 1;
  crypto::Circuit f = crypto::bit_circuit(params.n_inputs, params.n_inputs - 1);

  if (params.violating_classical_query) {
    // A CLASSICAL query for a differentiating f: challenger outputs 0.
    if (crypto::eval_circuit(f, m0) != crypto::eval_circuit(f, m1)) {
      if (row) *row = {{"queries", "classical-violation"}, {"verdict", 0}};
      return 0;
    }
  }

  std::vector<cp::CpFeKey> keys;
  bool uses_keys = pirate.kind == StrategyKind::HonestForwarder ||
                   pirate.kind == StrategyKind::TwoCopyCloner;
  for (int q = 0; q < params.k; ++q) keys.push_back(cp::cp_fe_qkeygen(inst, f, trial));
  if (pirate.kind == StrategyKind::TwoCopyCloner) {
    if (!params.cheat_duplicate || params.k != 1)
      throw ParameterError("TwoCopyCloner needs cheat_duplicate and k = 1");
    keys.push_back(keys[0]);
  }

  int f_m0 = crypto::eval_circuit(f, m0);
  int f_m1 = crypto::eval_circuit(f, m1);
  int wins = 1;
  nlohmann::json challenges = nlohmann::json::array();
  nlohmann::json answers = nlohmann::json::array();
  for (int ell = 0; ell <= params.k; ++ell) {
    int b = trial.next_bit();
    cp::CpCiphertext ct = cp::cp_fe_enc(inst, b ? m1 : m0, trial);
    int guess;
    bool has_key = uses_keys && ell < static_cast<int>(keys.size());
    if (has_key && f_m0 != f_m1) {
      auto dec = cp::cp_fe_dec(keys[ell], ct, trial);
      if (dec && *dec == f_m1)
        guess = 1;
      else if (dec && *dec == f_m0)
        guess = 0;
      else
        guess = trial.next_bit();
    } else {
      guess = trial.next_bit();
    }
    if (guess != b) wins = 0;
    if (row) {
      challenges.push_back(b);
      answers.push_back(guess);
    }
  }
  if (row) *row = {{"queries", params.k}, {"challenges", challenges}, {"answers", answers}};
  return wins;
}

}  // namespace

GameReport run_antipiracy(Scheme scheme, const AdversaryStrategy& pirate,
                          const AntiPiracyParams& params, int trials, ByteStream& rng) {
  if (trials < 1) throw ParameterError("trials must be >= 1");
  if (params.k < 0) throw ParameterError("k must be >= 0");

  nlohmann::json trace = nlohmann::json::array();
  int wins = 0, voided = 0;
  for (int t = 0; t < trials; ++t) {
    ByteStream trial = rng.substream("trial", t);
    nlohmann::json row;
    nlohmann::json* rp = params.trace ? &row : nullptr;
    int w = scheme == Scheme::CpPke ? run_pke_trial(pirate, params, trial, rp)
                                    : run_fe_trial(pirate, params, trial, rp);
    wins += w;
    if (params.trace) {
      row["verdict"] = w;
      trace.push_back(row);
    }
  }
  std::string id = scheme == Scheme::CpPke ? "antipiracy-cp-pke" : "antipiracy-cp-fe";
  std::string trace_json;
  if (params.trace) trace_json = trace.dump();
  return make_report(std::move(id), trials, wins, voided, std::move(trace_json));
}

}  // namespace cosetlab::games
