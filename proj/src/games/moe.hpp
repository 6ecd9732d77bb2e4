#pragma once

#include "../obf/program.hpp"
#include "report.hpp"

namespace cosetlab::games {

// Pluggable adversary behaviors. Each game interprets the kinds it
// supports; TwoCopyCloner additionally requires the harness cheat flag
// that hands out duplicate states.
enum class StrategyKind {
  HonestForwarder,
  BasisGuesser,
  TwoCopyCloner,
  AllGuess,
  OracleOmniscient,
  Custom
};

struct AdversaryStrategy {
  StrategyKind kind = StrategyKind::AllGuess;
  // Coll variant: query the challenge identity twice in phase 1,
  // triggering the at-most-once rule.
  bool duplicate_id_query = false;
};

enum class MoeVariant { Single, Multi, Coll };

struct MoeParams {
  gf2::CosetParams coset{16, 8, 3, false};
  int id_len = 8;  // coll variant identity bits
  obf::ObfMode mode = obf::ObfMode::Transparent;
  bool trace = false;
};

// Monogamy-of-entanglement games. Measurement outcomes of coset states
// are sampled classically (a computational-basis measurement of a coset
// state is uniform over A+s, a Hadamard-basis one uniform over A~+s'),
// which is exact for the strategies modeled here.
GameReport run_moe(MoeVariant variant, const AdversaryStrategy& adversary,
                   const MoeParams& params, int trials, ByteStream& rng);

}  // namespace cosetlab::games
