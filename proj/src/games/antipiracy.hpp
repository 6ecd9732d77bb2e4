#pragma once

#include "../cp/cp_fe.hpp"
#include "moe.hpp"

namespace cosetlab::games {

enum class Scheme { CpPke, CpFe };

struct AntiPiracyParams {
  cp::CpParams cp;       // copy-protection parameters
  int k = 1;             // number of PROTECTED key queries
  size_t q_bytes = 5;    // cp-fe function encoding bound
  int n_inputs = 3;      // cp-fe message bits
  // Harness cheat mode: hand the pirate a duplicate of its single quantum
  // key, demonstrating why duplication must be impossible.
  bool cheat_duplicate = false;
  // cp-fe: make one CLASSICAL query for a function differentiating the
  // challenge messages, which forces the challenger to output 0.
  bool violating_classical_query = false;
  bool trace = false;
};

// Anti-piracy games: the pirate makes k quantum key queries and outputs
// k+1 freeloaders; the challenger encrypts under independent challenge
// bits and checks every guess. For cp-fe, CLASSICAL queries must satisfy
// f(m0) = f(m1) or the challenger outputs 0.
GameReport run_antipiracy(Scheme scheme, const AdversaryStrategy& pirate,
                          const AntiPiracyParams& params, int trials, ByteStream& rng);

}  // namespace cosetlab::games
