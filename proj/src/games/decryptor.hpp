#pragma once

#include <functional>

#include "../measure/api.hpp"
#include "report.hpp"

namespace cosetlab::games {

// A freeloader register modeled over a finite strategy basis: basis state
// j answers ciphertexts with the deterministic responder j, and rho mixes
// or superposes those behaviors. Randomized decryptors are mixtures of
// deterministic ones.
struct StrategyRegister {
  measure::DensityMatrix rho;
  // responders[j](b, r) -> guessed bit, for the ciphertext built from
  // challenge bit b and encryption coins r.
  std::vector<std::function<int(int, uint64_t)>> responders;
};

enum class TestMode { PI, API, TI, ATI };

struct DecryptorTestResult {
  double value;  // PI/API: success-probability estimate; TI/ATI: the bit
  measure::DensityMatrix post;
};

// Builds the decryption-experiment mixture (sample b uniformly, coins r
// from r_dist, accept iff the responder reproduces b; projectors are
// diagonal in the strategy basis with weights (1/2) * D(r)) and delegates
// to the measurement lab.
DecryptorTestResult decryptor_test(const StrategyRegister& reg,
                                   const std::vector<double>& r_dist,
                                   const measure::MeasureParams& p, TestMode mode,
                                   ByteStream& rng);

// The mixture itself, for callers that need the exact oracles.
measure::ProjectiveMixture decryptor_mixture(const StrategyRegister& reg,
                                             const std::vector<double>& r_dist);

}  // namespace cosetlab::games
