#include "decryptor.hpp"

#include <cmath>

namespace cosetlab::games {

using measure::Mat;

measure::ProjectiveMixture decryptor_mixture(const StrategyRegister& reg,
                                             const std::vector<double>& r_dist) {
  int d = reg.rho.dim();
  if (static_cast<int>(reg.responders.size()) != d)
    throw ParameterError("one responder per strategy basis state required");
  double total = 0;
  for (double w : r_dist) total += w;
  if (std::abs(total - 1.0) > 1e-9) throw ParameterError("coin distribution must sum to 1");

  std::vector<Mat> projectors;
  std::vector<double> weights;
  for (int b = 0; b < 2; ++b) {
    for (size_t r = 0; r < r_dist.size(); ++r) {
      Mat proj = Mat::Zero(d, d);
      for (int j = 0; j < d; ++j)
        if (reg.responders[j](b, r) == b) proj(j, j) = 1.0;
      projectors.push_back(std::move(proj));
      weights.push_back(0.5 * r_dist[r]);
    }
  }
  return measure::ProjectiveMixture(std::move(projectors), std::move(weights));
}

DecryptorTestResult decryptor_test(const StrategyRegister& reg,
                                   const std::vector<double>& r_dist,
                                   const measure::MeasureParams& p, TestMode mode,
                                   ByteStream& rng) {
  measure::ProjectiveMixture mix = decryptor_mixture(reg, r_dist);
  switch (mode) {
    case TestMode::PI: {
      auto res = measure::apply_projective(measure::pi(measure::mixture_to_povm(mix)),
                                           reg.rho, rng);
      return DecryptorTestResult{res.outcome, std::move(res.post)};
    }
    case TestMode::API: {
      auto res = measure::api(mix, p, reg.rho, rng);
      return DecryptorTestResult{res.estimate, std::move(res.post)};
    }
    case TestMode::TI: {
      auto res = measure::threshold(measure::ThresholdKind::Exact, mix, p, reg.rho, rng);
      return DecryptorTestResult{double(res.bit), std::move(res.post)};
    }
    case TestMode::ATI: {
      auto res =
          measure::threshold(measure::ThresholdKind::Approximate, mix, p, reg.rho, rng);
      return DecryptorTestResult{double(res.bit), std::move(res.post)};
    }
  }
  throw ParameterError("unknown test mode");
}

}  // namespace cosetlab::games
