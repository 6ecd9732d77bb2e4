#pragma once

#include "pi.hpp"

namespace cosetlab::measure {

struct MeasureParams {
  double epsilon;
  double delta;
  double eta = 0.0;

  MeasureParams(double eps, double del, double thresh = 0.0)
      : epsilon(eps), delta(del), eta(thresh) {
    if (!(epsilon > 0 && epsilon <= 1) || !(delta > 0 && delta <= 1))
      throw ParameterError("epsilon and delta must be in (0,1]");
    if (eta < 0 || eta > 1) throw ParameterError("eta must be in [0,1]");
  }

  // Alternating-measurement transition count.
  int rounds() const {
    return static_cast<int>(std::ceil(std::log(4.0 / delta) / (epsilon * epsilon)));
  }
};

inline constexpr int kExtendedDimCap = 4096;

struct ApiResult {
  double estimate;  // in [0, 1]
  DensityMatrix post;
};

// Approximate projective implementation: alternating projections between
// A = |psi_D><psi_D| (x) I and B = sum_i |i><i| (x) P_i on the extended
// space, Marriott-Watrous style. The estimate is the fraction of
// agreeing consecutive outcomes over rounds() transitions; a bounded tail
// of extra rounds returns the control register to |psi_D> so the system
// state can be split back out.
ApiResult api(const ProjectiveMixture& m, const MeasureParams& p, const DensityMatrix& rho,
              ByteStream& rng);

struct ThresholdResult {
  int bit;
  DensityMatrix post;
};

enum class ThresholdKind { Exact, Approximate };

// Exact: projective implementation compared to eta (a projection onto the
// eigenspaces with p >= eta). Approximate: api estimate compared to eta.
ThresholdResult threshold(ThresholdKind kind, const ProjectiveMixture& m,
                          const MeasureParams& p, const DensityMatrix& rho, ByteStream& rng);

// Exact accept probabilities, used as oracles by the test suite.
// TI: sum over eigenvalues p >= eta of Tr[Pi_p rho].
double ti_accept_probability(const ProjectiveMixture& m, double eta, const DensityMatrix& rho);
// ATI: within each Jordan block of eigenvalue p, consecutive alternating
// outcomes agree independently with probability p, so the estimate is
// Binomial(rounds, p)/rounds and the accept probability has the closed
// form sum_p Tr[Pi_p rho] * Pr[Bin(rounds, p) >= ceil(eta * rounds)].
double ati_accept_probability(const ProjectiveMixture& m, const MeasureParams& p, double eta,
                              const DensityMatrix& rho);

// Finite distribution over reals: (value, probability) pairs.
using Distribution = std::vector<std::pair<double, double>>;

// Infimum delta such that Pr_{D0}[a <= x] <= Pr_{D1}[a <= x + eps] + delta
// for all x, by a CDF sweep over the support points.
double shift_distance(const Distribution& d0, const Distribution& d1, double eps);

}  // namespace cosetlab::measure
