#include "api.hpp"

#include <algorithm>
#include <cmath>

namespace cosetlab::measure {

namespace {

// Measures the binary projective {proj, I - proj} on ext, collapsing it.
// Returns the outcome.
int measure_binary(Mat& ext, const Mat& proj, ByteStream& rng) {
  Mat hit = proj * ext * proj;
  double p1 = std::clamp(hit.trace().real(), 0.0, 1.0);
  int outcome = rng.uniform_double() < p1 ? 1 : 0;
  if (outcome == 1 && p1 < 1e-15) outcome = 0;
  if (outcome == 0 && 1.0 - p1 < 1e-15) outcome = 1;
  if (outcome == 1) {
    ext = hit / p1;
  } else {
    // (I-P) ext (I-P) = ext - P ext - ext P + P ext P
    ext = (ext - proj * ext - ext * proj + hit) / (1.0 - p1);
  }
  ext = (ext + ext.adjoint()) / 2.0;
  return outcome;
}

}  // namespace

ApiResult api(const ProjectiveMixture& m, const MeasureParams& p, const DensityMatrix& rho,
              ByteStream& rng) {
  int s = static_cast<int>(m.size());
  int d = rho.dim();
  if (m.dim() != d) throw ParameterError("mixture and state dimension mismatch");
  long ext_dim = long(s) * d;
  if (ext_dim > kExtendedDimCap) throw ResourceError("extended space exceeds the cap");

  Vec psi(s);
  for (int i = 0; i < s; ++i) psi(i) = std::sqrt(m.weights[i]);

  // A = |psi><psi| (x) I, B = blkdiag(P_i).
  Mat a = Mat::Zero(ext_dim, ext_dim);
  {
    Mat pp = psi * psi.adjoint();
    for (int i = 0; i < s; ++i)
      for (int j = 0; j < s; ++j)
        a.block(i * d, j * d, d, d) = pp(i, j) * Mat::Identity(d, d);
  }
  Mat b = Mat::Zero(ext_dim, ext_dim);
  for (int i = 0; i < s; ++i) b.block(i * d, i * d, d, d) = m.projectors[i];

  Mat ext = Mat::Zero(ext_dim, ext_dim);
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < s; ++j)
      ext.block(i * d, j * d, d, d) = psi(i) * std::conj(psi(j)) * rho.m;

  int rounds = p.rounds();
  int agreements = 0;
  int prev = 1;  // the initial state lies in the image of A
  int last_was_b = 0;
  for (int t = 0; t < rounds; ++t) {
    last_was_b = (t % 2 == 0);
    int o = measure_binary(ext, last_was_b ? b : a, rng);
    if (o == prev) ++agreements;
    prev = o;
  }
  double estimate = double(agreements) / rounds;

  // Tail: walk until an A measurement accepts so the control register is
  // exactly |psi_D| and the system state factors out.
  bool in_a = !last_was_b && prev == 1;
  for (int extra = 0; !in_a && extra < 4 * rounds + 64; ++extra) {
    last_was_b = !last_was_b;
    int o = measure_binary(ext, last_was_b ? b : a, rng);
    in_a = !last_was_b && o == 1;
  }

  // sigma = <psi| ext |psi> contracted over the control register.
  Mat sigma = Mat::Zero(d, d);
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < s; ++j)
      sigma += std::conj(psi(i)) * psi(j) * ext.block(i * d, j * d, d, d);
  sigma = (sigma + sigma.adjoint()) / 2.0;
  double tr = sigma.trace().real();
  if (tr < 1e-12) throw SamplingError("API tail failed to restore the control register");
  sigma /= tr;
  return ApiResult{estimate, DensityMatrix(std::move(sigma))};
}

ThresholdResult threshold(ThresholdKind kind, const ProjectiveMixture& m,
                          const MeasureParams& p, const DensityMatrix& rho, ByteStream& rng) {
  if (kind == ThresholdKind::Approximate) {
    ApiResult r = api(m, p, rho, rng);
    return ThresholdResult{r.estimate >= p.eta ? 1 : 0, std::move(r.post)};
  }
  PiMeasurement pim = pi(mixture_to_povm(m));
  int d = rho.dim();
  Mat accept = Mat::Zero(d, d);
  for (const auto& o : pim.outcomes)
    if (o.p >= p.eta) accept += o.projector;
  double q = std::clamp((accept * rho.m).trace().real(), 0.0, 1.0);
  int bit = rng.uniform_double() < q ? 1 : 0;
  if (bit == 1 && q < 1e-15) bit = 0;
  if (bit == 0 && 1.0 - q < 1e-15) bit = 1;
  Mat proj = bit ? accept : Mat(Mat::Identity(d, d) - accept);
  Mat post = proj * rho.m * proj;
  post = (post + post.adjoint()) / 2.0;
  double tr = post.trace().real();
  if (tr < 1e-15) throw SamplingError("empty threshold branch");
  post /= tr;
  return ThresholdResult{bit, DensityMatrix(std::move(post))};
}

double ti_accept_probability(const ProjectiveMixture& m, double eta, const DensityMatrix& rho) {
  PiMeasurement pim = pi(mixture_to_povm(m));
  double total = 0;
  for (const auto& o : pim.outcomes)
    if (o.p >= eta) total += (o.projector * rho.m).trace().real();
  return std::clamp(total, 0.0, 1.0);
}

namespace {

// Pr[Binomial(n, p) >= k], via log-space pmf summation.
double binomial_tail(int n, double p, int k) {
  if (k <= 0) return 1.0;
  if (k > n) return 0.0;
  if (p <= 0.0) return 0.0;
  if (p >= 1.0) return 1.0;
  double total = 0;
  double lp = std::log(p), lq = std::log1p(-p);
  for (int i = k; i <= n; ++i) {
    double lw = std::lgamma(n + 1.0) - std::lgamma(i + 1.0) - std::lgamma(n - i + 1.0) +
                i * lp + (n - i) * lq;
    total += std::exp(lw);
  }
  return std::min(total, 1.0);
}

}  // namespace

double ati_accept_probability(const ProjectiveMixture& m, const MeasureParams& p, double eta,
                              const DensityMatrix& rho) {
  PiMeasurement pim = pi(mixture_to_povm(m));
  int n = p.rounds();
  int k = static_cast<int>(std::ceil(eta * n - 1e-12));
  double total = 0;
  for (const auto& o : pim.outcomes) {
    double w = (o.projector * rho.m).trace().real();
    if (w <= 0) continue;
    total += w * binomial_tail(n, o.p, k);
  }
  return std::clamp(total, 0.0, 1.0);
}

double shift_distance(const Distribution& d0, const Distribution& d1, double eps) {
  auto cdf = [](const Distribution& d, double x) {
    double total = 0;
    for (const auto& [v, w] : d)
      if (v <= x + 1e-12) total += w;
    return total;
  };
  double worst = 0;
  for (const auto& dist : {d0, d1}) {
    for (const auto& [x, w] : dist) {
      (void)w;
      worst = std::max(worst, cdf(d0, x) - cdf(d1, x + eps));
    }
  }
  return std::max(0.0, worst);
}

}  // namespace cosetlab::measure
