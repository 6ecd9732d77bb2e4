#include "pi.hpp"

#include <algorithm>
#include <cmath>

namespace cosetlab::measure {

PiMeasurement pi(const BinaryPOVM& e) {
  Eigen::SelfAdjointEigenSolver<Mat> es(e.e1);
  const auto& vals = es.eigenvalues();
  const Mat& vecs = es.eigenvectors();
  int d = static_cast<int>(vals.size());

  PiMeasurement out;
  int i = 0;
  while (i < d) {
    int j = i;
    double sum = 0;
    Mat proj = Mat::Zero(d, d);
    // Eigenvalues are sorted; absorb the cluster around vals(i).
    while (j < d && vals(j) - vals(i) <= kPiClusterTol) {
      sum += vals(j);
      proj += vecs.col(j) * vecs.col(j).adjoint();
      ++j;
    }
    double p = std::clamp(sum / (j - i), 0.0, 1.0);
    out.outcomes.push_back({p, std::move(proj)});
    i = j;
  }
  return out;
}

ProjectiveResult apply_projective(const PiMeasurement& m, const DensityMatrix& rho,
                                  ByteStream& rng) {
  std::vector<double> probs;
  for (const auto& o : m.outcomes)
    probs.push_back(std::max(0.0, (o.projector * rho.m).trace().real()));
  double u = rng.uniform_double();
  double acc = 0;
  size_t pick = probs.size() - 1;
  for (size_t k = 0; k < probs.size(); ++k) {
    acc += probs[k];
    if (u < acc) {
      pick = k;
      break;
    }
  }
  while (probs[pick] < 1e-15) {
    if (pick == 0) throw SamplingError("no outcome has positive probability");
    --pick;
  }
  const Mat& proj = m.outcomes[pick].projector;
  Mat post = proj * rho.m * proj / probs[pick];
  post = (post + post.adjoint()) / 2.0;
  post /= post.trace().real();
  return ProjectiveResult{m.outcomes[pick].p, probs[pick], DensityMatrix(std::move(post))};
}

double pi_accept_probability(const PiMeasurement& m, const DensityMatrix& rho) {
  double total = 0;
  for (const auto& o : m.outcomes) total += o.p * (o.projector * rho.m).trace().real();
  return total;
}

}  // namespace cosetlab::measure
