#include "lemmas.hpp"

#include <algorithm>
#include <cmath>

#include <json.hpp>

namespace cosetlab::measure {

namespace {

// Union bound for commuting projectors:
// Tr[(I - P1...Pn)rho] <= sum_i Tr[(I - Pi)rho].
double qub_instance(int d, ByteStream& rng) {
  int n = 2 + static_cast<int>(rng.uniform_u64(2));
  // Commuting by construction: diagonal 0/1 patterns in one random basis.
  Mat u = random_unitary(d, rng);
  std::vector<Mat> ps;
  Mat prod = Mat::Identity(d, d);
  for (int i = 0; i < n; ++i) {
    Mat diag = Mat::Zero(d, d);
    for (int j = 0; j < d; ++j)
      if (rng.next_bit()) diag(j, j) = 1.0;
    Mat p = u * diag * u.adjoint();
    prod = prod * p;
    ps.push_back(std::move(p));
  }
  DensityMatrix rho = random_density(d, rng);
  double lhs = ((Mat::Identity(d, d) - prod) * rho.m).trace().real();
  double rhs = 0;
  for (const auto& p : ps) rhs += ((Mat::Identity(d, d) - p) * rho.m).trace().real();
  return rhs - lhs;
}

// Gentle measurement: Tr[E rho] >= 1 - eps implies
// trd(rho, sqrt(E) rho sqrt(E) / Tr[E rho]) <= sqrt(eps).
double gentle_instance(int d, ByteStream& rng) {
  DensityMatrix rho = random_density(d, rng);
  // E = I - t*Q with Q a contraction, keeping Tr[E rho] close to 1.
  Mat q = random_projector(d, 1 + static_cast<int>(rng.uniform_u64(d)), rng);
  double t = rng.uniform_double() * 0.2;
  Mat e = Mat::Identity(d, d) - t * q;
  double accept = (e * rho.m).trace().real();
  double eps = std::max(0.0, 1.0 - accept);
  Mat root = psd_sqrt(e);
  Mat post = root * rho.m * root / accept;
  return std::sqrt(eps) - trace_distance(rho.m, post);
}

// Implementation independence: M_i and E_i = U_i M_i have the same
// statistics, so the second-register post-states agree exactly. Slack is
// minus the largest entrywise deviation.
double impl_indep_instance(int d, ByteStream& rng) {
  int d1 = d, d2 = d;
  DensityMatrix rho = random_density(d1 * d2, rng);
  auto povm = random_povm(d1, 3, rng);
  double worst = 0;
  for (const auto& e : povm) {
    Mat m_i = psd_sqrt(e);
    Mat e_i = random_unitary(d1, rng) * m_i;
    Mat mi_full = kron(m_i, Mat::Identity(d2, d2));
    Mat ei_full = kron(e_i, Mat::Identity(d2, d2));
    Mat a = mi_full * rho.m * mi_full.adjoint();
    Mat b = ei_full * rho.m * ei_full.adjoint();
    double pa = a.trace().real(), pb = b.trace().real();
    if (pa < 1e-9 || pb < 1e-9) continue;
    Mat ta = partial_trace_first(a, d1, d2) / pa;
    Mat tb = partial_trace_first(b, d1, d2) / pb;
    worst = std::max(worst, (ta - tb).cwiseAbs().maxCoeff());
  }
  return -worst;
}

// Simultaneous projection: Tr[(P1 x P1') rho] >= 1 - eps and any general
// measurement M on the first register give Tr[P1' tau_i] >= 1 - sqrt(eps)/p_i.
double simul_proj_instance(int d, ByteStream& rng) {
  int d1 = d, d2 = d;
  Mat p1 = random_projector(d1, 1 + d1 / 2, rng);
  Mat p2 = random_projector(d2, 1 + d2 / 2, rng);
  Mat joint = kron(p1, p2);

  // Mostly inside the joint image, with a small leak outside.
  DensityMatrix base = random_density(d1 * d2, rng);
  Mat inside = joint * base.m * joint;
  inside /= inside.trace().real();
  double leak = rng.uniform_double() * 0.05;
  Mat mix = (1.0 - leak) * inside + leak * random_density(d1 * d2, rng).m;
  mix = (mix + mix.adjoint()) / 2.0;
  DensityMatrix rho(mix / mix.trace().real());

  double eps = std::max(0.0, 1.0 - (joint * rho.m).trace().real());
  auto povm = random_povm(d1, 3, rng);
  double worst = 1e300;
  for (const auto& e : povm) {
    Mat m_i = psd_sqrt(e);
    Mat full = kron(m_i, Mat::Identity(d2, d2));
    Mat hit = full * rho.m * full.adjoint();
    double pi_prob = hit.trace().real();
    if (pi_prob < 1e-3) continue;
    Mat tau = partial_trace_first(hit, d1, d2) / pi_prob;
    double bound = 1.0 - std::sqrt(eps) / pi_prob;
    worst = std::min(worst, (p2 * tau).trace().real() - bound);
  }
  return worst == 1e300 ? 0.0 : worst;
}

LemmaReport run_lemma(const std::string& id, int d, int trials, ByteStream& rng,
                      double (*instance)(int, ByteStream&)) {
  double worst = 1e300;
  for (int t = 0; t < trials; ++t) {
    ByteStream sub = rng.substream(id, t);
    worst = std::min(worst, instance(d, sub));
  }
  return LemmaReport{id, trials, worst, worst >= kLemmaSlackFloor};
}

}  // namespace

std::vector<LemmaReport> lemma_suite(uint64_t seed, int dims, int trials) {
  int d = std::clamp(dims, 2, 8);
  if (trials < 1) throw ParameterError("trials must be >= 1");
  ByteStream rng(seed);
  std::vector<LemmaReport> out;
  out.push_back(run_lemma("qub", d, trials, rng, qub_instance));
  out.push_back(run_lemma("gentle", d, trials, rng, gentle_instance));
  out.push_back(run_lemma("impl-indep", std::min(d, 4), trials, rng, impl_indep_instance));
  out.push_back(run_lemma("simul-proj", std::min(d, 4), trials, rng, simul_proj_instance));
  return out;
}

std::string lemma_reports_json(const std::vector<LemmaReport>& reports) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : reports) {
    arr.push_back({{"lemma_id", r.lemma_id},
                   {"instances", r.instances},
                   {"worst_slack", r.worst_slack},
                   {"pass", r.pass}});
  }
  return arr.dump(2);
}

}  // namespace cosetlab::measure
