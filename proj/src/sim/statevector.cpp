#include "statevector.hpp"

#include <cmath>
#include <map>

#include "../common/errors.hpp"

namespace cosetlab::sim {

StateVector::StateVector(int n_qubits, std::vector<cdouble> amplitudes)
    : n_(n_qubits), amps_(std::move(amplitudes)) {
  if (n_ < 0 || n_ > 30) throw ParameterError("qubit count out of range");
  if (amps_.size() != (size_t(1) << n_)) throw ParameterError("amplitude length != 2^n");
  double nm = norm();
  if (std::abs(nm - 1.0) > 1e-9) throw ParameterError("state not normalized");
}

StateVector StateVector::basis(int n_qubits, uint64_t index) {
  std::vector<cdouble> a(size_t(1) << n_qubits, 0.0);
  a.at(index) = 1.0;
  return StateVector(n_qubits, std::move(a));
}

double StateVector::norm() const {
  double s = 0;
  for (const auto& a : amps_) s += std::norm(a);
  return std::sqrt(s);
}

double StateVector::distance(const StateVector& o) const {
  if (n_ != o.n_) throw ParameterError("qubit count mismatch");
  double m = 0;
  for (size_t i = 0; i < amps_.size(); ++i) m = std::max(m, std::abs(amps_[i] - o.amps_[i]));
  return m;
}

double StateVector::distance_up_to_phase(const StateVector& o) const {
  if (n_ != o.n_) throw ParameterError("qubit count mismatch");
  size_t ref = 0;
  double best = 0;
  for (size_t i = 0; i < amps_.size(); ++i) {
    double m = std::abs(o.amps_[i]);
    if (m > best) {
      best = m;
      ref = i;
    }
  }
  if (best == 0.0) return distance(o);
  cdouble phase = amps_[ref] / o.amps_[ref];
  double pm = std::abs(phase);
  if (pm == 0.0) return 1.0;
  phase /= pm;
  double d = 0;
  for (size_t i = 0; i < amps_.size(); ++i)
    d = std::max(d, std::abs(amps_[i] - phase * o.amps_[i]));
  return d;
}

StateVector prepare_coset_state(const gf2::CosetTriple& t, int qubit_cap) {
  int n = t.space.ambient_dim();
  if (n > qubit_cap) throw ResourceError("coset state exceeds qubit cap");
  std::vector<cdouble> amps(size_t(1) << n, 0.0);
  double scale = 1.0 / std::sqrt(double(uint64_t(1) << t.space.rank()));
  for (const auto& a : t.space.enumerate()) {
    gf2::BitVector x = a ^ t.s;
    double sign = (t.s_prime.dot(a) == 0) ? 1.0 : -1.0;
    amps[x.index()] = sign * scale;
  }
  return StateVector(n, std::move(amps));
}

StateVector hadamard_all(const StateVector& psi) {
  std::vector<cdouble> a = psi.amplitudes();
  size_t dim = a.size();
  for (size_t h = 1; h < dim; h <<= 1) {
    for (size_t i = 0; i < dim; i += h << 1) {
      for (size_t j = i; j < i + h; ++j) {
        cdouble x = a[j], y = a[j + h];
        a[j] = x + y;
        a[j + h] = x - y;
      }
    }
  }
  double scale = 1.0 / std::sqrt(double(dim));
  for (auto& v : a) v *= scale;
  return StateVector(psi.n_qubits(), std::move(a));
}

MeasurementRecord measure_computational(const StateVector& psi, ByteStream& rng) {
  double u = rng.uniform_double();
  double acc = 0;
  const auto& amps = psi.amplitudes();
  uint64_t outcome = amps.size() - 1;
  for (size_t i = 0; i < amps.size(); ++i) {
    acc += std::norm(amps[i]);
    if (u < acc) {
      outcome = i;
      break;
    }
  }
  double p = std::norm(amps[outcome]);
  return MeasurementRecord{outcome, p, StateVector::basis(psi.n_qubits(), outcome)};
}

MeasurementRecord coherent_apply_measure(const StateVector& psi,
                                         const std::function<uint64_t(uint64_t)>& f,
                                         ByteStream& rng) {
  const auto& amps = psi.amplitudes();
  std::map<uint64_t, double> mass;
  for (size_t i = 0; i < amps.size(); ++i) {
    double w = std::norm(amps[i]);
    if (w == 0.0) continue;
    mass[f(i)] += w;
  }
  double u = rng.uniform_double();
  double acc = 0;
  uint64_t outcome = mass.rbegin()->first;
  double prob = mass.rbegin()->second;
  for (const auto& [y, w] : mass) {
    acc += w;
    if (u < acc) {
      outcome = y;
      prob = w;
      break;
    }
  }
  std::vector<cdouble> post(amps.size(), 0.0);
  double scale = 1.0 / std::sqrt(prob);
  for (size_t i = 0; i < amps.size(); ++i) {
    if (std::norm(amps[i]) == 0.0) continue;
    if (f(i) == outcome) post[i] = amps[i] * scale;
  }
  return MeasurementRecord{outcome, prob, StateVector(psi.n_qubits(), std::move(post))};
}

}  // namespace cosetlab::sim
