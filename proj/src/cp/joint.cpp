#include "joint.hpp"

#include <cmath>

#include "../common/errors.hpp"

namespace cosetlab::cp {

using sim::cdouble;
using sim::StateVector;

StateVector tensor_states(const std::vector<StateVector>& states) {
  if (states.empty()) throw ParameterError("tensor of zero states");
  std::vector<cdouble> amps{1.0};
  int qubits = 0;
  for (const auto& s : states) {
    qubits += s.n_qubits();
    if (qubits > 22) throw ResourceError("joint state exceeds the qubit cap");
    std::vector<cdouble> next(amps.size() * s.dim());
    for (size_t i = 0; i < amps.size(); ++i)
      for (size_t j = 0; j < s.dim(); ++j) next[i * s.dim() + j] = amps[i] * s.amp(j);
    amps = std::move(next);
  }
  return StateVector(qubits, std::move(amps));
}

StateVector block_hadamard(const StateVector& joint, int n, int c, uint64_t mask) {
  if (joint.n_qubits() != n * c) throw ParameterError("joint state shape mismatch");
  std::vector<cdouble> a = joint.amplitudes();
  // Butterfly per qubit of each selected register.
  for (int r = 0; r < c; ++r) {
    if (!((mask >> r) & 1)) continue;
    for (int q = 0; q < n; ++q) {
      int bit = n * (c - 1 - r) + (n - 1 - q);  // qubit q of register r
      size_t stride = size_t(1) << bit;
      for (size_t i = 0; i < a.size(); ++i) {
        if (i & stride) continue;
        cdouble x = a[i], y = a[i | stride];
        a[i] = x + y;
        a[i | stride] = x - y;
      }
    }
  }
  int hq = n * __builtin_popcountll(mask);
  double scale = std::pow(2.0, -hq / 2.0);
  for (auto& v : a) v *= scale;
  return StateVector(joint.n_qubits(), std::move(a));
}

StateVector factor_register(const StateVector& joint, int n, int c, int r) {
  if (joint.n_qubits() != n * c) throw ParameterError("joint state shape mismatch");
  // Reference branch: largest amplitude.
  size_t ref = 0;
  double best = 0;
  for (size_t i = 0; i < joint.dim(); ++i) {
    double m = std::abs(joint.amp(i));
    if (m > best) {
      best = m;
      ref = i;
    }
  }
  if (best == 0) throw SamplingError("zero joint state");
  int shift = n * (c - 1 - r);
  uint64_t reg_mask = ((uint64_t(1) << n) - 1) << shift;
  std::vector<cdouble> amps(size_t(1) << n, 0.0);
  double norm2 = 0;
  for (uint64_t x = 0; x < (uint64_t(1) << n); ++x) {
    uint64_t idx = (ref & ~reg_mask) | (x << shift);
    amps[x] = joint.amp(idx);
    norm2 += std::norm(amps[x]);
  }
  double scale = 1.0 / std::sqrt(norm2);
  for (auto& v : amps) v *= scale;
  StateVector reg(n, std::move(amps));

  // Product check: joint amp must equal reg amp times the complement.
  cdouble ref_reg = reg.amp((ref & reg_mask) >> shift);
  if (std::abs(ref_reg) < 1e-12) throw SamplingError("degenerate reference branch");
  for (size_t i = 0; i < joint.dim(); ++i) {
    uint64_t x = (i & reg_mask) >> shift;
    uint64_t partner = (i & ~reg_mask) | (ref & reg_mask);
    cdouble expect = reg.amp(x) * joint.amp(partner) / ref_reg;
    if (std::abs(expect - joint.amp(i)) > 1e-9)
      throw SamplingError("joint state is entangled across the register cut");
  }
  return reg;
}

}  // namespace cosetlab::cp
