#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "../common/bytestream.hpp"
#include "../gf2/subspace.hpp"

namespace cosetlab::sim {

using cdouble = std::complex<double>;

inline constexpr int kDefaultQubitCap = 14;

// Dense statevector over n qubits. Index convention matches BitVector:
// bit 0 of the measured string is the most significant bit of the index.
class StateVector {
 public:
  StateVector(int n_qubits, std::vector<cdouble> amplitudes);
  static StateVector basis(int n_qubits, uint64_t index);

  int n_qubits() const { return n_; }
  size_t dim() const { return amps_.size(); }
  const std::vector<cdouble>& amplitudes() const { return amps_; }
  cdouble amp(uint64_t i) const { return amps_[i]; }

  double norm() const;
  // Max absolute amplitude difference; requires equal qubit counts.
  double distance(const StateVector& o) const;
  // Same, after aligning the global phase on the largest amplitude of o.
  // Equality of quantum states is phase-insensitive; the coset duality
  // identity holds in exactly this sense (a global sign (-1)^{<s,s'>}
  // appears at the raw amplitude level).
  double distance_up_to_phase(const StateVector& o) const;

 private:
  int n_;
  std::vector<cdouble> amps_;
};

struct MeasurementRecord {
  uint64_t outcome;
  double probability;
  StateVector post_state;
};

// |A_{s,s'}> = sum_{a in A} (-1)^{<s',a>} |a+s> / sqrt|A|.
StateVector prepare_coset_state(const gf2::CosetTriple& t, int qubit_cap = kDefaultQubitCap);

// n-fold Hadamard via the normalized fast Walsh-Hadamard transform.
StateVector hadamard_all(const StateVector& psi);

MeasurementRecord measure_computational(const StateVector& psi, ByteStream& rng);

// Measures f(x) coherently: outcome y with probability sum_{f(x)=y} |amp_x|^2,
// post-state the renormalized restriction to f^{-1}(y). f is only invoked on
// indices of nonzero amplitude.
MeasurementRecord coherent_apply_measure(const StateVector& psi,
                                         const std::function<uint64_t(uint64_t)>& f,
                                         ByteStream& rng);

}  // namespace cosetlab::sim
