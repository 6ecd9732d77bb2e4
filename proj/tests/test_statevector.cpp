#include <doctest.h>

#include <cmath>
#include <map>
#include <set>

#include "sim/statevector.hpp"

using namespace cosetlab;
using namespace cosetlab::gf2;
using namespace cosetlab::sim;

namespace {

CosetTriple random_triple(int n, int d, ByteStream& rng) {
  CosetParams params{n, d, 1, false};
  return coset_gen(params, rng)[0];
}

std::set<uint64_t> support(const StateVector& psi) {
  std::set<uint64_t> out;
  for (size_t i = 0; i < psi.dim(); ++i)
    if (std::norm(psi.amp(i)) > 1e-18) out.insert(i);
  return out;
}

}  // namespace

TEST_CASE("singleton coset gives an exact basis state") {
  CosetTriple t{Subspace(2), BitVector(2, 0b10), BitVector(2, 0b00)};
  StateVector psi = prepare_coset_state(t);
  CHECK(std::abs(psi.amp(0b10) - cdouble(1.0)) < 1e-12);
  CHECK(support(psi) == std::set<uint64_t>{0b10});
}

TEST_CASE("two-element coset with trivial phase") {
  // A = span{(1,0)}, s = (0,1): (|01> + |11>)/sqrt2
  CosetTriple t{Subspace(2, {BitVector(2, 0b10)}), BitVector(2, 0b01), BitVector(2, 0b00)};
  StateVector psi = prepare_coset_state(t);
  double r = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(psi.amp(0b01) - cdouble(r)) < 1e-12);
  CHECK(std::abs(psi.amp(0b11) - cdouble(r)) < 1e-12);
  CHECK(std::abs(psi.amp(0b00)) < 1e-12);
  CHECK(std::abs(psi.amp(0b10)) < 1e-12);
}

TEST_CASE("phases follow <s', a> over the subspace element, not the shifted point") {
  // A = span{(1,0)}, s = 0, s' = (1,0): |00> - |10> up to normalization
  CosetTriple t{Subspace(2, {BitVector(2, 0b10)}), BitVector(2, 0b00), BitVector(2, 0b10)};
  StateVector psi = prepare_coset_state(t);
  double r = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(psi.amp(0b00) - cdouble(r)) < 1e-12);
  CHECK(std::abs(psi.amp(0b10) + cdouble(r)) < 1e-12);
}

TEST_CASE("coset states are normalized for random triples") {
  ByteStream rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 2 + static_cast<int>(rng.uniform_u64(7));  // 2..8
    int d = static_cast<int>(rng.uniform_u64(n + 1));
    StateVector psi = prepare_coset_state(random_triple(n, d, rng));
    CHECK(std::abs(psi.norm() - 1.0) < 1e-9);
  }
}

TEST_CASE("qubit cap raises a resource error") {
  ByteStream rng(4);
  CosetTriple t = random_triple(8, 4, rng);
  CHECK_THROWS_AS(prepare_coset_state(t, 6), ResourceError);
}

TEST_CASE("hadamard involution and uniform superposition") {
  ByteStream rng(31);
  StateVector psi = prepare_coset_state(random_triple(6, 3, rng));
  CHECK(hadamard_all(hadamard_all(psi)).distance(psi) < 1e-9);

  StateVector zero = StateVector::basis(3, 0);
  StateVector plus = hadamard_all(zero);
  for (size_t i = 0; i < plus.dim(); ++i)
    CHECK(std::abs(plus.amp(i) - cdouble(1.0 / std::sqrt(8.0))) < 1e-12);
}

TEST_CASE("duality: H^n maps |A_{s,s'}> to |(A-dual)_{s',s}>") {
  // State equality up to global phase: the raw amplitudes differ by the
  // unphysical sign (-1)^{<s,s'>}.
  ByteStream rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 2 + 2 * static_cast<int>(rng.uniform_u64(4));  // 2,4,6,8
    int d = static_cast<int>(rng.uniform_u64(n + 1));
    CosetTriple t = random_triple(n, d, rng);
    StateVector lhs = hadamard_all(prepare_coset_state(t));
    CosetTriple dual_t{t.space.dual(), t.s_prime, t.s};
    StateVector rhs = prepare_coset_state(dual_t);
    CHECK(lhs.distance_up_to_phase(rhs) < 1e-9);
    // The residual phase is exactly (-1)^{<s,s'>}.
    double sign = t.s.dot(t.s_prime) == 0 ? 1.0 : -1.0;
    double raw = 0;
    for (size_t i = 0; i < lhs.dim(); ++i)
      raw = std::max(raw, std::abs(lhs.amp(i) - sign * rhs.amp(i)));
    CHECK(raw < 1e-9);
  }
}

TEST_CASE("computational measurement lands in the coset uniformly") {
  ByteStream rng(51);
  CosetTriple t = random_triple(4, 2, rng);
  StateVector psi = prepare_coset_state(t);
  std::set<uint64_t> coset;
  for (const auto& a : t.space.enumerate()) coset.insert((a ^ t.s).index());

  std::map<uint64_t, int> counts;
  for (int shot = 0; shot < 4000; ++shot) {
    auto rec = measure_computational(psi, rng);
    CHECK(coset.count(rec.outcome) == 1);
    CHECK(rec.probability == doctest::Approx(0.25));
    CHECK(rec.post_state.distance(StateVector::basis(4, rec.outcome)) < 1e-12);
    counts[rec.outcome]++;
  }
  // chi-square over 4 cells, dof 3
  double chi2 = 0;
  for (uint64_t x : coset) {
    double diff = counts[x] - 1000.0;
    chi2 += diff * diff / 1000.0;
  }
  CHECK(chi2 < 3 + 5 * std::sqrt(6.0));
}

TEST_CASE("measurement on a basis state is deterministic") {
  ByteStream rng(6);
  StateVector psi = StateVector::basis(5, 13);
  auto rec = measure_computational(psi, rng);
  CHECK(rec.outcome == 13);
  CHECK(rec.probability == doctest::Approx(1.0));
}

TEST_CASE("coherent measurement of a constant function leaves the state fixed") {
  ByteStream rng(61);
  StateVector psi = prepare_coset_state(random_triple(5, 3, rng));
  auto rec = coherent_apply_measure(psi, [](uint64_t) { return uint64_t(7); }, rng);
  CHECK(rec.outcome == 7);
  CHECK(rec.probability == doctest::Approx(1.0));
  CHECK(rec.post_state.distance(psi) < 1e-12);
}

TEST_CASE("coherent membership check accepts with certainty and preserves the key") {
  ByteStream rng(71);
  CosetTriple t = random_triple(4, 2, rng);
  StateVector psi = prepare_coset_state(t);
  auto member = [&](uint64_t x) {
    return uint64_t(coset_contains(t.space, t.s, BitVector(4, x)) ? 1 : 0);
  };
  auto rec = coherent_apply_measure(psi, member, rng);
  CHECK(rec.outcome == 1);
  CHECK(rec.probability == doctest::Approx(1.0));
  CHECK(rec.post_state.distance(psi) < 1e-9);
}

TEST_CASE("coherent first-bit measurement splits an even coset") {
  // A = span{(1,0),(0,1)} inside F_2^2: full space, first bit splits 2/2.
  CosetTriple t{Subspace(2, {BitVector(2, 0b10), BitVector(2, 0b01)}), BitVector(2, 0),
                BitVector(2, 0)};
  StateVector psi = prepare_coset_state(t);
  ByteStream rng(81);
  int ones = 0;
  for (int shot = 0; shot < 400; ++shot) {
    auto rec = coherent_apply_measure(psi, [](uint64_t x) { return x >> 1; }, rng);
    CHECK(rec.probability == doctest::Approx(0.5));
    CHECK(support(rec.post_state).size() == 2);
    ones += static_cast<int>(rec.outcome);
  }
  CHECK(ones > 140);
  CHECK(ones < 260);
}

TEST_CASE("two-basis extraction from two copies") {
  ByteStream rng(91);
  for (int trial = 0; trial < 100; ++trial) {
    CosetTriple t = random_triple(6, 3, rng);
    StateVector copy1 = prepare_coset_state(t);
    StateVector copy2 = prepare_coset_state(t);
    auto v = measure_computational(copy1, rng).outcome;
    auto w = measure_computational(hadamard_all(copy2), rng).outcome;
    CHECK(coset_contains(t.space, t.s, BitVector(6, v)));
    CHECK(coset_contains(t.space.dual(), t.s_prime, BitVector(6, w)));
  }
}
