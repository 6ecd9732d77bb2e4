#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <set>

#include "gf2/subspace.hpp"

using namespace cosetlab;
using namespace cosetlab::gf2;

namespace {

// Independent rank oracle: plain Gaussian elimination on bool matrices,
// no shared code with Subspace.
int rank_oracle(int n, std::vector<uint64_t> rows) {
  int rank = 0;
  for (int col = 0; col < n && rank < static_cast<int>(rows.size()); ++col) {
    uint64_t mask = uint64_t(1) << (n - 1 - col);
    int pivot = -1;
    for (size_t r = rank; r < rows.size(); ++r)
      if (rows[r] & mask) {
        pivot = static_cast<int>(r);
        break;
      }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    for (size_t r = 0; r < rows.size(); ++r)
      if (static_cast<int>(r) != rank && (rows[r] & mask)) rows[r] ^= rows[rank];
    rank++;
  }
  return rank;
}

// Exhaustive list of all rank-d subspaces of F_2^n, each identified by its
// sorted element set. Feasible for n <= 4.
std::set<std::set<uint64_t>> all_subspaces(int n, int d) {
  std::set<std::set<uint64_t>> found;
  uint64_t space = uint64_t(1) << n;
  // Enumerate all d-tuples of vectors, keep independent ones.
  std::vector<uint64_t> picks(d);
  std::function<void(int, uint64_t)> rec = [&](int i, uint64_t start) {
    if (i == d) {
      std::vector<uint64_t> rows(picks);
      if (rank_oracle(n, rows) != d) return;
      std::set<uint64_t> elems;
      for (uint64_t m = 0; m < (uint64_t(1) << d); ++m) {
        uint64_t v = 0;
        for (int j = 0; j < d; ++j)
          if ((m >> j) & 1) v ^= picks[j];
        elems.insert(v);
      }
      found.insert(elems);
      return;
    }
    for (uint64_t v = start; v < space; ++v) {
      picks[i] = v;
      rec(i + 1, v + 1);
    }
  };
  rec(0, 1);
  return found;
}

std::set<uint64_t> element_set(const Subspace& s) {
  std::set<uint64_t> out;
  for (const auto& v : s.enumerate()) out.insert(v.word());
  return out;
}

}  // namespace

TEST_CASE("BitVector packing matches MSB-first convention") {
  BitVector v(4, 0b1010);
  CHECK(v.get(0) == 1);
  CHECK(v.get(1) == 0);
  CHECK(v.get(2) == 1);
  CHECK(v.get(3) == 0);
  CHECK(v.to_string() == "1010");
  CHECK(v.index() == 0b1010);
  BitVector w(4, 0b0110);
  CHECK((v ^ w).word() == 0b1100);
  CHECK(v.dot(w) == 1);  // overlap at position 2 only
  CHECK(BitVector(4, 0b0111) < BitVector(4, 0b1000));
}

TEST_CASE("full space of F_2^2 has the identity RREF basis") {
  ByteStream rng(1);
  Subspace s = sample_subspace(2, 2, rng);
  REQUIRE(s.rank() == 2);
  CHECK(s.basis()[0].word() == 0b10);
  CHECK(s.basis()[1].word() == 0b01);
}

TEST_CASE("RREF is canonical under basis scrambling") {
  ByteStream rng(2);
  for (int trial = 0; trial < 1000; ++trial) {
    int n = 3 + static_cast<int>(rng.uniform_u64(6));  // 3..8
    int d = 1 + static_cast<int>(rng.uniform_u64(n));
    Subspace s = sample_subspace(n, d, rng);
    // Scramble: random invertible combinations of the basis rows.
    std::vector<BitVector> rows = s.basis();
    for (int k = 0; k < 10; ++k) {
      int i = static_cast<int>(rng.uniform_u64(d));
      int j = static_cast<int>(rng.uniform_u64(d));
      if (i != j) rows[i] ^= rows[j];
    }
    // Fisher-Yates with the deterministic stream.
    for (int i = d - 1; i > 0; --i)
      std::swap(rows[i], rows[rng.uniform_u64(i + 1)]);
    Subspace rebuilt(n, rows);
    CHECK(rebuilt == s);
  }
}

TEST_CASE("sample_subspace rank verified by independent oracle") {
  ByteStream rng(42);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 2 + static_cast<int>(rng.uniform_u64(7));
    int d = static_cast<int>(rng.uniform_u64(n + 1));
    Subspace s = sample_subspace(n, d, rng);
    std::vector<uint64_t> rows;
    for (const auto& b : s.basis()) rows.push_back(b.word());
    CHECK(rank_oracle(n, rows) == d);
  }
  CHECK_THROWS_AS(sample_subspace(3, 4, rng), ParameterError);
}

TEST_CASE("rank-1 subspaces of F_2^2 appear uniformly") {
  ByteStream rng(7);
  std::map<std::set<uint64_t>, int> counts;
  const int shots = 3000;
  for (int i = 0; i < shots; ++i) counts[element_set(sample_subspace(2, 1, rng))]++;
  auto expected = all_subspaces(2, 1);
  REQUIRE(expected.size() == 3);
  // Each should appear 1000 times; 3 sigma of Binomial(3000, 1/3) ~ 77.
  for (const auto& sub : expected) {
    CHECK(counts[sub] > 1000 - 78);
    CHECK(counts[sub] < 1000 + 78);
  }
}

TEST_CASE("sample_subspace uniformity chi-square for n <= 4") {
  ByteStream rng(11);
  for (auto [n, d] : std::vector<std::pair<int, int>>{{3, 1}, {3, 2}, {4, 2}}) {
    auto expected = all_subspaces(n, d);
    std::map<std::set<uint64_t>, int> counts;
    int k = static_cast<int>(expected.size());
    int shots = 200 * k;
    for (int i = 0; i < shots; ++i) counts[element_set(sample_subspace(n, d, rng))]++;
    double chi2 = 0;
    double e = double(shots) / k;
    for (const auto& sub : expected) {
      double diff = counts[sub] - e;
      chi2 += diff * diff / e;
    }
    // dof = k-1; a chi-square variate stays below dof + 5*sqrt(2*dof)
    // except with tiny probability.
    double dof = k - 1;
    CHECK(chi2 < dof + 5 * std::sqrt(2 * dof));
    // Every subspace reachable.
    CHECK(counts.size() == expected.size());
  }
}

TEST_CASE("dual: closed forms and involution") {
  ByteStream rng(3);
  // dual of full space is {0}
  Subspace full = sample_subspace(3, 3, rng);
  CHECK(full.dual().rank() == 0);
  CHECK(Subspace(3).dual().rank() == 3);

  // dual(span{(1,1)}) = span{(1,1)} in F_2^2: brute force gives {00, 11}
  Subspace diag(2, {BitVector(2, 0b11)});
  auto elems = element_set(diag.dual());
  CHECK(elems == std::set<uint64_t>{0b00, 0b11});

  for (int trial = 0; trial < 100; ++trial) {
    int n = 2 + static_cast<int>(rng.uniform_u64(7));
    int d = static_cast<int>(rng.uniform_u64(n + 1));
    Subspace a = sample_subspace(n, d, rng);
    Subspace ad = a.dual();
    CHECK(a.rank() + ad.rank() == n);
    CHECK(ad.dual() == a);
    // Orthogonality of every basis pair.
    for (const auto& x : a.basis())
      for (const auto& y : ad.basis()) CHECK(x.dot(y) == 0);
  }
}

TEST_CASE("coset_contains against enumeration") {
  Subspace a(2, {BitVector(2, 0b10)});
  BitVector offset(2, 0b01);
  // Coset {01, 11}
  CHECK(coset_contains(a, offset, BitVector(2, 0b11)));
  CHECK(coset_contains(a, offset, BitVector(2, 0b01)));
  CHECK_FALSE(coset_contains(a, offset, BitVector(2, 0b10)));
  CHECK_FALSE(coset_contains(a, offset, BitVector(2, 0b00)));
  CHECK_THROWS_AS(coset_contains(a, offset, BitVector(3, 0)), ParameterError);

  ByteStream rng(5);
  Subspace full = sample_subspace(4, 4, rng);
  for (uint64_t v = 0; v < 16; ++v)
    CHECK(coset_contains(full, BitVector(4, 3), BitVector(4, v)));
}

TEST_CASE("canonical is the enumerated lexicographic minimum") {
  // A = span{(1,1)}, v = (1,0): coset {10, 01}, min = 01
  Subspace a(2, {BitVector(2, 0b11)});
  CHECK(canonical(a, BitVector(2, 0b10)).word() == 0b01);

  // Singleton coset
  Subspace zero(3);
  CHECK(canonical(zero, BitVector(3, 0b101)).word() == 0b101);

  ByteStream rng(9);
  for (int trial = 0; trial < 1000; ++trial) {
    int n = 2 + static_cast<int>(rng.uniform_u64(5));  // 2..6
    int d = static_cast<int>(rng.uniform_u64(n + 1));
    Subspace s = sample_subspace(n, d, rng);
    BitVector v(n, rng.next_u64() & ((uint64_t(1) << n) - 1));
    BitVector can = canonical(s, v);
    // Oracle: enumerate the whole coset and take the minimum word.
    uint64_t best = UINT64_MAX;
    for (const auto& w : s.enumerate()) best = std::min(best, (w ^ v).word());
    CHECK(can.word() == best);
    // Coset invariance
    auto elems = s.enumerate();
    BitVector w = elems[rng.uniform_u64(elems.size())];
    CHECK(canonical(s, v ^ w) == can);
  }
}

TEST_CASE("canonical recasts coset membership as compute-and-compare") {
  ByteStream rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 4;
    Subspace s = sample_subspace(n, 2, rng);
    BitVector off(n, rng.next_u64() & 0xf);
    BitVector v(n, rng.next_u64() & 0xf);
    CHECK(coset_contains(s, off, v) == (canonical(s, v) == canonical(s, off)));
  }
}

TEST_CASE("coset_gen determinism, ranks, and parameter checks") {
  CosetParams params{4, 2, 3, false};
  ByteStream rng1(77), rng2(77);
  auto a = coset_gen(params, rng1);
  auto b = coset_gen(params, rng2);
  REQUIRE(a.size() == 3);
  for (size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].space == b[i].space);
    CHECK(a[i].s == b[i].s);
    CHECK(a[i].s_prime == b[i].s_prime);
    std::vector<uint64_t> rows;
    for (const auto& r : a[i].space.basis()) rows.push_back(r.word());
    CHECK(rank_oracle(4, rows) == 2);
  }

  ByteStream rng3(7);
  auto c = coset_gen(params, rng3);
  for (const auto& t : c) CHECK(t.space.rank() == 2);

  CosetParams bad{4, 3, 2, true};  // paper_mode needs d = n/2
  ByteStream rng4(1);
  CHECK_THROWS_AS(coset_gen(bad, rng4), ParameterError);

  // Budgeted stream exhaustion surfaces as a randomness error.
  ByteStream tiny(5);
  tiny.set_budget(4);
  CHECK_THROWS_AS(coset_gen(params, tiny), RandomnessError);
}
