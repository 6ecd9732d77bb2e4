#include "subspace.hpp"

#include <algorithm>

namespace cosetlab::gf2 {

namespace {

// In-place Gaussian elimination to RREF with pivot columns strictly
// increasing. Rows are packed words; column j is integer bit (n-1-j).
std::vector<uint64_t> rref(int n, std::vector<uint64_t> rows) {
  std::vector<uint64_t> out;
  for (int col = 0; col < n; ++col) {
    uint64_t mask = uint64_t(1) << (n - 1 - col);
    size_t pivot = SIZE_MAX;
    for (size_t r = 0; r < rows.size(); ++r) {
      if (rows[r] & mask) {
        pivot = r;
        break;
      }
    }
    if (pivot == SIZE_MAX) continue;
    uint64_t pv = rows[pivot];
    rows.erase(rows.begin() + pivot);
    for (auto& r : rows)
      if (r & mask) r ^= pv;
    for (auto& r : out)
      if (r & mask) r ^= pv;
    out.push_back(pv);
  }
  return out;
}

}  // namespace

Subspace::Subspace(int ambient_dim, const std::vector<BitVector>& generators)
    : Subspace(ambient_dim) {
  std::vector<uint64_t> raw;
  for (const auto& g : generators) {
    if (g.size() != n_) throw ParameterError("generator length mismatch");
    if (!g.is_zero()) raw.push_back(g.word());
  }
  for (uint64_t w : rref(n_, std::move(raw))) rows_.emplace_back(n_, w);
}

BitVector Subspace::reduce(BitVector v) const {
  if (v.size() != n_) throw ParameterError("vector length mismatch");
  uint64_t w = v.word();
  for (const auto& row : rows_) {
    // Pivot of `row` is its highest set bit; rows are RREF so reducing by
    // pivots in order clears each pivot coordinate of w exactly once.
    uint64_t pivot_mask = uint64_t(1) << (63 - __builtin_clzll(row.word()));
    if (w & pivot_mask) w ^= row.word();
  }
  return BitVector(n_, w);
}

std::vector<BitVector> Subspace::enumerate() const {
  std::vector<BitVector> out;
  out.reserve(size_t(1) << rank());
  for (uint64_t m = 0; m < (uint64_t(1) << rank()); ++m) {
    uint64_t w = 0;
    for (int i = 0; i < rank(); ++i)
      if ((m >> i) & 1) w ^= rows_[i].word();
    out.emplace_back(n_, w);
  }
  return out;
}

Subspace Subspace::dual() const {
  // Kernel of the basis matrix: free columns parameterize the dual basis.
  std::vector<bool> is_pivot(n_, false);
  for (const auto& row : rows_) {
    int pc = 63 - __builtin_clzll(row.word());
    is_pivot[n_ - 1 - pc] = true;
  }
  std::vector<BitVector> gens;
  for (int free = 0; free < n_; ++free) {
    if (is_pivot[free]) continue;
    BitVector w = BitVector::zero(n_);
    w.set(free, true);
    // Solve <row_r, w> = 0 by setting pivot coordinates.
    for (const auto& row : rows_) {
      int pc_col = n_ - 1 - (63 - __builtin_clzll(row.word()));
      if (row.get(free)) w.set(pc_col, true);
    }
    gens.push_back(w);
  }
  return Subspace(n_, gens);
}

Subspace sample_subspace(int n, int d, ByteStream& rng) {
  if (d < 0 || d > n) throw ParameterError("subspace rank must be in [0, n]");
  if (d == 0) return Subspace(n);
  for (;;) {
    std::vector<BitVector> rows;
    rows.reserve(d);
    for (int i = 0; i < d; ++i) {
      uint64_t w = rng.next_u64();
      if (n < 64) w &= (uint64_t(1) << n) - 1;
      rows.emplace_back(n, w);
    }
    Subspace cand(n, rows);
    if (cand.rank() == d) return cand;
  }
}

bool coset_contains(const Subspace& a, const BitVector& offset, const BitVector& v) {
  return a.contains(v ^ offset);
}

BitVector canonical(const Subspace& a, const BitVector& v) {
  // Reducing by RREF rows clears all pivot coordinates. Any other coset
  // element differs by a nonempty sum of basis rows, which flips the
  // smallest-index pivot of that sum from 0 to 1, so the reduced vector is
  // the MSB-first lexicographic minimum.
  return a.reduce(v);
}

std::vector<CosetTriple> coset_gen(const CosetParams& params, ByteStream& rng) {
  if (params.count < 1) throw ParameterError("coset_gen: count must be >= 1");
  if (params.subspace_dim < 0 || params.subspace_dim > params.ambient_dim)
    throw ParameterError("coset_gen: subspace_dim must be in [0, ambient_dim]");
  if (params.paper_mode && params.subspace_dim * 2 != params.ambient_dim)
    throw ParameterError("coset_gen: paper_mode requires subspace_dim = ambient_dim / 2");
  int n = params.ambient_dim;
  uint64_t mask = n < 64 ? (uint64_t(1) << n) - 1 : ~uint64_t(0);
  std::vector<CosetTriple> out;
  out.reserve(params.count);
  for (int i = 0; i < params.count; ++i) {
    Subspace a = sample_subspace(n, params.subspace_dim, rng);
    BitVector s(n, rng.next_u64() & mask);
    BitVector sp(n, rng.next_u64() & mask);
    out.push_back(CosetTriple{std::move(a), s, sp});
  }
  return out;
}

}  // namespace cosetlab::gf2
