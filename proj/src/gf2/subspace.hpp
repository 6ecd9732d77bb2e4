#pragma once

#include <vector>

#include "../common/bytestream.hpp"
#include "bitvec.hpp"

namespace cosetlab::gf2 {

// Subspace of F_2^n held in reduced row-echelon form. RREF is canonical:
// two bases of the same subspace produce identical representations.
class Subspace {
 public:
  explicit Subspace(int ambient_dim) : n_(ambient_dim) {
    if (n_ < 0 || n_ > 64) throw ParameterError("ambient dimension must be in [0,64]");
  }
  // Canonicalizes an arbitrary (possibly dependent) generating set.
  Subspace(int ambient_dim, const std::vector<BitVector>& generators);

  int ambient_dim() const { return n_; }
  int rank() const { return static_cast<int>(rows_.size()); }
  const std::vector<BitVector>& basis() const { return rows_; }

  bool operator==(const Subspace& o) const { return n_ == o.n_ && rows_ == o.rows_; }

  bool contains(const BitVector& v) const { return reduce(v).is_zero(); }

  // v with every pivot coordinate of the basis cleared; zero iff v is in
  // the span, and the lexicographically smallest element of span + v.
  BitVector reduce(BitVector v) const;

  // All 2^rank elements, for small-dimension oracles.
  std::vector<BitVector> enumerate() const;

  Subspace dual() const;

 private:
  int n_;
  std::vector<BitVector> rows_;  // RREF, pivot columns strictly increasing
};

// Uniformly random rank-d subspace of F_2^n: rejection-sample d x n
// matrices until full rank. Uniform because every rank-d subspace has the
// same number of ordered bases.
Subspace sample_subspace(int n, int d, ByteStream& rng);

// True iff v is in the coset span(a) + offset.
bool coset_contains(const Subspace& a, const BitVector& offset, const BitVector& v);

// Lexicographically smallest element of span(a) + v (MSB-first order).
BitVector canonical(const Subspace& a, const BitVector& v);

struct CosetTriple {
  Subspace space;
  BitVector s;
  BitVector s_prime;
};

struct CosetParams {
  int ambient_dim = 4;
  int subspace_dim = 2;
  int count = 3;
  bool paper_mode = false;
};

// Samples `count` triples (A_i, s_i, s_i') from the stream. Deterministic
// given the stream; draw order is fixed so independent callers holding the
// same seed reproduce the same tuple.
std::vector<CosetTriple> coset_gen(const CosetParams& params, ByteStream& rng);

}  // namespace cosetlab::gf2
