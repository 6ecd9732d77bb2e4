#pragma once

#include <Eigen/Dense>
#include <vector>

#include "../common/bytestream.hpp"
#include "../common/errors.hpp"

namespace cosetlab::measure {

using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

// Mixed state. Validated on construction: Hermitian and unit trace within
// 1e-9, eigenvalues >= -1e-9.
struct DensityMatrix {
  Mat m;

  explicit DensityMatrix(Mat mat);
  int dim() const { return static_cast<int>(m.rows()); }

  static DensityMatrix pure(const Vec& v);
  static DensityMatrix maximally_mixed(int d);
};

// Binary POVM, stored by its accept element: 0 <= e1 <= I within 1e-8.
struct BinaryPOVM {
  Mat e1;

  explicit BinaryPOVM(Mat accept);
  int dim() const { return static_cast<int>(e1.rows()); }
};

// Finite mixture of binary projective measurements {P_i, I-P_i} drawn with
// probability weights[i]. Projectors validated to satisfy P^2 = P within
// 1e-8; weights sum to 1 within 1e-9.
struct ProjectiveMixture {
  std::vector<Mat> projectors;
  std::vector<double> weights;

  ProjectiveMixture(std::vector<Mat> ps, std::vector<double> ws);
  int dim() const { return static_cast<int>(projectors.at(0).rows()); }
  size_t size() const { return projectors.size(); }
};

// Induced POVM accept element: sum_i weights[i] * P_i.
BinaryPOVM mixture_to_povm(const ProjectiveMixture& m);

// ---- random instances (all randomness from the stream) -------------------

double gaussian(ByteStream& rng);
Vec random_state(int d, ByteStream& rng);
// Haar-ish unitary via QR of a Gaussian matrix.
Mat random_unitary(int d, ByteStream& rng);
// Rank-r orthogonal projector onto a random subspace.
Mat random_projector(int d, int rank, ByteStream& rng);
// Full-rank random density matrix (normalized Wishart).
DensityMatrix random_density(int d, ByteStream& rng);
// Random n-outcome POVM {E_i}: normalized random PSD parts summing to I.
std::vector<Mat> random_povm(int d, int n, ByteStream& rng);

// Kronecker product a (x) b.
Mat kron(const Mat& a, const Mat& b);
// Hermitian PSD square root.
Mat psd_sqrt(const Mat& a);
// (1/2)||a - b||_1 for Hermitian a, b.
double trace_distance(const Mat& a, const Mat& b);
// Trace out the first register of a (d1*d2)-dimensional matrix.
Mat partial_trace_first(const Mat& rho, int d1, int d2);

}  // namespace cosetlab::measure
