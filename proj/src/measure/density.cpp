#include "density.hpp"

#include <cmath>

namespace cosetlab::measure {

namespace {

void check_hermitian(const Mat& m, double tol, const char* what) {
  if ((m - m.adjoint()).cwiseAbs().maxCoeff() > tol)
    throw ParameterError(std::string(what) + " is not Hermitian");
}

}  // namespace

DensityMatrix::DensityMatrix(Mat mat) : m(std::move(mat)) {
  if (m.rows() != m.cols() || m.rows() < 1) throw ParameterError("density matrix must be square");
  check_hermitian(m, 1e-9, "density matrix");
  if (std::abs(m.trace().real() - 1.0) > 1e-9 || std::abs(m.trace().imag()) > 1e-9)
    throw ParameterError("density matrix trace must be 1");
  Eigen::SelfAdjointEigenSolver<Mat> es(m, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -1e-9)
    throw ParameterError("density matrix is not positive semidefinite");
}

DensityMatrix DensityMatrix::pure(const Vec& v) {
  double n = v.norm();
  if (n < 1e-12) throw ParameterError("zero vector");
  Vec u = v / n;
  return DensityMatrix(u * u.adjoint());
}

DensityMatrix DensityMatrix::maximally_mixed(int d) {
  return DensityMatrix(Mat::Identity(d, d) / double(d));
}

BinaryPOVM::BinaryPOVM(Mat accept) : e1(std::move(accept)) {
  if (e1.rows() != e1.cols() || e1.rows() < 1) throw ParameterError("POVM element must be square");
  check_hermitian(e1, 1e-8, "POVM element");
  Eigen::SelfAdjointEigenSolver<Mat> es(e1, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -1e-8 || es.eigenvalues().maxCoeff() > 1 + 1e-8)
    throw ParameterError("POVM element must satisfy 0 <= E <= I");
}

ProjectiveMixture::ProjectiveMixture(std::vector<Mat> ps, std::vector<double> ws)
    : projectors(std::move(ps)), weights(std::move(ws)) {
  if (projectors.empty() || projectors.size() != weights.size())
    throw ParameterError("mixture needs matching projector and weight lists");
  double total = 0;
  for (double w : weights) {
    if (w < -1e-12) throw ParameterError("negative mixture weight");
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-9) throw ParameterError("mixture weights must sum to 1");
  int d = static_cast<int>(projectors[0].rows());
  for (const auto& p : projectors) {
    if (p.rows() != d || p.cols() != d) throw ParameterError("mixture dimension mismatch");
    check_hermitian(p, 1e-8, "projector");
    if ((p * p - p).cwiseAbs().maxCoeff() > 1e-8)
      throw ParameterError("mixture element is not a projector");
  }
}

BinaryPOVM mixture_to_povm(const ProjectiveMixture& m) {
  Mat e = Mat::Zero(m.dim(), m.dim());
  for (size_t i = 0; i < m.size(); ++i) e += m.weights[i] * m.projectors[i];
  return BinaryPOVM(std::move(e));
}

double gaussian(ByteStream& rng) {
  // Box-Muller; u in (0,1].
  double u = 1.0 - rng.uniform_double();
  double v = rng.uniform_double();
  return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * M_PI * v);
}

Vec random_state(int d, ByteStream& rng) {
  Vec v(d);
  for (int i = 0; i < d; ++i) v(i) = std::complex<double>(gaussian(rng), gaussian(rng));
  return v / v.norm();
}

Mat random_unitary(int d, ByteStream& rng) {
  Mat g(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) g(i, j) = std::complex<double>(gaussian(rng), gaussian(rng));
  Eigen::HouseholderQR<Mat> qr(g);
  Mat q = qr.householderQ();
  // Fix the phases so the distribution is exactly Haar.
  Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < d; ++i) {
    std::complex<double> rii = r(i, i);
    q.col(i) *= std::abs(rii) < 1e-15 ? 1.0 : rii / std::abs(rii);
  }
  return q;
}

Mat random_projector(int d, int rank, ByteStream& rng) {
  if (rank < 0 || rank > d) throw ParameterError("projector rank out of range");
  Mat u = random_unitary(d, rng);
  Mat p = Mat::Zero(d, d);
  for (int i = 0; i < rank; ++i) p += u.col(i) * u.col(i).adjoint();
  return p;
}

DensityMatrix random_density(int d, ByteStream& rng) {
  Mat g(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) g(i, j) = std::complex<double>(gaussian(rng), gaussian(rng));
  Mat w = g * g.adjoint();
  w /= w.trace().real();
  // Symmetrize away rounding drift before validation.
  w = (w + w.adjoint()) / 2.0;
  return DensityMatrix(std::move(w));
}

std::vector<Mat> random_povm(int d, int n, ByteStream& rng) {
  std::vector<Mat> parts;
  Mat total = Mat::Zero(d, d);
  for (int k = 0; k < n; ++k) {
    Mat g(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) g(i, j) = std::complex<double>(gaussian(rng), gaussian(rng));
    Mat w = g * g.adjoint();
    parts.push_back(w);
    total += w;
  }
  // Conjugate by total^{-1/2} so the elements sum to I.
  Eigen::SelfAdjointEigenSolver<Mat> es(total);
  Mat inv_sqrt = es.eigenvectors() *
                 es.eigenvalues().cwiseMax(1e-15).cwiseSqrt().cwiseInverse().asDiagonal() *
                 es.eigenvectors().adjoint();
  for (auto& e : parts) {
    e = inv_sqrt * e * inv_sqrt;
    e = (e + e.adjoint()) / 2.0;
  }
  return parts;
}

Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Mat psd_sqrt(const Mat& a) {
  Eigen::SelfAdjointEigenSolver<Mat> es(a);
  return es.eigenvectors() * es.eigenvalues().cwiseMax(0.0).cwiseSqrt().asDiagonal() *
         es.eigenvectors().adjoint();
}

double trace_distance(const Mat& a, const Mat& b) {
  Eigen::SelfAdjointEigenSolver<Mat> es((a - b + (a - b).adjoint()) / 2.0, Eigen::EigenvaluesOnly);
  return es.eigenvalues().cwiseAbs().sum() / 2.0;
}

Mat partial_trace_first(const Mat& rho, int d1, int d2) {
  if (rho.rows() != d1 * d2) throw ParameterError("partial trace shape mismatch");
  Mat out = Mat::Zero(d2, d2);
  for (int i = 0; i < d1; ++i) out += rho.block(i * d2, i * d2, d2, d2);
  return out;
}

}  // namespace cosetlab::measure
