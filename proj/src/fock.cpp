#include "nlsq/fock.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>

namespace nlsq {

DensityMatrix::DensityMatrix(Matrix m) : mat_(std::move(m)) {
  if (mat_.rows() != mat_.cols() || mat_.rows() < 2)
    throw std::invalid_argument("DensityMatrix: square matrix of dim >= 2 required");
  if (!mat_.allFinite())
    throw std::invalid_argument("DensityMatrix: non-finite entries");
  if ((mat_ - mat_.adjoint()).cwiseAbs().maxCoeff() > kDensityTol)
    throw std::invalid_argument("DensityMatrix: not Hermitian within 1e-10");
  if (std::abs(mat_.trace() - Complex(1.0)) > kDensityTol)
    throw std::invalid_argument("DensityMatrix: trace differs from 1 by more than 1e-10");
  Eigen::SelfAdjointEigenSolver<Matrix> es(mat_, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -kDensityTol)
    throw std::invalid_argument("DensityMatrix: negative eigenvalue below -1e-10");
}

DensityMatrix DensityMatrix::pure(const Vector& ket) {
  const double n = ket.norm();
  if (!(n > 0.0) || !ket.allFinite())
    throw std::invalid_argument("DensityMatrix::pure: ket not normalizable");
  Vector psi = ket / n;
  return DensityMatrix(psi * psi.adjoint(), unchecked_t{});
}

DensityMatrix DensityMatrix::repaired(const Matrix& m) {
  if (m.rows() != m.cols() || !m.allFinite())
    throw std::invalid_argument("DensityMatrix::repaired: square finite matrix required");
  Matrix h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  Eigen::VectorXd ev = es.eigenvalues().cwiseMax(0.0);
  const double tr = ev.sum();
  if (!(tr > 0.0))
    throw std::invalid_argument("DensityMatrix::repaired: no positive spectral weight");
  ev /= tr;
  Matrix out = es.eigenvectors() * ev.asDiagonal() * es.eigenvectors().adjoint();
  return DensityMatrix(std::move(out), unchecked_t{});
}

std::pair<Matrix, Matrix> ladder_operators(FockDim dim) {
  const int n = dim.n_levels;
  Matrix a = Matrix::Zero(n, n);
  for (int k = 1; k < n; ++k) a(k - 1, k) = std::sqrt(double(k));
  return {a, a.adjoint()};
}

std::pair<Matrix, Matrix> quadrature_operators(FockDim dim) {
  auto [a, ad] = ladder_operators(dim);
  const double s = 1.0 / std::sqrt(2.0);
  Matrix x = s * (a + ad);
  Matrix p = Complex(0, -1) * s * (a - ad);
  return {x, p};
}

Vector fock_ket(FockDim dim, int n) {
  if (n < 0 || n >= dim.n_levels)
    throw std::invalid_argument("fock_ket: level outside truncation");
  Vector v = Vector::Zero(dim.n_levels);
  v(n) = 1.0;
  return v;
}

Complex trace_product(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.cols() || a.cols() != b.rows())
    throw std::invalid_argument("trace_product: dimension mismatch");
  return (a.transpose().cwiseProduct(b)).sum();
}

Complex expectation(const DensityMatrix& rho, const Matrix& obs) {
  if (rho.dim() != obs.rows() || obs.rows() != obs.cols())
    throw std::invalid_argument("expectation: dimension mismatch");
  return trace_product(rho.mat(), obs);
}

double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim())
    throw std::invalid_argument("fidelity: dimension mismatch");
  Eigen::SelfAdjointEigenSolver<Matrix> es(rho.mat());
  if (es.eigenvalues().minCoeff() < -kDensityTol)
    throw std::invalid_argument("fidelity: input not PSD after tolerance clipping");
  Eigen::VectorXd sq = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  Matrix root = es.eigenvectors() * sq.asDiagonal() * es.eigenvectors().adjoint();
  Matrix inner = root * sigma.mat() * root;
  Eigen::SelfAdjointEigenSolver<Matrix> es2(0.5 * (inner + inner.adjoint()),
                                            Eigen::EigenvaluesOnly);
  const double s = es2.eigenvalues().cwiseMax(0.0).cwiseSqrt().sum();
  return std::min(s * s, 1.0);
}

Matrix operator_exponential(const Matrix& gen) {
  if (gen.rows() != gen.cols())
    throw std::invalid_argument("operator_exponential: square matrix required");
  if (!gen.allFinite())
    throw std::invalid_argument("operator_exponential: non-finite entries");
  const double scale = gen.cwiseAbs().maxCoeff();
  if (scale == 0.0) return Matrix::Identity(gen.rows(), gen.cols());
  if ((gen + gen.adjoint()).cwiseAbs().maxCoeff() < 1e-12 * scale) {
    // gen = -iH with H Hermitian; exp(gen) = V exp(-i diag) V^†
    Eigen::SelfAdjointEigenSolver<Matrix> es(Complex(0, 1) * gen);
    Vector phases = (Complex(0, -1) * es.eigenvalues().cast<Complex>()).array().exp();
    return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
  }
  return gen.exp();
}

}  // namespace nlsq
