#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <string>

namespace nlsq {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Validation tolerances for density matrices (Hermiticity, spectrum, trace).
inline constexpr double kDensityTol = 1e-10;

// Thrown when a computation fails numerically (non-convergence, grid
// coverage, truncation overflow). Maps to CLI exit code 3.
struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown on malformed or unreadable input/output files. CLI exit code 4.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Number of retained Fock levels |0>..|n_levels-1>.
struct FockDim {
  int n_levels;
  explicit FockDim(int n) : n_levels(n) {
    if (n < 2) throw std::invalid_argument("FockDim: n_levels must be >= 2");
  }
};

inline constexpr int kDefaultLevels = 60;

/// Hermitian, positive-semidefinite, unit-trace matrix in the truncated Fock
/// basis. Construction validates; arithmetic never repairs silently. Use
/// repaired() at explicit validation points (channel outputs, file import,
/// tomography results) to clip spectrum noise and renormalize.
class DensityMatrix {
 public:
  explicit DensityMatrix(Matrix m);

  static DensityMatrix pure(const Vector& ket);
  static DensityMatrix repaired(const Matrix& m);

  const Matrix& mat() const { return mat_; }
  Eigen::Index dim() const { return mat_.rows(); }

 private:
  struct unchecked_t {};
  DensityMatrix(Matrix m, unchecked_t) : mat_(std::move(m)) {}
  Matrix mat_;
};

}  // namespace nlsq
