#pragma once

#include "nlsq/types.hpp"

#include <map>

namespace nlsq {

/// f(x, p) = p + sum_k c_k x^k with even powers k in {2, 4}.
struct CostFunction {
  std::map<int, double> x_coeffs;

  explicit CostFunction(std::map<int, double> coeffs);
  static CostFunction cubic(double z) { return CostFunction({{2, z}}); }
  static CostFunction quintic(double s, double r4) {
    return CostFunction({{2, s}, {4, r4}});
  }

  double coeff(int k) const;
  int max_power() const;
  bool is_cubic() const { return coeff(4) == 0.0; }
};

/// Minimum of variance_of over pure Gaussian states, with one attaining
/// parameter set. The minimizing set is generally a degenerate orbit; any
/// point on it is reported.
struct GaussianThreshold {
  double value = 0.0;
  double mean_x = 0.0;
  double zeta = 0.0;      // squeezing of the attaining Gaussian, |zeta| <= 1.2
  double rotation = 0.0;  // in [0, pi)
  bool converged = true;
  bool on_bound = false;
};

/// Weyl quantization p̂ + sum_k c_k x̂^k (unambiguous for f linear in p).
Matrix cost_operator(const CostFunction& cost, FockDim dim);

/// Tr[rho O^2] - Tr[rho O]^2 for a prebuilt Hermitian operator.
double operator_variance(const Matrix& rho, const Matrix& op);

/// Tr[rho O^2] - Tr[rho O]^2 with O = cost_operator(cost).
double variance_of(const DensityMatrix& rho, const CostFunction& cost);

/// Closed-form variance of f over the pure Gaussian state with mean
/// (mean_x, 0), covariance R(omega) diag(e^{-2 zeta}, e^{2 zeta})/2 R(omega)ᵀ.
/// Wick moments up to order 8; no Fock truncation enters.
double gaussian_variance(const CostFunction& cost, double mean_x, double zeta,
                         double omega);

/// Multi-start simplex minimization of gaussian_variance. 16 deterministic
/// starts over mean_x in [-3,3], zeta in [-1.2,1.2], rotation in [0,pi).
GaussianThreshold gaussian_threshold(const CostFunction& cost);
GaussianThreshold gaussian_threshold(const CostFunction& cost, int n_starts,
                                     int max_evals, double tol);

/// Same variance through the Wigner picture: numeric phase-space integrals of
/// f and f^2 against W on the given axes. For f linear in p the Weyl symbol
/// of O^2 is exactly f^2, so this matches variance_of up to quadrature error.
double phase_space_variance(const DensityMatrix& rho, const CostFunction& cost,
                            const Eigen::VectorXd& x_axis,
                            const Eigen::VectorXd& p_axis);

}  // namespace nlsq
