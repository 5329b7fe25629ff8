#pragma once

#include "nlsq/types.hpp"

namespace nlsq {

/// Parameters of U_G = R(theta) D(alpha) S(r) R(phi) with
/// R(t) = exp(i t a†a), D(a) = exp(a a† - a* a), S(r) = exp((r/2)(a² - a†²)).
struct GaussianUnitaryParams {
  double theta = 0.0;
  double phi = 0.0;
  double r = 0.0;
  Complex alpha = 0.0;

  GaussianUnitaryParams() = default;
  GaussianUnitaryParams(double theta_, double phi_, double r_, Complex alpha_);
};

/// Affine Heisenberg action on the quadrature vector (x, p):
/// U† (x, p)ᵀ U = M (x, p)ᵀ + d, with det M = 1.
struct SymplecticAction {
  Eigen::Matrix2d M;
  Eigen::Vector2d d;
};

Matrix rotation_operator(double theta, FockDim dim);
Matrix displacement_operator(Complex alpha, FockDim dim);
Matrix squeeze_operator(double r, FockDim dim);

/// Product R(theta) D(alpha) S(r) R(phi) on the truncated space.
Matrix build_gaussian_unitary(const GaussianUnitaryParams& params, FockDim dim);

/// The exact phase-space action of the same product:
/// M = Rot(theta) diag(e^{-r}, e^{r}) Rot(phi), d = Rot(theta) √2 (Re a, Im a).
SymplecticAction symplectic_of(const GaussianUnitaryParams& params);

}  // namespace nlsq
