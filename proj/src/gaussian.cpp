#include "nlsq/gaussian.hpp"

#include "nlsq/fock.hpp"
#include "nlsq/states.hpp"

#include <cmath>

namespace nlsq {

GaussianUnitaryParams::GaussianUnitaryParams(double theta_, double phi_, double r_,
                                             Complex alpha_)
    : theta(theta_), phi(phi_), r(r_), alpha(alpha_) {
  if (std::abs(r_) > kMaxSqueezing)
    throw std::invalid_argument("GaussianUnitaryParams: |r| outside supported regime");
  if (std::abs(alpha_) > kMaxCoherentAmplitude)
    throw std::invalid_argument("GaussianUnitaryParams: |alpha| outside supported regime");
}

Matrix rotation_operator(double theta, FockDim dim) {
  Vector diag(dim.n_levels);
  for (int n = 0; n < dim.n_levels; ++n)
    diag(n) = std::exp(Complex(0, theta * n));
  return diag.asDiagonal();
}

Matrix displacement_operator(Complex alpha, FockDim dim) {
  auto [a, ad] = ladder_operators(dim);
  return operator_exponential(alpha * ad - std::conj(alpha) * a);
}

Matrix squeeze_operator(double r, FockDim dim) {
  auto [a, ad] = ladder_operators(dim);
  return operator_exponential(0.5 * r * (a * a - ad * ad));
}

Matrix build_gaussian_unitary(const GaussianUnitaryParams& params, FockDim dim) {
  return rotation_operator(params.theta, dim) *
         displacement_operator(params.alpha, dim) *
         squeeze_operator(params.r, dim) * rotation_operator(params.phi, dim);
}

namespace {
Eigen::Matrix2d rot2(double t) {
  Eigen::Matrix2d m;
  m << std::cos(t), -std::sin(t), std::sin(t), std::cos(t);
  return m;
}
}  // namespace

SymplecticAction symplectic_of(const GaussianUnitaryParams& params) {
  Eigen::Matrix2d sq = Eigen::Vector2d(std::exp(-params.r), std::exp(params.r)).asDiagonal();
  SymplecticAction out;
  out.M = rot2(params.theta) * sq * rot2(params.phi);
  out.d = rot2(params.theta) *
          (std::sqrt(2.0) * Eigen::Vector2d(params.alpha.real(), params.alpha.imag()));
  return out;
}

}  // namespace nlsq
