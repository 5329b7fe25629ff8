#pragma once

#include "nlsq/types.hpp"

#include <utility>

namespace nlsq {

/// W(x, p) on a uniform grid, in the convention where the vacuum peaks at
/// 1/pi and the integral over dx dp is 1 (consistent with x = (a+a†)/√2).
struct WignerGrid {
  Eigen::VectorXd x_axis;
  Eigen::VectorXd p_axis;
  Eigen::MatrixXd values;  // values(i, j) = W(x_axis(i), p_axis(j))
};

// Default evaluation window; resolves the interference fringes of
// two-photon-added states at |alpha| ~ 1.
inline constexpr double kWignerHalfWidth = 6.0;
inline constexpr int kWignerPoints = 201;

/// W at an arbitrary point set (xs and ps of equal length).
Eigen::VectorXd wigner_points(const DensityMatrix& rho, const Eigen::VectorXd& xs,
                              const Eigen::VectorXd& ps);

/// Full-grid evaluation. Throws NumericError when the grid fails to capture
/// the state (integrated W below 0.999).
WignerGrid wigner_evaluate(const DensityMatrix& rho, const Eigen::VectorXd& x_axis,
                           const Eigen::VectorXd& p_axis);

/// Grid scan over [-6,6]^2 followed by a local simplex refinement. The
/// returned value never exceeds any grid sample.
std::pair<double, Eigen::Vector2d> wigner_minimum(const DensityMatrix& rho);

}  // namespace nlsq
