#include "nlsq/wigner.hpp"

#include "nlsq/simplex.hpp"

#include <cmath>

namespace nlsq {

namespace {

// Kernel of |m><m+delta| against the displaced-parity operator, scaled so all
// intermediates stay bounded: P_m = gamma^delta e^{-u/2} sqrt(m!/(m+delta)!)
// L_m^(delta)(u) with gamma = 2 beta, u = |gamma|^2. The e^{-u/2} and
// 1/sqrt(delta!) factors are folded into the recurrence seed, which keeps the
// recurrence overflow-free for any grid in the supported window.
Eigen::VectorXd wigner_points_impl(const Matrix& rho, const Eigen::ArrayXd& xs,
                                   const Eigen::ArrayXd& ps) {
  using Arr = Eigen::ArrayXd;
  using CArr = Eigen::ArrayXcd;
  const Eigen::Index dim = rho.rows();
  const Eigen::Index npts = xs.size();

  CArr gamma = std::sqrt(2.0) * (xs + Complex(0, 1) * ps);
  Arr u = gamma.abs2();
  Arr log_abs_gamma = gamma.abs().max(1e-300).log();
  Arr arg_gamma = gamma.arg();

  Arr w = Arr::Zero(npts);
  for (Eigen::Index delta = 0; delta < dim; ++delta) {
    double band_max = 0.0;
    for (Eigen::Index m = 0; m + delta < dim; ++m)
      band_max = std::max(band_max, std::abs(rho(m, m + delta)));
    if (band_max < 1e-18) continue;

    CArr pm1(npts), pm2(npts);
    if (delta == 0) {
      pm1 = (-0.5 * u).exp();
    } else {
      Arr mag = (double(delta) * log_abs_gamma - 0.5 * u - 0.5 * std::lgamma(double(delta) + 1.0)).exp();
      pm1 = mag * (Complex(0, 1) * double(delta) * arg_gamma).exp();
    }
    CArr acc = CArr::Zero(npts);
    double sign = 1.0;
    for (Eigen::Index m = 0; m + delta < dim; ++m) {
      CArr pm(npts);
      if (m == 0) {
        pm = pm1;
      } else {
        CArr t = (2.0 * double(m) - 1.0 + double(delta) - u) * pm1;
        if (m >= 2) t -= std::sqrt(double(m - 1) * double(m - 1 + delta)) * pm2;
        pm = t / std::sqrt(double(m) * double(m + delta));
        pm2.swap(pm1);
        pm1 = pm;
      }
      const Complex c = rho(m, m + delta);
      if (c != Complex(0)) acc += (sign * c) * pm;
      sign = -sign;
    }
    w += (delta == 0 ? 1.0 : 2.0) * acc.real();
  }
  return (w / M_PI).matrix();
}

}  // namespace

Eigen::VectorXd wigner_points(const DensityMatrix& rho, const Eigen::VectorXd& xs,
                              const Eigen::VectorXd& ps) {
  if (xs.size() != ps.size())
    throw std::invalid_argument("wigner_points: xs and ps must have equal length");
  return wigner_points_impl(rho.mat(), xs.array(), ps.array());
}

WignerGrid wigner_evaluate(const DensityMatrix& rho, const Eigen::VectorXd& x_axis,
                           const Eigen::VectorXd& p_axis) {
  const Eigen::Index nx = x_axis.size(), np = p_axis.size();
  if (nx < 2 || np < 2)
    throw std::invalid_argument("wigner_evaluate: need at least a 2x2 grid");
  Eigen::ArrayXd xs(nx * np), ps(nx * np);
  for (Eigen::Index i = 0; i < nx; ++i)
    for (Eigen::Index j = 0; j < np; ++j) {
      xs(i * np + j) = x_axis(i);
      ps(i * np + j) = p_axis(j);
    }
  Eigen::VectorXd flat = wigner_points_impl(rho.mat(), xs, ps);
  WignerGrid grid;
  grid.x_axis = x_axis;
  grid.p_axis = p_axis;
  grid.values = Eigen::Map<Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic,
                                         Eigen::RowMajor>>(flat.data(), nx, np);
  const double dx = x_axis(1) - x_axis(0);
  const double dp = p_axis(1) - p_axis(0);
  const double mass = grid.values.sum() * dx * dp;
  if (mass < 0.999)
    throw NumericError("wigner_evaluate: grid captures mass " + std::to_string(mass) +
                       " < 0.999; enlarge the grid");
  return grid;
}

std::pair<double, Eigen::Vector2d> wigner_minimum(const DensityMatrix& rho) {
  Eigen::VectorXd axis =
      Eigen::VectorXd::LinSpaced(kWignerPoints, -kWignerHalfWidth, kWignerHalfWidth);
  WignerGrid grid = wigner_evaluate(rho, axis, axis);
  Eigen::Index bi = 0, bj = 0;
  const double grid_min = grid.values.minCoeff(&bi, &bj);

  const double h = axis(1) - axis(0);
  auto objective = [&](const Eigen::VectorXd& v) {
    return wigner_points(rho, v.head<1>(), v.tail<1>())(0);
  };
  Eigen::VectorXd start(2);
  start << axis(bi), axis(bj);
  Eigen::VectorXd steps = Eigen::VectorXd::Constant(2, h);
  SimplexOptions opts;
  opts.max_evals = 400;
  opts.f_tol = 1e-12;
  SimplexResult res = nelder_mead(objective, start, steps, opts);

  if (res.value <= grid_min)
    return {res.value, Eigen::Vector2d(res.x(0), res.x(1))};
  return {grid_min, Eigen::Vector2d(axis(bi), axis(bj))};
}

}  // namespace nlsq
