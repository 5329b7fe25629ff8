#include "nlsq/cost.hpp"

#include "nlsq/fock.hpp"
#include "nlsq/simplex.hpp"
#include "nlsq/states.hpp"
#include "nlsq/wigner.hpp"

#include <cmath>

namespace nlsq {

CostFunction::CostFunction(std::map<int, double> coeffs) : x_coeffs(std::move(coeffs)) {
  bool any_nonzero = false;
  for (const auto& [k, c] : x_coeffs) {
    if (k != 2 && k != 4)
      throw std::invalid_argument("CostFunction: unsupported power " + std::to_string(k));
    if (!std::isfinite(c))
      throw std::invalid_argument("CostFunction: non-finite coefficient");
    if (c != 0.0) any_nonzero = true;
  }
  if (!any_nonzero)
    throw std::invalid_argument("CostFunction: at least one nonzero coefficient required");
}

double CostFunction::coeff(int k) const {
  auto it = x_coeffs.find(k);
  return it == x_coeffs.end() ? 0.0 : it->second;
}

int CostFunction::max_power() const {
  int m = 0;
  for (const auto& [k, c] : x_coeffs)
    if (c != 0.0) m = std::max(m, k);
  return m;
}

Matrix cost_operator(const CostFunction& cost, FockDim dim) {
  auto [x, p] = quadrature_operators(dim);
  Matrix x2 = x * x;
  Matrix op = p + cost.coeff(2) * x2;
  if (cost.coeff(4) != 0.0) op += cost.coeff(4) * (x2 * x2);
  return op;
}

double operator_variance(const Matrix& rho, const Matrix& op) {
  Matrix rho_op = rho * op;
  const double e1 = rho_op.trace().real();
  const double e2 = trace_product(rho_op, op).real();
  return e2 - e1 * e1;
}

double variance_of(const DensityMatrix& rho, const CostFunction& cost) {
  if (rho.dim() < 2) throw std::invalid_argument("variance_of: bad state");
  return operator_variance(rho.mat(), cost_operator(cost, FockDim(int(rho.dim()))));
}

double gaussian_variance(const CostFunction& cost, double mean_x, double zeta,
                         double omega) {
  const double c = std::cos(omega), s = std::sin(omega);
  const double em = 0.5 * std::exp(-2.0 * zeta), ep = 0.5 * std::exp(2.0 * zeta);
  const double sxx = c * c * em + s * s * ep;
  const double spp = s * s * em + c * c * ep;
  const double sxp = c * s * (em - ep);

  // p = gamma (x - mean) + w with w independent of x
  const double gamma = sxp / sxx;
  const double var_w = spp - sxp * sxp / sxx;

  double m[9];
  m[0] = 1.0;
  m[1] = mean_x;
  for (int k = 2; k <= 8; ++k) m[k] = mean_x * m[k - 1] + (k - 1) * sxx * m[k - 2];

  const double h[3] = {gamma, cost.coeff(2), cost.coeff(4)};
  const int pw[3] = {1, 2, 4};
  double e1 = 0.0, e2 = 0.0;
  for (int i = 0; i < 3; ++i) {
    e1 += h[i] * m[pw[i]];
    for (int j = 0; j < 3; ++j) e2 += h[i] * h[j] * m[pw[i] + pw[j]];
  }
  return var_w + e2 - e1 * e1;
}

GaussianThreshold gaussian_threshold(const CostFunction& cost) {
  return gaussian_threshold(cost, 16, 2000, 1e-10);
}

GaussianThreshold gaussian_threshold(const CostFunction& cost, int n_starts,
                                     int max_evals, double tol) {
  auto objective = [&cost](const Eigen::VectorXd& v) {
    const double zeta = std::clamp(v(1), -kMaxSqueezing, kMaxSqueezing);
    return gaussian_variance(cost, v(0), zeta, v(2));
  };

  std::vector<Eigen::VectorXd> starts;
  Eigen::VectorXd s0(3);
  // squeezed-vacuum guess: exact argmin of the pure-quadratic cost
  const double c2 = cost.coeff(2);
  s0 << 0.0, (c2 != 0.0 ? std::clamp(std::log(2.0 * c2 * c2) / 6.0, -1.2, 1.2) : 0.0), 0.0;
  starts.push_back(s0);
  const std::vector<std::pair<double, double>> box = {
      {-3.0, 3.0}, {-kMaxSqueezing, kMaxSqueezing}, {0.0, M_PI}};
  for (int i = 1; i < n_starts; ++i) starts.push_back(halton_point(i, box));

  SimplexOptions opts;
  opts.max_evals = max_evals;
  opts.f_tol = tol;
  SimplexResult best;
  best.value = std::numeric_limits<double>::infinity();
  for (const auto& s : starts) {
    SimplexResult r = nelder_mead(objective, s, {}, opts);
    if (r.value < best.value) best = r;
  }

  GaussianThreshold out;
  out.value = best.value;
  out.mean_x = best.x(0);
  out.zeta = std::clamp(best.x(1), -kMaxSqueezing, kMaxSqueezing);
  out.rotation = std::fmod(std::fmod(best.x(2), M_PI) + M_PI, M_PI);
  out.converged = best.converged;
  out.on_bound = std::abs(std::abs(out.zeta) - kMaxSqueezing) < 1e-9;
  if (!(out.value > 0.0))
    throw NumericError("gaussian_threshold: non-positive minimum " +
                       std::to_string(out.value));
  return out;
}

double phase_space_variance(const DensityMatrix& rho, const CostFunction& cost,
                            const Eigen::VectorXd& x_axis,
                            const Eigen::VectorXd& p_axis) {
  WignerGrid grid = wigner_evaluate(rho, x_axis, p_axis);
  const Eigen::Index nx = x_axis.size(), np = p_axis.size();

  auto trapezoid_weights = [](const Eigen::VectorXd& axis) {
    const double h = axis(1) - axis(0);
    Eigen::VectorXd w = Eigen::VectorXd::Constant(axis.size(), h);
    w(0) = w(axis.size() - 1) = 0.5 * h;
    return w;
  };
  Eigen::VectorXd wx = trapezoid_weights(x_axis), wp = trapezoid_weights(p_axis);

  Eigen::VectorXd gx(nx);
  for (Eigen::Index i = 0; i < nx; ++i) {
    const double x2 = x_axis(i) * x_axis(i);
    gx(i) = cost.coeff(2) * x2 + cost.coeff(4) * x2 * x2;
  }

  double e1 = 0.0, e2 = 0.0;
  for (Eigen::Index i = 0; i < nx; ++i)
    for (Eigen::Index j = 0; j < np; ++j) {
      const double f = p_axis(j) + gx(i);
      const double w = grid.values(i, j) * wx(i) * wp(j);
      e1 += w * f;
      e2 += w * f * f;
    }
  return e2 - e1 * e1;
}

}  // namespace nlsq
