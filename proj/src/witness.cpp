#include "nlsq/witness.hpp"

#include "nlsq/fock.hpp"
#include "nlsq/parallel.hpp"
#include "nlsq/simplex.hpp"
#include "nlsq/states.hpp"

#include <cmath>
#include <limits>
#include <vector>

namespace nlsq {

namespace {

constexpr double kAlphaBox = 2.0;   // per-component displacement search range
constexpr double kSMin = 0.05, kSMax = 4.0;
constexpr double kR4Box = 2.0;

GaussianUnitaryParams clamp_params(double theta, double phi, double r, double re,
                                   double im) {
  r = std::clamp(r, -kMaxSqueezing, kMaxSqueezing);
  re = std::clamp(re, -kAlphaBox, kAlphaBox);
  im = std::clamp(im, -kAlphaBox, kAlphaBox);
  Complex alpha(re, im);
  const double mag = std::abs(alpha);
  if (mag > kMaxCoherentAmplitude) alpha *= kMaxCoherentAmplitude / mag;
  return GaussianUnitaryParams(theta, phi, r, alpha);
}

// Fast objective: the Heisenberg action of U_G on (x, p) is affine, so the
// transformed cost operator is p' + sum c_k x'^k with x', p' matrix
// combinations of the untransformed quadratures. Two (cubic) or three
// (quintic) dim^3 products per evaluation, no exponentials.
class VarianceEngine {
 public:
  VarianceEngine(const Matrix& rho, FockDim dim) : rho_(rho) {
    std::tie(x_, p_) = quadrature_operators(dim);
  }

  double variance(const GaussianUnitaryParams& params, double c2, double c4) const {
    const SymplecticAction act = symplectic_of(params);
    Matrix xp = act.M(0, 0) * x_ + act.M(0, 1) * p_;
    xp.diagonal().array() += act.d(0);
    Matrix x2 = xp * xp;
    Matrix op = act.M(1, 0) * x_ + act.M(1, 1) * p_ + c2 * x2;
    op.diagonal().array() += act.d(1);
    if (c4 != 0.0) op.noalias() += c4 * (x2 * x2);
    const double var = operator_variance(rho_, op);
    return std::isfinite(var) ? var : std::numeric_limits<double>::max();
  }

 private:
  const Matrix& rho_;
  Matrix x_, p_;
};

struct StartOutcome {
  Eigen::VectorXd x;
  double value = std::numeric_limits<double>::infinity();
  int evals = 0;
  bool converged = false;
};

WitnessResult finalize(const DensityMatrix& rho, CostFamily family,
                       const StartOutcome& best, double fast_value,
                       WitnessDiagnostics diag) {
  const Eigen::VectorXd& v = best.x;
  GaussianUnitaryParams params = clamp_params(v(0), v(1), v(2), v(3), v(4));
  CostFunction cost = CostFunction::cubic(1.0);
  if (family == CostFamily::quintic)
    cost = CostFunction::quintic(std::clamp(v(5), kSMin, kSMax),
                                 std::clamp(v(6), -kR4Box, kR4Box));

  const FockDim dim(int(rho.dim()));
  Matrix u = build_gaussian_unitary(params, dim);
  Matrix sigma = u * rho.mat() * u.adjoint();
  double nominator = operator_variance(sigma, cost_operator(cost, dim));
  if (nominator < 0.0) {
    if (nominator < -kDensityTol)
      throw NumericError("nonlinear_squeezing: negative variance " +
                         std::to_string(nominator));
    nominator = 0.0;
  }
  GaussianThreshold thr = gaussian_threshold(cost);

  WitnessResult out;
  out.nominator = nominator;
  out.denominator = thr.value;
  out.xi = nominator / thr.value;
  out.best_unitary = params;
  out.best_cost = cost;
  out.certified_non_gaussian = out.xi < 1.0;
  diag.threshold_converged = thr.converged;
  diag.objective_consistency = std::abs(fast_value - out.xi);
  const bool r_bound = std::abs(std::abs(params.r) - kMaxSqueezing) < 1e-9;
  const bool a_bound = std::abs(std::abs(params.alpha.real()) - kAlphaBox) < 1e-9 ||
                       std::abs(std::abs(params.alpha.imag()) - kAlphaBox) < 1e-9 ||
                       std::abs(std::abs(params.alpha) - kMaxCoherentAmplitude) < 1e-9;
  bool cost_bound = false;
  if (family == CostFamily::quintic) {
    const double s = cost.coeff(2), r4 = cost.coeff(4);
    cost_bound = std::abs(s - kSMin) < 1e-9 || std::abs(s - kSMax) < 1e-9 ||
                 std::abs(std::abs(r4) - kR4Box) < 1e-9;
  }
  diag.on_bound = r_bound || a_bound || cost_bound;
  out.diagnostics = diag;
  return out;
}

WitnessResult optimize(const DensityMatrix& rho, CostFamily family,
                       const OptimizerBudget& budget,
                       const WitnessResult* cubic_seed) {
  const FockDim dim(int(rho.dim()));
  const VarianceEngine engine(rho.mat(), dim);
  const bool quintic = family == CostFamily::quintic;
  const int nvar = quintic ? 7 : 5;

  // cubic threshold is a constant of the search (z = 1)
  const double cubic_thr = gaussian_threshold(CostFunction::cubic(1.0)).value;

  std::vector<std::pair<double, double>> box = {{0.0, 2.0 * M_PI},
                                                {0.0, 2.0 * M_PI},
                                                {-kMaxSqueezing, kMaxSqueezing},
                                                {-kAlphaBox, kAlphaBox},
                                                {-kAlphaBox, kAlphaBox}};
  if (quintic) {
    box.push_back({kSMin, kSMax});
    box.push_back({-kR4Box, kR4Box});
  }

  std::vector<Eigen::VectorXd> starts;
  Eigen::VectorXd ident = Eigen::VectorXd::Zero(nvar);
  if (quintic) ident(5) = 1.0;
  starts.push_back(ident);
  if (quintic && cubic_seed) {
    Eigen::VectorXd s(7);
    s << cubic_seed->best_unitary.theta, cubic_seed->best_unitary.phi,
        cubic_seed->best_unitary.r, cubic_seed->best_unitary.alpha.real(),
        cubic_seed->best_unitary.alpha.imag(), 1.0, 0.0;
    starts.push_back(s);
  }
  for (int i = int(starts.size()); i < budget.n_starts; ++i)
    starts.push_back(halton_point(i + budget.start_offset, box));

  Eigen::VectorXd steps(nvar);
  steps << 0.6, 0.6, 0.3, 0.5, 0.5,
      (quintic ? Eigen::Vector2d(0.4, 0.3) : Eigen::Vector2d());

  std::vector<StartOutcome> outcomes(starts.size());
  parallel_for(int(starts.size()), [&](int i) {
    // light warm-started threshold solve for the in-loop quintic denominator
    Eigen::VectorXd warm;
    auto light_threshold = [&](double s, double r4) {
      auto obj = [&](const Eigen::VectorXd& v) {
        return gaussian_variance(CostFunction::quintic(s, r4), v(0),
                                 std::clamp(v(1), -kMaxSqueezing, kMaxSqueezing), v(2));
      };
      std::vector<Eigen::VectorXd> ts;
      if (warm.size() == 3) ts.push_back(warm);
      Eigen::VectorXd g(3);
      g << 0.0, std::clamp(std::log(2.0 * s * s) / 6.0, -1.2, 1.2), 0.0;
      ts.push_back(g);
      ts.push_back(halton_point(2 + i, {{-3.0, 3.0}, {-1.2, 1.2}, {0.0, M_PI}}));
      SimplexOptions topts;
      topts.max_evals = 250;
      topts.f_tol = 1e-10;
      SimplexResult tb;
      tb.value = std::numeric_limits<double>::infinity();
      for (const auto& t : ts) {
        SimplexResult r = nelder_mead(obj, t, {}, topts);
        if (r.value < tb.value) tb = r;
      }
      warm = tb.x;
      return tb.value;
    };

    auto objective = [&](const Eigen::VectorXd& v) {
      GaussianUnitaryParams params = clamp_params(v(0), v(1), v(2), v(3), v(4));
      if (!quintic) return engine.variance(params, 1.0, 0.0) / cubic_thr;
      const double s = std::clamp(v(5), kSMin, kSMax);
      const double r4 = std::clamp(v(6), -kR4Box, kR4Box);
      return engine.variance(params, s, r4) / light_threshold(s, r4);
    };

    SimplexOptions opts;
    opts.max_evals = budget.max_evals;
    opts.f_tol = budget.tolerance;
    SimplexResult r = nelder_mead(objective, starts[i], steps, opts);
    outcomes[i] = {r.x, r.value, r.evals, r.converged};
  });

  int best_i = 0;
  for (int i = 1; i < int(outcomes.size()); ++i)
    if (outcomes[i].value < outcomes[best_i].value) best_i = i;

  WitnessDiagnostics diag;
  diag.n_starts = int(outcomes.size());
  diag.best_start_index = best_i;
  diag.best_converged = outcomes[best_i].converged;
  for (const auto& o : outcomes) {
    diag.total_evals += o.evals;
    diag.converged_starts += o.converged ? 1 : 0;
  }
  return finalize(rho, family, outcomes[best_i], outcomes[best_i].value, diag);
}

}  // namespace

double xi_at(const DensityMatrix& rho, const CostFunction& cost,
             const GaussianUnitaryParams& ug) {
  const FockDim dim(int(rho.dim()));
  Matrix u = build_gaussian_unitary(ug, dim);
  Matrix sigma = u * rho.mat() * u.adjoint();
  const double var = operator_variance(sigma, cost_operator(cost, dim));
  return var / gaussian_threshold(cost).value;
}

WitnessResult nonlinear_squeezing(const DensityMatrix& rho, CostFamily family,
                                  const OptimizerBudget& budget) {
  if (family == CostFamily::cubic) return optimize(rho, family, budget, nullptr);
  WitnessResult cubic = optimize(rho, CostFamily::cubic, budget, nullptr);
  return optimize(rho, CostFamily::quintic, budget, &cubic);
}

CertifyReport certify(const DensityMatrix& rho, const OptimizerBudget& budget) {
  CertifyReport report;
  report.cubic = optimize(rho, CostFamily::cubic, budget, nullptr);
  report.quintic = optimize(rho, CostFamily::quintic, budget, &report.cubic);
  report.xi_min = std::min(report.cubic.xi, report.quintic.xi);
  report.certified = report.xi_min < 1.0;
  return report;
}

}  // namespace nlsq
