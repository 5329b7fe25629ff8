#pragma once

#include "nlsq/cost.hpp"
#include "nlsq/gaussian.hpp"
#include "nlsq/types.hpp"

namespace nlsq {

enum class CostFamily { cubic, quintic };

struct OptimizerBudget {
  int n_starts = 32;
  int max_evals = 400;      // per start
  double tolerance = 1e-9;  // objective spread convergence per start
  int start_offset = 0;     // shifts the deterministic start list

  OptimizerBudget() = default;
  OptimizerBudget(int starts, int evals, double tol, int offset = 0)
      : n_starts(starts), max_evals(evals), tolerance(tol), start_offset(offset) {
    if (starts <= 0 || evals <= 0 || !(tol > 0.0))
      throw std::invalid_argument("OptimizerBudget: all fields must be positive");
  }
};

struct WitnessDiagnostics {
  int n_starts = 0;
  int total_evals = 0;
  int converged_starts = 0;
  int best_start_index = -1;
  bool best_converged = false;
  bool on_bound = false;            // optimum sits on a search bound
  bool threshold_converged = true;
  double objective_consistency = 0.0;  // |optimizer objective - reported xi|
};

/// Outcome of the xi optimization. xi = nominator / denominator, recomputed
/// through the literal operator route at the best parameters found; the
/// optimizer value is an upper bound on the true infimum.
struct WitnessResult {
  double xi = 0.0;
  GaussianUnitaryParams best_unitary;
  CostFunction best_cost = CostFunction::cubic(1.0);
  double nominator = 0.0;
  double denominator = 0.0;
  bool certified_non_gaussian = false;
  WitnessDiagnostics diagnostics;
};

/// variance_of(U_G rho U_G^†, cost) / gaussian_threshold(cost).value at fixed
/// parameters, through explicit operator conjugation.
double xi_at(const DensityMatrix& rho, const CostFunction& cost,
             const GaussianUnitaryParams& ug);

/// Minimizes xi over the Gaussian-unitary parameters (and, for the quintic
/// family, jointly over the cost parameters s > 0 and r4). Cubic fixes z = 1;
/// the squeezing direction absorbs the scale. Deterministic multi-start; the
/// quintic search is seeded with the cubic optimum, which guarantees
/// xi_quintic <= xi_cubic up to recompute noise.
WitnessResult nonlinear_squeezing(const DensityMatrix& rho, CostFamily family,
                                  const OptimizerBudget& budget = {});

struct CertifyReport {
  WitnessResult cubic;
  WitnessResult quintic;
  double xi_min = 0.0;
  bool certified = false;
};

/// Runs both families (quintic seeded from the cubic optimum) and reports the
/// verdict min(xi) < 1.
CertifyReport certify(const DensityMatrix& rho, const OptimizerBudget& budget = {});

}  // namespace nlsq
