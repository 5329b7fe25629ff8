#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>
#include <vector>

namespace nlsq {

struct SimplexOptions {
  int max_evals = 4000;
  double f_tol = 1e-10;       // stop when the simplex value spread falls below
                              // f_tol * max(1, |f_best|)
  double initial_step = 0.25; // used for dimensions without an explicit step
};

struct SimplexResult {
  Eigen::VectorXd x;
  double value = 0.0;
  int evals = 0;
  bool converged = false;
};

/// Nelder-Mead downhill simplex. Bounds, if any, are the objective's business
/// (clamp inside f). Deterministic for a given start.
template <typename F>
SimplexResult nelder_mead(F&& f, const Eigen::VectorXd& x0,
                          const Eigen::VectorXd& steps = {},
                          SimplexOptions opts = {}) {
  const int n = int(x0.size());
  std::vector<Eigen::VectorXd> xs(n + 1, x0);
  std::vector<double> fs(n + 1);
  int evals = 0;
  auto eval = [&](const Eigen::VectorXd& x) {
    ++evals;
    return f(x);
  };
  for (int i = 0; i < n; ++i) {
    double h = (steps.size() == n) ? steps(i) : opts.initial_step * (1.0 + std::abs(x0(i)));
    xs[i + 1](i) += h;
  }
  for (int i = 0; i <= n; ++i) fs[i] = eval(xs[i]);

  std::vector<int> order(n + 1);
  auto sort_simplex = [&] {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return fs[a] < fs[b]; });
  };

  while (true) {
    sort_simplex();
    const int best = order[0], worst = order[n], second = order[n - 1];
    const double spread = fs[worst] - fs[best];
    if (spread <= opts.f_tol * std::max(1.0, std::abs(fs[best])) || evals >= opts.max_evals) {
      SimplexResult r;
      r.x = xs[best];
      r.value = fs[best];
      r.evals = evals;
      r.converged = spread <= opts.f_tol * std::max(1.0, std::abs(fs[best]));
      return r;
    }

    Eigen::VectorXd centroid = Eigen::VectorXd::Zero(n);
    for (int i = 0; i <= n; ++i)
      if (i != worst) centroid += xs[i];
    centroid /= double(n);

    Eigen::VectorXd xr = centroid + (centroid - xs[worst]);
    double fr = eval(xr);
    if (fr < fs[best]) {
      Eigen::VectorXd xe = centroid + 2.0 * (centroid - xs[worst]);
      double fe = eval(xe);
      if (fe < fr) {
        xs[worst] = std::move(xe);
        fs[worst] = fe;
      } else {
        xs[worst] = std::move(xr);
        fs[worst] = fr;
      }
    } else if (fr < fs[second]) {
      xs[worst] = std::move(xr);
      fs[worst] = fr;
    } else {
      const bool outside = fr < fs[worst];
      Eigen::VectorXd xc = outside ? centroid + 0.5 * (xr - centroid)
                                   : centroid - 0.5 * (centroid - xs[worst]);
      double fc = eval(xc);
      if (fc < std::min(fr, fs[worst])) {
        xs[worst] = std::move(xc);
        fs[worst] = fc;
      } else {
        for (int i = 0; i <= n; ++i) {
          if (i == best) continue;
          xs[i] = xs[best] + 0.5 * (xs[i] - xs[best]);
          fs[i] = eval(xs[i]);
        }
      }
    }
  }
}

/// Radical-inverse (van der Corput) value of index i in the given base.
inline double halton(int index, int base) {
  double f = 1.0, r = 0.0;
  while (index > 0) {
    f /= base;
    r += f * (index % base);
    index /= base;
  }
  return r;
}

/// Low-discrepancy point mapped into a box; dimension k uses the k-th prime.
inline Eigen::VectorXd halton_point(int index,
                                    const std::vector<std::pair<double, double>>& box) {
  static constexpr int primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29};
  Eigen::VectorXd x(box.size());
  for (size_t k = 0; k < box.size(); ++k) {
    const double t = halton(index, primes[k % 10]);
    x(k) = box[k].first + t * (box[k].second - box[k].first);
  }
  return x;
}

}  // namespace nlsq
