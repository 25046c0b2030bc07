#ifndef INDOC_LIMITED_EXPOSURE_HPP_
#define INDOC_LIMITED_EXPOSURE_HPP_

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "indoc/core.hpp"

// The 3-opinion limited-exposure game on opinions (0,1,2). Equilibria are
// pinned by the ratio W = E_2/(E_1+E_3), the unique root of
//   Q(W,delta) = 4(delta+W)^3 - (1+delta^2+2*delta*W)^2
// on [0,1]; the aggregates then follow from the reverted first-order
// conditions, and polarization has the reduced form of the W variable.

namespace indoc {

class SolverError : public std::runtime_error {
public:
  explicit SolverError(const std::string& what) : std::runtime_error(what) {}
};

// Opinions are fixed to (0,1,2) throughout this module.
inline OpinionConfig limited_config(std::vector<int> sizes = {1, 1, 1}) {
  return OpinionConfig({0.0, 1.0, 2.0}, std::move(sizes));
}

struct LimitedEquilibrium {
  ExposureLevel delta;
  double w;       // E_2 / (E_1 + E_3)
  double e1;      // = e3
  double e2;
  double e3;
  double r_star;  // E_2 / E_1 = 2W

  AggregateEfforts aggregates() const { return AggregateEfforts({e1, e2, e3}); }
};

struct PolarizationValue {
  double value;

  explicit PolarizationValue(double value_) : value(value_) {
    if (!(value >= 0.0)) throw std::invalid_argument("PolarizationValue: must be >= 0");
  }
};

inline double q_residual(double w, ExposureLevel delta) {
  const double d = delta.delta;
  const double s = d + w;
  const double t = 1.0 + d * d + 2.0 * d * w;
  return 4.0 * s * s * s - t * t;
}

inline constexpr double kDefaultSolverTol = 1e-12;
inline constexpr int kBisectionIterationCap = 200;

// Unique W in [0,1] with Q(W,delta) = 0, by bisection on the guaranteed
// bracket Q(0,delta) <= 0 <= Q(1,delta). delta = 1 short-circuits to the
// exact boundary root W = 0.
inline double solve_w(ExposureLevel delta, double tol = kDefaultSolverTol) {
  if (!(tol > 0.0)) throw std::invalid_argument("solve_w: tol must be > 0");
  if (delta.delta == 1.0) return 0.0;
  double lo = 0.0, hi = 1.0;
  for (int iter = 0; iter < kBisectionIterationCap; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (q_residual(mid, delta) <= 0.0)
      lo = mid;
    else
      hi = mid;
    if (hi - lo <= tol) return 0.5 * (lo + hi);
  }
  throw SolverError("solve_w: bisection did not reach tol within iteration cap");
}

// W root plus the aggregates from the reverted FOC 2*delta = E_1*(2*delta+2W)^2.
inline LimitedEquilibrium solve_equilibrium(ExposureLevel delta,
                                            double tol = kDefaultSolverTol) {
  const double w = solve_w(delta, tol);
  const double d = delta.delta;
  const double e1 = d / (2.0 * (d + w) * (d + w));
  const double e2 = 2.0 * w * e1;
  return LimitedEquilibrium{delta, w, e1, e2, e1, 2.0 * w};
}

// Esteban-Ray polarization sum_{i,j} E_i^2 E_j |O_i - O_j| / (sum E_i)^3.
inline PolarizationValue polarization(const AggregateEfforts& agg,
                                      const OpinionConfig& config) {
  if (agg.values.size() != config.num_opinions())
    throw std::invalid_argument("polarization: aggregate/config mismatch");
  const double total = agg.total();
  if (total <= 0.0) throw NullDebateError("polarization: zero total effort");
  double num = 0.0;
  for (std::size_t i = 0; i < agg.values.size(); ++i)
    for (std::size_t j = 0; j < agg.values.size(); ++j)
      num += agg.values[i] * agg.values[i] * agg.values[j] *
             std::abs(config.opinions[i] - config.opinions[j]);
  return PolarizationValue(num / (total * total * total));
}

// Reduced form (W^2 + W/2 + 1/2) / (1+W)^3, valid whenever E_1 = E_3 on
// unit-spaced opinions.
inline PolarizationValue polarization_reduced(double w) {
  if (!(w >= 0.0)) throw std::invalid_argument("polarization_reduced: W must be >= 0");
  const double one_plus = 1.0 + w;
  return PolarizationValue((w * w + 0.5 * w + 0.5) / (one_plus * one_plus * one_plus));
}

struct SweepRow {
  double delta;
  double w;
  double e1;
  double e2;
  double polarization;
};

// One equilibrium per grid delta; reproduces the W(delta) curve and the
// matching polarization values.
inline std::vector<SweepRow> sweep(const std::vector<double>& grid,
                                   double tol = kDefaultSolverTol) {
  std::vector<SweepRow> rows;
  rows.reserve(grid.size());
  double prev = 0.0;
  bool first = true;
  for (double d : grid) {
    if (!(d > 0.0 && d <= 1.0))
      throw std::invalid_argument("sweep: grid values must lie in (0,1]");
    if (!first && !(d > prev))
      throw std::invalid_argument("sweep: grid must be strictly increasing");
    prev = d;
    first = false;
    try {
      const auto eq = solve_equilibrium(ExposureLevel(d), tol);
      rows.push_back({d, eq.w, eq.e1, eq.e2, polarization_reduced(eq.w).value});
    } catch (const SolverError& err) {
      throw SolverError("sweep: failure at delta=" + std::to_string(d) + ": " + err.what());
    }
  }
  return rows;
}

inline std::vector<double> default_sweep_grid(double start = 0.01, double stop = 1.0,
                                              std::size_t steps = 100) {
  if (steps < 2) throw std::invalid_argument("sweep grid: need at least two points");
  std::vector<double> grid(steps);
  for (std::size_t i = 0; i < steps; ++i)
    grid[i] = start + (stop - start) * static_cast<double>(i) / (steps - 1);
  grid.back() = stop;
  return grid;
}

}  // namespace indoc

#endif  // INDOC_LIMITED_EXPOSURE_HPP_
