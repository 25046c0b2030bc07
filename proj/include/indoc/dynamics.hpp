#ifndef INDOC_DYNAMICS_HPP_
#define INDOC_DYNAMICS_HPP_

#include <array>
#include <cmath>
#include <cstddef>
#include <stdexcept>

#include "indoc/core.hpp"
#include "indoc/limited_exposure.hpp"

// The indoctrination process: each generation's opinion shares are the
// previous generation's perceived equilibrium opinion distribution,
// pi_t = pi_{t-1} Q. The per-stage matrix depends on delta only through
// r* = E_2/E_1, so the same matrix applies in every stage; the stationary
// distribution has the closed form
//   pi = (s, r*, s) / (2s + r*),  s = sqrt(delta + r*/2).

namespace indoc {

struct TransitionMatrix {
  std::array<std::array<double, 3>, 3> rows;
};

struct OpinionDistribution {
  std::array<double, 3> probs;

  explicit OpinionDistribution(std::array<double, 3> probs_) : probs(probs_) {
    double sum = 0.0;
    for (double p : probs) {
      if (!(p >= 0.0)) throw std::invalid_argument("OpinionDistribution: entries must be >= 0");
      sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-12)
      throw std::invalid_argument("OpinionDistribution: must sum to 1");
  }

  bool full_support() const { return probs[0] > 0.0 && probs[1] > 0.0 && probs[2] > 0.0; }
};

// Row i is the perceived opinion distribution from viewpoint i at the
// equilibrium aggregates; matches the closed form in r* = E_2/E_1.
inline TransitionMatrix transition_matrix(const LimitedEquilibrium& eq) {
  const auto config = limited_config();
  const auto agg = eq.aggregates();
  TransitionMatrix q{};
  for (std::size_t i = 0; i < 2; ++i) {
    const auto row = observed_distribution_limited(agg, config, eq.delta, i);
    for (std::size_t j = 0; j < 3; ++j) q.rows[i][j] = row.probs[j];
  }
  // E_1 = E_3, so row 2 is row 0 mirrored; copying keeps the
  // centrosymmetry bit-exact instead of up-to-rounding.
  for (std::size_t j = 0; j < 3; ++j) q.rows[2][j] = q.rows[0][2 - j];
  return q;
}

// pi Q (left multiplication).
inline OpinionDistribution process_step(const OpinionDistribution& pi,
                                        const TransitionMatrix& q) {
  std::array<double, 3> out{};
  for (std::size_t j = 0; j < 3; ++j)
    for (std::size_t i = 0; i < 3; ++i) out[j] += pi.probs[i] * q.rows[i][j];
  // renormalize rounding drift so long iterations stay on the simplex
  const double sum = out[0] + out[1] + out[2];
  for (double& p : out) p /= sum;
  return OpinionDistribution(out);
}

struct StationaryResult {
  OpinionDistribution distribution;
  std::size_t iterations;
};

inline constexpr double kDefaultProcessTol = 1e-10;
inline constexpr std::size_t kDefaultProcessMaxIter = 1000000;

// Power iteration of the process from pi0 until successive L1 distance
// <= tol. The matrix is fixed per delta; resolve_each_stage re-derives it
// every stage instead (same result, kept as an audit path).
inline StationaryResult iterate_to_stationary(const OpinionDistribution& pi0,
                                              ExposureLevel delta,
                                              double tol = kDefaultProcessTol,
                                              std::size_t max_iter = kDefaultProcessMaxIter,
                                              bool resolve_each_stage = false) {
  if (!(delta.delta < 1.0))
    throw std::invalid_argument("iterate_to_stationary: delta must lie in (0,1)");
  if (!pi0.full_support())
    throw std::invalid_argument("iterate_to_stationary: pi0 must have full support");
  if (!(tol > 0.0)) throw std::invalid_argument("iterate_to_stationary: tol must be > 0");
  TransitionMatrix q = transition_matrix(solve_equilibrium(delta));
  OpinionDistribution pi = pi0;
  for (std::size_t iter = 1; iter <= max_iter; ++iter) {
    if (resolve_each_stage) q = transition_matrix(solve_equilibrium(delta));
    const OpinionDistribution next = process_step(pi, q);
    double l1 = 0.0;
    for (std::size_t j = 0; j < 3; ++j) l1 += std::abs(next.probs[j] - pi.probs[j]);
    pi = next;
    if (l1 <= tol) return StationaryResult{pi, iter};
  }
  throw SolverError("iterate_to_stationary: no convergence within max_iter");
}

// Closed-form stationary distribution at r* = 2 W(delta). delta = 1 is
// excluded (the chain loses irreducibility); the full-exposure limit is
// the documented constant (0.5, 0, 0.5).
inline OpinionDistribution stationary_closed_form(ExposureLevel delta) {
  if (!(delta.delta < 1.0))
    throw std::invalid_argument("stationary_closed_form: delta must lie in (0,1)");
  const double r_star = 2.0 * solve_w(delta);
  const double s = std::sqrt(delta.delta + 0.5 * r_star);
  const double norm = 2.0 * s + r_star;
  return OpinionDistribution({s / norm, r_star / norm, s / norm});
}

inline constexpr std::array<double, 3> kFullExposureStationaryLimit = {0.5, 0.0, 0.5};

// pi_2 of the stationary distribution; strictly decreasing in delta.
inline double middle_mass(ExposureLevel delta) {
  return stationary_closed_form(delta).probs[1];
}

}  // namespace indoc

#endif  // INDOC_DYNAMICS_HPP_
