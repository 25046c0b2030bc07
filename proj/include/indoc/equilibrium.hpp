#ifndef INDOC_EQUILIBRIUM_HPP_
#define INDOC_EQUILIBRIUM_HPP_

#include <cmath>
#include <cstddef>
#include <vector>

#include "indoc/core.hpp"

// Closed-form equilibrium of the full-monitoring game: moderates are
// silent, the two extreme groups each aggregate |O_1 - O_k| / 4, and the
// within-group split is free (the symmetric split is the canonical
// representative).

namespace indoc {

struct BaselineEquilibrium {
  AggregateEfforts aggregates;
  EffortProfile symmetric_profile;
  std::vector<double> per_opinion_payoff;
};

// Aggregates (D/4, 0, ..., 0, D/4) with D = |O_1 - O_k|. Independent of the
// moderate opinions' positions and counts.
inline AggregateEfforts aggregate_equilibrium(const OpinionConfig& config) {
  const double extreme = config.opinion_span() / 4.0;
  std::vector<double> values(config.num_opinions(), 0.0);
  values.front() = extreme;
  values.back() = extreme;
  return AggregateEfforts(std::move(values));
}

// Unique symmetric equilibrium: extreme players exert D/(4 n_i), moderates 0.
inline EffortProfile symmetric_equilibrium(const OpinionConfig& config) {
  const double span = config.opinion_span();
  const std::size_t k = config.num_opinions();
  std::vector<double> efforts;
  efforts.reserve(config.num_players());
  for (std::size_t i = 0; i < k; ++i) {
    const double e = (i == 0 || i + 1 == k) ? span / (4.0 * config.sizes[i]) : 0.0;
    for (int r = 0; r < config.sizes[i]; ++r) efforts.push_back(e);
  }
  return EffortProfile::from_group_order(config, std::move(efforts));
}

// U_j(e^sym | O_i) = -(D/2) * [1 + 1/(2 n_i) if i is extreme].
inline std::vector<double> symmetric_payoffs(const OpinionConfig& config) {
  const double span = config.opinion_span();
  const std::size_t k = config.num_opinions();
  std::vector<double> payoffs(k);
  for (std::size_t i = 0; i < k; ++i) {
    const bool extreme = (i == 0 || i + 1 == k);
    payoffs[i] = -(span / 2.0) * (1.0 + (extreme ? 1.0 / (2.0 * config.sizes[i]) : 0.0));
  }
  return payoffs;
}

// Any split of the equilibrium aggregates among extreme players (with silent
// moderates) is an equilibrium; validates a user-supplied profile against
// the aggregate solution.
inline bool matches_aggregate_equilibrium(const EffortProfile& profile,
                                          const OpinionConfig& config, double tol = 1e-12) {
  check_consistent(profile, config);
  const auto target = aggregate_equilibrium(config);
  const auto agg = aggregate(profile, config);
  for (std::size_t i = 0; i < agg.values.size(); ++i)
    if (std::abs(agg.values[i] - target.values[i]) > tol) return false;
  return true;
}

inline BaselineEquilibrium solve_baseline(const OpinionConfig& config) {
  return BaselineEquilibrium{aggregate_equilibrium(config), symmetric_equilibrium(config),
                             symmetric_payoffs(config)};
}

}  // namespace indoc

#endif  // INDOC_EQUILIBRIUM_HPP_
