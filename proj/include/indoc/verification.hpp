#ifndef INDOC_VERIFICATION_HPP_
#define INDOC_VERIFICATION_HPP_

#include <cmath>
#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "indoc/core.hpp"

// Brute-force oracle, fully independent of the closed-form solvers: a
// player's best response by derivative-free 1-D search on the actual
// payoff function, per-player certification of candidate equilibria, and
// the raw first-order-condition residuals.

namespace indoc {

enum class BestResponseMethod { kBoundary, kInteriorSearch };

struct DeviationReport {
  std::size_t player;
  double current_effort;
  double best_effort;
  double payoff_gain;
  BestResponseMethod method;
};

namespace detail {

// Golden-section maximization on [lo, hi]. Throws if the three-point
// unimodality pattern is violated, which concavity rules out.
inline double golden_section_max(const std::function<double(double)>& f, double lo, double hi,
                                 double x_tol) {
  static const double kInvPhi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > x_tol) {
    if (std::isfinite(fc) && std::isfinite(fd) &&
        std::max(fc, fd) < std::min(f(a), f(b)) - 1e-9)
      throw std::logic_error("golden_section_max: unimodality violated");
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

}  // namespace detail

// Payoff of player j as a function of own effort, opponents fixed.
inline std::function<double(double)> own_effort_payoff(std::size_t j,
                                                       const EffortProfile& profile,
                                                       const OpinionConfig& config,
                                                       std::optional<ExposureLevel> delta) {
  return [j, p = profile, config, delta](double e) mutable {
    p.efforts[j] = e;
    return delta ? payoff_limited(j, p, config, *delta) : payoff(j, p, config);
  };
}

inline double default_search_upper(const OpinionConfig& config) {
  // Any e_j above the payoff scale is dominated by e_j = 0.
  return 4.0 * config.opinion_span();
}

// Effort maximizing player j's payoff with opponents fixed: golden-section
// search on [0, upper] compared against the boundary value 0.
inline double best_response(std::size_t j, const EffortProfile& profile,
                            const OpinionConfig& config,
                            std::optional<ExposureLevel> delta = std::nullopt,
                            double upper = 0.0, double x_tol = 1e-9) {
  check_consistent(profile, config);
  if (j >= profile.num_players())
    throw std::invalid_argument("best_response: player index out of range");
  if (upper <= 0.0) upper = default_search_upper(config);
  const auto u = own_effort_payoff(j, profile, config, delta);
  const double interior = detail::golden_section_max(u, 0.0, upper, x_tol);
  // slack absorbs rounding noise when the FOC root sits at the boundary
  return u(0.0) >= u(interior) - 1e-12 ? 0.0 : interior;
}

// One report per player; the profile is an equilibrium (up to tol) iff
// every payoff_gain <= tol.
inline std::vector<DeviationReport> certify_equilibrium(
    const EffortProfile& profile, const OpinionConfig& config,
    std::optional<ExposureLevel> delta = std::nullopt, double x_tol = 1e-9) {
  check_consistent(profile, config);
  if (profile.all_zero())
    throw std::invalid_argument("certify_equilibrium: profile must be nonzero");
  std::vector<DeviationReport> reports;
  reports.reserve(profile.num_players());
  for (std::size_t j = 0; j < profile.num_players(); ++j) {
    const auto u = own_effort_payoff(j, profile, config, delta);
    const double best = best_response(j, profile, config, delta, 0.0, x_tol);
    reports.push_back({j, profile.efforts[j], best, u(best) - u(profile.efforts[j]),
                       best == 0.0 ? BestResponseMethod::kBoundary
                                   : BestResponseMethod::kInteriorSearch});
  }
  return reports;
}

inline double max_deviation_gain(const std::vector<DeviationReport>& reports) {
  double gain = 0.0;
  for (const auto& r : reports) gain = std::max(gain, r.payoff_gain);
  return gain;
}

inline bool certified(const std::vector<DeviationReport>& reports, double tol = 1e-6) {
  return max_deviation_gain(reports) <= tol;
}

// Full-monitoring FOC left-hand side: sum_l E_l |O_l - O_i| - (sum_l E_l)^2.
// Zero at interior optima for opinion i.
inline double foc_residual_baseline(const AggregateEfforts& agg, const OpinionConfig& config,
                                    std::size_t i) {
  if (agg.values.size() != config.num_opinions())
    throw std::invalid_argument("foc_residual_baseline: aggregate/config mismatch");
  if (i >= config.num_opinions())
    throw std::invalid_argument("foc_residual_baseline: opinion index out of range");
  const double total = agg.total();
  if (total <= 0.0) throw NullDebateError("foc_residual_baseline: zero total effort");
  double lhs = 0.0;
  for (std::size_t l = 0; l < agg.values.size(); ++l)
    lhs += agg.values[l] * std::abs(config.opinions[l] - config.opinions[i]);
  return lhs - total * total;
}

// Limited-exposure FOC residual on the unit-spaced 3-opinion setting:
// sum_l E_l delta^{|i-l|} |l - i| - (sum_l delta^{|i-l|} E_l)^2.
inline double foc_residual_limited(const AggregateEfforts& agg, ExposureLevel delta,
                                   std::size_t i) {
  if (agg.values.size() != 3)
    throw std::invalid_argument("foc_residual_limited: three opinions required");
  if (i >= 3) throw std::invalid_argument("foc_residual_limited: opinion index out of range");
  double lhs = 0.0, perceived = 0.0;
  for (std::size_t l = 0; l < 3; ++l) {
    const double dist = static_cast<double>(i > l ? i - l : l - i);
    const double disc = std::pow(delta.delta, dist);
    lhs += agg.values[l] * disc * dist;
    perceived += disc * agg.values[l];
  }
  return lhs - perceived * perceived;
}

// Central-difference estimate of dU_j/de_j at the profile's effort.
inline double finite_difference_check(std::size_t j, const EffortProfile& profile,
                                      const OpinionConfig& config,
                                      std::optional<ExposureLevel> delta, double h) {
  check_consistent(profile, config);
  if (j >= profile.num_players())
    throw std::invalid_argument("finite_difference_check: player index out of range");
  if (!(h > 0.0) || profile.efforts[j] <= h)
    throw std::invalid_argument("finite_difference_check: need e_j > h > 0");
  const auto u = own_effort_payoff(j, profile, config, delta);
  const double e = profile.efforts[j];
  return (u(e + h) - u(e - h)) / (2.0 * h);
}

}  // namespace indoc

#endif  // INDOC_VERIFICATION_HPP_
