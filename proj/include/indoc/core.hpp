#ifndef INDOC_CORE_HPP_
#define INDOC_CORE_HPP_

#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

// Domain types and payoff evaluation for the indoctrination contest:
// players with fixed opinions exert costly effort, the public opinion is
// the effort-weighted distribution, and payoffs trade own effort against
// the expected distance to the observed opinions.

namespace indoc {

// Thrown when every (perceived) aggregate effort is zero, so the observed
// distribution is undefined. Callers that want the null-debate payoff
// sentinel should catch this or test the profile first.
class NullDebateError : public std::runtime_error {
public:
  explicit NullDebateError(const std::string& what) : std::runtime_error(what) {}
};

// Payoff of the all-zero profile: below every finite payoff by definition.
inline constexpr double kNullDebatePayoff = -std::numeric_limits<double>::infinity();

// The opinion line O_1 < ... < O_k and the number of players per opinion.
struct OpinionConfig {
  std::vector<double> opinions;
  std::vector<int> sizes;

  OpinionConfig(std::vector<double> opinions_, std::vector<int> sizes_)
      : opinions(std::move(opinions_)), sizes(std::move(sizes_)) {
    if (opinions.size() < 2)
      throw std::invalid_argument("OpinionConfig: need at least two opinions");
    if (opinions.size() != sizes.size())
      throw std::invalid_argument("OpinionConfig: opinions/sizes length mismatch");
    for (std::size_t i = 1; i < opinions.size(); ++i)
      if (!(opinions[i - 1] < opinions[i]))
        throw std::invalid_argument("OpinionConfig: opinions must be strictly increasing");
    for (int s : sizes)
      if (s < 1) throw std::invalid_argument("OpinionConfig: every group size must be >= 1");
  }

  std::size_t num_opinions() const { return opinions.size(); }

  std::size_t num_players() const {
    std::size_t n = 0;
    for (int s : sizes) n += static_cast<std::size_t>(s);
    return n;
  }

  double opinion_span() const { return opinions.back() - opinions.front(); }

  // k=3 with |O_1-O_2| = |O_2-O_3| = 1, the setting the limited-exposure
  // analysis is confined to.
  bool is_unit_spaced_triple() const {
    return opinions.size() == 3 &&
           std::abs((opinions[1] - opinions[0]) - 1.0) < 1e-12 &&
           std::abs((opinions[2] - opinions[1]) - 1.0) < 1e-12;
  }
};

// Per-player efforts plus the player -> opinion-group assignment.
struct EffortProfile {
  std::vector<double> efforts;
  std::vector<std::size_t> assignment;  // player j -> opinion index

  EffortProfile(std::vector<double> efforts_, std::vector<std::size_t> assignment_)
      : efforts(std::move(efforts_)), assignment(std::move(assignment_)) {
    if (efforts.size() != assignment.size())
      throw std::invalid_argument("EffortProfile: efforts/assignment length mismatch");
    for (double e : efforts)
      if (!(e >= 0.0)) throw std::invalid_argument("EffortProfile: efforts must be >= 0");
  }

  std::size_t num_players() const { return efforts.size(); }

  bool all_zero() const {
    for (double e : efforts)
      if (e > 0.0) return false;
    return true;
  }

  // Players listed group by group, in opinion order.
  static EffortProfile from_group_order(const OpinionConfig& config,
                                        std::vector<double> efforts) {
    std::vector<std::size_t> assignment;
    assignment.reserve(efforts.size());
    for (std::size_t i = 0; i < config.num_opinions(); ++i)
      for (int r = 0; r < config.sizes[i]; ++r) assignment.push_back(i);
    if (assignment.size() != efforts.size())
      throw std::invalid_argument("EffortProfile: effort count does not match config");
    return EffortProfile(std::move(efforts), std::move(assignment));
  }
};

// Group aggregates E_i.
struct AggregateEfforts {
  std::vector<double> values;

  explicit AggregateEfforts(std::vector<double> values_) : values(std::move(values_)) {
    for (double v : values)
      if (!(v >= 0.0)) throw std::invalid_argument("AggregateEfforts: entries must be >= 0");
  }

  double total() const {
    double t = 0.0;
    for (double v : values) t += v;
    return t;
  }
};

// Probability vector over the k opinions.
struct ObservedDistribution {
  std::vector<double> probs;

  explicit ObservedDistribution(std::vector<double> probs_) : probs(std::move(probs_)) {
    double sum = 0.0;
    for (double p : probs) {
      if (p < 0.0 || p > 1.0)
        throw std::invalid_argument("ObservedDistribution: entries must lie in [0,1]");
      sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-12)
      throw std::invalid_argument("ObservedDistribution: probabilities must sum to 1");
  }
};

// Exposure level delta in (0,1]; delta = 1 is full monitoring.
struct ExposureLevel {
  double delta;

  explicit ExposureLevel(double delta_) : delta(delta_) {
    if (!(delta > 0.0 && delta <= 1.0))
      throw std::invalid_argument("ExposureLevel: delta must lie in (0,1]");
  }
};

inline void check_consistent(const EffortProfile& profile, const OpinionConfig& config) {
  if (profile.num_players() != config.num_players())
    throw std::invalid_argument("profile/config player count mismatch");
  std::vector<int> counts(config.num_opinions(), 0);
  for (std::size_t i : profile.assignment) {
    if (i >= config.num_opinions())
      throw std::invalid_argument("profile assignment references unknown opinion");
    ++counts[i];
  }
  for (std::size_t i = 0; i < counts.size(); ++i)
    if (counts[i] != config.sizes[i])
      throw std::invalid_argument("profile group sizes do not match config");
}

// E_i = sum of efforts of all O_i-players.
inline AggregateEfforts aggregate(const EffortProfile& profile, const OpinionConfig& config) {
  check_consistent(profile, config);
  std::vector<double> values(config.num_opinions(), 0.0);
  for (std::size_t j = 0; j < profile.num_players(); ++j)
    values[profile.assignment[j]] += profile.efforts[j];
  return AggregateEfforts(std::move(values));
}

// Pr(X_e = O_i) = E_i / sum_l E_l.
inline ObservedDistribution observed_distribution(const AggregateEfforts& agg) {
  const double total = agg.total();
  if (total <= 0.0) throw NullDebateError("observed_distribution: zero total effort");
  std::vector<double> probs(agg.values.size());
  for (std::size_t i = 0; i < probs.size(); ++i) probs[i] = agg.values[i] / total;
  return ObservedDistribution(std::move(probs));
}

// Perceived distribution from viewpoint i: each E_l discounted by
// delta^{|O_i - O_l|} before normalizing. Row i of the indoctrination
// transition matrix.
inline ObservedDistribution observed_distribution_limited(const AggregateEfforts& agg,
                                                          const OpinionConfig& config,
                                                          ExposureLevel delta,
                                                          std::size_t viewpoint) {
  if (agg.values.size() != config.num_opinions())
    throw std::invalid_argument("observed_distribution_limited: aggregate/config mismatch");
  if (viewpoint >= config.num_opinions())
    throw std::invalid_argument("observed_distribution_limited: viewpoint out of range");
  std::vector<double> weighted(agg.values.size());
  double total = 0.0;
  for (std::size_t l = 0; l < agg.values.size(); ++l) {
    const double dist = std::abs(config.opinions[l] - config.opinions[viewpoint]);
    weighted[l] = std::pow(delta.delta, dist) * agg.values[l];
    total += weighted[l];
  }
  if (total <= 0.0)
    throw NullDebateError("observed_distribution_limited: zero perceived total effort");
  for (double& w : weighted) w /= total;
  return ObservedDistribution(std::move(weighted));
}

// E[|O_i - X|] under the given distribution.
inline double expected_distance(const ObservedDistribution& dist, const OpinionConfig& config,
                                std::size_t viewpoint) {
  if (dist.probs.size() != config.num_opinions())
    throw std::invalid_argument("expected_distance: distribution/config mismatch");
  if (viewpoint >= config.num_opinions())
    throw std::invalid_argument("expected_distance: viewpoint out of range");
  double d = 0.0;
  for (std::size_t l = 0; l < dist.probs.size(); ++l)
    d += dist.probs[l] * std::abs(config.opinions[l] - config.opinions[viewpoint]);
  return d;
}

// U_j(e|O_i) = -e_j - E[|O_i - X_e|]; the all-zero profile gets the
// null-debate sentinel.
inline double payoff(std::size_t j, const EffortProfile& profile, const OpinionConfig& config) {
  check_consistent(profile, config);
  if (j >= profile.num_players()) throw std::invalid_argument("payoff: player index out of range");
  if (profile.all_zero()) return kNullDebatePayoff;
  const auto dist = observed_distribution(aggregate(profile, config));
  return -profile.efforts[j] - expected_distance(dist, config, profile.assignment[j]);
}

// Limited-exposure payoff; only defined on the unit-spaced 3-opinion setting.
inline double payoff_limited(std::size_t j, const EffortProfile& profile,
                             const OpinionConfig& config, ExposureLevel delta) {
  check_consistent(profile, config);
  if (j >= profile.num_players())
    throw std::invalid_argument("payoff_limited: player index out of range");
  if (!config.is_unit_spaced_triple())
    throw std::invalid_argument(
        "payoff_limited: config must have three unit-spaced opinions");
  if (profile.all_zero()) return kNullDebatePayoff;
  const std::size_t i = profile.assignment[j];
  const auto dist =
      observed_distribution_limited(aggregate(profile, config), config, delta, i);
  return -profile.efforts[j] - expected_distance(dist, config, i);
}

}  // namespace indoc

#endif  // INDOC_CORE_HPP_
