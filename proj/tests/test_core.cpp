#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "indoc/core.hpp"
#include "test_helpers.hpp"

using namespace indoc;
using indoc_test::random_config;
using indoc_test::random_profile;

TEST_CASE("OpinionConfig rejects invalid inputs") {
  CHECK_THROWS_AS(OpinionConfig({0.0}, {1}), std::invalid_argument);
  CHECK_THROWS_AS(OpinionConfig({1.0, 0.0}, {1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(OpinionConfig({0.0, 0.0}, {1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(OpinionConfig({0.0, 1.0}, {1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(OpinionConfig({0.0, 1.0}, {1}), std::invalid_argument);
}

TEST_CASE("ExposureLevel bounds") {
  CHECK_THROWS_AS(ExposureLevel(0.0), std::invalid_argument);
  CHECK_THROWS_AS(ExposureLevel(1.5), std::invalid_argument);
  CHECK_NOTHROW(ExposureLevel(1.0));
}

TEST_CASE("aggregate sums efforts per opinion group") {
  const OpinionConfig singles({0.0, 1.0, 2.0}, {1, 1, 1});
  auto agg = aggregate(EffortProfile::from_group_order(singles, {1, 1, 2}), singles);
  CHECK(agg.values == std::vector<double>{1, 1, 2});

  const OpinionConfig grouped({0.0, 1.0}, {2, 1});
  agg = aggregate(EffortProfile::from_group_order(grouped, {0.1, 0.15, 0.25}), grouped);
  CHECK(agg.values[0] == Catch::Approx(0.25));
  CHECK(agg.values[1] == Catch::Approx(0.25));

  agg = aggregate(EffortProfile::from_group_order(singles, {0, 0, 0}), singles);
  CHECK(agg.values == std::vector<double>{0, 0, 0});
}

TEST_CASE("aggregate rejects mismatched profile") {
  const OpinionConfig config({0.0, 1.0}, {1, 1});
  const EffortProfile bad({1.0, 1.0}, {0, 0});
  CHECK_THROWS_AS(aggregate(bad, config), std::invalid_argument);
}

TEST_CASE("observed_distribution is proportional to aggregates") {
  auto d = observed_distribution(AggregateEfforts({1, 1, 2}));
  CHECK(d.probs[0] == Catch::Approx(0.25));
  CHECK(d.probs[1] == Catch::Approx(0.25));
  CHECK(d.probs[2] == Catch::Approx(0.5));

  d = observed_distribution(AggregateEfforts({0.25, 0, 0.25}));
  CHECK(d.probs[0] == Catch::Approx(0.5));
  CHECK(d.probs[1] == 0.0);

  d = observed_distribution(AggregateEfforts({3, 0}));
  CHECK(d.probs[0] == 1.0);
  CHECK(d.probs[1] == 0.0);

  CHECK_THROWS_AS(observed_distribution(AggregateEfforts({0, 0})), NullDebateError);
}

TEST_CASE("observed_distribution sums to one and is scale invariant") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> e_dist(0.01, 3.0);
  std::uniform_real_distribution<double> c_dist(0.1, 50.0);
  for (int trial = 0; trial < 100; ++trial) {
    const auto config = random_config(rng);
    std::vector<double> values(config.num_opinions());
    for (double& v : values) v = e_dist(rng);
    const AggregateEfforts agg(values);
    const auto d = observed_distribution(agg);
    double sum = 0.0;
    for (double p : d.probs) sum += p;
    CHECK(std::abs(sum - 1.0) <= 1e-12);

    const double c = c_dist(rng);
    std::vector<double> scaled = values;
    for (double& v : scaled) v *= c;
    const auto ds = observed_distribution(AggregateEfforts(scaled));
    for (std::size_t i = 0; i < d.probs.size(); ++i)
      CHECK(ds.probs[i] == Catch::Approx(d.probs[i]).margin(1e-13));
  }
}

TEST_CASE("limited distribution applies the delta-discounted kernel") {
  const OpinionConfig config({0.0, 1.0, 2.0}, {1, 1, 1});
  const AggregateEfforts agg({1, 1, 1});

  auto d = observed_distribution_limited(agg, config, ExposureLevel(0.5), 0);
  CHECK(d.probs[0] == Catch::Approx(1.0 / 1.75));
  CHECK(d.probs[1] == Catch::Approx(0.5 / 1.75));
  CHECK(d.probs[2] == Catch::Approx(0.25 / 1.75));

  d = observed_distribution_limited(agg, config, ExposureLevel(0.5), 1);
  CHECK(d.probs[0] == Catch::Approx(0.25));
  CHECK(d.probs[1] == Catch::Approx(0.5));
  CHECK(d.probs[2] == Catch::Approx(0.25));
}

TEST_CASE("limited distribution at delta=1 equals the full one") {
  std::mt19937 rng(17);
  std::uniform_real_distribution<double> e_dist(0.01, 3.0);
  for (int trial = 0; trial < 50; ++trial) {
    const auto config = random_config(rng);
    std::vector<double> values(config.num_opinions());
    for (double& v : values) v = e_dist(rng);
    const AggregateEfforts agg(values);
    const auto full = observed_distribution(agg);
    for (std::size_t i = 0; i < config.num_opinions(); ++i) {
      const auto lim = observed_distribution_limited(agg, config, ExposureLevel(1.0), i);
      for (std::size_t l = 0; l < config.num_opinions(); ++l)
        CHECK(lim.probs[l] == full.probs[l]);
    }
  }
}

TEST_CASE("expected_distance") {
  const OpinionConfig two({0.0, 1.0}, {1, 1});
  CHECK(expected_distance(ObservedDistribution({1.0, 0.0}), two, 0) == 0.0);
  CHECK(expected_distance(ObservedDistribution({0.5, 0.5}), two, 0) == Catch::Approx(0.5));

  const OpinionConfig three({0.0, 1.0, 2.0}, {1, 1, 1});
  CHECK(expected_distance(ObservedDistribution({0.5, 0.0, 0.5}), three, 1) ==
        Catch::Approx(1.0));
}

TEST_CASE("expected_distance is nonnegative, zero only at the viewpoint point mass") {
  std::mt19937 rng(23);
  std::uniform_real_distribution<double> e_dist(0.01, 3.0);
  for (int trial = 0; trial < 100; ++trial) {
    const auto config = random_config(rng);
    std::vector<double> values(config.num_opinions());
    for (double& v : values) v = e_dist(rng);
    const auto d = observed_distribution(AggregateEfforts(values));
    for (std::size_t i = 0; i < config.num_opinions(); ++i) {
      const double ed = expected_distance(d, config, i);
      CHECK(ed >= 0.0);
      CHECK(ed > 0.0);  // full-support distribution, distinct opinions
    }
  }
}

TEST_CASE("payoff matches the definition") {
  const OpinionConfig two({0.0, 1.0}, {1, 1});
  const auto sym = EffortProfile::from_group_order(two, {0.25, 0.25});
  CHECK(payoff(0, sym, two) == Catch::Approx(-0.75));

  // no cost, all mass on own opinion
  const auto lopsided = EffortProfile::from_group_order(two, {1.0, 0.0});
  CHECK(payoff(1, lopsided, two) == Catch::Approx(-1.0));
  CHECK(payoff(0, lopsided, two) == Catch::Approx(-1.0));
  const OpinionConfig three({0.0, 1.0, 2.0}, {1, 1, 1});
  const auto mass_mid = EffortProfile::from_group_order(three, {0.0, 1.0, 0.0});
  CHECK(payoff(1, mass_mid, three) == Catch::Approx(-1.0));

  const auto zero = EffortProfile::from_group_order(two, {0.0, 0.0});
  CHECK(payoff(0, zero, two) == kNullDebatePayoff);
  CHECK(payoff(0, zero, two) < -1e300);
}

TEST_CASE("free rider with all mass on own opinion earns zero") {
  const OpinionConfig config({0.0, 1.0}, {2, 1});
  const auto profile = EffortProfile::from_group_order(config, {1.0, 0.0, 0.0});
  CHECK(payoff(1, profile, config) == 0.0);
}

TEST_CASE("payoff strictly decreasing in own effort once own opinion has probability 1") {
  const OpinionConfig config({0.0, 1.0}, {1, 1});
  double prev = payoff(0, EffortProfile::from_group_order(config, {0.5, 0.0}), config);
  for (double e : {1.0, 2.0, 4.0}) {
    const double p = payoff(0, EffortProfile::from_group_order(config, {e, 0.0}), config);
    CHECK(p < prev);
    prev = p;
  }
}

TEST_CASE("payoff is concave in own effort (midpoint inequality on random triples)") {
  std::mt19937 rng(31);
  std::uniform_real_distribution<double> e_dist(0.0, 3.0);
  for (int trial = 0; trial < 200; ++trial) {
    const auto config = random_config(rng);
    auto profile = random_profile(config, rng);
    std::uniform_int_distribution<std::size_t> j_dist(0, profile.num_players() - 1);
    const std::size_t j = j_dist(rng);
    double a = e_dist(rng), b = e_dist(rng);
    // keep opponents nonzero so payoffs are finite
    bool opponents_zero = true;
    for (std::size_t r = 0; r < profile.num_players(); ++r)
      if (r != j && profile.efforts[r] > 0.0) opponents_zero = false;
    if (opponents_zero) continue;
    auto at = [&](double e) {
      auto p = profile;
      p.efforts[j] = e;
      return payoff(j, p, config);
    };
    CHECK(at(0.5 * (a + b)) >= 0.5 * (at(a) + at(b)) - 1e-10);
  }
}

TEST_CASE("payoff_limited reduces to payoff at delta=1") {
  const OpinionConfig config({0.0, 1.0, 2.0}, {1, 2, 1});
  std::mt19937 rng(41);
  for (int trial = 0; trial < 50; ++trial) {
    const auto profile = random_profile(config, rng);
    if (profile.all_zero()) continue;
    for (std::size_t j = 0; j < profile.num_players(); ++j)
      CHECK(payoff_limited(j, profile, config, ExposureLevel(1.0)) ==
            payoff(j, profile, config));
  }
}

TEST_CASE("payoff_limited hand-computed value at delta=0.5") {
  const OpinionConfig config({0.0, 1.0, 2.0}, {1, 1, 1});
  const auto profile = EffortProfile::from_group_order(config, {1.0, 1.0, 1.0});
  CHECK(payoff_limited(0, profile, config, ExposureLevel(0.5)) ==
        Catch::Approx(-1.0 - 1.0 / 1.75));
}

TEST_CASE("silent moderate's limited distance term under E1=E3 symmetry") {
  const OpinionConfig config({0.0, 1.0, 2.0}, {1, 1, 1});
  const double e1 = 0.4, e2 = 0.3, delta = 0.6;
  const auto profile = EffortProfile::from_group_order(config, {e1, e2, e1});
  // moderate exerting e2: distance term = 2*delta*E1 / (2*delta*E1 + E2)
  const double expect = 2.0 * delta * e1 / (2.0 * delta * e1 + e2);
  CHECK(payoff_limited(1, profile, config, ExposureLevel(delta)) ==
        Catch::Approx(-e2 - expect).margin(1e-14));
}

TEST_CASE("payoff_limited rejects non-unit-spaced or k!=3 configs") {
  const OpinionConfig wide({0.0, 1.0, 3.0}, {1, 1, 1});
  const auto p3 = EffortProfile::from_group_order(wide, {1, 1, 1});
  CHECK_THROWS_AS(payoff_limited(0, p3, wide, ExposureLevel(0.5)), std::invalid_argument);

  const OpinionConfig two({0.0, 1.0}, {1, 1});
  const auto p2 = EffortProfile::from_group_order(two, {1, 1});
  CHECK_THROWS_AS(payoff_limited(0, p2, two, ExposureLevel(0.5)), std::invalid_argument);
}
