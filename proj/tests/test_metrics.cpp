#include "mgear/metrics.hpp"

#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "mgear/errors.hpp"

using namespace mgear;

namespace {

RoundRecord record(int round, int alive, double residual, long src = 0,
                   long cum_src = 0) {
  return {round, alive, residual, 0, src, 0, cum_src};
}

std::vector<RoundRecord> two_node_series() {
  // deaths at rounds 10 and 30
  std::vector<RoundRecord> series;
  for (int r = 0; r < 40; ++r) {
    const int alive = r < 10 ? 2 : (r < 30 ? 1 : 0);
    series.push_back(record(r, alive, alive * 0.1, alive, 0));
  }
  return series;
}

}  // namespace

TEST_SUITE("metrics") {
  TEST_CASE("lifetime summary extracts first, half and last death rounds") {
    const auto series = two_node_series();
    const auto summary = lifetime_summary(series, 2);
    CHECK(summary.first_node_death_round == 10);
    CHECK(summary.half_nodes_death_round == 10);
    CHECK(summary.last_node_death_round == 30);
  }

  TEST_CASE("no deaths leaves all fields absent") {
    std::vector<RoundRecord> series;
    for (int r = 0; r < 20; ++r) series.push_back(record(r, 5, 1.0));
    const auto summary = lifetime_summary(series, 5);
    CHECK_FALSE(summary.first_node_death_round.has_value());
    CHECK_FALSE(summary.half_nodes_death_round.has_value());
    CHECK_FALSE(summary.last_node_death_round.has_value());
  }

  TEST_CASE("empty series yields an empty summary") {
    const auto summary = lifetime_summary({}, 10);
    CHECK_FALSE(summary.first_node_death_round.has_value());
    CHECK(summary.total_source_packets == 0);
  }

  TEST_CASE("summary is invariant to trailing all-dead rounds") {
    auto series = two_node_series();
    const auto before = lifetime_summary(series, 2);
    for (int r = 40; r < 60; ++r) series.push_back(record(r, 0, 0.0));
    const auto after = lifetime_summary(series, 2);
    CHECK(before.first_node_death_round == after.first_node_death_round);
    CHECK(before.half_nodes_death_round == after.half_nodes_death_round);
    CHECK(before.last_node_death_round == after.last_node_death_round);
  }

  TEST_CASE("confidence interval on equal samples collapses to the mean") {
    const std::vector<double> samples(8, 3.25);
    const auto ci = confidence_interval(samples, 0.99);
    CHECK(ci.mean == doctest::Approx(3.25));
    CHECK(ci.half_width == doctest::Approx(0.0));
    CHECK(ci.sample_count == 8);
  }

  TEST_CASE("two-sample interval matches the t table") {
    const std::vector<double> samples = {1.0, 3.0};
    const auto ci = confidence_interval(samples, 0.95);
    CHECK(ci.mean == doctest::Approx(2.0));
    // t(0.975, df=1) = 12.7062, sd/sqrt(n) = 1
    CHECK(ci.half_width == doctest::Approx(12.7062047364).epsilon(1e-9));
  }

  TEST_CASE("interval estimation rejects degenerate input") {
    CHECK_THROWS_AS(confidence_interval(std::vector<double>{1.0}, 0.95),
                    std::invalid_argument);
    CHECK_THROWS_AS(confidence_interval(std::vector<double>{1.0, 2.0}, 1.5),
                    std::invalid_argument);
  }

  TEST_CASE("interval is translation and scale equivariant") {
    const std::vector<double> samples = {4.0, 9.0, 6.5, 5.25, 7.75};
    const auto base = confidence_interval(samples, 0.99);

    std::vector<double> shifted, scaled;
    for (double x : samples) shifted.push_back(x + 11.5);
    for (double x : samples) scaled.push_back(-3.0 * x);
    const auto sh = confidence_interval(shifted, 0.99);
    const auto sc = confidence_interval(scaled, 0.99);

    CHECK(sh.mean == doctest::Approx(base.mean + 11.5).epsilon(1e-12));
    CHECK(sh.half_width == doctest::Approx(base.half_width).epsilon(1e-12));
    CHECK(sc.mean == doctest::Approx(-3.0 * base.mean).epsilon(1e-12));
    CHECK(sc.half_width == doctest::Approx(3.0 * base.half_width).epsilon(1e-12));
  }

  TEST_CASE("protocol comparison") {
    ProtocolResults high{"mgear", {}};
    ProtocolResults low{"leach", {}};
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
      const double jitter = 0.1 * static_cast<double>(seed % 3);
      high.runs.push_back({seed, 100.0 + jitter, 5000.0 + jitter, 40.0});
      low.runs.push_back({seed, 50.0 + jitter, 1000.0 + jitter, 20.0});
    }

    SUBCASE("a protocol against itself is not different") {
      const auto report = compare_protocols(high, high, 0.99);
      REQUIRE(report.size() == 3);
      for (const auto& cmp : report) {
        CHECK(cmp.intervals_overlap);
        CHECK(cmp.verdict == "not different");
        CHECK(cmp.higher.empty());
      }
    }
    SUBCASE("clearly separated metrics are different") {
      const auto report = compare_protocols(high, low, 0.99);
      for (const auto& cmp : report) {
        CHECK_FALSE(cmp.intervals_overlap);
        CHECK(cmp.verdict == "different");
        CHECK(cmp.higher == "mgear");
      }
    }
    SUBCASE("empty metric list yields an empty report") {
      const auto report = compare_protocols(high, low, 0.99, {});
      CHECK(report.empty());
    }
    SUBCASE("mismatched seed sets are rejected") {
      auto other = low;
      other.runs[0].seed = 77;
      CHECK_THROWS_AS(compare_protocols(high, other, 0.99), ConfigError);
    }
  }

  TEST_CASE("run stats fall back to rounds executed without a full die-off") {
    std::vector<RoundRecord> series;
    for (int r = 0; r < 25; ++r) series.push_back(record(r, 4, 2.0, 4, 4 * (r + 1)));
    const auto summary = lifetime_summary(series, 4);
    const auto stats = make_run_stats(9, series, summary);
    CHECK(stats.seed == 9);
    CHECK(stats.network_lifetime == doctest::Approx(25.0));
    CHECK(stats.total_throughput == doctest::Approx(100.0));
    CHECK(stats.mean_residual_energy == doctest::Approx(2.0));
  }
}
