#include "mgear/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <boost/math/distributions/students_t.hpp>

#include "mgear/errors.hpp"

namespace mgear {

LifetimeSummary lifetime_summary(std::span<const RoundRecord> series,
                                 int node_count) {
  LifetimeSummary summary;
  for (const auto& record : series) {
    if (!summary.first_node_death_round && record.alive_count < node_count)
      summary.first_node_death_round = record.round;
    if (!summary.half_nodes_death_round && 2 * record.alive_count <= node_count)
      summary.half_nodes_death_round = record.round;
    if (!summary.last_node_death_round && record.alive_count == 0)
      summary.last_node_death_round = record.round;
  }
  if (!series.empty())
    summary.total_source_packets = series.back().cum_source_packets_delivered;
  return summary;
}

bool IntervalEstimate::overlaps(const IntervalEstimate& other) const {
  return std::abs(mean - other.mean) <= half_width + other.half_width;
}

IntervalEstimate confidence_interval(std::span<const double> samples,
                                     double level) {
  if (samples.size() < 2)
    throw std::invalid_argument("confidence_interval: need >= 2 samples");
  if (!(level > 0.0 && level < 1.0))
    throw std::invalid_argument("confidence_interval: level must be in (0, 1)");
  const double n = static_cast<double>(samples.size());
  double mean = 0.0;
  for (double x : samples) mean += x;
  mean /= n;
  double ss = 0.0;
  for (double x : samples) ss += (x - mean) * (x - mean);
  const double sd = std::sqrt(ss / (n - 1.0));
  const boost::math::students_t_distribution<double> dist(n - 1.0);
  const double tq = boost::math::quantile(dist, 0.5 + level / 2.0);
  return {mean, tq * sd / std::sqrt(n), level,
          static_cast<int>(samples.size())};
}

const char* comparison_metric_name(ComparisonMetric metric) {
  switch (metric) {
    case ComparisonMetric::NetworkLifetime:
      return "network_lifetime";
    case ComparisonMetric::TotalThroughput:
      return "total_throughput";
    case ComparisonMetric::MeanResidualEnergy:
      return "mean_residual_energy";
  }
  return "unknown";
}

RunStats make_run_stats(std::uint64_t seed, std::span<const RoundRecord> series,
                        const LifetimeSummary& summary) {
  RunStats stats;
  stats.seed = seed;
  stats.network_lifetime =
      summary.last_node_death_round
          ? static_cast<double>(*summary.last_node_death_round)
          : static_cast<double>(series.size());
  stats.total_throughput = static_cast<double>(summary.total_source_packets);
  if (!series.empty()) {
    double sum = 0.0;
    for (const auto& record : series) sum += record.total_residual_energy;
    stats.mean_residual_energy = sum / static_cast<double>(series.size());
  }
  return stats;
}

namespace {

double metric_value(const RunStats& stats, ComparisonMetric metric) {
  switch (metric) {
    case ComparisonMetric::NetworkLifetime:
      return stats.network_lifetime;
    case ComparisonMetric::TotalThroughput:
      return stats.total_throughput;
    case ComparisonMetric::MeanResidualEnergy:
      return stats.mean_residual_energy;
  }
  return 0.0;
}

std::vector<std::uint64_t> sorted_seeds(const ProtocolResults& results) {
  std::vector<std::uint64_t> seeds;
  seeds.reserve(results.runs.size());
  for (const auto& run : results.runs) seeds.push_back(run.seed);
  std::sort(seeds.begin(), seeds.end());
  return seeds;
}

}  // namespace

std::vector<MetricComparison> compare_protocols(
    const ProtocolResults& a, const ProtocolResults& b, double level,
    std::span<const ComparisonMetric> metrics) {
  if (sorted_seeds(a) != sorted_seeds(b))
    throw ConfigError("compare_protocols: seed sets differ");
  std::vector<MetricComparison> report;
  report.reserve(metrics.size());
  for (const auto metric : metrics) {
    std::vector<double> samples_a, samples_b;
    samples_a.reserve(a.runs.size());
    samples_b.reserve(b.runs.size());
    for (const auto& run : a.runs) samples_a.push_back(metric_value(run, metric));
    for (const auto& run : b.runs) samples_b.push_back(metric_value(run, metric));
    MetricComparison cmp;
    cmp.metric = metric;
    cmp.a = confidence_interval(samples_a, level);
    cmp.b = confidence_interval(samples_b, level);
    cmp.intervals_overlap = cmp.a.overlaps(cmp.b);
    cmp.verdict = cmp.intervals_overlap ? "not different" : "different";
    if (!cmp.intervals_overlap)
      cmp.higher = cmp.a.mean > cmp.b.mean ? a.protocol : b.protocol;
    report.push_back(std::move(cmp));
  }
  return report;
}

std::vector<MetricComparison> compare_protocols(const ProtocolResults& a,
                                                const ProtocolResults& b,
                                                double level) {
  static constexpr ComparisonMetric kAll[] = {
      ComparisonMetric::NetworkLifetime, ComparisonMetric::TotalThroughput,
      ComparisonMetric::MeanResidualEnergy};
  return compare_protocols(a, b, level, kAll);
}

}  // namespace mgear
