#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace mgear {

// Per-round observables of one simulation.
struct RoundRecord {
  int round = 0;
  int alive_count = 0;
  double total_residual_energy = 0.0;  // reported value, clamped at 0 per node
  long packets_received_at_bs = 0;
  long source_packets_delivered = 0;
  long cum_packets_received_at_bs = 0;
  long cum_source_packets_delivered = 0;
};

struct LifetimeSummary {
  std::optional<int> first_node_death_round;
  std::optional<int> half_nodes_death_round;  // first round with alive <= n/2
  std::optional<int> last_node_death_round;
  long total_source_packets = 0;
};

LifetimeSummary lifetime_summary(std::span<const RoundRecord> series,
                                 int node_count);

// Student-t interval: mean +/- t(level, n-1) * sd / sqrt(n).
struct IntervalEstimate {
  double mean = 0.0;
  double half_width = 0.0;
  double confidence_level = 0.0;
  int sample_count = 0;

  double lower() const { return mean - half_width; }
  double upper() const { return mean + half_width; }
  bool overlaps(const IntervalEstimate& other) const;
};

// Fewer than 2 samples or level outside (0,1) -> std::invalid_argument.
IntervalEstimate confidence_interval(std::span<const double> samples,
                                     double level);

enum class ComparisonMetric {
  NetworkLifetime,      // last-node-death round
  TotalThroughput,      // total source packets delivered
  MeanResidualEnergy,   // per-round mean of the network residual
};

const char* comparison_metric_name(ComparisonMetric metric);

// Scalar metrics of one seeded run, the unit of multi-seed aggregation.
struct RunStats {
  std::uint64_t seed = 0;
  double network_lifetime = 0.0;  // rounds executed when no full die-off
  double total_throughput = 0.0;
  double mean_residual_energy = 0.0;
};

RunStats make_run_stats(std::uint64_t seed, std::span<const RoundRecord> series,
                        const LifetimeSummary& summary);

struct ProtocolResults {
  std::string protocol;
  std::vector<RunStats> runs;
};

struct MetricComparison {
  ComparisonMetric metric = ComparisonMetric::NetworkLifetime;
  IntervalEstimate a;
  IntervalEstimate b;
  bool intervals_overlap = true;
  std::string verdict;  // "different" or "not different"
  std::string higher;   // protocol with the higher mean when different, else ""
};

// Interval estimates and overlap verdicts for the selected metrics.
// Mismatched seed sets -> ConfigError.
std::vector<MetricComparison> compare_protocols(
    const ProtocolResults& a, const ProtocolResults& b, double level,
    std::span<const ComparisonMetric> metrics);

// All three metrics.
std::vector<MetricComparison> compare_protocols(const ProtocolResults& a,
                                                const ProtocolResults& b,
                                                double level);

}  // namespace mgear
