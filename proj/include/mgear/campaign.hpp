#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "mgear/config.hpp"
#include "mgear/metrics.hpp"
#include "mgear/protocol.hpp"

namespace mgear {

// A multi-seed experiment: one base config fanned out over seeds and
// protocols, with CSV series, per-protocol summaries and a comparison
// report written to out_dir.
struct CampaignSpec {
  NetworkConfig base;
  std::vector<Protocol> protocols{Protocol::MGear, Protocol::Leach};
  std::vector<std::uint64_t> seeds;
  std::filesystem::path out_dir;
  std::vector<ComparisonMetric> metrics{ComparisonMetric::NetworkLifetime,
                                        ComparisonMetric::TotalThroughput,
                                        ComparisonMetric::MeanResidualEnergy};
  double confidence_level = 0.99;

  // Seeds must be non-empty and duplicate-free; protocols non-empty and
  // duplicate-free. Throws ConfigError.
  void validate() const;
};

struct CampaignRun {
  std::uint64_t seed = 0;
  SimulationResult result;
};

struct CampaignResult {
  std::map<Protocol, std::vector<CampaignRun>> runs;
  std::vector<std::filesystem::path> files_written;
};

// Runs every (protocol, seed) pair sequentially and writes:
//   <protocol>_s<seed>_rounds.csv   per run
//   <protocol>_summary.csv          per protocol
//   comparison.csv                  when both protocols ran with >= 2 seeds
// Files are written atomically (temp + rename); identical specs produce
// byte-identical outputs. Unwritable out_dir -> IoError before any run.
CampaignResult run_campaign(const CampaignSpec& spec);

// CSV encoders. Headers are pinned; floating-point fields use 9 significant
// digits.
std::string round_series_csv(std::span<const RoundRecord> series);
std::string summary_csv(std::span<const CampaignRun> runs);
std::string comparison_csv(const std::string& protocol_a,
                           const std::string& protocol_b,
                           std::span<const MetricComparison> report);

// Atomic file write; throws IoError on failure.
void write_file_atomic(const std::filesystem::path& path,
                       const std::string& content);

}  // namespace mgear
