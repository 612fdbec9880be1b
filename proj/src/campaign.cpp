#include "mgear/campaign.hpp"

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "mgear/errors.hpp"

namespace mgear {
namespace {

std::string fmt_double(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.9g", value);
  return buffer;
}

std::string death_field(const std::optional<int>& round) {
  return round ? std::to_string(*round) : "-1";
}

}  // namespace

void CampaignSpec::validate() const {
  base.validate();
  if (seeds.empty()) throw ConfigError("campaign: seed list must be non-empty");
  if (std::set<std::uint64_t>(seeds.begin(), seeds.end()).size() != seeds.size())
    throw ConfigError("campaign: seed list must be duplicate-free");
  if (protocols.empty())
    throw ConfigError("campaign: protocol list must be non-empty");
  if (std::set<Protocol>(protocols.begin(), protocols.end()).size() !=
      protocols.size())
    throw ConfigError("campaign: protocol list must be duplicate-free");
  if (!(confidence_level > 0.0 && confidence_level < 1.0))
    throw ConfigError("campaign: confidence level must be in (0, 1)");
}

std::string round_series_csv(std::span<const RoundRecord> series) {
  std::string out =
      "round,alive,residual_j,pkts_bs,pkts_src,cum_pkts_bs,cum_pkts_src\n";
  for (const auto& r : series) {
    out += std::to_string(r.round);
    out += ',';
    out += std::to_string(r.alive_count);
    out += ',';
    out += fmt_double(r.total_residual_energy);
    out += ',';
    out += std::to_string(r.packets_received_at_bs);
    out += ',';
    out += std::to_string(r.source_packets_delivered);
    out += ',';
    out += std::to_string(r.cum_packets_received_at_bs);
    out += ',';
    out += std::to_string(r.cum_source_packets_delivered);
    out += '\n';
  }
  return out;
}

std::string summary_csv(std::span<const CampaignRun> runs) {
  std::string out =
      "seed,first_death,half_death,last_death,total_src_pkts,total_energy_j\n";
  for (const auto& run : runs) {
    const auto& s = run.result.summary;
    out += std::to_string(run.seed);
    out += ',';
    out += death_field(s.first_node_death_round);
    out += ',';
    out += death_field(s.half_nodes_death_round);
    out += ',';
    out += death_field(s.last_node_death_round);
    out += ',';
    out += std::to_string(s.total_source_packets);
    out += ',';
    out += fmt_double(run.result.total_energy_consumed);
    out += '\n';
  }
  return out;
}

std::string comparison_csv(const std::string& protocol_a,
                           const std::string& protocol_b,
                           std::span<const MetricComparison> report) {
  std::string out =
      "metric,protocol_a,mean_a,half_width_a,protocol_b,mean_b,half_width_b,"
      "confidence_level,intervals_overlap,verdict,higher\n";
  for (const auto& cmp : report) {
    out += comparison_metric_name(cmp.metric);
    out += ',';
    out += protocol_a;
    out += ',';
    out += fmt_double(cmp.a.mean);
    out += ',';
    out += fmt_double(cmp.a.half_width);
    out += ',';
    out += protocol_b;
    out += ',';
    out += fmt_double(cmp.b.mean);
    out += ',';
    out += fmt_double(cmp.b.half_width);
    out += ',';
    out += fmt_double(cmp.a.confidence_level);
    out += ',';
    out += cmp.intervals_overlap ? "true" : "false";
    out += ',';
    out += cmp.verdict;
    out += ',';
    out += cmp.higher;
    out += '\n';
  }
  return out;
}

void write_file_atomic(const std::filesystem::path& path,
                       const std::string& content) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open for writing: " + tmp.string());
    out.write(content.data(),
              static_cast<std::streamsize>(content.size()));
    if (!out) throw IoError("write failed: " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw IoError("rename failed: " + path.string());
}

namespace {

void ensure_writable_dir(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec && !std::filesystem::is_directory(dir))
    throw IoError("cannot create output directory: " + dir.string());
  const auto probe = dir / ".write_probe.tmp";
  {
    std::ofstream out(probe, std::ios::trunc);
    if (!out)
      throw IoError("output directory is not writable: " + dir.string());
  }
  std::filesystem::remove(probe, ec);
}

}  // namespace

CampaignResult run_campaign(const CampaignSpec& spec) {
  spec.validate();
  ensure_writable_dir(spec.out_dir);

  CampaignResult result;
  for (const Protocol protocol : spec.protocols) {
    auto& runs = result.runs[protocol];
    runs.reserve(spec.seeds.size());
    for (const std::uint64_t seed : spec.seeds) {
      NetworkConfig config = spec.base;
      config.protocol = protocol;
      config.seed = seed;
      CampaignRun run{seed, run_simulation(config)};
      const auto series_path =
          spec.out_dir / (std::string(protocol_name(protocol)) + "_s" +
                          std::to_string(seed) + "_rounds.csv");
      write_file_atomic(series_path, round_series_csv(run.result.series));
      result.files_written.push_back(series_path);
      runs.push_back(std::move(run));
    }
    const auto summary_path =
        spec.out_dir /
        (std::string(protocol_name(protocol)) + "_summary.csv");
    write_file_atomic(summary_path, summary_csv(runs));
    result.files_written.push_back(summary_path);
  }

  // Interval comparison needs both protocols and at least two seeds.
  if (result.runs.count(Protocol::MGear) != 0 &&
      result.runs.count(Protocol::Leach) != 0 && spec.seeds.size() >= 2) {
    auto collect = [](const std::vector<CampaignRun>& runs,
                      const char* name) {
      ProtocolResults results;
      results.protocol = name;
      results.runs.reserve(runs.size());
      for (const auto& run : runs)
        results.runs.push_back(make_run_stats(run.seed, run.result.series,
                                              run.result.summary));
      return results;
    };
    const auto a = collect(result.runs.at(Protocol::MGear), "mgear");
    const auto b = collect(result.runs.at(Protocol::Leach), "leach");
    const auto report =
        compare_protocols(a, b, spec.confidence_level, spec.metrics);
    const auto comparison_path = spec.out_dir / "comparison.csv";
    write_file_atomic(comparison_path,
                      comparison_csv(a.protocol, b.protocol, report));
    result.files_written.push_back(comparison_path);
  }
  return result;
}

}  // namespace mgear
