#include "mgear/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "mgear/energy.hpp"
#include "mgear/errors.hpp"

namespace mgear {

int epoch_length(double p) {
  if (!(p > 0.0 && p < 1.0)) throw ConfigError("key 'p': must be in (0, 1)");
  return static_cast<int>(std::ceil(1.0 / p));
}

double ch_threshold(const ElectionParams& params, bool eligible) {
  if (!(params.p > 0.0 && params.p < 1.0))
    throw ConfigError("key 'p': must be in (0, 1)");
  if (!eligible) return 0.0;
  const double m = std::fmod(static_cast<double>(params.round), 1.0 / params.p);
  const double t = params.p / (1.0 - params.p * m);
  return std::min(t, 1.0);
}

std::vector<int> elect_cluster_heads(std::span<const ElectionCandidate> candidates,
                                     const ElectionParams& params,
                                     RandomStream& rng) {
  const double threshold = ch_threshold(params, true);
  std::vector<int> elected;
  for (const auto& candidate : candidates) {
    if (!candidate.eligible) continue;
    if (rng.uniform01() < threshold) elected.push_back(candidate.id);
  }
  return elected;
}

std::vector<Cluster> form_clusters(std::span<const NodePoint> heads,
                                   std::span<const NodePoint> others) {
  if (heads.empty()) return {};
  std::vector<NodePoint> sorted_heads(heads.begin(), heads.end());
  std::sort(sorted_heads.begin(), sorted_heads.end(),
            [](const NodePoint& a, const NodePoint& b) { return a.id < b.id; });

  std::vector<Cluster> clusters;
  clusters.reserve(sorted_heads.size());
  for (const auto& head : sorted_heads) clusters.push_back({head.id, {}});

  for (const auto& node : others) {
    std::size_t best = 0;
    double best_distance = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < sorted_heads.size(); ++i) {
      const double d =
          euclidean_distance(node.position, sorted_heads[i].position);
      if (d < best_distance) {  // strict: equidistant keeps the lower head id
        best_distance = d;
        best = i;
      }
    }
    clusters[best].members.push_back(node.id);
  }
  return clusters;
}

const char* role_name(Role role) {
  switch (role) {
    case Role::ClusterHead:
      return "cluster_head";
    case Role::ClusterMember:
      return "cluster_member";
    case Role::DirectToBS:
      return "direct_to_bs";
    case Role::DirectToGateway:
      return "direct_to_gateway";
    case Role::IdleDead:
      return "idle_dead";
  }
  return "unknown";
}

namespace {

Role default_role(Region region) {
  switch (region) {
    case Region::NearBS:
      return Role::DirectToBS;
    case Region::NearGateway:
      return Role::DirectToGateway;
    case Region::ClusteredA:
    case Region::ClusteredB:
      return Role::ClusterMember;
  }
  return Role::ClusterMember;
}

bool clustered(Region region) {
  return region == Region::ClusteredA || region == Region::ClusteredB;
}

}  // namespace

Simulation::Simulation(const NetworkConfig& config)
    : config_(config), rng_(config.seed) {
  config_.validate();
  auto nodes = deploy(config_.node_count, config_.field,
                      config_.radio.initial_energy, rng_);
  table_ = NodeTable(std::move(nodes), config_.field);
  epoch_length_ = epoch_length(config_.ch_fraction);
  eligible_.assign(static_cast<std::size_t>(config_.node_count) + 1, 1);
  roles_.assign(static_cast<std::size_t>(config_.node_count) + 1,
                Role::ClusterMember);
  for (auto& entry : table_.entries())
    roles_[static_cast<std::size_t>(entry.record.id)] =
        default_role(entry.region);
  alive_count_ = config_.node_count;
  initial_total_energy_ =
      static_cast<double>(config_.node_count) * config_.radio.initial_energy;
  if (config_.charge_control_packets) charge_initial_exchange();
  mark_initial_deaths();
}

Simulation::Simulation(const NetworkConfig& config,
                       std::vector<NodeRecord> nodes)
    : config_(config), rng_(config.seed) {
  config_.validate();
  if (static_cast<int>(nodes.size()) != config_.node_count)
    throw ConfigError("custom deployment size does not match key 'n'");
  double total = 0.0;
  for (const auto& node : nodes) total += node.residual_energy;
  table_ = NodeTable(std::move(nodes), config_.field);
  epoch_length_ = epoch_length(config_.ch_fraction);
  eligible_.assign(static_cast<std::size_t>(config_.node_count) + 1, 1);
  roles_.assign(static_cast<std::size_t>(config_.node_count) + 1,
                Role::ClusterMember);
  for (auto& entry : table_.entries())
    roles_[static_cast<std::size_t>(entry.record.id)] =
        default_role(entry.region);
  alive_count_ = config_.node_count;
  initial_total_energy_ = total;
  if (config_.charge_control_packets) charge_initial_exchange();
  mark_initial_deaths();
}

void Simulation::charge_initial_exchange() {
  // HELLO reception plus the location report back to the BS, once at setup.
  const double bits = static_cast<double>(config_.control_bits);
  for (auto& entry : table_.entries()) {
    const double cost =
        rx_energy(config_.radio, bits) +
        tx_energy(config_.radio, bits, entry.record.distance_to_bs,
                  config_.amplifier_mode);
    entry.record.residual_energy -= cost;
    setup_energy_ += cost;
  }
  cumulative_energy_ += setup_energy_;
}

void Simulation::mark_initial_deaths() {
  alive_count_ = 0;
  for (auto& entry : table_.entries()) {
    entry.alive = entry.record.residual_energy > 0.0;
    if (entry.alive)
      ++alive_count_;
    else
      roles_[static_cast<std::size_t>(entry.record.id)] = Role::IdleDead;
  }
}

void Simulation::reset_eligibility() {
  for (const auto& entry : table_.entries())
    if (entry.alive) eligible_[static_cast<std::size_t>(entry.record.id)] = 1;
}

std::vector<int> Simulation::elect_in(std::span<const int> node_ids) {
  std::vector<ElectionCandidate> candidates;
  candidates.reserve(node_ids.size());
  for (const int id : node_ids) {
    const auto& entry = table_.at(id);
    bool eligible = eligible_[static_cast<std::size_t>(id)] != 0;
    if (config_.require_min_energy_for_ch &&
        entry.record.residual_energy < config_.ch_min_energy)
      eligible = false;
    candidates.push_back({id, eligible});
  }
  auto elected =
      elect_cluster_heads(candidates, {config_.ch_fraction, round_}, rng_);
  for (const int id : elected) eligible_[static_cast<std::size_t>(id)] = 0;
  return elected;
}

std::vector<Cluster> Simulation::elect_and_form_mgear() {
  std::vector<Cluster> clusters;
  for (const Region region : {Region::ClusteredA, Region::ClusteredB}) {
    std::vector<int> ids;  // ascending: table entries are id-ordered
    for (const auto& entry : table_.entries())
      if (entry.alive && entry.region == region) ids.push_back(entry.record.id);
    const auto elected = elect_in(ids);

    std::vector<NodePoint> heads, others;
    for (const int id : ids) {
      const auto& entry = table_.at(id);
      if (std::find(elected.begin(), elected.end(), id) != elected.end())
        heads.push_back({id, entry.record.position});
      else
        others.push_back({id, entry.record.position});
    }
    auto region_clusters = form_clusters(heads, others);
    clusters.insert(clusters.end(),
                    std::make_move_iterator(region_clusters.begin()),
                    std::make_move_iterator(region_clusters.end()));
  }
  return clusters;
}

std::vector<Cluster> Simulation::elect_and_form_leach() {
  std::vector<int> ids;
  for (const auto& entry : table_.entries())
    if (entry.alive) ids.push_back(entry.record.id);
  const auto elected = elect_in(ids);

  std::vector<NodePoint> heads, others;
  for (const int id : ids) {
    const auto& entry = table_.at(id);
    if (std::find(elected.begin(), elected.end(), id) != elected.end())
      heads.push_back({id, entry.record.position});
    else
      others.push_back({id, entry.record.position});
  }
  return form_clusters(heads, others);
}

RoundOutcome Simulation::run_round() {
  if (round_ % epoch_length_ == 0) reset_eligibility();
  RoundOutcome outcome;
  if (config_.protocol == Protocol::MGear) {
    outcome = steady_state_mgear(elect_and_form_mgear());
  } else {
    outcome = steady_state_leach(elect_and_form_leach());
  }
  ++round_;
  return outcome;
}

void Simulation::debit(NodeTable::Entry& entry, double joules,
                       RoundOutcome& outcome) {
  entry.record.residual_energy -= joules;
  outcome.energy_consumed += joules;
}

double Simulation::tx(double bits, double distance) const {
  return tx_energy(config_.radio, bits, distance, config_.amplifier_mode);
}

RoundOutcome Simulation::steady_state_mgear(
    const std::vector<Cluster>& clusters) {
  RoundOutcome outcome;
  outcome.round = round_;
  outcome.clusters = clusters;
  const double k = static_cast<double>(config_.packet_bits);

  std::vector<char> in_cluster(eligible_.size(), 0);
  for (const auto& cluster : clusters) {
    in_cluster[static_cast<std::size_t>(cluster.head)] = 1;
    roles_[static_cast<std::size_t>(cluster.head)] = Role::ClusterHead;
    for (const int id : cluster.members) {
      in_cluster[static_cast<std::size_t>(id)] = 1;
      roles_[static_cast<std::size_t>(id)] = Role::ClusterMember;
    }
  }

  bool gateway_received = false;

  // Direct regions first, then cluster traffic, then clustered nodes left
  // without a head this round, which fall back to the gateway.
  for (auto& entry : table_.entries()) {
    if (!entry.alive || entry.region != Region::NearBS) continue;
    roles_[static_cast<std::size_t>(entry.record.id)] = Role::DirectToBS;
    debit(entry, tx(k, entry.record.distance_to_bs), outcome);
    ++outcome.packets_received_at_bs;
    ++outcome.source_packets_delivered;
  }
  for (auto& entry : table_.entries()) {
    if (!entry.alive || entry.region != Region::NearGateway) continue;
    roles_[static_cast<std::size_t>(entry.record.id)] = Role::DirectToGateway;
    debit(entry, tx(k, entry.record.distance_to_gateway), outcome);
    gateway_received = true;
    ++outcome.source_packets_delivered;
  }
  for (const auto& cluster : clusters) {
    auto& head = table_.at(cluster.head);
    for (const int id : cluster.members) {
      auto& member = table_.at(id);
      debit(member,
            tx(k, euclidean_distance(member.record.position,
                                     head.record.position)),
            outcome);
    }
    const int member_count = static_cast<int>(cluster.members.size());
    debit(head, rx_energy(config_.radio, k) * member_count, outcome);
    debit(head, aggregation_energy(config_.radio, k, member_count + 1),
          outcome);
    debit(head, tx(k, head.record.distance_to_gateway), outcome);
    gateway_received = true;
    outcome.source_packets_delivered += member_count + 1;
  }
  for (auto& entry : table_.entries()) {
    if (!entry.alive || !clustered(entry.region)) continue;
    if (in_cluster[static_cast<std::size_t>(entry.record.id)]) continue;
    roles_[static_cast<std::size_t>(entry.record.id)] = Role::DirectToGateway;
    debit(entry, tx(k, entry.record.distance_to_gateway), outcome);
    gateway_received = true;
    ++outcome.source_packets_delivered;
  }

  // The rechargeable gateway fuses what it heard into one packet for the BS;
  // its own energy is not tracked.
  if (gateway_received) ++outcome.packets_received_at_bs;

  apply_deaths(outcome);
  cumulative_energy_ += outcome.energy_consumed;
  return outcome;
}

RoundOutcome Simulation::steady_state_leach(
    const std::vector<Cluster>& clusters) {
  RoundOutcome outcome;
  outcome.round = round_;
  outcome.clusters = clusters;
  const double k = static_cast<double>(config_.packet_bits);

  std::vector<char> in_cluster(eligible_.size(), 0);
  for (const auto& cluster : clusters) {
    in_cluster[static_cast<std::size_t>(cluster.head)] = 1;
    roles_[static_cast<std::size_t>(cluster.head)] = Role::ClusterHead;
    for (const int id : cluster.members) {
      in_cluster[static_cast<std::size_t>(id)] = 1;
      roles_[static_cast<std::size_t>(id)] = Role::ClusterMember;
    }
  }

  for (const auto& cluster : clusters) {
    auto& head = table_.at(cluster.head);
    for (const int id : cluster.members) {
      auto& member = table_.at(id);
      debit(member,
            tx(k, euclidean_distance(member.record.position,
                                     head.record.position)),
            outcome);
    }
    const int member_count = static_cast<int>(cluster.members.size());
    debit(head, rx_energy(config_.radio, k) * member_count, outcome);
    debit(head, aggregation_energy(config_.radio, k, member_count + 1),
          outcome);
    debit(head, tx(k, head.record.distance_to_bs), outcome);
    ++outcome.packets_received_at_bs;
    outcome.source_packets_delivered += member_count + 1;
  }

  // No head this round: alive nodes report straight to the BS.
  for (auto& entry : table_.entries()) {
    if (!entry.alive) continue;
    if (in_cluster[static_cast<std::size_t>(entry.record.id)]) continue;
    roles_[static_cast<std::size_t>(entry.record.id)] = Role::DirectToBS;
    debit(entry, tx(k, entry.record.distance_to_bs), outcome);
    ++outcome.packets_received_at_bs;
    ++outcome.source_packets_delivered;
  }

  apply_deaths(outcome);
  cumulative_energy_ += outcome.energy_consumed;
  return outcome;
}

void Simulation::apply_deaths(RoundOutcome& outcome) {
  // Nodes finish their scheduled transmissions and die at round end; the
  // residual freezes at its first non-positive value.
  for (auto& entry : table_.entries()) {
    if (!entry.alive || entry.record.residual_energy > 0.0) continue;
    entry.alive = false;
    roles_[static_cast<std::size_t>(entry.record.id)] = Role::IdleDead;
    outcome.deaths.push_back(entry.record.id);
    --alive_count_;
  }
}

double Simulation::total_residual_energy() const {
  double total = 0.0;
  for (const auto& entry : table_.entries())
    total += std::max(0.0, entry.record.residual_energy);
  return total;
}

double Simulation::total_residual_energy_unclamped() const {
  double total = 0.0;
  for (const auto& entry : table_.entries())
    total += entry.record.residual_energy;
  return total;
}

NodeState Simulation::node_state(int id) const {
  const auto& entry = table_.at(id);
  return {entry.record, entry.region, entry.alive,
          eligible_[static_cast<std::size_t>(id)] != 0,
          roles_[static_cast<std::size_t>(id)]};
}

SimulationResult run_simulation(const NetworkConfig& config) {
  Simulation sim(config);
  SimulationResult result;
  result.initial_total_energy = sim.initial_total_energy();
  long cum_bs = 0;
  long cum_src = 0;
  for (int r = 0; r < config.max_rounds; ++r) {
    const RoundOutcome outcome = sim.run_round();
    cum_bs += outcome.packets_received_at_bs;
    cum_src += outcome.source_packets_delivered;
    result.series.push_back({outcome.round, sim.alive_count(),
                             sim.total_residual_energy(),
                             outcome.packets_received_at_bs,
                             outcome.source_packets_delivered, cum_bs,
                             cum_src});
    if (sim.all_dead()) break;
  }
  result.summary = lifetime_summary(result.series, config.node_count);
  result.setup_energy_consumed = sim.setup_energy_consumed();
  result.total_energy_consumed = sim.cumulative_energy_consumed();
  result.final_residual_energy = sim.total_residual_energy();
  result.final_residual_energy_unclamped = sim.total_residual_energy_unclamped();
  return result;
}

}  // namespace mgear
