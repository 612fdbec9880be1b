#pragma once

#include <span>
#include <vector>

#include "mgear/config.hpp"
#include "mgear/metrics.hpp"
#include "mgear/rng.hpp"
#include "mgear/topology.hpp"

namespace mgear {

struct ElectionParams {
  double p = 0.1;  // desired cluster-head fraction
  int round = 0;   // counted from 0
};

// Rounds per epoch: ceil(1/p). Each node may serve as cluster head at most
// once per epoch; eligibility resets at every epoch boundary.
int epoch_length(double p);

// Election threshold T: p / (1 - p * (round mod 1/p)) for eligible nodes,
// capped at 1, and 0 for ineligible ones. p outside (0,1) -> ConfigError.
double ch_threshold(const ElectionParams& params, bool eligible);

struct ElectionCandidate {
  int id = 0;
  bool eligible = false;
};

// One uniform draw per eligible candidate, in the order given (callers pass
// ascending id); a candidate is elected iff its draw falls below the
// threshold. Ineligible candidates consume no randomness.
std::vector<int> elect_cluster_heads(std::span<const ElectionCandidate> candidates,
                                     const ElectionParams& params,
                                     RandomStream& rng);

struct NodePoint {
  int id = 0;
  Position position;
};

struct Cluster {
  int head = 0;
  std::vector<int> members;
};

// Every non-head node joins its Euclidean-nearest head; distance ties go to
// the lower head id. Empty head set -> empty cluster list (callers apply the
// no-head fallback). Clusters come back ordered by head id.
std::vector<Cluster> form_clusters(std::span<const NodePoint> heads,
                                   std::span<const NodePoint> others);

enum class Role {
  ClusterHead,
  ClusterMember,
  DirectToBS,
  DirectToGateway,
  IdleDead,
};

const char* role_name(Role role);

struct RoundOutcome {
  int round = 0;
  long packets_received_at_bs = 0;
  long source_packets_delivered = 0;
  double energy_consumed = 0.0;
  std::vector<int> deaths;
  std::vector<Cluster> clusters;
};

// Full per-node state snapshot.
struct NodeState {
  NodeRecord record;
  Region region = Region::ClusteredA;
  bool alive = true;
  bool eligible_for_ch = true;
  Role role = Role::ClusterMember;
};

struct SimulationResult {
  std::vector<RoundRecord> series;
  LifetimeSummary summary;
  double initial_total_energy = 0.0;
  double setup_energy_consumed = 0.0;
  double total_energy_consumed = 0.0;  // setup plus every round
  double final_residual_energy = 0.0;  // clamped at 0 per node
  double final_residual_energy_unclamped = 0.0;
};

// One sequential, self-contained protocol engine. Distinct instances share
// nothing and may run concurrently.
class Simulation {
 public:
  // Deploys node_count nodes from the config's seeded stream.
  explicit Simulation(const NetworkConfig& config);

  // Runs on a caller-supplied deployment (ids must be dense 1..n). The
  // seeded stream is then used for elections only.
  Simulation(const NetworkConfig& config, std::vector<NodeRecord> nodes);

  // Executes one round of the configured protocol: epoch-boundary
  // eligibility reset, election, cluster formation, steady-state data flow,
  // end-of-round deaths. Advances the round counter.
  RoundOutcome run_round();

  // Steady-state data flow for the current round given formed clusters.
  // Exposed for scripted topologies and tests; run_round is the normal path.
  RoundOutcome steady_state_mgear(const std::vector<Cluster>& clusters);
  RoundOutcome steady_state_leach(const std::vector<Cluster>& clusters);

  int round() const { return round_; }
  int alive_count() const { return alive_count_; }
  bool all_dead() const { return alive_count_ == 0; }

  double total_residual_energy() const;            // clamped at 0 per node
  double total_residual_energy_unclamped() const;  // internal accounting
  double initial_total_energy() const { return initial_total_energy_; }
  double setup_energy_consumed() const { return setup_energy_; }
  double cumulative_energy_consumed() const { return cumulative_energy_; }

  const NodeTable& table() const { return table_; }
  NodeState node_state(int id) const;
  const NetworkConfig& config() const { return config_; }

 private:
  void charge_initial_exchange();
  void mark_initial_deaths();
  void reset_eligibility();
  std::vector<Cluster> elect_and_form_mgear();
  std::vector<Cluster> elect_and_form_leach();
  std::vector<int> elect_in(std::span<const int> node_ids);
  void apply_deaths(RoundOutcome& outcome);
  void debit(NodeTable::Entry& entry, double joules, RoundOutcome& outcome);
  double tx(double bits, double distance) const;

  NetworkConfig config_;
  RandomStream rng_;
  NodeTable table_;
  std::vector<char> eligible_;  // indexed by node id
  std::vector<Role> roles_;     // indexed by node id
  int round_ = 0;
  int epoch_length_ = 0;
  int alive_count_ = 0;
  double initial_total_energy_ = 0.0;
  double setup_energy_ = 0.0;
  double cumulative_energy_ = 0.0;
};

// Rounds until every node is dead or max_rounds is reached. With
// max_rounds > 0 at least one round is executed, so a network that starts
// exhausted still yields a round-0 record (lifetime 0).
SimulationResult run_simulation(const NetworkConfig& config);

}  // namespace mgear
