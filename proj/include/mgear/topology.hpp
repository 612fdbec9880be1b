#pragma once

#include <cstddef>
#include <vector>

#include "mgear/rng.hpp"

namespace mgear {

struct Position {
  double x = 0.0;
  double y = 0.0;
};

double euclidean_distance(const Position& a, const Position& b);

// The four logical regions. NearBS and NearGateway nodes use direct
// communication; the rest of the field is split into two clustered halves
// about the gateway's x coordinate.
enum class Region { NearBS, NearGateway, ClusteredA, ClusteredB };

const char* region_name(Region region);

struct FieldSpec {
  double width = 100.0;
  double height = 100.0;
  Position bs_position{50.0, 200.0};  // well beyond the field edge
  Position gateway_position{50.0, 50.0};
  double d_threshold_bs = 25.0;  // direct-to-BS radius, meters
  double d_threshold_gw = 15.0;  // direct-to-gateway radius, meters

  // Throws ConfigError: dimensions and thresholds must be positive, the
  // gateway must lie inside the field rectangle.
  void validate() const;
};

struct NodeRecord {
  int id = 0;
  Position position;
  // May go negative on the node's final round; frozen once the node dies.
  double residual_energy = 0.0;
  double distance_to_bs = 0.0;
  double distance_to_gateway = 0.0;
};

// n nodes placed independently and uniformly over the field rectangle, ids
// 1..n, distances precomputed. n < 1 -> ConfigError.
std::vector<NodeRecord> deploy(int n, const FieldSpec& field,
                               double initial_energy, RandomStream& rng);

// Region of one node. The BS check precedes the gateway check; the clustered
// split sends x == gateway x to ClusteredA.
Region classify_region(const NodeRecord& node, const FieldSpec& field);

// Regions for a deployed node list, index-aligned with the input.
std::vector<Region> assign_regions(const std::vector<NodeRecord>& nodes,
                                   const FieldSpec& field);

// The BS's node data table: one entry per deployed node, retained (and
// flagged) after death. Single source of truth for the protocol engines.
class NodeTable {
 public:
  struct Entry {
    NodeRecord record;
    Region region = Region::ClusteredA;
    bool alive = true;
  };

  NodeTable() = default;
  NodeTable(std::vector<NodeRecord> nodes, const FieldSpec& field);

  // Unknown id -> std::out_of_range.
  const Entry& at(int id) const;
  Entry& at(int id);

  std::size_t size() const { return entries_.size(); }
  const std::vector<Entry>& entries() const { return entries_; }
  std::vector<Entry>& entries() { return entries_; }

 private:
  std::vector<Entry> entries_;  // ids are dense 1..n; entry for id at id-1
};

}  // namespace mgear
