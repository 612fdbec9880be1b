#include "mgear/topology.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "mgear/errors.hpp"

namespace mgear {

double euclidean_distance(const Position& a, const Position& b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return std::sqrt(dx * dx + dy * dy);
}

const char* region_name(Region region) {
  switch (region) {
    case Region::NearBS:
      return "near_bs";
    case Region::NearGateway:
      return "near_gateway";
    case Region::ClusteredA:
      return "clustered_a";
    case Region::ClusteredB:
      return "clustered_b";
  }
  return "unknown";
}

void FieldSpec::validate() const {
  if (!(width > 0.0) || !std::isfinite(width))
    throw ConfigError("key 'field_width': must be a positive finite number");
  if (!(height > 0.0) || !std::isfinite(height))
    throw ConfigError("key 'field_height': must be a positive finite number");
  if (!std::isfinite(bs_position.x) || !std::isfinite(bs_position.y))
    throw ConfigError("key 'bs_x'/'bs_y': must be finite");
  if (gateway_position.x < 0.0 || gateway_position.x > width ||
      gateway_position.y < 0.0 || gateway_position.y > height)
    throw ConfigError(
        "key 'gateway_x'/'gateway_y': gateway must lie inside the field");
  if (!(d_threshold_bs > 0.0))
    throw ConfigError("key 'd_threshold_bs': must be > 0");
  if (!(d_threshold_gw > 0.0))
    throw ConfigError("key 'd_threshold_gw': must be > 0");
}

std::vector<NodeRecord> deploy(int n, const FieldSpec& field,
                               double initial_energy, RandomStream& rng) {
  if (n < 1) throw ConfigError("key 'n': node count must be >= 1");
  field.validate();
  std::vector<NodeRecord> nodes;
  nodes.reserve(static_cast<std::size_t>(n));
  for (int id = 1; id <= n; ++id) {
    const Position pos{rng.uniform(0.0, field.width),
                       rng.uniform(0.0, field.height)};
    nodes.push_back({id, pos, initial_energy,
                     euclidean_distance(pos, field.bs_position),
                     euclidean_distance(pos, field.gateway_position)});
  }
  return nodes;
}

Region classify_region(const NodeRecord& node, const FieldSpec& field) {
  if (node.distance_to_bs < field.d_threshold_bs) return Region::NearBS;
  if (node.distance_to_gateway < field.d_threshold_gw)
    return Region::NearGateway;
  return node.position.x <= field.gateway_position.x ? Region::ClusteredA
                                                     : Region::ClusteredB;
}

std::vector<Region> assign_regions(const std::vector<NodeRecord>& nodes,
                                   const FieldSpec& field) {
  std::vector<Region> regions;
  regions.reserve(nodes.size());
  for (const auto& node : nodes) regions.push_back(classify_region(node, field));
  return regions;
}

NodeTable::NodeTable(std::vector<NodeRecord> nodes, const FieldSpec& field) {
  entries_.reserve(nodes.size());
  for (auto& node : nodes) {
    const int expected_id = static_cast<int>(entries_.size()) + 1;
    if (node.id != expected_id)
      throw ConfigError("node ids must be dense and ascending from 1");
    Entry entry;
    entry.region = classify_region(node, field);
    entry.alive = node.residual_energy > 0.0;
    entry.record = std::move(node);
    entries_.push_back(std::move(entry));
  }
}

const NodeTable::Entry& NodeTable::at(int id) const {
  if (id < 1 || static_cast<std::size_t>(id) > entries_.size())
    throw std::out_of_range("node table: no node with id " +
                            std::to_string(id));
  return entries_[static_cast<std::size_t>(id) - 1];
}

NodeTable::Entry& NodeTable::at(int id) {
  return const_cast<Entry&>(std::as_const(*this).at(id));
}

}  // namespace mgear
