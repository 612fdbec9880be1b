#pragma once

#include <cstdint>
#include <filesystem>
#include <string_view>

#include "mgear/energy.hpp"
#include "mgear/topology.hpp"

namespace mgear {

enum class Protocol { MGear, Leach };

const char* protocol_name(Protocol protocol);

// Full definition of one experiment. Defaults reproduce the reference setup:
// 100 nodes on a 100x100 m field, BS far beyond the top edge, gateway at the
// centre, 4000-bit packets, 0.5 J batteries.
struct NetworkConfig {
  Protocol protocol = Protocol::MGear;
  int node_count = 100;
  FieldSpec field;
  RadioParams radio;
  AmplifierMode amplifier_mode = AmplifierMode::TwoRegime;
  double ch_fraction = 0.1;  // p, desired fraction of cluster heads per round
  long packet_bits = 4000;
  long control_bits = 200;
  bool charge_control_packets = false;
  bool require_min_energy_for_ch = false;
  double ch_min_energy = 0.0;  // candidacy floor, joules
  int max_rounds = 30000;
  std::uint64_t seed = 1;

  // Throws ConfigError naming the offending key.
  void validate() const;
};

// Parses flat `key = value` text with `#` comments. Unknown keys, malformed
// lines and out-of-range values raise ConfigError naming the key and line.
// Empty text yields the default config.
NetworkConfig parse_config(std::string_view text);

// parse_config over a file's contents. Unreadable file -> IoError.
NetworkConfig load_config(const std::filesystem::path& path);

}  // namespace mgear
