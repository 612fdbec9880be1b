#include "mgear/config.hpp"

#include <cmath>
#include <charconv>
#include <fstream>
#include <sstream>
#include <string>

#include "mgear/errors.hpp"

namespace mgear {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

[[noreturn]] void fail(int line, const std::string& message) {
  throw ConfigError("config line " + std::to_string(line) + ": " + message);
}

double parse_double(std::string_view key, std::string_view value, int line) {
  try {
    std::size_t used = 0;
    const double v = std::stod(std::string(value), &used);
    if (used != value.size() || !std::isfinite(v)) throw std::exception();
    return v;
  } catch (...) {
    fail(line, "invalid number for key '" + std::string(key) + "'");
  }
}

long parse_long(std::string_view key, std::string_view value, int line) {
  long v = 0;
  const auto* begin = value.data();
  const auto* end = value.data() + value.size();
  const auto result = std::from_chars(begin, end, v);
  if (result.ec != std::errc() || result.ptr != end)
    fail(line, "invalid integer for key '" + std::string(key) + "'");
  return v;
}

std::uint64_t parse_u64(std::string_view key, std::string_view value,
                        int line) {
  std::uint64_t v = 0;
  const auto* begin = value.data();
  const auto* end = value.data() + value.size();
  const auto result = std::from_chars(begin, end, v);
  if (result.ec != std::errc() || result.ptr != end)
    fail(line, "invalid unsigned integer for key '" + std::string(key) + "'");
  return v;
}

bool parse_bool(std::string_view key, std::string_view value, int line) {
  if (value == "true") return true;
  if (value == "false") return false;
  fail(line, "invalid boolean for key '" + std::string(key) +
                 "' (expected true or false)");
}

}  // namespace

const char* protocol_name(Protocol protocol) {
  return protocol == Protocol::MGear ? "mgear" : "leach";
}

void NetworkConfig::validate() const {
  if (node_count < 1) throw ConfigError("key 'n': must be >= 1");
  field.validate();
  radio.validate();
  if (!(ch_fraction > 0.0 && ch_fraction < 1.0))
    throw ConfigError("key 'p': must be in (0, 1)");
  if (packet_bits < 1) throw ConfigError("key 'packet_bits': must be >= 1");
  if (control_bits < 1) throw ConfigError("key 'control_bits': must be >= 1");
  if (ch_min_energy < 0.0)
    throw ConfigError("key 'ch_min_energy': must be >= 0");
  if (max_rounds < 0) throw ConfigError("key 'max_rounds': must be >= 0");
}

NetworkConfig parse_config(std::string_view text) {
  NetworkConfig config;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto eol = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string_view::npos)
      fail(line_no, "expected 'key = value'");
    const std::string_view key = trim(line.substr(0, eq));
    const std::string_view value = trim(line.substr(eq + 1));
    if (key.empty()) fail(line_no, "missing key before '='");
    if (value.empty())
      fail(line_no, "missing value for key '" + std::string(key) + "'");

    if (key == "protocol") {
      if (value == "mgear")
        config.protocol = Protocol::MGear;
      else if (value == "leach")
        config.protocol = Protocol::Leach;
      else
        fail(line_no, "key 'protocol': expected mgear or leach");
    } else if (key == "n") {
      config.node_count = static_cast<int>(parse_long(key, value, line_no));
    } else if (key == "field_width") {
      config.field.width = parse_double(key, value, line_no);
    } else if (key == "field_height") {
      config.field.height = parse_double(key, value, line_no);
    } else if (key == "bs_x") {
      config.field.bs_position.x = parse_double(key, value, line_no);
    } else if (key == "bs_y") {
      config.field.bs_position.y = parse_double(key, value, line_no);
    } else if (key == "gateway_x") {
      config.field.gateway_position.x = parse_double(key, value, line_no);
    } else if (key == "gateway_y") {
      config.field.gateway_position.y = parse_double(key, value, line_no);
    } else if (key == "d_threshold_bs") {
      config.field.d_threshold_bs = parse_double(key, value, line_no);
    } else if (key == "d_threshold_gw") {
      config.field.d_threshold_gw = parse_double(key, value, line_no);
    } else if (key == "e_elec") {
      config.radio.e_elec = parse_double(key, value, line_no);
    } else if (key == "e_fs") {
      config.radio.e_fs = parse_double(key, value, line_no);
    } else if (key == "e_mp") {
      config.radio.e_mp = parse_double(key, value, line_no);
    } else if (key == "e_da") {
      config.radio.e_da = parse_double(key, value, line_no);
    } else if (key == "initial_energy") {
      config.radio.initial_energy = parse_double(key, value, line_no);
    } else if (key == "p") {
      config.ch_fraction = parse_double(key, value, line_no);
    } else if (key == "packet_bits") {
      config.packet_bits = parse_long(key, value, line_no);
    } else if (key == "control_bits") {
      config.control_bits = parse_long(key, value, line_no);
    } else if (key == "amplifier_mode") {
      if (value == "two_regime")
        config.amplifier_mode = AmplifierMode::TwoRegime;
      else if (value == "free_space_only")
        config.amplifier_mode = AmplifierMode::FreeSpaceOnly;
      else
        fail(line_no,
             "key 'amplifier_mode': expected two_regime or free_space_only");
    } else if (key == "charge_control_packets") {
      config.charge_control_packets = parse_bool(key, value, line_no);
    } else if (key == "require_min_energy_for_ch") {
      config.require_min_energy_for_ch = parse_bool(key, value, line_no);
    } else if (key == "ch_min_energy") {
      config.ch_min_energy = parse_double(key, value, line_no);
    } else if (key == "max_rounds") {
      config.max_rounds = static_cast<int>(parse_long(key, value, line_no));
    } else if (key == "seed") {
      config.seed = parse_u64(key, value, line_no);
    } else {
      fail(line_no, "unknown key '" + std::string(key) + "'");
    }
  }
  config.validate();
  return config;
}

NetworkConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read config file: " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

}  // namespace mgear
