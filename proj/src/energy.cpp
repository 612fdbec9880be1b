#include "mgear/energy.hpp"

#include <cmath>
#include <stdexcept>

#include "mgear/errors.hpp"

namespace mgear {

void RadioParams::validate() const {
  if (!(e_elec > 0.0)) throw ConfigError("key 'e_elec': must be > 0");
  if (!(e_fs > 0.0)) throw ConfigError("key 'e_fs': must be > 0");
  if (!(e_mp > 0.0)) throw ConfigError("key 'e_mp': must be > 0");
  if (!(e_da > 0.0)) throw ConfigError("key 'e_da': must be > 0");
  if (!(initial_energy >= 0.0))
    throw ConfigError("key 'initial_energy': must be >= 0");
  if (!std::isfinite(crossover_distance(*this)))
    throw ConfigError("radio params: crossover distance is not finite");
}

double crossover_distance(const RadioParams& params) {
  return std::sqrt(params.e_fs / params.e_mp);
}

double tx_energy(const RadioParams& params, double bits, double distance,
                 AmplifierMode mode) {
  if (bits < 0.0) throw std::domain_error("tx_energy: negative bit count");
  if (distance < 0.0) throw std::domain_error("tx_energy: negative distance");
  const bool free_space = mode == AmplifierMode::FreeSpaceOnly ||
                          distance < crossover_distance(params);
  const double amp = free_space
                         ? params.e_fs * bits * distance * distance
                         : params.e_mp * bits * distance * distance *
                               distance * distance;
  return params.e_elec * bits + amp;
}

double rx_energy(const RadioParams& params, double bits) {
  if (bits < 0.0) throw std::domain_error("rx_energy: negative bit count");
  return params.e_elec * bits;
}

double aggregation_energy(const RadioParams& params, double bits,
                          int fused_signals) {
  if (bits < 0.0)
    throw std::domain_error("aggregation_energy: negative bit count");
  if (fused_signals < 0)
    throw std::domain_error("aggregation_energy: negative signal count");
  return params.e_da * bits * static_cast<double>(fused_signals);
}

}  // namespace mgear
