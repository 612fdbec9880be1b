#pragma once

namespace mgear {

// Amplifier term of the transmit cost. TwoRegime switches from the d^2
// free-space coefficient to the d^4 multipath coefficient at the crossover
// distance; FreeSpaceOnly applies the d^2 coefficient at every distance.
enum class AmplifierMode { TwoRegime, FreeSpaceOnly };

// First-order radio model constants. All energies in joules.
struct RadioParams {
  double e_elec = 5e-9;         // J/bit, transmitter/receiver electronics
  double e_fs = 10e-12;         // J/bit/m^2, free-space amplifier
  double e_mp = 0.0013e-12;     // J/bit/m^4, multipath amplifier
  double e_da = 5e-12;          // J/bit, data aggregation
  double initial_energy = 0.5;  // J, per-node starting battery

  // Throws ConfigError. Radio coefficients must be strictly positive;
  // initial_energy may be zero (an immediately exhausted network is a legal
  // degenerate experiment).
  void validate() const;
};

// Distance at which the free-space and multipath amplifier costs coincide:
// sqrt(e_fs / e_mp).
double crossover_distance(const RadioParams& params);

// Energy to transmit `bits` over `distance` meters.
// Negative bits or distance -> std::domain_error.
double tx_energy(const RadioParams& params, double bits, double distance,
                 AmplifierMode mode = AmplifierMode::TwoRegime);

// Energy to receive `bits`. Negative bits -> std::domain_error.
double rx_energy(const RadioParams& params, double bits);

// Energy to fuse `fused_signals` incoming packets of `bits` each into one
// outgoing packet of the same size. Negative inputs -> std::domain_error.
double aggregation_energy(const RadioParams& params, double bits,
                          int fused_signals);

}  // namespace mgear
