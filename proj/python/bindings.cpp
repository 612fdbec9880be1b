#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "mgear/campaign.hpp"
#include "mgear/config.hpp"
#include "mgear/energy.hpp"
#include "mgear/metrics.hpp"
#include "mgear/protocol.hpp"
#include "mgear/rng.hpp"
#include "mgear/topology.hpp"

namespace py = pybind11;
using namespace mgear;

PYBIND11_MODULE(_mgearsim, m) {
  m.doc() =
      "Discrete-round simulator of gateway-based (M-GEAR) and LEACH "
      "clustered routing over the first-order radio energy model.";

  // ---- energy ----
  py::enum_<AmplifierMode>(m, "AmplifierMode")
      .value("TWO_REGIME", AmplifierMode::TwoRegime)
      .value("FREE_SPACE_ONLY", AmplifierMode::FreeSpaceOnly);

  py::class_<RadioParams>(m, "RadioParams")
      .def(py::init<>())
      .def_readwrite("e_elec", &RadioParams::e_elec)
      .def_readwrite("e_fs", &RadioParams::e_fs)
      .def_readwrite("e_mp", &RadioParams::e_mp)
      .def_readwrite("e_da", &RadioParams::e_da)
      .def_readwrite("initial_energy", &RadioParams::initial_energy)
      .def("validate", &RadioParams::validate);

  m.def("crossover_distance", &crossover_distance, py::arg("params"));
  m.def("tx_energy", &tx_energy, py::arg("params"), py::arg("bits"),
        py::arg("distance"), py::arg("mode") = AmplifierMode::TwoRegime);
  m.def("rx_energy", &rx_energy, py::arg("params"), py::arg("bits"));
  m.def("aggregation_energy", &aggregation_energy, py::arg("params"),
        py::arg("bits"), py::arg("fused_signals"));

  // ---- topology ----
  py::class_<Position>(m, "Position")
      .def(py::init<>())
      .def(py::init([](double x, double y) { return Position{x, y}; }),
           py::arg("x"), py::arg("y"))
      .def_readwrite("x", &Position::x)
      .def_readwrite("y", &Position::y);

  m.def("euclidean_distance", &euclidean_distance, py::arg("a"), py::arg("b"));

  py::enum_<Region>(m, "Region")
      .value("NEAR_BS", Region::NearBS)
      .value("NEAR_GATEWAY", Region::NearGateway)
      .value("CLUSTERED_A", Region::ClusteredA)
      .value("CLUSTERED_B", Region::ClusteredB);

  py::class_<FieldSpec>(m, "FieldSpec")
      .def(py::init<>())
      .def_readwrite("width", &FieldSpec::width)
      .def_readwrite("height", &FieldSpec::height)
      .def_readwrite("bs_position", &FieldSpec::bs_position)
      .def_readwrite("gateway_position", &FieldSpec::gateway_position)
      .def_readwrite("d_threshold_bs", &FieldSpec::d_threshold_bs)
      .def_readwrite("d_threshold_gw", &FieldSpec::d_threshold_gw)
      .def("validate", &FieldSpec::validate);

  py::class_<NodeRecord>(m, "NodeRecord")
      .def(py::init<>())
      .def_readwrite("id", &NodeRecord::id)
      .def_readwrite("position", &NodeRecord::position)
      .def_readwrite("residual_energy", &NodeRecord::residual_energy)
      .def_readwrite("distance_to_bs", &NodeRecord::distance_to_bs)
      .def_readwrite("distance_to_gateway", &NodeRecord::distance_to_gateway);

  m.def(
      "deploy",
      [](int n, const FieldSpec& field, double initial_energy,
         std::uint64_t seed) {
        RandomStream rng(seed);
        return deploy(n, field, initial_energy, rng);
      },
      py::arg("n"), py::arg("field"), py::arg("initial_energy"),
      py::arg("seed"));
  m.def("classify_region", &classify_region, py::arg("node"), py::arg("field"));

  // ---- protocol ----
  py::enum_<Protocol>(m, "Protocol")
      .value("MGEAR", Protocol::MGear)
      .value("LEACH", Protocol::Leach);

  py::class_<NetworkConfig>(m, "NetworkConfig")
      .def(py::init<>())
      .def_readwrite("protocol", &NetworkConfig::protocol)
      .def_readwrite("node_count", &NetworkConfig::node_count)
      .def_readwrite("field", &NetworkConfig::field)
      .def_readwrite("radio", &NetworkConfig::radio)
      .def_readwrite("amplifier_mode", &NetworkConfig::amplifier_mode)
      .def_readwrite("ch_fraction", &NetworkConfig::ch_fraction)
      .def_readwrite("packet_bits", &NetworkConfig::packet_bits)
      .def_readwrite("control_bits", &NetworkConfig::control_bits)
      .def_readwrite("charge_control_packets",
                     &NetworkConfig::charge_control_packets)
      .def_readwrite("require_min_energy_for_ch",
                     &NetworkConfig::require_min_energy_for_ch)
      .def_readwrite("ch_min_energy", &NetworkConfig::ch_min_energy)
      .def_readwrite("max_rounds", &NetworkConfig::max_rounds)
      .def_readwrite("seed", &NetworkConfig::seed)
      .def("validate", &NetworkConfig::validate);

  m.def("parse_config", [](const std::string& text) { return parse_config(text); },
        py::arg("text"));
  m.def("load_config", &load_config, py::arg("path"));

  py::class_<ElectionParams>(m, "ElectionParams")
      .def(py::init([](double p, int round) {
             return ElectionParams{p, round};
           }),
           py::arg("p"), py::arg("round"))
      .def_readwrite("p", &ElectionParams::p)
      .def_readwrite("round", &ElectionParams::round);

  m.def("epoch_length", &epoch_length, py::arg("p"));
  m.def("ch_threshold", &ch_threshold, py::arg("params"), py::arg("eligible"));

  py::enum_<Role>(m, "Role")
      .value("CLUSTER_HEAD", Role::ClusterHead)
      .value("CLUSTER_MEMBER", Role::ClusterMember)
      .value("DIRECT_TO_BS", Role::DirectToBS)
      .value("DIRECT_TO_GATEWAY", Role::DirectToGateway)
      .value("IDLE_DEAD", Role::IdleDead);

  py::class_<Cluster>(m, "Cluster")
      .def(py::init<>())
      .def_readwrite("head", &Cluster::head)
      .def_readwrite("members", &Cluster::members);

  py::class_<RoundOutcome>(m, "RoundOutcome")
      .def_readonly("round", &RoundOutcome::round)
      .def_readonly("packets_received_at_bs",
                    &RoundOutcome::packets_received_at_bs)
      .def_readonly("source_packets_delivered",
                    &RoundOutcome::source_packets_delivered)
      .def_readonly("energy_consumed", &RoundOutcome::energy_consumed)
      .def_readonly("deaths", &RoundOutcome::deaths)
      .def_readonly("clusters", &RoundOutcome::clusters);

  py::class_<NodeState>(m, "NodeState")
      .def_readonly("record", &NodeState::record)
      .def_readonly("region", &NodeState::region)
      .def_readonly("alive", &NodeState::alive)
      .def_readonly("eligible_for_ch", &NodeState::eligible_for_ch)
      .def_readonly("role", &NodeState::role);

  py::class_<Simulation>(m, "Simulation")
      .def(py::init<const NetworkConfig&>(), py::arg("config"))
      .def(py::init<const NetworkConfig&, std::vector<NodeRecord>>(),
           py::arg("config"), py::arg("nodes"))
      .def("run_round", &Simulation::run_round)
      .def_property_readonly("round", &Simulation::round)
      .def_property_readonly("alive_count", &Simulation::alive_count)
      .def_property_readonly("all_dead", &Simulation::all_dead)
      .def("total_residual_energy", &Simulation::total_residual_energy)
      .def("total_residual_energy_unclamped",
           &Simulation::total_residual_energy_unclamped)
      .def("initial_total_energy", &Simulation::initial_total_energy)
      .def("cumulative_energy_consumed",
           &Simulation::cumulative_energy_consumed)
      .def("node_state", &Simulation::node_state, py::arg("id"));

  // ---- metrics ----
  py::class_<RoundRecord>(m, "RoundRecord")
      .def_readonly("round", &RoundRecord::round)
      .def_readonly("alive_count", &RoundRecord::alive_count)
      .def_readonly("total_residual_energy", &RoundRecord::total_residual_energy)
      .def_readonly("packets_received_at_bs",
                    &RoundRecord::packets_received_at_bs)
      .def_readonly("source_packets_delivered",
                    &RoundRecord::source_packets_delivered)
      .def_readonly("cum_packets_received_at_bs",
                    &RoundRecord::cum_packets_received_at_bs)
      .def_readonly("cum_source_packets_delivered",
                    &RoundRecord::cum_source_packets_delivered);

  py::class_<LifetimeSummary>(m, "LifetimeSummary")
      .def_readonly("first_node_death_round",
                    &LifetimeSummary::first_node_death_round)
      .def_readonly("half_nodes_death_round",
                    &LifetimeSummary::half_nodes_death_round)
      .def_readonly("last_node_death_round",
                    &LifetimeSummary::last_node_death_round)
      .def_readonly("total_source_packets",
                    &LifetimeSummary::total_source_packets);

  m.def(
      "lifetime_summary",
      [](const std::vector<RoundRecord>& series, int node_count) {
        return lifetime_summary(series, node_count);
      },
      py::arg("series"), py::arg("node_count"));

  py::class_<IntervalEstimate>(m, "IntervalEstimate")
      .def_readonly("mean", &IntervalEstimate::mean)
      .def_readonly("half_width", &IntervalEstimate::half_width)
      .def_readonly("confidence_level", &IntervalEstimate::confidence_level)
      .def_readonly("sample_count", &IntervalEstimate::sample_count)
      .def("lower", &IntervalEstimate::lower)
      .def("upper", &IntervalEstimate::upper)
      .def("overlaps", &IntervalEstimate::overlaps);

  m.def(
      "confidence_interval",
      [](const std::vector<double>& samples, double level) {
        return confidence_interval(samples, level);
      },
      py::arg("samples"), py::arg("level"));

  py::class_<SimulationResult>(m, "SimulationResult")
      .def_readonly("series", &SimulationResult::series)
      .def_readonly("summary", &SimulationResult::summary)
      .def_readonly("initial_total_energy",
                    &SimulationResult::initial_total_energy)
      .def_readonly("setup_energy_consumed",
                    &SimulationResult::setup_energy_consumed)
      .def_readonly("total_energy_consumed",
                    &SimulationResult::total_energy_consumed)
      .def_readonly("final_residual_energy",
                    &SimulationResult::final_residual_energy)
      .def_readonly("final_residual_energy_unclamped",
                    &SimulationResult::final_residual_energy_unclamped);

  m.def("run_simulation", &run_simulation, py::arg("config"),
        py::call_guard<py::gil_scoped_release>());

  // ---- campaign ----
  py::class_<CampaignSpec>(m, "CampaignSpec")
      .def(py::init<>())
      .def_readwrite("base", &CampaignSpec::base)
      .def_readwrite("protocols", &CampaignSpec::protocols)
      .def_readwrite("seeds", &CampaignSpec::seeds)
      .def_readwrite("out_dir", &CampaignSpec::out_dir)
      .def_readwrite("confidence_level", &CampaignSpec::confidence_level);

  py::class_<CampaignRun>(m, "CampaignRun")
      .def_readonly("seed", &CampaignRun::seed)
      .def_readonly("result", &CampaignRun::result);

  py::class_<CampaignResult>(m, "CampaignResult")
      .def_readonly("runs", &CampaignResult::runs)
      .def_readonly("files_written", &CampaignResult::files_written);

  m.def("run_campaign", &run_campaign, py::arg("spec"),
        py::call_guard<py::gil_scoped_release>());

#ifdef MGEAR_VERSION
  m.attr("__version__") = MGEAR_VERSION;
#else
  m.attr("__version__") = "dev";
#endif
}
