"""Smoke tests for the python bindings."""

import pytest

import mgearsim as mg


def test_version():
    assert mg.__version__


def test_energy_model_defaults():
    params = mg.RadioParams()
    assert params.e_elec == pytest.approx(5e-9)
    assert params.initial_energy == 0.5
    assert mg.rx_energy(params, 4000) == pytest.approx(2e-5, rel=1e-12)
    assert mg.tx_energy(params, 4000, 50) == pytest.approx(1.2e-4, rel=1e-12)
    assert mg.tx_energy(params, 4000, 100) == pytest.approx(5.4e-4, rel=1e-12)
    assert mg.aggregation_energy(params, 4000, 10) == pytest.approx(2e-7, rel=1e-12)
    assert mg.crossover_distance(params) == pytest.approx(87.7058, rel=1e-5)
    with pytest.raises(ValueError):
        mg.tx_energy(params, -1, 10)


def test_config_parse_and_validation():
    config = mg.parse_config("p = 0.2\nseed = 9\nprotocol = leach\n")
    assert config.ch_fraction == 0.2
    assert config.seed == 9
    assert config.protocol == mg.Protocol.LEACH
    with pytest.raises(RuntimeError):
        mg.parse_config("p = 1.5\n")
    with pytest.raises(RuntimeError):
        mg.parse_config("no_such_key = 3\n")


def test_deployment_is_seeded():
    field = mg.FieldSpec()
    a = mg.deploy(20, field, 0.5, seed=4)
    b = mg.deploy(20, field, 0.5, seed=4)
    c = mg.deploy(20, field, 0.5, seed=5)
    assert [n.position.x for n in a] == [n.position.x for n in b]
    assert [n.position.x for n in a] != [n.position.x for n in c]
    assert all(0 <= n.position.x <= field.width for n in a)


def test_threshold_formula():
    assert mg.ch_threshold(mg.ElectionParams(0.1, 0), True) == pytest.approx(0.1)
    assert mg.ch_threshold(mg.ElectionParams(0.1, 9), True) == 1.0
    assert mg.ch_threshold(mg.ElectionParams(0.1, 3), False) == 0.0
    assert mg.epoch_length(0.1) == 10


def test_short_run_is_deterministic():
    config = mg.NetworkConfig()
    config.max_rounds = 200
    a = mg.run_simulation(config)
    b = mg.run_simulation(config)
    assert len(a.series) == 200
    assert [r.alive_count for r in a.series] == [r.alive_count for r in b.series]
    assert a.series[-1].total_residual_energy == b.series[-1].total_residual_energy
    assert a.series[-1].cum_source_packets_delivered == 200 * 100


def test_mgear_spends_less_than_leach():
    totals = {}
    for protocol in (mg.Protocol.MGEAR, mg.Protocol.LEACH):
        config = mg.NetworkConfig()
        config.protocol = protocol
        config.max_rounds = 300
        totals[protocol] = mg.run_simulation(config).total_energy_consumed
    assert totals[mg.Protocol.MGEAR] < totals[mg.Protocol.LEACH]


def test_simulation_stepping_and_state():
    config = mg.NetworkConfig()
    config.node_count = 30
    sim = mg.Simulation(config)
    outcome = sim.run_round()
    assert sim.round == 1
    assert outcome.source_packets_delivered == 30
    state = sim.node_state(1)
    assert state.alive
    heads = {c.head for c in outcome.clusters}
    assert all(sim.node_state(h).role == mg.Role.CLUSTER_HEAD for h in heads)
    with pytest.raises(IndexError):
        sim.node_state(31)


def test_campaign_writes_files(tmp_path):
    spec = mg.CampaignSpec()
    spec.base.node_count = 15
    spec.base.radio.initial_energy = 0.005
    spec.base.max_rounds = 200
    spec.seeds = [1, 2]
    spec.out_dir = str(tmp_path)
    result = mg.run_campaign(spec)
    names = sorted(p.name for p in result.files_written)
    assert "mgear_s1_rounds.csv" in names
    assert "comparison.csv" in names
    assert (tmp_path / "leach_summary.csv").exists()
    header = (tmp_path / "mgear_s1_rounds.csv").read_text().splitlines()[0]
    assert header == "round,alive,residual_j,pkts_bs,pkts_src,cum_pkts_bs,cum_pkts_src"
