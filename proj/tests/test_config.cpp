#include "mgear/config.hpp"

#include <string>

#include <doctest.h>

#include "mgear/errors.hpp"

using namespace mgear;

TEST_SUITE("config") {
  TEST_CASE("empty text yields the reference defaults") {
    const auto config = parse_config("");
    CHECK(config.protocol == Protocol::MGear);
    CHECK(config.node_count == 100);
    CHECK(config.field.width == 100.0);
    CHECK(config.field.height == 100.0);
    CHECK(config.field.bs_position.x == 50.0);
    CHECK(config.field.bs_position.y == 200.0);
    CHECK(config.field.gateway_position.x == 50.0);
    CHECK(config.field.gateway_position.y == 50.0);
    CHECK(config.field.d_threshold_bs == 25.0);
    CHECK(config.field.d_threshold_gw == 15.0);
    CHECK(config.radio.e_elec == 5e-9);
    CHECK(config.radio.e_fs == 10e-12);
    CHECK(config.radio.e_mp == 0.0013e-12);
    CHECK(config.radio.e_da == 5e-12);
    CHECK(config.radio.initial_energy == 0.5);
    CHECK(config.ch_fraction == 0.1);
    CHECK(config.packet_bits == 4000);
    CHECK(config.control_bits == 200);
    CHECK(config.amplifier_mode == AmplifierMode::TwoRegime);
    CHECK_FALSE(config.charge_control_packets);
    CHECK_FALSE(config.require_min_energy_for_ch);
    CHECK(config.max_rounds == 30000);
    CHECK(config.seed == 1);
  }

  TEST_CASE("single override leaves everything else at defaults") {
    const auto config = parse_config("e_elec = 50e-9\n");
    CHECK(config.radio.e_elec == 50e-9);
    CHECK(config.radio.e_fs == 10e-12);
    CHECK(config.node_count == 100);
  }

  TEST_CASE("comments and blank lines are ignored") {
    const auto config = parse_config(
        "# experiment\n"
        "\n"
        "p = 0.2   # denser head rotation\n"
        "seed = 77\n");
    CHECK(config.ch_fraction == 0.2);
    CHECK(config.seed == 77);
  }

  TEST_CASE("out-of-range value names the key") {
    CHECK_THROWS_WITH_AS(parse_config("p = 1.5\n"),
                         doctest::Contains("key 'p'"), ConfigError);
    CHECK_THROWS_AS(parse_config("n = 0\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("packet_bits = 0\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("d_threshold_bs = -2\n"), ConfigError);
  }

  TEST_CASE("unknown key names the key and line") {
    try {
      parse_config("n = 10\nbogus = 3\n");
      FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
      const std::string what = e.what();
      CHECK(what.find("line 2") != std::string::npos);
      CHECK(what.find("bogus") != std::string::npos);
    }
  }

  TEST_CASE("malformed syntax names the line") {
    try {
      parse_config("protocol = mgear\nnot a key value pair\n");
      FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
      CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_config("p = \n"), ConfigError);
    CHECK_THROWS_AS(parse_config("p = abc\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("charge_control_packets = yes\n"),
                    ConfigError);
  }

  TEST_CASE("enumerations parse strictly") {
    CHECK(parse_config("protocol = leach\n").protocol == Protocol::Leach);
    CHECK(parse_config("amplifier_mode = free_space_only\n").amplifier_mode ==
          AmplifierMode::FreeSpaceOnly);
    CHECK_THROWS_AS(parse_config("protocol = pegasus\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("amplifier_mode = quadratic\n"), ConfigError);
  }

  TEST_CASE("gateway must stay inside the field") {
    CHECK_THROWS_AS(parse_config("gateway_x = 150\n"), ConfigError);
    CHECK_NOTHROW(parse_config("field_width = 200\ngateway_x = 150\n"));
  }
}
