#include "mgear/campaign.hpp"

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include <doctest.h>

#include "mgear/errors.hpp"

using namespace mgear;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "mgear_tests" / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

CampaignSpec small_spec(const fs::path& out) {
  CampaignSpec spec;
  spec.base.node_count = 20;
  spec.base.radio.initial_energy = 0.01;
  spec.base.max_rounds = 400;
  spec.seeds = {1, 2, 3};
  spec.out_dir = out;
  return spec;
}

}  // namespace

TEST_SUITE("campaign") {
  TEST_CASE("per-round series has the pinned schema and row count") {
    const auto dir = fresh_dir("schema");
    CampaignSpec spec = small_spec(dir);
    spec.protocols = {Protocol::MGear};
    spec.seeds = {1};
    spec.base.max_rounds = 10;
    spec.base.radio.initial_energy = 0.5;  // nobody dies in 10 rounds
    run_campaign(spec);

    const auto text = slurp(dir / "mgear_s1_rounds.csv");
    std::istringstream lines(text);
    std::string line;
    REQUIRE(std::getline(lines, line));
    CHECK(line == "round,alive,residual_j,pkts_bs,pkts_src,cum_pkts_bs,cum_pkts_src");
    int rows = 0;
    while (std::getline(lines, line)) ++rows;
    CHECK(rows == 10);
  }

  TEST_CASE("file count contract") {
    const auto dir = fresh_dir("count");
    const CampaignSpec spec = small_spec(dir);
    const auto result = run_campaign(spec);
    // 2 protocols x 3 series + 2 summaries + comparison
    CHECK(result.files_written.size() == 9);
    std::set<std::string> names;
    for (const auto& path : result.files_written)
      names.insert(path.filename().string());
    CHECK(names.count("mgear_s2_rounds.csv") == 1);
    CHECK(names.count("leach_summary.csv") == 1);
    CHECK(names.count("comparison.csv") == 1);
  }

  TEST_CASE("summary schema") {
    const auto dir = fresh_dir("summary");
    CampaignSpec spec = small_spec(dir);
    spec.protocols = {Protocol::Leach};
    run_campaign(spec);
    const auto text = slurp(dir / "leach_summary.csv");
    CHECK(text.rfind(
              "seed,first_death,half_death,last_death,total_src_pkts,"
              "total_energy_j\n",
              0) == 0);
    // one row per seed
    CHECK(std::count(text.begin(), text.end(), '\n') == 4);
  }

  TEST_CASE("reruns are byte-identical") {
    const auto dir_a = fresh_dir("rerun_a");
    const auto dir_b = fresh_dir("rerun_b");
    const auto res_a = run_campaign(small_spec(dir_a));
    const auto res_b = run_campaign(small_spec(dir_b));
    REQUIRE(res_a.files_written.size() == res_b.files_written.size());
    for (std::size_t i = 0; i < res_a.files_written.size(); ++i) {
      CHECK(res_a.files_written[i].filename() ==
            res_b.files_written[i].filename());
      CHECK(slurp(res_a.files_written[i]) == slurp(res_b.files_written[i]));
    }
  }

  TEST_CASE("campaign matches independent single-seed runs") {
    const auto dir = fresh_dir("merge");
    CampaignSpec spec = small_spec(dir);
    spec.protocols = {Protocol::MGear};
    const auto result = run_campaign(spec);
    for (const auto& run : result.runs.at(Protocol::MGear)) {
      NetworkConfig config = spec.base;
      config.protocol = Protocol::MGear;
      config.seed = run.seed;
      const auto solo = run_simulation(config);
      CHECK(solo.series.size() == run.result.series.size());
      CHECK(solo.summary.total_source_packets ==
            run.result.summary.total_source_packets);
      CHECK(solo.total_energy_consumed == run.result.total_energy_consumed);
    }
  }

  TEST_CASE("golden series file stays stable") {
    const auto dir = fresh_dir("golden");
    CampaignSpec spec;
    spec.base.node_count = 25;
    spec.base.radio.initial_energy = 0.005;
    spec.base.max_rounds = 60;
    spec.base.seed = 7;
    spec.protocols = {Protocol::MGear};
    spec.seeds = {7};
    spec.out_dir = dir;
    run_campaign(spec);
    const auto got = slurp(dir / "mgear_s7_rounds.csv");
    const auto want = slurp(fs::path(MGEAR_TESTS_DIR) / "golden" /
                            "mgear_n25_seed7_rounds.csv");
    CHECK(got == want);
  }

  TEST_CASE("invalid specs are rejected before any run") {
    const auto dir = fresh_dir("invalid");
    CampaignSpec spec = small_spec(dir);
    SUBCASE("empty seeds") {
      spec.seeds.clear();
      CHECK_THROWS_AS(run_campaign(spec), ConfigError);
    }
    SUBCASE("duplicate seeds") {
      spec.seeds = {1, 2, 1};
      CHECK_THROWS_AS(run_campaign(spec), ConfigError);
    }
    SUBCASE("unwritable output directory") {
      spec.out_dir = "/proc/mgear_forbidden";
      CHECK_THROWS_AS(run_campaign(spec), IoError);
    }
  }
}
