#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "opinion/config.hpp"

using namespace opinion;
using json = nlohmann::ordered_json;

namespace {

std::string error_key(const json& doc) {
  try {
    parse_config(doc);
  } catch (const ConfigError& e) {
    return e.key();
  }
  return "<accepted>";
}

}  // namespace

TEST_CASE("an empty document yields the baseline calibration") {
  const Config c = parse_config(json::object());
  const ModelParams& p = c.params;
  CHECK(p.n_a == 1);
  CHECK(p.n_b == 999);
  CHECK(p.interest_a == 1.0);
  CHECK(p.interest_b == 0.0);
  CHECK(p.init_belief_mean == 0.5);
  CHECK(p.init_belief_sd == 0.0);
  CHECK(p.gamma_a == 1.0);
  CHECK(p.network.kind == NetworkKind::random);
  CHECK(p.network.p == 0.025);
  CHECK(p.ticks == 5000);
  CHECK(c.window() == TickWindow{4501, 5000});
  CHECK(c.params == ModelParams{});
}

TEST_CASE("range and schema errors name the key") {
  CHECK(error_key({{"mu", 1.5}}) == "mu");
  CHECK(error_key({{"gamma_b", -0.1}}) == "gamma_b");
  CHECK(error_key({{"mu", "fast"}}) == "mu");
  CHECK(error_key({{"colour", 1}}) == "colour");
  CHECK(error_key({{"n_b", 0}}) == "n_b");
  CHECK(error_key({{"n_a", -1}}) == "n_a");
  CHECK(error_key({{"strategy", "viral"}}) == "strategy");
  CHECK(error_key({{"network", {{"kind", "scale_free"}}}}) == "network.kind");
  CHECK(error_key({{"network", {{"kind", "random"}, {"k", 5}}}}) == "network.k");
  CHECK(error_key({{"network", {{"kind", "watts_strogatz"}, {"k", 5}, {"rewire", 0.1}}}}) ==
        "network.rewire");
  CHECK(error_key({{"n_b", 9}, {"pi_max", 1}, {"network", {{"kind", "watts_strogatz"}, {"k", 5}}}}) ==
        "network.k");
  CHECK(error_key({{"cost", {{"a", 1.0}, {"b", 1.0}}}}) == "cost.a");
  CHECK(error_key({{"cost", {{"b", 0.0}}}}) == "cost.b");
  CHECK(error_key({{"interest_a", 0.0}}) == "interest_a");
  CHECK(error_key({{"steady_window", {4000, 6000}}}) == "steady_window");
  CHECK(error_key({{"snapshot_ticks", {10, 9000}}}) == "snapshot_ticks[1]");
  CHECK(error_key({{"axes", {{"mu", {0.1, "x"}}}}}) == "axes.mu[1]");
  CHECK(error_key({{"axes", {{"charisma", {1}}}}}) == "axes.charisma");
  CHECK(error_key({{"seeds", 0}}) == "seeds");
}

TEST_CASE("equal interests are fine without signals") {
  CHECK(error_key({{"interest_a", 0.0}, {"gamma_a", 0.0}, {"gamma_b", 0.0}}) == "<accepted>");
}

TEST_CASE("watts-strogatz network spec") {
  const Config c = parse_config({{"network", {{"kind", "watts_strogatz"}, {"k", 5}, {"beta", 0.1}}}});
  CHECK(c.params.network.kind == NetworkKind::watts_strogatz);
  CHECK(c.params.network.k == 5);
  CHECK(c.params.network.beta == 0.1);
  const Config d = parse_config({{"network", {{"kind", "watts_strogatz"}}}});
  CHECK(d.params.network.k == 5);
  CHECK(d.params.network.beta == 0.1);
}

TEST_CASE("sweep axes keep declaration order") {
  const Config c = parse_config(json::parse(R"({"axes": {"pi_max": [0, 250, 500], "mu": [0.025, 1],
                                                         "strategy": ["random", "efficient"]}})"));
  REQUIRE(c.axes.size() == 3);
  CHECK(c.axes[0].name == "pi_max");
  CHECK(c.axes[1].name == "mu");
  CHECK(std::get<std::string>(c.axes[2].values[1]) == "efficient");
}

TEST_CASE("config_to_json round-trips") {
  Config c = parse_config(json::parse(R"({
    "mu": 0.3, "gamma_b": 0.001, "pi_max": 123.5, "strategy": "influencer",
    "network": {"kind": "watts_strogatz", "k": 4, "beta": 0.2},
    "ticks": 800, "cost": {"a": 2.0, "b": 0.5}, "seed": 99, "seeds": 3,
    "steady_window": [701, 800], "snapshot_ticks": [0, 400], "output_dir": "x",
    "parallel": 2, "max_runs": 50, "dump_network": true, "axes": {"mu": [0.1, 0.2]}
  })"));
  CHECK(parse_config(config_to_json(c)) == c);
  CHECK(parse_config(config_to_json(Config{})) == Config{});
}

TEST_CASE("meta documents are accepted") {
  Config c;
  c.params.mu = 0.7;
  c.seed = 12;
  const json meta = {{"version", "x"}, {"seed", 12}, {"config", config_to_json(c)}};
  CHECK(parse_config(meta) == c);
}

TEST_CASE("load_config reports file problems") {
  const auto dir = std::filesystem::temp_directory_path() / "opinion_test_config";
  std::filesystem::create_directories(dir);
  CHECK_THROWS_AS(load_config(dir / "missing.json"), ConfigError);
  {
    std::ofstream(dir / "broken.json") << "{\"mu\": ";
  }
  CHECK_THROWS_AS(load_config(dir / "broken.json"), ConfigError);
  {
    std::ofstream(dir / "ok.json") << R"({"mu": 0.5})";
  }
  CHECK(load_config(dir / "ok.json").params.mu == 0.5);
  std::filesystem::remove_all(dir);
}
