#include <doctest.h>

#include <random>
#include <sstream>

#include "lgdot/config.hpp"

using namespace lgdot;

TEST_CASE("empty document yields all defaults and echoes them") {
  std::ostringstream diag;
  const RunConfig cfg = parse_config("", &diag);
  CHECK(cfg.dot.s_fss == 3.0);
  CHECK(cfg.dot.gamma_x == 0.012);
  CHECK(cfg.dot.gate_width == 50.0);
  CHECK(cfg.t_max == 5000.0);
  CHECK(cfg.t_steps == 201);
  CHECK_FALSE(cfg.dot.eta_override.has_value());
  CHECK_FALSE(cfg.sweep_axis.has_value());
  CHECK(diag.str().find("default applied: dot.gamma_x = 0.012") != std::string::npos);
  CHECK(diag.str().find("default applied: run.t_max = 5000") != std::string::npos);
}

TEST_CASE("comments, blank lines and whitespace are tolerated") {
  const RunConfig cfg = parse_config(
      "# a comment\n"
      "\n"
      "  dot.s_fss = 2.5   # trailing comment\n"
      "\tdot.temperature=10\n");
  CHECK(cfg.dot.s_fss == 2.5);
  CHECK(cfg.dot.temperature == 10.0);
  CHECK(cfg.dot.level_energies[2] == 2.5);  // derived alongside s_fss
}

TEST_CASE("range errors name key, value and valid range") {
  try {
    parse_config("dot.s_fss = -1\n");
    FAIL("expected InvalidInput");
  } catch (const InvalidInput& e) {
    const std::string msg = e.what();
    CHECK(msg.find("dot.s_fss") != std::string::npos);
    CHECK(msg.find("-1") != std::string::npos);
    CHECK(msg.find(">= 0") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_config("dot.gamma_x = 0\n"), InvalidInput);
  CHECK_THROWS_AS(parse_config("dot.eta_override = 1.2\n"), InvalidInput);
  CHECK_THROWS_AS(parse_config("run.t_steps = 1\n"), InvalidInput);
  CHECK_THROWS_AS(parse_config("run.t_max = 0\n"), InvalidInput);
}

TEST_CASE("unknown keys, malformed lines and duplicates are rejected") {
  try {
    parse_config("dot.sfss = 1\n");
    FAIL("expected InvalidInput");
  } catch (const InvalidInput& e) {
    CHECK(std::string(e.what()).find("dot.sfss") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_config("just some words\n"), InvalidInput);
  CHECK_THROWS_AS(parse_config("dot.s_fss = notanumber\n"), InvalidInput);
  CHECK_THROWS_AS(parse_config("dot.s_fss = 1\ndot.s_fss = 2\n"), InvalidInput);
  CHECK_THROWS_AS(parse_config("run.formats = csv,png\n"), InvalidInput);
  CHECK_THROWS_AS(parse_config("run.sweep_axis = phase\n"), InvalidInput);
  CHECK_THROWS_AS(parse_config("run.sweep_axis = s_fss\n"), InvalidInput);  // no values
  CHECK_THROWS_AS(parse_config("run.sweep_values = 1,2\n"), InvalidInput);  // no axis
}

TEST_CASE("scientific notation and lists parse") {
  const RunConfig cfg = parse_config(
      "dot.gamma_x = 1.2e-2\n"
      "dot.level_energies = 0,0,3,0\n"
      "run.formats = svg,csv,csv\n"
      "run.sweep_axis = temperature\n"
      "run.sweep_values = 4,1e1,2E1\n");
  CHECK(cfg.dot.gamma_x == 0.012);
  CHECK(cfg.formats == std::vector<OutputFormat>{OutputFormat::csv, OutputFormat::svg});
  REQUIRE(cfg.sweep_axis.has_value());
  CHECK(*cfg.sweep_axis == SweepAxis::temperature);
  CHECK(cfg.sweep_values == std::vector<double>{4.0, 10.0, 20.0});
}

TEST_CASE("level_energies consistency with s_fss") {
  // Derive s_fss from the energies.
  const RunConfig derived = parse_config("dot.level_energies = 0,1,3.5,0\n");
  CHECK(derived.dot.s_fss == 2.5);

  // Consistent pair accepted.
  parse_config("dot.s_fss = 2\ndot.level_energies = 0,0,2,0\n");

  // Contradiction rejected.
  CHECK_THROWS_AS(parse_config("dot.s_fss = 2\ndot.level_energies = 0,0,3,0\n"),
                  InvalidInput);
  CHECK_THROWS_AS(parse_config("dot.level_energies = 0,0,3\n"), InvalidInput);
  CHECK_THROWS_AS(parse_config("dot.level_energies = 0,2,1,0\n"), InvalidInput);
}

TEST_CASE("config round-trips through serialize") {
  const RunConfig direct = parse_config(
      "dot.temperature = 5\n"
      "dot.s_fss = 3\n");
  const RunConfig again = parse_config(serialize_config(direct));
  CHECK(again == direct);
}

TEST_CASE("randomized configs round-trip exactly") {
  std::mt19937_64 rng(73);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  for (int i = 0; i < 50; ++i) {
    RunConfig cfg;
    cfg.dot.set_s_fss(10.0 * u01(rng));
    cfg.dot.gamma_x = 1e-4 + u01(rng) * 0.02;
    cfg.dot.gamma_dephase0 = u01(rng) * 1e-3;
    cfg.dot.gamma_phonon = u01(rng) * 1e-6;
    cfg.dot.temperature = 0.5 + 99.0 * u01(rng);
    cfg.dot.g_noise = 2.0 * u01(rng);
    cfg.dot.gate_width = 200.0 * u01(rng);
    if (i % 2) cfg.dot.eta_override = u01(rng);
    cfg.t_max = 100.0 + 9000.0 * u01(rng);
    cfg.t_steps = 2 + static_cast<long>(500 * u01(rng));
    cfg.output_dir = i % 3 ? "out" : "results/deep";
    cfg.formats = i % 2 ? std::vector<OutputFormat>{OutputFormat::json}
                        : std::vector<OutputFormat>{OutputFormat::csv,
                                                    OutputFormat::json,
                                                    OutputFormat::svg};
    if (i % 4 == 0) {
      cfg.sweep_axis = SweepAxis::gate_width;
      cfg.sweep_values = {u01(rng), 1.0 + u01(rng)};
    }
    cfg.validate();
    CHECK(parse_config(serialize_config(cfg)) == cfg);
  }
}

TEST_CASE("time_grid spans [0, t_max] inclusively") {
  RunConfig cfg;
  cfg.t_max = 100.0;
  cfg.t_steps = 5;
  const std::vector<double> grid = cfg.time_grid();
  REQUIRE(grid.size() == 5);
  CHECK(grid.front() == 0.0);
  CHECK(grid.back() == 100.0);
  CHECK(grid[2] == 50.0);
}
