#include "cnls/config.hpp"

#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>

using namespace cnls;

TEST_CASE("config parse, defaults, and round trip") {
  nlohmann::json j = nlohmann::json::parse(R"({
    "dimension": 1, "radius": 25.0, "count": 501,
    "a0": 1.0, "b0": 1.0, "beta0": 2.0, "kappa0": 0.4, "p": 4.0,
    "perturbation": {"kappa": {"type": "gaussian", "amplitude": -0.05, "width": 2.0}},
    "kappa_list": [0.1, 0.2], "parity": "full"
  })");
  RunConfig cfg = parse_config(j);
  CHECK(cfg.radius == 25.0);
  CHECK(cfg.couplings.beta0 == 2.0);
  CHECK(cfg.tol == 1e-6);  // default
  REQUIRE(cfg.pert_kappa.has_value());
  CHECK(cfg.pert_kappa->amplitude == -0.05);
  CHECK(cfg.kappa_list.size() == 2);

  // a manifest-style dump parses back to the same configuration
  nlohmann::json dumped = config_to_json(cfg);
  dumped["command"] = "ground";
  dumped["version"] = "x";
  RunConfig back = parse_config(dumped);
  CHECK(config_to_json(back) == config_to_json(cfg));
}

TEST_CASE("profile sampling") {
  RadialGrid g = make_grid(1, 10.0, 201);
  ProfileSpec s;
  s.type = "gaussian";
  s.amplitude = 0.5;
  s.width = 2.0;
  s.center = 1.0;
  Vector f = s.sample(g);
  CHECK(f[100] == doctest::Approx(0.5 * std::exp(-0.25)));  // x=0
  s.type = "nope";
  CHECK_THROWS_AS(s.sample(g), std::invalid_argument);

  const char* path = "test_profile_column.txt";
  {
    std::ofstream out(path);
    for (int i = 0; i < 201; ++i) out << 0.25 << "\n";
  }
  ProfileSpec file;
  file.type = "file";
  file.path = path;
  Vector fromfile = file.sample(g);
  CHECK(fromfile.size() == 201);
  CHECK(fromfile[7] == 0.25);
  CHECK_THROWS_AS(load_column(path, 100), std::invalid_argument);
  std::remove(path);
  CHECK_THROWS_AS(file.sample(g), std::invalid_argument);
}

TEST_CASE("invalid configs surface the violated condition") {
  nlohmann::json j;
  j["kappa0"] = 1.2;
  RunConfig cfg = parse_config(j);
  RadialGrid g = cfg.make_grid_from();
  CHECK_THROWS_WITH_AS(cfg.couplings.validate(g), doctest::Contains("(A0)"),
                       std::invalid_argument);
  j = nlohmann::json::object();
  j["parity"] = "sideways";
  CHECK_THROWS_AS(parse_config(j), std::invalid_argument);
}
