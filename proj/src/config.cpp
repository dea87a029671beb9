#include "cnls/config.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

namespace cnls {

using nlohmann::json;

Vector ProfileSpec::sample(const RadialGrid& grid) const {
  if (type == "file") return load_column(path, grid.count);
  if (type != "gaussian")
    throw std::invalid_argument("perturbation profile type must be gaussian or file");
  if (!(width > 0.0)) throw std::invalid_argument("gaussian profile width must be positive");
  Vector out(grid.count);
  for (Index i = 0; i < grid.count; ++i) {
    const double t = (grid.nodes[i] - center) / width;
    out[i] = amplitude * std::exp(-t * t);
  }
  return out;
}

PerturbationProfile RunConfig::make_perturbation(const RadialGrid& grid) const {
  PerturbationProfile p;
  if (pert_a) p.a = pert_a->sample(grid);
  if (pert_b) p.b = pert_b->sample(grid);
  if (pert_beta) p.beta = pert_beta->sample(grid);
  if (pert_kappa) p.kappa = pert_kappa->sample(grid);
  p.validate(grid, couplings);
  return p;
}

namespace {

ProfileSpec parse_profile(const json& j) {
  ProfileSpec s;
  s.type = j.value("type", "gaussian");
  s.amplitude = j.value("amplitude", 0.0);
  s.width = j.value("width", 1.0);
  s.center = j.value("center", 0.0);
  s.path = j.value("path", "");
  return s;
}

json profile_to_json(const ProfileSpec& s) {
  json j;
  j["type"] = s.type;
  if (s.type == "file") {
    j["path"] = s.path;
  } else {
    j["amplitude"] = s.amplitude;
    j["width"] = s.width;
    j["center"] = s.center;
  }
  return j;
}

} // namespace

RunConfig parse_config(const json& j) {
  RunConfig c;
  c.dimension = j.value("dimension", 1);
  c.radius = j.value("radius", 20.0);
  c.count = j.value("count", Index(2001));

  c.couplings.a0 = j.value("a0", 1.0);
  c.couplings.b0 = j.value("b0", 1.0);
  c.couplings.beta0 = j.value("beta0", 0.0);
  c.couplings.kappa0 = j.value("kappa0", 0.5);
  c.couplings.p = j.value("p", 4.0);

  if (j.contains("perturbation")) {
    const json& p = j.at("perturbation");
    if (p.contains("a")) c.pert_a = parse_profile(p.at("a"));
    if (p.contains("b")) c.pert_b = parse_profile(p.at("b"));
    if (p.contains("beta")) c.pert_beta = parse_profile(p.at("beta"));
    if (p.contains("kappa")) c.pert_kappa = parse_profile(p.at("kappa"));
  }

  c.tol = j.value("tol", 1e-6);
  c.max_iter = j.value("max_iter", 50000);
  c.kappa_list = j.value("kappa_list", std::vector<double>{});
  c.y_list = j.value("y_list", std::vector<double>{});
  c.eigen_count = j.value("eigen_count", 2);
  c.parity = j.value("parity", "even");
  c.c0 = j.value("c0", 0.0);
  c.d0 = j.value("d0", 0.0);
  c.init_offset = j.value("init_offset", 0.0);
  if (j.contains("pair")) {
    c.pair_u_file = j.at("pair").value("u_file", "");
    c.pair_v_file = j.at("pair").value("v_file", "");
  }
  if (c.parity != "even" && c.parity != "full")
    throw std::invalid_argument("parity must be \"even\" or \"full\"");
  return c;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("config parse error: ") + e.what());
  }
  return parse_config(j);
}

json config_to_json(const RunConfig& c) {
  json j;
  j["dimension"] = c.dimension;
  j["radius"] = c.radius;
  j["count"] = c.count;
  j["a0"] = c.couplings.a0;
  j["b0"] = c.couplings.b0;
  j["beta0"] = c.couplings.beta0;
  j["kappa0"] = c.couplings.kappa0;
  j["p"] = c.couplings.p;
  json p;
  if (c.pert_a) p["a"] = profile_to_json(*c.pert_a);
  if (c.pert_b) p["b"] = profile_to_json(*c.pert_b);
  if (c.pert_beta) p["beta"] = profile_to_json(*c.pert_beta);
  if (c.pert_kappa) p["kappa"] = profile_to_json(*c.pert_kappa);
  if (!p.empty()) j["perturbation"] = p;
  j["tol"] = c.tol;
  j["max_iter"] = c.max_iter;
  if (!c.kappa_list.empty()) j["kappa_list"] = c.kappa_list;
  if (!c.y_list.empty()) j["y_list"] = c.y_list;
  j["eigen_count"] = c.eigen_count;
  j["parity"] = c.parity;
  if (c.c0 > 0.0) j["c0"] = c.c0;
  if (c.d0 > 0.0) j["d0"] = c.d0;
  j["init_offset"] = c.init_offset;
  if (!c.pair_u_file.empty()) j["pair"] = {{"u_file", c.pair_u_file}, {"v_file", c.pair_v_file}};
  return j;
}

Vector load_column(const std::string& path, Index expected) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open data file: " + path);
  std::vector<double> vals;
  double x;
  while (in >> x) vals.push_back(x);
  if (static_cast<Index>(vals.size()) != expected)
    throw std::invalid_argument("data file " + path + " has " + std::to_string(vals.size()) +
                                " values, expected " + std::to_string(expected));
  return Eigen::Map<const Vector>(vals.data(), static_cast<Index>(vals.size()));
}

} // namespace cnls
