#ifndef CNLS_CONFIG_HPP
#define CNLS_CONFIG_HPP

#include "cnls/energy.hpp"

#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

namespace cnls {

// Analytic or file-based perturbation channel.
struct ProfileSpec {
  std::string type;  // "gaussian" | "file"
  double amplitude = 0.0;
  double width = 1.0;
  double center = 0.0;
  std::string path;  // for "file": whitespace-separated values, one per node

  Vector sample(const RadialGrid& grid) const;
};

struct RunConfig {
  int dimension = 1;
  double radius = 20.0;
  Index count = 2001;

  Couplings couplings;
  std::optional<ProfileSpec> pert_a, pert_b, pert_beta, pert_kappa;

  double tol = 1e-6;
  int max_iter = 50000;

  // command-specific knobs
  std::vector<double> kappa_list;
  std::vector<double> y_list;
  int eigen_count = 2;
  std::string parity = "even";  // "even" | "full"
  double c0 = 0.0;              // reference level for `threshold`
  double d0 = 0.0;              // next-level estimate for `threshold`
  double init_offset = 0.0;
  std::string pair_u_file, pair_v_file;  // stored pair for `barycenter`

  RadialGrid make_grid_from() const { return make_grid(dimension, radius, count); }
  PerturbationProfile make_perturbation(const RadialGrid& grid) const;
};

RunConfig load_config(const std::string& path);
RunConfig parse_config(const nlohmann::json& j);
nlohmann::json config_to_json(const RunConfig& cfg);

// One value per line/whitespace token; must match the grid node count.
Vector load_column(const std::string& path, Index expected);

} // namespace cnls

#endif
