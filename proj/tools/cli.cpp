#include "cnls/analysis.hpp"
#include "cnls/config.hpp"
#include "cnls/spectrum.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace {

constexpr const char* kVersion = "1.0.0";

using cnls::RunConfig;

struct Csv {
  std::string text;

  void header(const std::vector<std::string>& cols) {
    for (size_t i = 0; i < cols.size(); ++i) text += (i ? "," : "") + cols[i];
    text += "\n";
  }
  void field(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    sep();
    text += buf;
  }
  void field(long long x) {
    sep();
    text += std::to_string(x);
  }
  void field(const std::string& s) {
    sep();
    text += s;
  }
  void endrow() {
    text += "\n";
    fresh = true;
  }

 private:
  bool fresh = true;
  void sep() {
    if (!fresh) text += ",";
    fresh = false;
  }
};

void write_file(const std::filesystem::path& p, const std::string& body) {
  std::ofstream out(p, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write output file: " + p.string());
  out << body;
}

void write_manifest(const std::filesystem::path& dir, const std::string& command,
                    const RunConfig& cfg) {
  nlohmann::json j = cnls::config_to_json(cfg);
  j["command"] = command;
  j["version"] = kVersion;
  write_file(dir / (command + "_manifest.json"), j.dump(2) + "\n");
}

cnls::FieldPair solve_limit_state(const RunConfig& cfg, const cnls::RadialGrid& grid) {
  cnls::PerturbationProfile none;
  return cnls::solve_ground_state(cnls::default_init(grid, cfg.init_offset), cfg.couplings,
                                  none, cfg.tol, cfg.max_iter)
      .z;
}

int run_command(const std::string& command, const RunConfig& cfg,
                const std::filesystem::path& out_dir) {
  cnls::RadialGrid grid = cfg.make_grid_from();
  cfg.couplings.validate(grid);
  Csv csv;

  if (command == "scalar") {
    cnls::SolitonSolution w = cnls::solve_scalar(grid, cfg.tol);
    csv.header({"x", "w"});
    for (cnls::Index i = 0; i < grid.count; ++i) {
      csv.field(grid.nodes[i]);
      csv.field(w.profile.values[i]);
      csv.endrow();
    }
  } else if (command == "ground") {
    cnls::PerturbationProfile pert = cfg.make_perturbation(grid);
    cnls::GroundStateReport rep = cnls::solve_ground_state(
        cnls::default_init(grid, cfg.init_offset), cfg.couplings, pert, cfg.tol, cfg.max_iter);
    csv.header({"energy", "gradient_sup", "nehari_residual", "peak_u", "peak_v", "iterations",
                "converged"});
    csv.field(rep.energy);
    csv.field(rep.gradient_sup);
    csv.field(rep.nehari_residual);
    csv.field(rep.z.u.maxCoeff());
    csv.field(rep.z.v.maxCoeff());
    csv.field(static_cast<long long>(rep.iterations));
    csv.field(static_cast<long long>(rep.converged ? 1 : 0));
    csv.endrow();
  } else if (command == "sweep-kappa") {
    if (cfg.kappa_list.empty())
      throw std::invalid_argument("sweep-kappa requires a non-empty kappa_list");
    cnls::PerturbationProfile pert = cfg.make_perturbation(grid);
    auto records = cnls::continuation_kappa(cfg.couplings, pert, cfg.kappa_list, grid, cfg.tol,
                                            cfg.max_iter);
    csv.header({"kappa0", "energy", "peak_u", "peak_v", "iterations", "converged"});
    for (const auto& r : records) {
      csv.field(r.kappa0);
      csv.field(r.energy);
      csv.field(r.peak_u);
      csv.field(r.peak_v);
      csv.field(static_cast<long long>(r.iterations));
      csv.field(static_cast<long long>(r.converged ? 1 : 0));
      csv.endrow();
    }
  } else if (command == "spectrum") {
    cnls::SolitonSolution w = grid.dimension == 1 ? cnls::closed_form_soliton(grid)
                                                  : cnls::solve_scalar(grid, cfg.tol);
    cnls::SpectrumReport rep = cnls::nondegeneracy_check(cfg.couplings, w.peak, w, grid);
    const cnls::Parity parity =
        cfg.parity == "full" ? cnls::Parity::Full : cnls::Parity::Even;
    std::vector<double> eigs = cnls::weighted_eigenvalues(w, grid, cfg.eigen_count, parity);
    csv.header({"index", "eigenvalue", "k_indicator", "verdict", "kernel_dimension"});
    for (size_t k = 0; k < eigs.size(); ++k) {
      csv.field(static_cast<long long>(k + 1));
      csv.field(eigs[k]);
      csv.field(rep.k_indicator);
      csv.field(rep.verdict);
      csv.field(static_cast<long long>(rep.kernel_dimension));
      csv.endrow();
    }
  } else if (command == "barycenter") {
    cnls::FieldPair z;
    if (!cfg.pair_u_file.empty()) {
      z = cnls::FieldPair(grid, cnls::load_column(cfg.pair_u_file, grid.count),
                          cnls::load_column(cfg.pair_v_file, grid.count));
    } else {
      cnls::PerturbationProfile pert = cfg.make_perturbation(grid);
      z = cnls::solve_ground_state(cnls::default_init(grid, cfg.init_offset), cfg.couplings,
                                   pert, cfg.tol, cfg.max_iter)
              .z;
    }
    csv.header({"xi"});
    csv.field(cnls::barycenter(z));
    csv.endrow();
  } else if (command == "gamma") {
    if (cfg.y_list.empty()) throw std::invalid_argument("gamma requires a non-empty y_list");
    cnls::PerturbationProfile pert = cfg.make_perturbation(grid);
    cnls::FieldPair w0 = solve_limit_state(cfg, grid);
    auto samples = cnls::gamma_profile(w0, cfg.couplings, pert, cfg.y_list);
    csv.header({"y", "t", "energy", "xi"});
    for (const auto& s : samples) {
      csv.field(s.y);
      csv.field(s.t);
      csv.field(s.energy);
      csv.field(s.xi);
      csv.endrow();
    }
  } else if (command == "threshold") {
    cnls::PerturbationProfile pert = cfg.make_perturbation(grid);
    cnls::ThresholdReport rep = cnls::r0_threshold(cfg.couplings, pert, cfg.c0, cfg.d0);
    csv.header({"r0", "bound", "satisfied"});
    csv.field(rep.r0);
    csv.field(rep.bound);
    csv.field(static_cast<long long>(rep.satisfied ? 1 : 0));
    csv.endrow();
  } else if (command == "compare") {
    cnls::PerturbationProfile pert = cfg.make_perturbation(grid);
    cnls::FieldPair w0 = solve_limit_state(cfg, grid);
    cnls::ComparisonReport rep = cnls::comparison_check(w0, cfg.couplings, pert);
    csv.header({"lhs01", "rhs01", "criterion01", "criterion02", "criterion03", "criterion04",
                "conclusion"});
    csv.field(rep.lhs01);
    csv.field(rep.rhs01);
    csv.field(static_cast<long long>(rep.criterion01 ? 1 : 0));
    csv.field(static_cast<long long>(rep.criterion02 ? 1 : 0));
    csv.field(static_cast<long long>(rep.criterion03 ? 1 : 0));
    csv.field(static_cast<long long>(rep.criterion04 ? 1 : 0));
    csv.field(rep.conclusion);
    csv.endrow();
  } else if (command == "bound") {
    cnls::PerturbationProfile pert = cfg.make_perturbation(grid);
    cnls::GroundStateReport rep =
        cnls::constrained_search(cnls::default_init(grid, cfg.init_offset), cfg.couplings,
                                 pert, cfg.tol, cfg.max_iter);
    csv.header({"energy", "xi", "gradient_sup", "iterations", "converged"});
    csv.field(rep.energy);
    csv.field(cnls::barycenter(rep.z));
    csv.field(rep.gradient_sup);
    csv.field(static_cast<long long>(rep.iterations));
    csv.field(static_cast<long long>(rep.converged ? 1 : 0));
    csv.endrow();
  } else {
    throw std::invalid_argument("unknown command: " + command);
  }

  std::filesystem::create_directories(out_dir);
  write_file(out_dir / (command + ".csv"), csv.text);
  write_manifest(out_dir, command, cfg);
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Coupled nonlinear Schrodinger solver: ground states, synchronized solutions,\n"
      "linearized spectra, and existence-threshold diagnostics.\n\n"
      "CSV schemas per subcommand:\n"
      "  scalar      x, w\n"
      "  ground      energy, gradient_sup, nehari_residual, peak_u, peak_v, iterations, "
      "converged\n"
      "  sweep-kappa kappa0, energy, peak_u, peak_v, iterations, converged\n"
      "  spectrum    index, eigenvalue, k_indicator, verdict, kernel_dimension\n"
      "  barycenter  xi\n"
      "  gamma       y, t, energy, xi\n"
      "  threshold   r0, bound, satisfied\n"
      "  compare     lhs01, rhs01, criterion01..04, conclusion\n"
      "  bound       energy, xi, gradient_sup, iterations, converged"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path;
  std::string out_dir;
  unsigned long long seed = 0;
  int threads = 1;
  if (const char* env = std::getenv("CNLS_OUT_DIR")) out_dir = env;
  if (out_dir.empty()) out_dir = ".";

  app.add_option("--config", config_path, "JSON config file")->required();
  app.add_option("--out", out_dir, "output directory (default: $CNLS_OUT_DIR or .)");
  app.add_option("--seed", seed, "seed for optional randomized initialization (recorded)");
  app.add_option("--threads", threads, "solver thread budget (currently single-threaded)");

  const char* names[] = {"scalar",     "ground", "sweep-kappa", "spectrum", "barycenter",
                         "gamma",      "threshold", "compare",  "bound"};
  for (const char* n : names) app.add_subcommand(n);

  CLI11_PARSE(app, argc, argv);
  const std::string command = app.get_subcommands().front()->get_name();

  try {
    RunConfig cfg = cnls::load_config(config_path);
    return run_command(command, cfg, out_dir);
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "numerical failure: %s\n", e.what());
    return 2;
  }
}
