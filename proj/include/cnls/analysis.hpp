#ifndef CNLS_ANALYSIS_HPP
#define CNLS_ANALYSIS_HPP

#include "cnls/ground_state.hpp"

#include <string>
#include <vector>

namespace cnls {

// Center-of-mass surrogate built from truncated unit-window averages:
// mu(u)(x) = average of |u| over [x-1, x+1], u_hat = (mu - max(mu)/2)+,
// xi = int x (u_hat + v_hat) / int (u_hat + v_hat). Full-line grids only.
double barycenter(const FieldPair& z);

struct ComparisonReport {
  double lhs01 = 0.0;  // ratio (perturbed norm / limit norm)^{p/2}
  double rhs01 = 0.0;  // psi / psi_0
  bool criterion01 = false;
  bool criterion02 = false;
  bool criterion03 = false;  // evaluated only for u == v pairs
  bool criterion04 = false;
  std::string conclusion;  // "ground-state-exists" | "undetermined"
};

// Sufficient-condition battery for existence below the limit level.
// w0 must solve the limit problem (residual below residual_tol).
ComparisonReport comparison_check(const FieldPair& w0, const Couplings& c,
                                  const PerturbationProfile& pert,
                                  double residual_tol = 1e-4);

// The norm-ratio inequality in its un-rearranged form; boolean-identical to
// criterion01 by algebra, kept separate as a cross-check.
bool energy_ratio_strict(const FieldPair& w0, const Couplings& c,
                         const PerturbationProfile& pert);

struct GammaSample {
  double y = 0.0;
  double t = 0.0;       // Nehari scaling of the translated pair
  double energy = 0.0;  // full energy of the projected translate
  double xi = 0.0;      // barycenter of the projected translate
};

// Translated-path profile: shift the limit ground state by y, project onto
// the Nehari manifold of the perturbed functional, record the energy.
std::vector<GammaSample> gamma_profile(const FieldPair& w0, const Couplings& c,
                                       const PerturbationProfile& pert,
                                       const std::vector<double>& ys);

struct ThresholdReport {
  double r0 = 0.0;     // (1 + |kappa|_inf/(1-kappa0))^2 / (1 - max ratio)
  double bound = 0.0;  // c_tilde0 / c0 it must stay below
  bool satisfied = false;
};

// Smallness threshold for the perturbation. With no d0/c0 estimate supplied
// the bound defaults to 2 (c_tilde0 = 2 c0 cancels c0).
ThresholdReport r0_threshold(const Couplings& c, const PerturbationProfile& pert,
                             double c0 = 0.0, double d0 = 0.0);

// Best-effort minimization over the Nehari manifold with a ramped quadratic
// barycenter penalty; the reported energy is an upper estimate of the
// centered level. Full-line grids only.
GroundStateReport constrained_search(const FieldPair& init, const Couplings& c,
                                     const PerturbationProfile& pert, double tol,
                                     int max_iter = 20000);

} // namespace cnls

#endif
