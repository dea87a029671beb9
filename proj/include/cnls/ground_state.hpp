#ifndef CNLS_GROUND_STATE_HPP
#define CNLS_GROUND_STATE_HPP

#include "cnls/energy.hpp"
#include "cnls/soliton.hpp"

#include <functional>
#include <vector>

namespace cnls {

struct GroundStateReport {
  FieldPair z;
  double energy = 0.0;
  double gradient_sup = 0.0;
  double nehari_residual = 0.0;
  int iterations = 0;
  bool converged = false;
  std::vector<double> energy_trace;
  std::vector<double> barycenter_trace;  // |xi| per iteration, when tracked
};

enum class SynchronizedBranch { Z1, Z2, Z3, Z4 };

// Explicit solution (a1 w(a3 x), a2 w(a3 x)) of the p=4 limit system with
// a0 = b0 = mu.
struct SynchronizedSolution {
  double amplitude_u = 0.0;  // a1
  double amplitude_v = 0.0;  // a2
  double width = 0.0;        // a3
  SynchronizedBranch branch = SynchronizedBranch::Z1;
  FieldPair z;
};

SynchronizedSolution build_synchronized(SynchronizedBranch branch, const Couplings& c,
                                        const SolitonSolution& w, const RadialGrid& grid);

// Closed-form limit energy of the synchronized family (N=1, p=4, a0=b0):
// (8/3) (1-kappa0)^{3/2} / (a0+beta0).
double synchronized_energy(const Couplings& c);

// Sup-norm of the Euler-Lagrange gradient at z.
double residual_norm(const FieldPair& z, const Couplings& c, const PerturbationProfile& pert);

struct SolverOptions {
  double tol = 1e-6;  // energy-backed line search floors near sqrt(machine eps)
  int max_iter = 50000;
  // optional penalty term added to the objective (energy and gradient)
  std::function<double(const FieldPair&)> extra_energy;
  std::function<FieldPair(const FieldPair&)> extra_gradient;
  // optional per-iterate monitor recorded into barycenter_trace
  std::function<double(const FieldPair&)> monitor;
};

// Nehari-projected descent with H^1-preconditioned gradient and backtracking
// line search. Returns the report even when max_iter is hit (converged=false).
GroundStateReport minimize(const FieldPair& init, const Couplings& c,
                           const PerturbationProfile& pert, const SolverOptions& opts);

// As minimize, but throws "max_iter exceeded" when not converged.
GroundStateReport solve_ground_state(const FieldPair& init, const Couplings& c,
                                     const PerturbationProfile& pert, double tol,
                                     int max_iter);

struct ContinuationRecord {
  double kappa0 = 0.0;
  double energy = 0.0;
  double peak_u = 0.0;
  double peak_v = 0.0;
  int iterations = 0;
  bool converged = false;
};

// Warm-started sweep over kappa0 values (strictly increasing, in (0,1)).
std::vector<ContinuationRecord> continuation_kappa(const Couplings& base,
                                                   const PerturbationProfile& pert,
                                                   const std::vector<double>& kappa_list,
                                                   const RadialGrid& grid, double tol,
                                                   int max_iter);

// Default starting guess: a sech bump pair centered at the given offset.
FieldPair default_init(const RadialGrid& grid, double offset = 0.0);

} // namespace cnls

#endif
