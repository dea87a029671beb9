#ifndef CNLS_SPECTRUM_HPP
#define CNLS_SPECTRUM_HPP

#include "cnls/ground_state.hpp"

#include <string>
#include <vector>

namespace cnls {

// N=1 grids carry the full line; the linearized analysis lives in the space
// of radial (= even) functions, with the unrestricted solve as a cross-check.
enum class Parity { Even, Full };

struct SymmetricTridiagonal {
  Vector diag;
  Vector off;  // size diag.size()-1
};

// Symmetric generalized pencil A x = lambda B x with B diagonal, B >= 0.
// Number of pencil eigenvalues strictly below lambda (Sturm/LDL^T inertia).
int pencil_count_below(const SymmetricTridiagonal& A, const Vector& B, double lambda);

// k-th ascending pencil eigenvalue (k = 0-based), by bisection.
double pencil_eigenvalue(const SymmetricTridiagonal& A, const Vector& B, int k);

// Eigenvector for a converged eigenvalue, by inverse iteration.
Vector pencil_eigenvector(const SymmetricTridiagonal& A, const Vector& B, double lambda);

struct EigenSolveResult {
  std::vector<double> values;   // ascending
  std::vector<Vector> vectors;  // B-normalized, on the reduced node set
  std::vector<Index> node_map;  // reduced index -> grid node index
};

// Smallest `count` eigenvalues of -Lap psi + psi = lambda w^2 psi on the
// given grid (Dirichlet at the truncation boundary). For N=1, Parity::Even
// restricts to even functions (the radial class); Parity::Full solves the
// whole interval and also sees the odd modes.
EigenSolveResult weighted_eigenpairs(const SolitonSolution& w, const RadialGrid& grid,
                                     int count, Parity parity = Parity::Even);
std::vector<double> weighted_eigenvalues(const SolitonSolution& w, const RadialGrid& grid,
                                         int count, Parity parity = Parity::Even);

// One scalar linearized problem -Lap psi + psi = (w2_coeff w^2 + shift) psi.
struct ScalarProblem {
  double w2_coeff = 0.0;
  double shift = 0.0;
  ScalarField potential;  // w2_coeff * w(y)^2 + shift on the grid
};

struct DecoupledPair {
  ScalarProblem a;  // -Lap + 1 = 3 w^2
  ScalarProblem b;  // -Lap + 1 = (3-b0)/(1+b0) w^2 - 2 k0/(1-k0)
};

// Orthonormal decoupling of the linearization at the equal-amplitude
// synchronized branches (Z1/Z2 only), after rescaling to the unit soliton.
DecoupledPair decouple(const SynchronizedSolution& s, const Couplings& c,
                       const SolitonSolution& w, const RadialGrid& grid);

// Kernel surrogate: eigenvalue of (-Lap + 1 - V, mass) pencil closest to 0
// in absolute value, on radial/even functions.
double kernel_gap(const ScalarProblem& prob, Parity parity = Parity::Even);

struct SpectrumReport {
  std::vector<double> eigenvalues;  // weighted problem, ascending
  double k_indicator = 0.0;         // (3-b0)/(1+b0) w(0)^2 - 2 k0/(1-k0)
  std::string verdict;              // "nondegenerate" | "inconclusive"
  int kernel_dimension = 0;         // modes of A and B below the 0.01 cutoff
};

// Formula verdict plus discrete-kernel cross-check on the given soliton/grid.
SpectrumReport nondegeneracy_check(const Couplings& c, double w0, const SolitonSolution& w,
                                   const RadialGrid& grid);
// Convenience overload: N=1 closed-form soliton on a default grid.
SpectrumReport nondegeneracy_check(const Couplings& c, double w0);

} // namespace cnls

#endif
