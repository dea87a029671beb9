#ifndef CNLS_SOLITON_HPP
#define CNLS_SOLITON_HPP

#include "cnls/grid.hpp"

namespace cnls {

enum class SolitonMethod { ClosedForm, Shooting, GradientFlow };

// Positive radial solution w of -Lap w + w = w^3, the building block of the
// synchronized solution family.
struct SolitonSolution {
  ScalarField profile;
  double peak = 0.0;      // w(0)
  double residual = 0.0;  // sup-norm of the discrete residual
  SolitonMethod method = SolitonMethod::Shooting;
};

// w(x) = sqrt(2) sech(x) sampled on an N=1 grid.
SolitonSolution closed_form_soliton(const RadialGrid& grid);

// Bisection shooting on w'' + (N-1)/r w' = w - w^3, w'(0)=0, followed by a
// Newton polish of the discrete residual down to tol.
SolitonSolution solve_scalar(const RadialGrid& grid, double tol);

} // namespace cnls

#endif
