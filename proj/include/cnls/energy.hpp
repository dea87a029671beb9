#ifndef CNLS_ENERGY_HPP
#define CNLS_ENERGY_HPP

#include "cnls/grid.hpp"

#include <optional>

namespace cnls {

// Constant couplings of the limit system. a0/b0 may optionally be replaced
// by periodic spatial profiles sampled on the grid.
struct Couplings {
  double a0 = 1.0;
  double b0 = 1.0;
  double beta0 = 0.0;
  double kappa0 = 0.5;  // in (0,1)
  double p = 4.0;       // subcritical exponent, 2 < p < 2N/(N-2)

  std::optional<Vector> a0_profile;  // periodic hook; overrides a0 when set
  std::optional<Vector> b0_profile;

  void validate(const RadialGrid& grid) const;
};

// Decaying spatial perturbations a(x), b(x), beta(x), kappa(x). An empty
// vector stands for the zero profile.
struct PerturbationProfile {
  Vector a, b, beta, kappa;

  bool is_zero() const {
    return a.size() == 0 && b.size() == 0 && beta.size() == 0 && kappa.size() == 0;
  }
  void validate(const RadialGrid& grid, const Couplings& c) const;
};

struct FieldPair {
  const RadialGrid* grid = nullptr;
  Vector u, v;

  FieldPair() = default;
  FieldPair(const RadialGrid& g, Vector u_, Vector v_);
};

// Energy functional Phi; with the zero perturbation this is the limit
// functional Phi_0.
double phi_energy(const FieldPair& z, const Couplings& c, const PerturbationProfile& pert);

// Euler-Lagrange gradient pair: vanishes exactly at solutions of the system.
// Dual to phi_energy under the quadrature pairing, i.e. the directional
// derivative of phi_energy along d equals sum q_i (g_u d_u + g_v d_v)_i.
FieldPair phi_gradient(const FieldPair& z, const Couplings& c, const PerturbationProfile& pert);

// Weighted norm ||u||^2 + ||v||^2 - 2 kappa0 int uv; positive for z != 0.
double kappa_norm_sq(const FieldPair& z, const Couplings& c);

// Quadratic part Q(z) = ||u||^2 + ||v||^2 - 2 int (kappa0+kappa) uv.
double nehari_quadratic(const FieldPair& z, const Couplings& c, const PerturbationProfile& pert);

// p-homogeneous part P(z) = int [(a0+a)|u|^p + (b0+b)|v|^p + 2(beta0+beta)|uv|^{p/2}].
double nehari_homogeneous(const FieldPair& z, const Couplings& c, const PerturbationProfile& pert);

// G(z) = Phi'(z)(z) = Q(z) - P(z); zero iff z lies on the Nehari manifold.
double nehari_value(const FieldPair& z, const Couplings& c, const PerturbationProfile& pert);

struct NehariProjection {
  double t = 1.0;
  FieldPair z;
};

// Unique t > 0 with t z on the Nehari manifold: t = (Q/P)^{1/(p-2)}.
NehariProjection nehari_project(const FieldPair& z, const Couplings& c,
                                const PerturbationProfile& pert);

// Quadrature inner product of two pairs: sum q_i (u1 u2 + v1 v2)_i.
double pair_dot(const FieldPair& x, const FieldPair& y);

} // namespace cnls

#endif
