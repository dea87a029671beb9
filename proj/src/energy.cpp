#include "cnls/energy.hpp"

#include <cmath>
#include <stdexcept>

namespace cnls {

namespace {

double critical_exponent(int n) { return n >= 3 ? 2.0 * n / (n - 2.0) : 1e18; }

// effective coefficient field: constant + optional profile + perturbation
double coeff_at(double c0, const std::optional<Vector>& profile, const Vector& pert, Index i) {
  double c = profile ? (*profile)[i] : c0;
  if (pert.size()) c += pert[i];
  return c;
}

void check_profile_size(const Vector& f, const RadialGrid& g, const char* name) {
  if (f.size() && f.size() != g.count)
    throw std::invalid_argument(std::string("perturbation profile ") + name +
                                " does not match the grid node count");
}

} // namespace

void Couplings::validate(const RadialGrid& grid) const {
  if (!(kappa0 > 0.0 && kappa0 < 1.0))
    throw std::invalid_argument("(A0): kappa0 must lie in (0,1)");
  if (!a0_profile && !(a0 > 0.0)) throw std::invalid_argument("(A0): a0 must be positive");
  if (!b0_profile && !(b0 > 0.0)) throw std::invalid_argument("(A0): b0 must be positive");
  if (a0_profile && (a0_profile->size() != grid.count || a0_profile->minCoeff() <= 0.0))
    throw std::invalid_argument("(A0): a0 profile must be positive on the grid");
  if (b0_profile && (b0_profile->size() != grid.count || b0_profile->minCoeff() <= 0.0))
    throw std::invalid_argument("(A0): b0 profile must be positive on the grid");
  if (!(p > 2.0 && p < critical_exponent(grid.dimension)))
    throw std::invalid_argument("exponent p must satisfy 2 < p < 2N/(N-2)");
}

void PerturbationProfile::validate(const RadialGrid& grid, const Couplings& c) const {
  check_profile_size(a, grid, "a");
  check_profile_size(b, grid, "b");
  check_profile_size(beta, grid, "beta");
  check_profile_size(kappa, grid, "kappa");

  auto boundary_small = [&](const Vector& f) {
    if (!f.size()) return true;
    const double edge = std::max(std::abs(f[0]), std::abs(f[f.size() - 1]));
    return edge < 1e-8;
  };
  if (!boundary_small(a) || !boundary_small(b) || !boundary_small(beta) || !boundary_small(kappa))
    throw std::invalid_argument(
        "(A0): perturbations must go to zero as |x| -> infinity "
        "(boundary values exceed 1e-8)");

  if (a.size() && !c.a0_profile && !(c.a0 + a.minCoeff() > 0.0))
    throw std::invalid_argument("(A0): a0 + inf a must be positive");
  if (b.size() && !c.b0_profile && !(c.b0 + b.minCoeff() > 0.0))
    throw std::invalid_argument("(A0): b0 + inf b must be positive");
  if (kappa.size()) {
    if (!(c.kappa0 + kappa.minCoeff() > 0.0))
      throw std::invalid_argument("(A0): kappa0 + inf kappa must be positive");
    if (!(c.kappa0 + kappa.maxCoeff() < 1.0))
      throw std::invalid_argument("(A0): kappa0 + sup kappa must be < 1");
  }
}

FieldPair::FieldPair(const RadialGrid& g, Vector u_, Vector v_)
    : grid(&g), u(std::move(u_)), v(std::move(v_)) {
  if (u.size() != g.count || v.size() != g.count)
    throw std::invalid_argument("FieldPair: components must match the grid node count");
  if (!u.allFinite() || !v.allFinite())
    throw std::invalid_argument("FieldPair: entries must be finite");
}

double phi_energy(const FieldPair& z, const Couplings& c, const PerturbationProfile& pert) {
  const RadialGrid& g = *z.grid;
  const double p = c.p, ph = p / 2.0;

  double quad = 0.5 * (h1_norm_sq(g, z.u) + h1_norm_sq(g, z.v));
  double nonlin = 0.0, cross = 0.0, linear = 0.0;
  for (Index i = 0; i < g.count; ++i) {
    const double au = std::abs(z.u[i]), av = std::abs(z.v[i]);
    const double ca = coeff_at(c.a0, c.a0_profile, pert.a, i);
    const double cb = coeff_at(c.b0, c.b0_profile, pert.b, i);
    const double cbeta = c.beta0 + (pert.beta.size() ? pert.beta[i] : 0.0);
    const double ckappa = c.kappa0 + (pert.kappa.size() ? pert.kappa[i] : 0.0);
    nonlin += g.weights[i] * (ca * std::pow(au, p) + cb * std::pow(av, p));
    cross += g.weights[i] * cbeta * std::pow(au, ph) * std::pow(av, ph);
    linear += g.weights[i] * ckappa * z.u[i] * z.v[i];
  }
  return quad - nonlin / p - 2.0 * cross / p - linear;
}

FieldPair phi_gradient(const FieldPair& z, const Couplings& c, const PerturbationProfile& pert) {
  const RadialGrid& g = *z.grid;
  const double p = c.p, ph = p / 2.0;

  Vector gu = stiffness_apply(g, z.u).cwiseQuotient(g.weights);
  Vector gv = stiffness_apply(g, z.v).cwiseQuotient(g.weights);
  for (Index i = 0; i < g.count; ++i) {
    const double u = z.u[i], v = z.v[i];
    const double au = std::abs(u), av = std::abs(v);
    const double ca = coeff_at(c.a0, c.a0_profile, pert.a, i);
    const double cb = coeff_at(c.b0, c.b0_profile, pert.b, i);
    const double cbeta = c.beta0 + (pert.beta.size() ? pert.beta[i] : 0.0);
    const double ckappa = c.kappa0 + (pert.kappa.size() ? pert.kappa[i] : 0.0);
    // |u|^{p-2} u = sign(u) |u|^{p-1}; |u|^{p/2-2} u = sign(u) |u|^{p/2-1}
    const double su = u >= 0.0 ? 1.0 : -1.0, sv = v >= 0.0 ? 1.0 : -1.0;
    gu[i] += u - ca * su * std::pow(au, p - 1.0) -
             cbeta * su * std::pow(au, ph - 1.0) * std::pow(av, ph) - ckappa * v;
    gv[i] += v - cb * sv * std::pow(av, p - 1.0) -
             cbeta * sv * std::pow(av, ph - 1.0) * std::pow(au, ph) - ckappa * u;
  }
  return FieldPair(g, std::move(gu), std::move(gv));
}

double kappa_norm_sq(const FieldPair& z, const Couplings& c) {
  const RadialGrid& g = *z.grid;
  return h1_norm_sq(g, z.u) + h1_norm_sq(g, z.v) -
         2.0 * c.kappa0 * integrate(g, z.u.cwiseProduct(z.v));
}

double nehari_quadratic(const FieldPair& z, const Couplings& c, const PerturbationProfile& pert) {
  const RadialGrid& g = *z.grid;
  double linear = 0.0;
  for (Index i = 0; i < g.count; ++i) {
    const double ckappa = c.kappa0 + (pert.kappa.size() ? pert.kappa[i] : 0.0);
    linear += g.weights[i] * ckappa * z.u[i] * z.v[i];
  }
  return h1_norm_sq(g, z.u) + h1_norm_sq(g, z.v) - 2.0 * linear;
}

double nehari_homogeneous(const FieldPair& z, const Couplings& c, const PerturbationProfile& pert) {
  const RadialGrid& g = *z.grid;
  const double p = c.p, ph = p / 2.0;
  double acc = 0.0;
  for (Index i = 0; i < g.count; ++i) {
    const double au = std::abs(z.u[i]), av = std::abs(z.v[i]);
    const double ca = coeff_at(c.a0, c.a0_profile, pert.a, i);
    const double cb = coeff_at(c.b0, c.b0_profile, pert.b, i);
    const double cbeta = c.beta0 + (pert.beta.size() ? pert.beta[i] : 0.0);
    acc += g.weights[i] * (ca * std::pow(au, p) + cb * std::pow(av, p) +
                           2.0 * cbeta * std::pow(au, ph) * std::pow(av, ph));
  }
  return acc;
}

double nehari_value(const FieldPair& z, const Couplings& c, const PerturbationProfile& pert) {
  if (z.u.isZero(0.0) && z.v.isZero(0.0))
    throw std::invalid_argument("nehari_value: zero pair is not on the Nehari manifold");
  return nehari_quadratic(z, c, pert) - nehari_homogeneous(z, c, pert);
}

NehariProjection nehari_project(const FieldPair& z, const Couplings& c,
                                const PerturbationProfile& pert) {
  const double q = nehari_quadratic(z, c, pert);
  const double p_hom = nehari_homogeneous(z, c, pert);
  if (!(p_hom > 0.0) || !(q > 0.0))
    throw std::runtime_error("nehari_project: degenerate direction (Q or P not positive)");
  const double t = std::pow(q / p_hom, 1.0 / (c.p - 2.0));
  return NehariProjection{t, FieldPair(*z.grid, t * z.u, t * z.v)};
}

double pair_dot(const FieldPair& x, const FieldPair& y) {
  const RadialGrid& g = *x.grid;
  return integrate(g, x.u.cwiseProduct(y.u)) + integrate(g, x.v.cwiseProduct(y.v));
}

} // namespace cnls
