#include "cnls/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cnls {

namespace {

// Enumerates the exact quadrature coefficients of int_{x_i-1}^{x_i+1} f dx
// for piecewise-linear f with zero extension: emit(j, coef) per node j.
template <typename Emit>
void unit_window(const RadialGrid& g, Index i, Emit&& emit) {
  const double h = g.spacing;
  const double lo = std::max(g.nodes[i] - 1.0, g.nodes[0]);
  const double hi = std::min(g.nodes[i] + 1.0, g.nodes[g.count - 1]);
  if (hi <= lo) return;
  auto cell_of = [&](double x) {
    auto j = static_cast<Index>(std::floor((x - g.nodes[0]) / h));
    return std::clamp(j, Index(0), g.count - 2);
  };
  for (Index j = cell_of(lo); j <= cell_of(hi - 1e-14 * g.radius); ++j) {
    const double a = std::max(lo, g.nodes[j]);
    const double b = std::min(hi, g.nodes[j + 1]);
    if (b <= a) continue;
    const double s0 = (a - g.nodes[j]) / h, s1 = (b - g.nodes[j]) / h;
    const double half_sq = 0.5 * (s1 * s1 - s0 * s0);
    emit(j, h * ((s1 - s0) - half_sq));
    emit(j + 1, h * half_sq);
  }
}

// mu(u)(x_i): unit-window average of |u| (zero extension outside the grid).
Vector window_average(const RadialGrid& g, const Vector& u) {
  Vector mu = Vector::Zero(g.count);
  for (Index i = 0; i < g.count; ++i) {
    double acc = 0.0;
    unit_window(g, i, [&](Index j, double c) { acc += c * std::abs(u[j]); });
    mu[i] = 0.5 * acc;
  }
  return mu;
}

struct BarycenterData {
  Vector mu_u, mu_v;
  Vector rho;  // u_hat + v_hat
  double xi = 0.0;
  double den = 0.0;  // int rho
};

BarycenterData barycenter_data(const FieldPair& z) {
  const RadialGrid& g = *z.grid;
  if (g.dimension != 1)
    throw std::invalid_argument("barycenter: requires a full-line grid");
  if (z.u.isZero(0.0) && z.v.isZero(0.0))
    throw std::invalid_argument("barycenter: zero pair");

  BarycenterData d;
  d.mu_u = window_average(g, z.u);
  d.mu_v = window_average(g, z.v);
  const double cu = 0.5 * d.mu_u.maxCoeff(), cv = 0.5 * d.mu_v.maxCoeff();
  d.rho = (d.mu_u.array() - cu).max(0.0) + (d.mu_v.array() - cv).max(0.0);

  double num = 0.0;
  for (Index i = 0; i < g.count; ++i) {
    d.den += g.weights[i] * d.rho[i];
    num += g.weights[i] * g.nodes[i] * d.rho[i];
  }
  if (!(d.den > 0.0)) throw std::runtime_error("barycenter: degenerate truncated density");
  d.xi = num / d.den;
  return d;
}

bool nonneg(const Vector& f) { return f.size() == 0 || f.minCoeff() >= 0.0; }

bool strict_somewhere(const Vector& f) { return f.size() && f.maxCoeff() > 0.0; }

double sup_norm(const Vector& f) { return f.size() ? f.lpNorm<Eigen::Infinity>() : 0.0; }

FieldPair translate(const FieldPair& z, double y) {
  const RadialGrid& g = *z.grid;
  Vector tu(g.count), tv(g.count);
  for (Index i = 0; i < g.count; ++i) {
    tu[i] = sample_cubic(g, z.u, g.nodes[i] - y);
    tv[i] = sample_cubic(g, z.v, g.nodes[i] - y);
  }
  return FieldPair(g, std::move(tu), std::move(tv));
}

// Analytic gradient of xi with the active set and the max-location frozen;
// returned in the quadrature-dual convention of phi_gradient.
FieldPair xi_gradient(const FieldPair& z, const BarycenterData& d) {
  const RadialGrid& g = *z.grid;
  Vector gu = Vector::Zero(g.count), gv = Vector::Zero(g.count);
  const double cu = 0.5 * d.mu_u.maxCoeff(), cv = 0.5 * d.mu_v.maxCoeff();
  for (Index i = 0; i < g.count; ++i) {
    const double wfac = g.weights[i] * (g.nodes[i] - d.xi) / d.den;
    if (d.mu_u[i] > cu)
      unit_window(g, i, [&](Index j, double c) { gu[j] += 0.5 * c * wfac; });
    if (d.mu_v[i] > cv)
      unit_window(g, i, [&](Index j, double c) { gv[j] += 0.5 * c * wfac; });
  }
  for (Index j = 0; j < g.count; ++j) {
    gu[j] *= (z.u[j] >= 0.0 ? 1.0 : -1.0) / g.weights[j];
    gv[j] *= (z.v[j] >= 0.0 ? 1.0 : -1.0) / g.weights[j];
  }
  return FieldPair(g, std::move(gu), std::move(gv));
}

} // namespace

double barycenter(const FieldPair& z) { return barycenter_data(z).xi; }

ComparisonReport comparison_check(const FieldPair& w0, const Couplings& c,
                                  const PerturbationProfile& pert, double residual_tol) {
  const RadialGrid& g = *w0.grid;
  pert.validate(g, c);
  const PerturbationProfile none;
  if (residual_norm(w0, c, none) > residual_tol)
    throw std::invalid_argument("comparison_check: w0 does not solve the limit problem");

  ComparisonReport rep;
  const double q0 = nehari_quadratic(w0, c, none);
  double kuv = 0.0;
  if (pert.kappa.size())
    kuv = integrate(g, pert.kappa.cwiseProduct(w0.u).cwiseProduct(w0.v));
  const double psi = nehari_homogeneous(w0, c, pert);
  const double psi0 = nehari_homogeneous(w0, c, none);

  rep.lhs01 = std::pow((q0 - 2.0 * kuv) / q0, c.p / 2.0);
  rep.rhs01 = psi / psi0;
  rep.criterion01 = rep.lhs01 < rep.rhs01;

  rep.criterion02 = nonneg(pert.kappa) && nonneg(pert.a) && nonneg(pert.b) &&
                    nonneg(pert.beta) &&
                    (strict_somewhere(pert.kappa) || strict_somewhere(pert.a) ||
                     strict_somewhere(pert.b) || strict_somewhere(pert.beta));

  const double usup = sup_norm(w0.u);
  const bool equal_pair = (w0.u - w0.v).lpNorm<Eigen::Infinity>() <= 1e-10 * (1.0 + usup);
  if (equal_pair) {
    bool ok = true, strict = false;
    for (Index i = 0; i < g.count && ok; ++i) {
      const double abc = (pert.a.size() ? pert.a[i] : 0.0) +
                         (pert.b.size() ? pert.b[i] : 0.0) +
                         2.0 * (pert.beta.size() ? pert.beta[i] : 0.0);
      const double val = abc * std::pow(std::abs(w0.u[i]), c.p - 2.0) +
                         c.p * (pert.kappa.size() ? pert.kappa[i] : 0.0);
      if (val < 0.0) ok = false;
      if (val > 0.0) strict = true;
    }
    rep.criterion03 = ok && strict;

    bool ok4 = nonneg(pert.kappa), strict4 = strict_somewhere(pert.kappa);
    for (Index i = 0; i < g.count && ok4; ++i) {
      const double abc = (pert.a.size() ? pert.a[i] : 0.0) +
                         (pert.b.size() ? pert.b[i] : 0.0) +
                         2.0 * (pert.beta.size() ? pert.beta[i] : 0.0);
      if (abc < 0.0) ok4 = false;
      if (abc > 0.0) strict4 = true;
    }
    rep.criterion04 = ok4 && strict4;
  }

  const bool exists =
      rep.criterion01 || rep.criterion02 || rep.criterion03 || rep.criterion04;
  rep.conclusion = exists ? "ground-state-exists" : "undetermined";
  return rep;
}

bool energy_ratio_strict(const FieldPair& w0, const Couplings& c,
                         const PerturbationProfile& pert) {
  const PerturbationProfile none;
  const double q0 = nehari_quadratic(w0, c, none);
  const double q = nehari_quadratic(w0, c, pert);
  const double psi = nehari_homogeneous(w0, c, pert);
  const double psi0 = nehari_homogeneous(w0, c, none);
  return std::pow(q, c.p / 2.0) / psi < std::pow(q0, c.p / 2.0) / psi0;
}

std::vector<GammaSample> gamma_profile(const FieldPair& w0, const Couplings& c,
                                       const PerturbationProfile& pert,
                                       const std::vector<double>& ys) {
  const RadialGrid& g = *w0.grid;
  if (g.dimension != 1)
    throw std::invalid_argument("gamma_profile: requires a full-line grid");
  pert.validate(g, c);

  std::vector<GammaSample> out;
  out.reserve(ys.size());
  for (double y : ys) {
    if (std::abs(y) > g.radius)
      throw std::invalid_argument("gamma_profile: translation exceeds grid support");
    NehariProjection proj = nehari_project(translate(w0, y), c, pert);
    GammaSample s;
    s.y = y;
    s.t = proj.t;
    s.energy = phi_energy(proj.z, c, pert);
    s.xi = barycenter(proj.z);
    out.push_back(s);
  }
  return out;
}

ThresholdReport r0_threshold(const Couplings& c, const PerturbationProfile& pert,
                             double c0, double d0) {
  double max_ratio = 0.0;
  auto fold = [&](const Vector& f, double denom, const char* name) {
    const double sup = sup_norm(f);
    if (sup == 0.0) return;
    if (denom <= 0.0)
      throw std::runtime_error(std::string("r0_threshold: perturbation too large (") + name +
                               " has no reference coupling)");
    max_ratio = std::max(max_ratio, sup / denom);
  };
  fold(pert.a, c.a0, "a");
  fold(pert.b, c.b0, "b");
  fold(pert.beta, std::abs(c.beta0), "beta");
  if (max_ratio >= 1.0)
    throw std::runtime_error("r0_threshold: perturbation too large (ratio >= 1)");

  ThresholdReport rep;
  const double kfac = 1.0 + sup_norm(pert.kappa) / (1.0 - c.kappa0);
  rep.r0 = kfac * kfac / (1.0 - max_ratio);
  rep.bound = (d0 > 0.0 && c0 > 0.0) ? std::min(d0, 2.0 * c0) / c0 : 2.0;
  rep.satisfied = rep.r0 < rep.bound;
  return rep;
}

GroundStateReport constrained_search(const FieldPair& init, const Couplings& c,
                                     const PerturbationProfile& pert, double tol,
                                     int max_iter) {
  if (init.grid->dimension != 1)
    throw std::invalid_argument("constrained_search: requires a full-line grid");

  const double ramp[] = {1.0, 10.0, 100.0};
  FieldPair z = init;
  GroundStateReport rep;
  for (double lambda : ramp) {
    SolverOptions opts;
    opts.tol = tol;
    opts.max_iter = max_iter / 3;
    opts.extra_energy = [&, lambda](const FieldPair& p) {
      const double xi = barycenter(p);
      return lambda * xi * xi;
    };
    opts.extra_gradient = [&, lambda](const FieldPair& p) {
      BarycenterData d = barycenter_data(p);
      FieldPair gxi = xi_gradient(p, d);
      gxi.u *= 2.0 * lambda * d.xi;
      gxi.v *= 2.0 * lambda * d.xi;
      return gxi;
    };
    opts.monitor = [](const FieldPair& p) { return std::abs(barycenter(p)); };
    rep = minimize(z, c, pert, opts);
    z = rep.z;
  }
  return rep;
}

} // namespace cnls
