#include "cnls/ground_state.hpp"

#include "cnls/tridiag.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace cnls {

namespace {

// H^1 Riesz representative of the quadrature-pairing gradient:
// (K + M) d = M g, component by component.
Vector precondition(const RadialGrid& g, const Vector& grad) {
  const Index m = g.count;
  Vector sub(m - 1), diag(m), sup(m - 1);
  for (Index i = 0; i < m; ++i) diag[i] = g.weights[i];
  for (Index i = 0; i + 1 < m; ++i) {
    diag[i] += g.face_coeff[i];
    diag[i + 1] += g.face_coeff[i];
    sub[i] = -g.face_coeff[i];
    sup[i] = -g.face_coeff[i];
  }
  return solve_tridiagonal(sub, diag, sup, g.weights.cwiseProduct(grad));
}

} // namespace

SynchronizedSolution build_synchronized(SynchronizedBranch branch, const Couplings& c,
                                        const SolitonSolution& w, const RadialGrid& grid) {
  if (std::abs(c.p - 4.0) > 1e-12)
    throw std::invalid_argument("build_synchronized: synchronized algebra requires p=4");
  if (c.a0_profile || c.b0_profile || c.a0 != c.b0)
    throw std::invalid_argument("build_synchronized: synchronized ansatz requires mu=a0=b0");
  const double mu = c.a0;
  if (!(c.beta0 > -mu))
    throw std::invalid_argument("build_synchronized: requires beta0 > -mu");
  if (!(c.kappa0 > 0.0 && c.kappa0 < 1.0))
    throw std::invalid_argument("build_synchronized: requires 0 < kappa0 < 1");

  // opposite-sign branches flip the sign of the linear coupling seen by each
  // component, so their amplitude equations carry kappa0 -> -kappa0
  const bool opposite = branch == SynchronizedBranch::Z3 || branch == SynchronizedBranch::Z4;
  const double keff = opposite ? -c.kappa0 : c.kappa0;
  const double amp = std::sqrt((1.0 - keff) / (mu + c.beta0));
  const double width = std::sqrt(1.0 - keff);

  double a1 = amp, a2 = amp;
  switch (branch) {
    case SynchronizedBranch::Z1: break;
    case SynchronizedBranch::Z2: a1 = -amp; a2 = -amp; break;
    case SynchronizedBranch::Z3: a2 = -amp; break;
    case SynchronizedBranch::Z4: a1 = -amp; break;
  }

  Vector dilated(grid.count);
  if (w.method == SolitonMethod::ClosedForm && grid.dimension == 1) {
    for (Index i = 0; i < grid.count; ++i)
      dilated[i] = std::sqrt(2.0) / std::cosh(width * grid.nodes[i]);
  } else {
    for (Index i = 0; i < grid.count; ++i)
      dilated[i] = sample_cubic(*w.profile.grid, w.profile.values, width * grid.nodes[i]);
  }

  SynchronizedSolution s;
  s.amplitude_u = a1;
  s.amplitude_v = a2;
  s.width = width;
  s.branch = branch;
  s.z = FieldPair(grid, a1 * dilated, a2 * dilated);
  return s;
}

double synchronized_energy(const Couplings& c) {
  if (std::abs(c.p - 4.0) > 1e-12)
    throw std::invalid_argument("synchronized_energy: requires p=4");
  if (c.a0_profile || c.b0_profile || c.a0 != c.b0)
    throw std::invalid_argument("synchronized_energy: requires a0=b0");
  if (!(c.beta0 > -c.a0)) throw std::invalid_argument("synchronized_energy: requires beta0 > -a0");
  return 8.0 / 3.0 * std::pow(1.0 - c.kappa0, 1.5) / (c.a0 + c.beta0);
}

double residual_norm(const FieldPair& z, const Couplings& c, const PerturbationProfile& pert) {
  FieldPair g = phi_gradient(z, c, pert);
  return std::max(g.u.lpNorm<Eigen::Infinity>(), g.v.lpNorm<Eigen::Infinity>());
}

GroundStateReport minimize(const FieldPair& init, const Couplings& c,
                           const PerturbationProfile& pert, const SolverOptions& opts) {
  const RadialGrid& grid = *init.grid;
  c.validate(grid);
  pert.validate(grid, c);
  if (!(opts.tol > 0.0)) throw std::invalid_argument("minimize: tol must be positive");

  auto objective = [&](const FieldPair& z) {
    double e = phi_energy(z, c, pert);
    if (opts.extra_energy) e += opts.extra_energy(z);
    return e;
  };

  FieldPair z = nehari_project(init, c, pert).z;
  double energy = objective(z);

  GroundStateReport rep;
  double tau = 1.0;
  int it = 0;
  for (; it < opts.max_iter; ++it) {
    FieldPair grad = phi_gradient(z, c, pert);
    if (opts.extra_gradient) {
      FieldPair extra = opts.extra_gradient(z);
      grad.u += extra.u;
      grad.v += extra.v;
    }
    rep.energy_trace.push_back(energy);
    if (opts.monitor) rep.barycenter_trace.push_back(opts.monitor(z));

    const double gsup = std::max(grad.u.lpNorm<Eigen::Infinity>(),
                                 grad.v.lpNorm<Eigen::Infinity>());
    if (gsup < opts.tol) {
      rep.converged = true;
      break;
    }

    FieldPair dir(grid, precondition(grid, grad.u), precondition(grid, grad.v));
    const double slope = pair_dot(grad, dir);  // > 0: dir is a descent direction

    tau = std::min(tau * 2.0, 4.0);
    bool accepted = false;
    while (tau > 1e-14) {
      FieldPair trial(grid, z.u - tau * dir.u, z.v - tau * dir.v);
      try {
        trial = nehari_project(trial, c, pert).z;
      } catch (const std::runtime_error&) {
        tau *= 0.5;
        continue;
      }
      const double trial_energy = objective(trial);
      if (trial_energy <= energy - 1e-4 * tau * slope) {
        z = std::move(trial);
        energy = trial_energy;
        accepted = true;
        break;
      }
      tau *= 0.5;
    }
    if (!accepted) break;  // line search exhausted: stationary to round-off
  }

  rep.z = z;
  rep.energy = phi_energy(z, c, pert);
  rep.gradient_sup = residual_norm(z, c, pert);
  rep.nehari_residual = std::abs(nehari_value(z, c, pert));
  rep.iterations = it;
  rep.converged = rep.converged || rep.gradient_sup < opts.tol;
  return rep;
}

GroundStateReport solve_ground_state(const FieldPair& init, const Couplings& c,
                                     const PerturbationProfile& pert, double tol,
                                     int max_iter) {
  SolverOptions opts;
  opts.tol = tol;
  opts.max_iter = max_iter;
  GroundStateReport rep = minimize(init, c, pert, opts);
  if (!rep.converged) throw std::runtime_error("solve_ground_state: max_iter exceeded");
  return rep;
}

std::vector<ContinuationRecord> continuation_kappa(const Couplings& base,
                                                   const PerturbationProfile& pert,
                                                   const std::vector<double>& kappa_list,
                                                   const RadialGrid& grid, double tol,
                                                   int max_iter) {
  for (size_t i = 0; i < kappa_list.size(); ++i) {
    if (!(kappa_list[i] > 0.0 && kappa_list[i] < 1.0))
      throw std::invalid_argument("continuation_kappa: kappa values must lie in (0,1)");
    if (i > 0 && !(kappa_list[i] > kappa_list[i - 1]))
      throw std::invalid_argument("continuation_kappa: kappa list must be strictly increasing");
  }

  std::vector<ContinuationRecord> out;
  FieldPair z = default_init(grid);
  for (size_t i = 0; i < kappa_list.size(); ++i) {
    Couplings c = base;
    c.kappa0 = kappa_list[i];
    try {
      GroundStateReport rep = solve_ground_state(z, c, pert, tol, max_iter);
      z = rep.z;  // warm start for the next kappa
      out.push_back({kappa_list[i], rep.energy, rep.z.u.maxCoeff(), rep.z.v.maxCoeff(),
                     rep.iterations, rep.converged});
    } catch (const std::runtime_error& e) {
      throw std::runtime_error("continuation_kappa at kappa0=" +
                               std::to_string(kappa_list[i]) + ": " + e.what());
    }
  }
  return out;
}

FieldPair default_init(const RadialGrid& grid, double offset) {
  Vector bump(grid.count);
  for (Index i = 0; i < grid.count; ++i)
    bump[i] = 1.0 / std::cosh(grid.nodes[i] - offset);
  return FieldPair(grid, bump, bump);
}

} // namespace cnls
