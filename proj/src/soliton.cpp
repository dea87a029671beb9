#include "cnls/soliton.hpp"

#include "cnls/tridiag.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace cnls {

namespace {

enum class ShotOutcome { Decayed, TurnedUp, CrossedZero };

double radial_accel(int n, double r, double w, double wp) {
  const double force = w - w * w * w;
  if (n == 1) return force;
  if (r < 1e-10) return force / n;
  return force - (n - 1) / r * wp;
}

// Integrates the shooting ODE from r=0 with peak height s. When profile is
// non-null, records w at multiples of the grid spacing.
ShotOutcome shoot(int n, double s, double rmax, double h, std::vector<double>* profile) {
  const int substeps = 4;
  const double dt = h / substeps;
  double r = 0.0, w = s, wp = 0.0;
  if (profile) profile->push_back(w);
  const auto steps = static_cast<long>(std::llround(rmax / dt));
  for (long k = 0; k < steps; ++k) {
    const double k1w = wp, k1p = radial_accel(n, r, w, wp);
    const double k2w = wp + 0.5 * dt * k1p,
                 k2p = radial_accel(n, r + 0.5 * dt, w + 0.5 * dt * k1w, wp + 0.5 * dt * k1p);
    const double k3w = wp + 0.5 * dt * k2p,
                 k3p = radial_accel(n, r + 0.5 * dt, w + 0.5 * dt * k2w, wp + 0.5 * dt * k2p);
    const double k4w = wp + dt * k3p,
                 k4p = radial_accel(n, r + dt, w + dt * k3w, wp + dt * k3p);
    w += dt / 6.0 * (k1w + 2.0 * k2w + 2.0 * k3w + k4w);
    wp += dt / 6.0 * (k1p + 2.0 * k2p + 2.0 * k3p + k4p);
    r += dt;
    if (profile && (k + 1) % substeps == 0) profile->push_back(w);
    if (w < 0.0) {
      if (profile) break;
      return ShotOutcome::CrossedZero;
    }
    if (wp > 0.0 && w < 1.0) {
      if (profile) break;
      return ShotOutcome::TurnedUp;
    }
  }
  if (profile)
    while (profile->size() < static_cast<size_t>(std::llround(rmax / h)) + 1) profile->push_back(0.0);
  return ShotOutcome::Decayed;
}

// Newton iteration on the discrete residual -Lap w + w - w^3 with the
// pointwise radial stencil; Dirichlet rows at the outer boundary.
void newton_polish(const RadialGrid& g, Vector& w, double tol) {
  const Index m = g.count;
  const double h = g.spacing;
  const int n = g.dimension;
  const double h2 = h * h;

  for (int it = 0; it < 60; ++it) {
    Vector res = apply_laplacian(g, w);
    res = -res + w - w.array().cube().matrix();
    // boundary rows pin w to zero
    res[m - 1] = w[m - 1];
    if (n == 1) res[0] = w[0];
    if (res.lpNorm<Eigen::Infinity>() < tol) return;

    Vector sub(m - 1), diag(m), sup(m - 1);
    for (Index i = 1; i + 1 < m; ++i) {
      const double drift = n >= 2 ? (n - 1) / (2.0 * h * g.nodes[i]) : 0.0;
      diag[i] = 2.0 / h2 + 1.0 - 3.0 * w[i] * w[i];
      sub[i - 1] = -1.0 / h2 + drift;  // coefficient of w_{i-1} in row i
      sup[i] = -1.0 / h2 - drift;      // coefficient of w_{i+1} in row i
    }
    if (n >= 2) {
      diag[0] = 2.0 * n / h2 + 1.0 - 3.0 * w[0] * w[0];
      sup[0] = -2.0 * n / h2;
    } else {
      diag[0] = 1.0;
      sup[0] = 0.0;
    }
    diag[m - 1] = 1.0;
    sub[m - 2] = 0.0;

    Vector delta = solve_tridiagonal(sub, diag, sup, -res);
    w += delta;
    // the residual floor is ~eps*|w|/h^2; stop once steps are below round-off
    if (delta.lpNorm<Eigen::Infinity>() < 1e-14 * (1.0 + w.lpNorm<Eigen::Infinity>())) return;
  }
  throw std::runtime_error("solve_scalar: no convergence in Newton polish");
}

} // namespace

SolitonSolution closed_form_soliton(const RadialGrid& grid) {
  if (grid.dimension != 1)
    throw std::invalid_argument("closed_form_soliton: closed form requires N=1");
  Vector w = grid.nodes.array().unaryExpr([](double x) {
    return std::sqrt(2.0) / std::cosh(x);
  });
  Vector res = -apply_laplacian(grid, w) + w - w.array().cube().matrix();
  SolitonSolution sol{ScalarField(grid, std::move(w)), std::sqrt(2.0), 0.0,
                      SolitonMethod::ClosedForm};
  // boundary rows see the zero extension; the analytic tail there is ~1e-9
  sol.residual = res.lpNorm<Eigen::Infinity>();
  return sol;
}

SolitonSolution solve_scalar(const RadialGrid& grid, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("solve_scalar: tol must be positive");
  if (grid.dimension == 1 && grid.count % 2 == 0)
    throw std::invalid_argument("solve_scalar: N=1 grid needs an odd node count (node at x=0)");

  const int n = grid.dimension;
  const double rmax = grid.radius;
  const double h = grid.spacing;

  double lo = 0.1, hi = 10.0;
  auto classify = [&](double s) { return shoot(n, s, rmax, h, nullptr); };
  if (classify(lo) != ShotOutcome::TurnedUp || classify(hi) == ShotOutcome::TurnedUp) {
    lo = 0.01;
    hi = 100.0;
    if (classify(lo) != ShotOutcome::TurnedUp || classify(hi) == ShotOutcome::TurnedUp)
      throw std::runtime_error("solve_scalar: shooting bracket not found");
  }
  for (int it = 0; it < 200 && hi - lo > 1e-13 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (classify(mid) == ShotOutcome::TurnedUp)
      lo = mid;
    else
      hi = mid;
  }
  const double s = 0.5 * (lo + hi);

  std::vector<double> half;
  shoot(n, s, rmax, h, &half);

  Vector w(grid.count);
  if (n == 1) {
    // mirror the half-line profile onto the symmetric grid
    const Index c = (grid.count - 1) / 2;
    for (Index i = 0; i < grid.count; ++i) {
      const auto j = static_cast<size_t>(std::llabs(i - c));
      w[i] = j < half.size() ? half[j] : 0.0;
    }
  } else {
    for (Index i = 0; i < grid.count; ++i)
      w[i] = static_cast<size_t>(i) < half.size() ? half[i] : 0.0;
  }

  newton_polish(grid, w, tol);

  Vector res = -apply_laplacian(grid, w) + w - w.array().cube().matrix();
  SolitonSolution sol{ScalarField(grid, w), w.maxCoeff(), res.lpNorm<Eigen::Infinity>(),
                      SolitonMethod::Shooting};
  return sol;
}

} // namespace cnls
