#include "cnls/ground_state.hpp"

#include <doctest.h>

#include <cmath>

using namespace cnls;

namespace {

Couplings couplings(double beta0, double kappa0) {
  Couplings c;
  c.a0 = 1.0;
  c.b0 = 1.0;
  c.beta0 = beta0;
  c.kappa0 = kappa0;
  c.p = 4.0;
  return c;
}

} // namespace

TEST_CASE("synchronized builder: amplitudes, signs, residual") {
  RadialGrid g = make_grid(1, 20.0, 2001);
  SolitonSolution w = closed_form_soliton(g);
  PerturbationProfile none;
  Couplings c = couplings(1.0, 0.5);

  SynchronizedSolution z1 = build_synchronized(SynchronizedBranch::Z1, c, w, g);
  CHECK(z1.amplitude_u == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(z1.amplitude_v == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(z1.width == doctest::Approx(std::sqrt(0.5)).epsilon(1e-12));
  CHECK(residual_norm(z1.z, c, none) < 1e-4);

  // opposite-sign branches satisfy the amplitude equations with kappa0 -> -kappa0
  SynchronizedSolution z3 = build_synchronized(SynchronizedBranch::Z3, c, w, g);
  CHECK(z3.amplitude_u == doctest::Approx(std::sqrt(1.5 / 2.0)).epsilon(1e-12));
  CHECK(z3.amplitude_v == doctest::Approx(-std::sqrt(1.5 / 2.0)).epsilon(1e-12));
  CHECK(z3.width == doctest::Approx(std::sqrt(1.5)).epsilon(1e-12));
  // wider profile (width sqrt(1.5) vs sqrt(0.5)) scales the O(h^2) stencil error
  CHECK(residual_norm(z3.z, c, none) < 1e-3);

  // decoupled limit: kappa0 -> 0, beta0 = 0 gives (w, w) up to the tiny kappa0
  Couplings c0 = couplings(0.0, 1e-12);
  SynchronizedSolution zd = build_synchronized(SynchronizedBranch::Z1, c0, w, g);
  CHECK(std::abs(zd.amplitude_u - 1.0) < 1e-9);
  CHECK((zd.z.u - w.profile.values).lpNorm<Eigen::Infinity>() < 1e-9);

  Couplings bad = couplings(1.0, 0.5);
  bad.b0 = 2.0;
  CHECK_THROWS_WITH_AS(build_synchronized(SynchronizedBranch::Z1, bad, w, g),
                       doctest::Contains("mu=a0=b0"), std::invalid_argument);
  bad = couplings(-1.5, 0.5);
  CHECK_THROWS_AS(build_synchronized(SynchronizedBranch::Z1, bad, w, g), std::invalid_argument);
}

TEST_CASE("ground state solve reaches the synchronized level") {
  RadialGrid g = make_grid(1, 20.0, 2001);
  SolitonSolution w = closed_form_soliton(g);
  PerturbationProfile none;

  for (auto [b0, k0] : {std::pair{1.0, 0.5}, {3.0, 0.3}, {0.0, 0.9}}) {
    Couplings c = couplings(b0, k0);
    GroundStateReport rep = solve_ground_state(default_init(g), c, none, 1e-6, 20000);
    CHECK(rep.converged);
    CHECK(rep.gradient_sup < 1e-6);
    CHECK(std::abs(rep.energy - synchronized_energy(c)) < 1e-3);
    SynchronizedSolution z1 = build_synchronized(SynchronizedBranch::Z1, c, w, g);
    CHECK((rep.z.u - z1.z.u).lpNorm<Eigen::Infinity>() < 5e-3);
    CHECK((rep.z.v - z1.z.v).lpNorm<Eigen::Infinity>() < 5e-3);
    // positivity and symmetry lock for a0 = b0 and symmetric init
    CHECK(rep.z.u.minCoeff() > -1e-12);
    CHECK((rep.z.u - rep.z.v).lpNorm<Eigen::Infinity>() < 1e-13);
    // on-manifold energy identity: Phi = (1/2 - 1/p) Q on the Nehari manifold
    const double q = nehari_quadratic(rep.z, c, none);
    CHECK(rep.energy == doctest::Approx(0.25 * q).epsilon(1e-6));
    // on-manifold coercivity: Phi >= (1/2-1/p)(1-kappa0) ||z||_E^2
    const double e_norm = h1_norm_sq(g, rep.z.u) + h1_norm_sq(g, rep.z.v);
    CHECK(rep.energy >= 0.25 * (1.0 - k0) * e_norm - 1e-10);
  }
}

TEST_CASE("monotone descent and translation invariance") {
  RadialGrid g = make_grid(1, 20.0, 2001);
  Couplings c = couplings(1.0, 0.5);
  PerturbationProfile none;

  SolverOptions opts;
  opts.tol = 1e-6;
  opts.max_iter = 20000;
  GroundStateReport rep = minimize(default_init(g), c, none, opts);
  for (size_t i = 1; i < rep.energy_trace.size(); ++i)
    CHECK(rep.energy_trace[i] <= rep.energy_trace[i - 1] + 1e-14);

  GroundStateReport shifted = minimize(default_init(g, 4.0), c, none, opts);
  CHECK(shifted.converged);
  CHECK(std::abs(shifted.energy - rep.energy) < 1e-6);
}

TEST_CASE("solver error contracts") {
  RadialGrid g = make_grid(1, 20.0, 801);
  Couplings c = couplings(1.0, 0.5);
  PerturbationProfile none;
  FieldPair zero(g, Vector::Zero(g.count), Vector::Zero(g.count));
  CHECK_THROWS_WITH_AS(solve_ground_state(zero, c, none, 1e-6, 100),
                       doctest::Contains("degenerate"), std::runtime_error);
  CHECK_THROWS_WITH_AS(solve_ground_state(default_init(g), c, none, 1e-14, 3),
                       doctest::Contains("max_iter exceeded"), std::runtime_error);
}

TEST_CASE("perturbed level never exceeds the limit level") {
  RadialGrid g = make_grid(1, 20.0, 1601);
  Couplings c = couplings(1.0, 0.5);
  PerturbationProfile none;
  const double c0 = solve_ground_state(default_init(g), c, none, 1e-6, 20000).energy;

  PerturbationProfile pert;
  pert.a = g.nodes.array().unaryExpr([](double x) { return 0.2 * std::exp(-x * x); });
  const double cpos = solve_ground_state(default_init(g), c, pert, 1e-6, 20000).energy;
  CHECK(cpos <= c0 + 1e-6);

  pert = PerturbationProfile{};
  pert.kappa = g.nodes.array().unaryExpr([](double x) { return 0.05 * std::exp(-x * x); });
  const double ckap = solve_ground_state(default_init(g), c, pert, 1e-6, 20000).energy;
  CHECK(ckap <= c0 + 1e-6);
}

TEST_CASE("kappa continuation: decreasing energies matching the closed form") {
  RadialGrid g = make_grid(1, 20.0, 1201);
  Couplings c = couplings(1.0, 0.5);
  PerturbationProfile none;
  std::vector<double> ks = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
  auto recs = continuation_kappa(c, none, ks, g, 1e-6, 20000);
  REQUIRE(recs.size() == ks.size());
  for (size_t i = 0; i < recs.size(); ++i) {
    CHECK(recs[i].converged);
    Couplings ck = c;
    ck.kappa0 = ks[i];
    CHECK(std::abs(recs[i].energy - synchronized_energy(ck)) < 1e-3);
    if (i) CHECK(recs[i].energy < recs[i - 1].energy);
  }

  auto single = continuation_kappa(c, none, {0.5}, g, 1e-6, 20000);
  GroundStateReport direct = solve_ground_state(default_init(g), c, none, 1e-6, 20000);
  CHECK(std::abs(single[0].energy - direct.energy) < 1e-9);

  CHECK_THROWS_AS(continuation_kappa(c, none, {0.5, 0.3}, g, 1e-6, 100), std::invalid_argument);
  CHECK_THROWS_AS(continuation_kappa(c, none, {0.5, 1.2}, g, 1e-6, 100), std::invalid_argument);
}
