#include "cnls/grid.hpp"

#include <doctest.h>

#include <cmath>

using namespace cnls;

TEST_CASE("make_grid validates its arguments") {
  CHECK_THROWS_AS(make_grid(4, 10.0, 101), std::invalid_argument);
  CHECK_THROWS_AS(make_grid(0, 10.0, 101), std::invalid_argument);
  CHECK_THROWS_AS(make_grid(1, -1.0, 101), std::invalid_argument);
  CHECK_THROWS_AS(make_grid(1, 10.0, 2), std::invalid_argument);
}

TEST_CASE("weights integrate constants to the exact ball measure") {
  const double pi = 3.14159265358979323846;
  struct {
    int n;
    double R;
    double measure;
  } cases[] = {{1, 20.0, 40.0}, {2, 15.0, pi * 225.0}, {3, 15.0, 4.0 / 3.0 * pi * 3375.0}};
  for (const auto& c : cases) {
    RadialGrid g = make_grid(c.n, c.R, 801);
    const double sum = g.weights.sum();
    CHECK(std::abs(sum - c.measure) / c.measure < 1e-10);
  }
}

TEST_CASE("quadrature of sech^2 on the line") {
  RadialGrid g = make_grid(1, 20.0, 2001);
  Vector f = g.nodes.array().unaryExpr([](double x) {
    const double s = 1.0 / std::cosh(x);
    return s * s;
  });
  CHECK(std::abs(integrate(g, f) - 2.0) < 1e-8);
}

TEST_CASE("pointwise laplacian of r^2 is 2N in the interior") {
  for (int n : {1, 2, 3}) {
    RadialGrid g = make_grid(n, 10.0, 401);
    Vector f = g.nodes.array().square();
    Vector lap = apply_laplacian(g, f);
    // skip rows touching the zero extension outside the grid
    for (Index i = 1; i + 1 < g.count; ++i)
      CHECK(std::abs(lap[i] - 2.0 * n) < 1e-8);
    if (n >= 2) CHECK(std::abs(lap[0] - 2.0 * n) < 1e-8);
  }
}

TEST_CASE("pointwise laplacian is second-order accurate") {
  for (int n : {1, 2, 3}) {
    auto error = [&](Index m) {
      RadialGrid g = make_grid(n, 10.0, m);
      Vector f = g.nodes.array().unaryExpr([](double r) { return std::exp(-r * r); });
      Vector lap = apply_laplacian(g, f);
      double err = 0.0;
      for (Index i = 0; i + 1 < g.count; ++i) {
        if (n == 1 && i == 0) continue;
        const double r = g.nodes[i];
        const double exact = (4.0 * r * r - 2.0 * n) * std::exp(-r * r);
        err = std::max(err, std::abs(lap[i] - exact));
      }
      return err;
    };
    const double e1 = error(201), e2 = error(401);
    CHECK(e1 / e2 > 3.5);  // ~4x per halving of h
    CHECK(e1 / e2 < 4.5);
  }
}

TEST_CASE("dirichlet form is exactly symmetric and matches stiffness_apply") {
  for (int n : {1, 2, 3}) {
    RadialGrid g = make_grid(n, 8.0, 257);
    Vector f = g.nodes.array().unaryExpr([](double r) { return std::exp(-r) * (1 + r); });
    Vector h = g.nodes.array().unaryExpr([](double r) { return std::cos(r) * std::exp(-0.3 * r); });
    CHECK(dirichlet_form(g, f, h) == dirichlet_form(g, h, f));
    CHECK(dirichlet_form(g, f, f) >= 0.0);
    const double via_stiffness = h.dot(stiffness_apply(g, f));
    CHECK(std::abs(via_stiffness - dirichlet_form(g, f, h)) <
          1e-12 * (1.0 + std::abs(via_stiffness)));
  }
}

TEST_CASE("h1 norm of the sech soliton matches 16/3") {
  RadialGrid g = make_grid(1, 20.0, 4001);
  Vector w = g.nodes.array().unaryExpr([](double x) { return std::sqrt(2.0) / std::cosh(x); });
  CHECK(std::abs(h1_norm_sq(g, w) - 16.0 / 3.0) / (16.0 / 3.0) < 1e-5);
  Vector w4 = w.array().pow(4.0);
  CHECK(std::abs(integrate(g, w4) - 16.0 / 3.0) < 1e-6);
}

TEST_CASE("scalar field validates size and finiteness") {
  RadialGrid g = make_grid(1, 5.0, 51);
  CHECK_THROWS_AS(ScalarField(g, Vector::Zero(7)), std::invalid_argument);
  Vector bad = Vector::Zero(51);
  bad[3] = std::nan("");
  CHECK_THROWS_AS(ScalarField(g, bad), std::invalid_argument);
}

TEST_CASE("cubic sampling reproduces nodes and decays to zero outside") {
  RadialGrid g = make_grid(1, 10.0, 401);
  Vector f = g.nodes.array().unaryExpr([](double x) { return std::exp(-x * x / 4.0); });
  for (Index i : {Index(0), Index(100), Index(200), Index(400)})
    CHECK(sample_cubic(g, f, g.nodes[i]) == doctest::Approx(f[i]).epsilon(1e-12));
  CHECK(sample_cubic(g, f, 11.0) == 0.0);
  CHECK(std::abs(sample_cubic(g, f, 0.512345) - std::exp(-0.512345 * 0.512345 / 4.0)) < 1e-6);
}
