#include "cnls/grid.hpp"

#include <cmath>

namespace cnls {

namespace {

// omega_N: surface factor of the radial measure. For N=1 the grid covers the
// whole line, so the factor is 1.
double surface_factor(int n) {
  switch (n) {
    case 1: return 1.0;
    case 2: return 2.0 * M_PI;
    case 3: return 4.0 * M_PI;
  }
  return 0.0;
}

// int_a^b r^k dr
double power_integral(int k, double a, double b) {
  return (std::pow(b, k + 1) - std::pow(a, k + 1)) / (k + 1);
}

} // namespace

RadialGrid make_grid(int dimension, double radius, Index count) {
  if (dimension < 1 || dimension > 3)
    throw std::invalid_argument("make_grid: unsupported dimension (N must be 1, 2 or 3)");
  if (!(radius > 0.0))
    throw std::invalid_argument("make_grid: truncation radius must be positive");
  if (count < 3)
    throw std::invalid_argument("make_grid: node count must be at least 3");

  RadialGrid g;
  g.dimension = dimension;
  g.radius = radius;
  g.count = count;

  const double lo = dimension == 1 ? -radius : 0.0;
  g.spacing = (radius - lo) / static_cast<double>(count - 1);
  g.nodes = Vector::LinSpaced(count, lo, radius);

  const int k = dimension - 1;
  const double omega = surface_factor(dimension);
  const double h = g.spacing;

  g.face_coeff.resize(count - 1);
  for (Index i = 0; i + 1 < count; ++i)
    g.face_coeff[i] = omega * power_integral(k, g.nodes[i], g.nodes[i + 1]) / (h * h);

  // Hat-function weights: q_i = omega * int hat_i(r) r^k dr. Exact for
  // piecewise-linear integrands, so sum(q) is the exact ball measure.
  g.weights = Vector::Zero(count);
  for (Index i = 0; i < count; ++i) {
    if (i > 0) {
      const double a = g.nodes[i - 1], b = g.nodes[i];
      g.weights[i] += omega * (power_integral(k + 1, a, b) - a * power_integral(k, a, b)) / h;
    }
    if (i + 1 < count) {
      const double b = g.nodes[i], c = g.nodes[i + 1];
      g.weights[i] += omega * (c * power_integral(k, b, c) - power_integral(k + 1, b, c)) / h;
    }
  }
  return g;
}

ScalarField::ScalarField(const RadialGrid& g, Vector v) : grid(&g), values(std::move(v)) {
  if (values.size() != g.count)
    throw std::invalid_argument("ScalarField: length must match grid node count");
  if (!values.allFinite())
    throw std::invalid_argument("ScalarField: entries must be finite");
}

Vector apply_laplacian(const RadialGrid& g, const Vector& f) {
  if (f.size() != g.count)
    throw std::invalid_argument("apply_laplacian: length must match grid node count");
  const Index m = g.count;
  const double h = g.spacing;
  const int n = g.dimension;
  Vector out(m);

  for (Index i = 0; i < m; ++i) {
    const double fm = i > 0 ? f[i - 1] : (n == 1 ? 0.0 : f[1]);
    const double fp = i + 1 < m ? f[i + 1] : 0.0;
    if (n >= 2 && i == 0) {
      out[i] = n * 2.0 * (f[1] - f[0]) / (h * h);
      continue;
    }
    out[i] = (fp - 2.0 * f[i] + fm) / (h * h);
    if (n >= 2) out[i] += (n - 1) / g.nodes[i] * (fp - fm) / (2.0 * h);
  }
  return out;
}

ScalarField apply_laplacian(const ScalarField& f) {
  return ScalarField(*f.grid, apply_laplacian(*f.grid, f.values));
}

double integrate(const RadialGrid& g, const Vector& f) {
  if (f.size() != g.count)
    throw std::invalid_argument("integrate: length must match grid node count");
  return g.weights.dot(f);
}

double integrate(const ScalarField& f) { return integrate(*f.grid, f.values); }

double dirichlet_form(const RadialGrid& g, const Vector& f, const Vector& h) {
  const Index m = g.count;
  double acc = 0.0;
  for (Index i = 0; i + 1 < m; ++i)
    acc += g.face_coeff[i] * ((f[i + 1] - f[i]) * (h[i + 1] - h[i]));
  return acc;
}

Vector stiffness_apply(const RadialGrid& g, const Vector& f) {
  const Index m = g.count;
  Vector out = Vector::Zero(m);
  for (Index i = 0; i + 1 < m; ++i) {
    const double flux = g.face_coeff[i] * (f[i + 1] - f[i]);
    out[i] -= flux;
    out[i + 1] += flux;
  }
  return out;
}

double h1_norm_sq(const RadialGrid& g, const Vector& f) {
  return dirichlet_form(g, f, f) + integrate(g, f.cwiseAbs2());
}

double sample_cubic(const RadialGrid& g, const Vector& f, double x) {
  const double lo = g.nodes[0];
  const double t = (x - lo) / g.spacing;
  const Index i = static_cast<Index>(std::floor(t));
  auto at = [&](Index j) -> double {
    // zero extension outside; for N>=2 reflect across r=0 (even symmetry)
    if (j < 0) return g.dimension >= 2 && -j < g.count ? f[-j] : 0.0;
    return j < g.count ? f[j] : 0.0;
  };
  const double s = t - static_cast<double>(i);
  const double f0 = at(i - 1), f1 = at(i), f2 = at(i + 1), f3 = at(i + 2);
  // Catmull-Rom
  return f1 + 0.5 * s * (f2 - f0 + s * (2.0 * f0 - 5.0 * f1 + 4.0 * f2 - f3 +
                                        s * (3.0 * (f1 - f2) + f3 - f0)));
}

} // namespace cnls
