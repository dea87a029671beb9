#ifndef CNLS_GRID_HPP
#define CNLS_GRID_HPP

#include <Eigen/Core>
#include <stdexcept>

namespace cnls {

using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

// Radially reduced mesh on [0,R] (N=2,3) or the symmetric interval [-R,R]
// (N=1), with quadrature weights against the measure omega_N r^{N-1} dr.
// Weights integrate piecewise-linear functions of r exactly, so the weight
// sum is the exact measure of the truncated ball.
struct RadialGrid {
  int dimension = 1;     // N in {1,2,3}
  double radius = 0.0;   // truncation radius R
  Index count = 0;       // node count M
  double spacing = 0.0;  // uniform h
  Vector nodes;          // r_i (or x_i for N=1), strictly increasing
  Vector weights;        // quadrature weights q_i > 0
  Vector face_coeff;     // size M-1: omega * I_{N-1}(cell) / h^2, the
                         // stiffness coefficient of each mesh cell

  bool full_line() const { return dimension == 1; }
};

RadialGrid make_grid(int dimension, double radius, Index count);

// Grid function with its mesh. Entries are validated finite on construction.
struct ScalarField {
  const RadialGrid* grid = nullptr;
  Vector values;

  ScalarField() = default;
  ScalarField(const RadialGrid& g, Vector v);
};

// Pointwise radial Laplacian f'' + (N-1)/r f', second-order central
// differences, Dirichlet zero outside [0,R]; at r=0 the regularized form
// N f''(0) is used (f'(0)=0 by symmetry).
Vector apply_laplacian(const RadialGrid& g, const Vector& f);
ScalarField apply_laplacian(const ScalarField& f);

// Quadrature: sum q_i f_i.
double integrate(const RadialGrid& g, const Vector& f);
double integrate(const ScalarField& f);

// Dirichlet form D(f,g) = int grad f . grad g over the truncated domain,
// assembled cell by cell from face_coeff. Exactly symmetric, positive
// semidefinite; this is the bilinear form behind the H^1 energy terms.
double dirichlet_form(const RadialGrid& g, const Vector& f, const Vector& h);

// Stiffness application (Kf)_i, the vector dual of dirichlet_form:
// dirichlet_form(f,h) == h . stiffness_apply(f).
Vector stiffness_apply(const RadialGrid& g, const Vector& f);

// H^1 norm squared: dirichlet_form(f,f) + int f^2.
double h1_norm_sq(const RadialGrid& g, const Vector& f);

// Samples f (known at grid nodes, zero outside) at arbitrary coordinates by
// cubic Catmull-Rom interpolation.
double sample_cubic(const RadialGrid& g, const Vector& f, double x);

} // namespace cnls

#endif
