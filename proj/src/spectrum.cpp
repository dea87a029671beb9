#include "cnls/spectrum.hpp"

#include "cnls/tridiag.hpp"

#include <cmath>
#include <stdexcept>

namespace cnls {

namespace {

// Node subset carrying the eigenproblem: outer Dirichlet nodes dropped, and
// for N=1 even parity the problem is restricted to the half line x >= 0
// (natural boundary at x=0 encodes psi'(0)=0).
struct NodeSet {
  std::vector<Index> nodes;  // grid indices, increasing
  Vector mass;               // quadrature weight per kept node
  Vector face;               // stiffness coefficient of the cell to the right
  bool left_dirichlet = false;  // kept set has a pinned neighbor on the left
};

NodeSet select_nodes(const RadialGrid& g, Parity parity) {
  NodeSet s;
  Index first = 0;
  if (g.dimension == 1) {
    if (parity == Parity::Even) {
      if (g.count % 2 == 0)
        throw std::invalid_argument("spectrum: even-parity solve needs an odd node count");
      first = (g.count - 1) / 2;
    } else {
      first = 1;
      s.left_dirichlet = true;
    }
  }
  const Index last = g.count - 2;  // drop the outer Dirichlet node
  if (last < first + 1) throw std::invalid_argument("spectrum: grid too small");
  for (Index i = first; i <= last; ++i) s.nodes.push_back(i);
  const auto m = static_cast<Index>(s.nodes.size());
  s.mass.resize(m);
  s.face.resize(m);
  for (Index k = 0; k < m; ++k) {
    const Index i = s.nodes[k];
    s.mass[k] = g.weights[i];
    s.face[k] = g.face_coeff[i];  // cell (i, i+1); last one couples to the pinned node
  }
  if (g.dimension == 1 && parity == Parity::Even) s.mass[0] = 0.5 * g.weights[first];
  return s;
}

// A = K + M on the kept nodes (Dirichlet contributions fold into the diagonal).
SymmetricTridiagonal assemble_h1(const RadialGrid& g, const NodeSet& s) {
  const auto m = static_cast<Index>(s.nodes.size());
  SymmetricTridiagonal A;
  A.diag = s.mass;
  A.off = Vector::Zero(m - 1);
  for (Index k = 0; k < m; ++k) {
    A.diag[k] += s.face[k];
    if (k + 1 < m)
      A.diag[k + 1] += s.face[k];
    if (k + 1 < m) A.off[k] = -s.face[k];
  }
  if (s.left_dirichlet) A.diag[0] += g.face_coeff[s.nodes[0] - 1];
  return A;
}

double soliton_value(const SolitonSolution& w, const RadialGrid& g, Index i) {
  if (w.profile.grid == &g) return w.profile.values[i];
  return sample_cubic(*w.profile.grid, w.profile.values, g.nodes[i]);
}

} // namespace

int pencil_count_below(const SymmetricTridiagonal& A, const Vector& B, double lambda) {
  const Index m = A.diag.size();
  int count = 0;
  double d = A.diag[0] - lambda * B[0];
  if (d == 0.0) d = -1e-300;
  if (d < 0.0) ++count;
  for (Index i = 1; i < m; ++i) {
    d = A.diag[i] - lambda * B[i] - A.off[i - 1] * A.off[i - 1] / d;
    if (d == 0.0) d = -1e-300;
    if (d < 0.0) ++count;
  }
  return count;
}

double pencil_eigenvalue(const SymmetricTridiagonal& A, const Vector& B, int k) {
  if (k < 0 || k >= A.diag.size())
    throw std::invalid_argument("pencil_eigenvalue: index out of range");
  double lo = -1.0, hi = 1.0;
  while (pencil_count_below(A, B, lo) > k) {
    lo *= 2.0;
    if (lo < -1e18) throw std::runtime_error("pencil_eigenvalue: no lower bound found");
  }
  while (pencil_count_below(A, B, hi) <= k) {
    hi *= 2.0;
    if (hi > 1e18)
      throw std::runtime_error("pencil_eigenvalue: eigenvalue out of range (B nearly singular)");
  }
  for (int it = 0; it < 200 && hi - lo > 1e-14 * std::max(1.0, std::abs(hi)); ++it) {
    const double mid = 0.5 * (lo + hi);
    if (pencil_count_below(A, B, mid) <= k)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

Vector pencil_eigenvector(const SymmetricTridiagonal& A, const Vector& B, double lambda) {
  const Index m = A.diag.size();
  Vector x = Vector::Constant(m, 1.0 / std::sqrt(static_cast<double>(m)));
  double delta = 1e-10 * (1.0 + std::abs(lambda));
  for (int attempt = 0; attempt < 8; ++attempt) {
    const double sigma = lambda + delta;
    Vector sub = A.off, sup = A.off;
    Vector diag = A.diag - sigma * B;
    bool ok = true;
    Vector y = x;
    for (int it = 0; it < 6; ++it) {
      y = solve_tridiagonal(sub, diag, sup, B.cwiseProduct(y));
      if (!y.allFinite() || y.norm() == 0.0) {
        ok = false;
        break;
      }
      y /= y.norm();
    }
    if (ok) {
      const double bnorm = std::sqrt(y.dot(B.cwiseProduct(y)));
      if (bnorm > 0.0) return y / bnorm;
      return y;
    }
    delta *= 10.0;
  }
  throw std::runtime_error("pencil_eigenvector: inverse iteration failed");
}

EigenSolveResult weighted_eigenpairs(const SolitonSolution& w, const RadialGrid& grid,
                                     int count, Parity parity) {
  if (count < 1) throw std::invalid_argument("weighted_eigenvalues: count must be positive");
  NodeSet s = select_nodes(grid, parity);
  SymmetricTridiagonal A = assemble_h1(grid, s);
  const auto m = static_cast<Index>(s.nodes.size());
  Vector B(m);
  double wmax = 0.0;
  for (Index k = 0; k < m; ++k) {
    const double wv = soliton_value(w, grid, s.nodes[k]);
    B[k] = s.mass[k] * wv * wv;
    wmax = std::max(wmax, std::abs(wv));
  }
  if (wmax < 1e-12)
    throw std::invalid_argument("weighted_eigenvalues: weight degenerate (w^2 vanishes)");

  EigenSolveResult out;
  out.node_map = s.nodes;
  for (int k = 0; k < count; ++k) {
    const double lam = pencil_eigenvalue(A, B, k);
    out.values.push_back(lam);
    out.vectors.push_back(pencil_eigenvector(A, B, lam));
  }
  return out;
}

std::vector<double> weighted_eigenvalues(const SolitonSolution& w, const RadialGrid& grid,
                                         int count, Parity parity) {
  NodeSet s = select_nodes(grid, parity);
  SymmetricTridiagonal A = assemble_h1(grid, s);
  const auto m = static_cast<Index>(s.nodes.size());
  Vector B(m);
  double wmax = 0.0;
  for (Index k = 0; k < m; ++k) {
    const double wv = soliton_value(w, grid, s.nodes[k]);
    B[k] = s.mass[k] * wv * wv;
    wmax = std::max(wmax, std::abs(wv));
  }
  if (wmax < 1e-12)
    throw std::invalid_argument("weighted_eigenvalues: weight degenerate (w^2 vanishes)");
  std::vector<double> vals;
  for (int k = 0; k < count; ++k) vals.push_back(pencil_eigenvalue(A, B, k));
  return vals;
}

DecoupledPair decouple(const SynchronizedSolution& s, const Couplings& c,
                       const SolitonSolution& w, const RadialGrid& grid) {
  if (s.branch == SynchronizedBranch::Z3 || s.branch == SynchronizedBranch::Z4)
    throw std::invalid_argument("decouple: opposite-sign branches are not covered");
  if (std::abs(c.p - 4.0) > 1e-12)
    throw std::invalid_argument("decouple: requires p=4");
  if (c.a0_profile || c.b0_profile || c.a0 != c.b0)
    throw std::invalid_argument("decouple: requires a0=b0");
  if (!(c.beta0 > -1.0)) throw std::invalid_argument("decouple: requires beta0 > -1");

  DecoupledPair d;
  d.a.w2_coeff = 3.0;
  d.a.shift = 0.0;
  d.b.w2_coeff = (3.0 - c.beta0) / (1.0 + c.beta0);
  d.b.shift = -2.0 * c.kappa0 / (1.0 - c.kappa0);

  Vector pa(grid.count), pb(grid.count);
  for (Index i = 0; i < grid.count; ++i) {
    const double wv = soliton_value(w, grid, i);
    pa[i] = d.a.w2_coeff * wv * wv;
    pb[i] = d.b.w2_coeff * wv * wv + d.b.shift;
  }
  d.a.potential = ScalarField(grid, std::move(pa));
  d.b.potential = ScalarField(grid, std::move(pb));
  return d;
}

double kernel_gap(const ScalarProblem& prob, Parity parity) {
  const RadialGrid& g = *prob.potential.grid;
  NodeSet s = select_nodes(g, parity);
  SymmetricTridiagonal A = assemble_h1(g, s);
  const auto m = static_cast<Index>(s.nodes.size());
  for (Index k = 0; k < m; ++k)
    A.diag[k] -= s.mass[k] * prob.potential.values[s.nodes[k]];
  const Vector& B = s.mass;

  const int n0 = pencil_count_below(A, B, 0.0);
  double gap = 1e300;
  if (n0 > 0) gap = std::min(gap, std::abs(pencil_eigenvalue(A, B, n0 - 1)));
  if (n0 < m) gap = std::min(gap, std::abs(pencil_eigenvalue(A, B, n0)));
  return gap;
}

SpectrumReport nondegeneracy_check(const Couplings& c, double w0, const SolitonSolution& w,
                                   const RadialGrid& grid) {
  if (!(c.beta0 > -1.0))
    throw std::invalid_argument("nondegeneracy_check: beta0 <= -1 rejected");
  if (std::abs(c.p - 4.0) > 1e-12)
    throw std::invalid_argument("nondegeneracy_check: requires p=4");
  if (!(c.kappa0 > 0.0 && c.kappa0 < 1.0))
    throw std::invalid_argument("nondegeneracy_check: requires 0 < kappa0 < 1");

  SpectrumReport rep;
  rep.k_indicator =
      (3.0 - c.beta0) / (1.0 + c.beta0) * w0 * w0 - 2.0 * c.kappa0 / (1.0 - c.kappa0);
  rep.verdict =
      (c.beta0 >= 3.0 || rep.k_indicator <= 0.0) ? "nondegenerate" : "inconclusive";

  // discrete cross-check: kernels of both decoupled scalar problems
  ScalarProblem pa, pb;
  pa.w2_coeff = 3.0;
  pb.w2_coeff = (3.0 - c.beta0) / (1.0 + c.beta0);
  pb.shift = -2.0 * c.kappa0 / (1.0 - c.kappa0);
  Vector va(grid.count), vb(grid.count);
  for (Index i = 0; i < grid.count; ++i) {
    const double wv = soliton_value(w, grid, i);
    va[i] = pa.w2_coeff * wv * wv;
    vb[i] = pb.w2_coeff * wv * wv + pb.shift;
  }
  pa.potential = ScalarField(grid, std::move(va));
  pb.potential = ScalarField(grid, std::move(vb));

  const double cutoff = 0.01;
  rep.kernel_dimension = (kernel_gap(pa) < cutoff ? 1 : 0) + (kernel_gap(pb) < cutoff ? 1 : 0);
  rep.eigenvalues = weighted_eigenvalues(w, grid, 2, Parity::Even);
  return rep;
}

SpectrumReport nondegeneracy_check(const Couplings& c, double w0) {
  static const RadialGrid grid = make_grid(1, 20.0, 1201);
  static const SolitonSolution w = closed_form_soliton(grid);
  return nondegeneracy_check(c, w0, w, grid);
}

} // namespace cnls
