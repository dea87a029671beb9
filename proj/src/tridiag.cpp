#include "cnls/tridiag.hpp"

#include <stdexcept>

namespace cnls {

Eigen::VectorXd solve_tridiagonal(const Eigen::VectorXd& sub,
                                  const Eigen::VectorXd& diag,
                                  const Eigen::VectorXd& sup,
                                  const Eigen::VectorXd& rhs) {
  const Eigen::Index n = diag.size();
  if (sub.size() != n - 1 || sup.size() != n - 1 || rhs.size() != n)
    throw std::invalid_argument("solve_tridiagonal: inconsistent sizes");

  Eigen::VectorXd c(n), d(n), x(n);
  double piv = diag[0];
  if (piv == 0.0) throw std::runtime_error("solve_tridiagonal: zero pivot");
  c[0] = sup.size() ? sup[0] / piv : 0.0;
  d[0] = rhs[0] / piv;
  for (Eigen::Index i = 1; i < n; ++i) {
    piv = diag[i] - sub[i - 1] * c[i - 1];
    if (piv == 0.0) throw std::runtime_error("solve_tridiagonal: zero pivot");
    c[i] = i + 1 < n ? sup[i] / piv : 0.0;
    d[i] = (rhs[i] - sub[i - 1] * d[i - 1]) / piv;
  }
  x[n - 1] = d[n - 1];
  for (Eigen::Index i = n - 2; i >= 0; --i) x[i] = d[i] - c[i] * x[i + 1];
  return x;
}

} // namespace cnls
