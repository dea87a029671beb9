#ifndef CNLS_TRIDIAG_HPP
#define CNLS_TRIDIAG_HPP

#include <Eigen/Core>

namespace cnls {

// Thomas algorithm for a general tridiagonal system
//   sub[i-1] x[i-1] + diag[i] x[i] + sup[i] x[i+1] = rhs[i].
// No pivoting; callers pass diagonally dominant or shifted systems.
Eigen::VectorXd solve_tridiagonal(const Eigen::VectorXd& sub,
                                  const Eigen::VectorXd& diag,
                                  const Eigen::VectorXd& sup,
                                  const Eigen::VectorXd& rhs);

} // namespace cnls

#endif
