#ifndef SHELLSPEC_EIGENSOLVER_HPP
#define SHELLSPEC_EIGENSOLVER_HPP

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <memory>
#include <vector>

#include "shellspec/sparse.hpp"

namespace shellspec {

Eigen::SparseMatrix<double> to_eigen(const SparseSym& a);

/// Sparse LDL^T factorization with fill-reducing ordering.
class Factor {
 public:
  explicit Factor(const SparseSym& a);
  explicit Factor(const Eigen::SparseMatrix<double>& a);

  Eigen::VectorXd solve(const Eigen::VectorXd& b) const;
  int dimension() const;

 private:
  std::shared_ptr<Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>>> ldlt_;
};

struct EigenResult {
  std::vector<double> values;                 ///< ascending
  std::vector<Eigen::VectorXd> vectors;       ///< M-orthonormal
  std::vector<double> residuals;              ///< ||Kx - lambda Mx|| / ||x||_M
  int iterations = 0;
  std::vector<double> ritz_history;           ///< best Ritz value per step, first sweep
};

/// Smallest `count` eigenpairs of K x = lambda M x by shift-invert Lanczos
/// with full M-reorthogonalization and single-vector deflation restarts.
/// Deterministic: fixed starting vectors and iteration schedule.
EigenResult smallest_eigs(const SparseSym& k, const SparseSym& m, int count,
                          double shift = 0.0, double tol = 1e-9);

}  // namespace shellspec

#endif  // SHELLSPEC_EIGENSOLVER_HPP
