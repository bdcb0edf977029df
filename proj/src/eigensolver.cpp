#include "shellspec/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

#include "shellspec/common.hpp"

namespace shellspec {

Eigen::SparseMatrix<double> to_eigen(const SparseSym& a) {
  std::vector<Eigen::Triplet<double>> t;
  t.reserve(a.values.size() * 2);
  for (int i = 0; i < a.n; ++i)
    for (int p = a.row_ptr[i]; p < a.row_ptr[i + 1]; ++p) {
      int j = a.col_idx[p];
      t.emplace_back(i, j, a.values[p]);
      if (j != i) t.emplace_back(j, i, a.values[p]);
    }
  Eigen::SparseMatrix<double> s(a.n, a.n);
  s.setFromTriplets(t.begin(), t.end());
  return s;
}

Factor::Factor(const SparseSym& a) : Factor(to_eigen(a)) {}

Factor::Factor(const Eigen::SparseMatrix<double>& a)
    : ldlt_(std::make_shared<Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>>>()) {
  ldlt_->compute(a);
  if (ldlt_->info() != Eigen::Success)
    throw Error(Err::SingularPivot, "LDLT factorization failed");
  const auto& d = ldlt_->vectorD();
  double dmax = d.cwiseAbs().maxCoeff();
  if (dmax == 0.0 || d.cwiseAbs().minCoeff() <= 1e-14 * dmax)
    throw Error(Err::SingularPivot, "near-zero pivot; shift coincides with an eigenvalue");
}

Eigen::VectorXd Factor::solve(const Eigen::VectorXd& b) const { return ldlt_->solve(b); }

int Factor::dimension() const { return static_cast<int>(ldlt_->rows()); }

namespace {

// Fixed-seed splitmix64 starting vector; bitwise reproducible everywhere.
Eigen::VectorXd start_vector(int n, std::uint64_t seed) {
  Eigen::VectorXd v(n);
  std::uint64_t state = 0x9E3779B97F4A7C15ull + seed * 0xBF58476D1CE4E5B9ull;
  for (int i = 0; i < n; ++i) {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    z = z ^ (z >> 31);
    v[i] = static_cast<double>(z >> 11) * (1.0 / 9007199254740992.0) - 0.5;
  }
  return v;
}

// Largest eigenpair of the symmetric tridiagonal (alpha, beta).
void tridiag_top_pair(const std::vector<double>& alpha, const std::vector<double>& beta,
                      double* theta, Eigen::VectorXd* s) {
  int j = static_cast<int>(alpha.size());
  Eigen::MatrixXd t = Eigen::MatrixXd::Zero(j, j);
  for (int i = 0; i < j; ++i) {
    t(i, i) = alpha[i];
    if (i + 1 < j) t(i, i + 1) = t(i + 1, i) = beta[i];
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(t);
  *theta = es.eigenvalues()(j - 1);
  *s = es.eigenvectors().col(j - 1);
}

void fix_sign(Eigen::VectorXd* x) {
  for (int i = 0; i < x->size(); ++i)
    if (std::abs((*x)[i]) > 1e-12) {
      if ((*x)[i] < 0) *x = -*x;
      return;
    }
}

}  // namespace

EigenResult smallest_eigs(const SparseSym& k, const SparseSym& m, int count, double shift,
                          double tol) {
  if (count < 1) throw Error(Err::NotConverged, "count must be >= 1");
  const int n = k.n;
  if (count > n) throw Error(Err::NotConverged, "count exceeds problem dimension");

  Eigen::SparseMatrix<double> kf = to_eigen(k);
  Eigen::SparseMatrix<double> mf = to_eigen(m);
  for (int i = 0; i < n; ++i)
    if (!(mf.coeff(i, i) > 0.0)) throw Error(Err::MassNotSPD, "mass diagonal not positive");

  auto make_factor = [&](double sigma) {
    Eigen::SparseMatrix<double> shifted = kf;
    if (sigma != 0.0) shifted -= sigma * mf;
    return Factor(shifted);
  };

  std::unique_ptr<Factor> factor;
  double sigma = shift;
  try {
    factor = std::make_unique<Factor>(make_factor(sigma));
  } catch (const Error& e) {
    if (e.code() != Err::SingularPivot) throw;
    sigma = -k.max_diag() * 1e-8;  // re-shift just below zero
    factor = std::make_unique<Factor>(make_factor(sigma));
  }

  const int iter_cap = 500;
  const int max_subspace = std::min(n, 250);

  EigenResult result;
  std::vector<Eigen::VectorXd> locked;      // M-orthonormal converged vectors
  std::vector<Eigen::VectorXd> locked_m;    // M * locked, cached
  std::vector<double> locked_vals;
  int total_iter = 0;
  std::uint64_t restart = 0;

  auto m_orthogonalize = [&](Eigen::VectorXd& v) {
    for (size_t l = 0; l < locked.size(); ++l) v -= locked_m[l].dot(v) * locked[l];
  };

  while (static_cast<int>(locked.size()) < count) {
    if (total_iter >= iter_cap)
      throw Error(Err::NotConverged, "iteration cap reached before convergence");

    Eigen::VectorXd v = start_vector(n, restart++);
    m_orthogonalize(v);
    double vnorm = std::sqrt(v.dot(mf * v));
    if (!(vnorm > 0)) throw Error(Err::MassNotSPD, "start vector has nonpositive M-norm");
    v /= vnorm;

    std::vector<Eigen::VectorXd> q{v};
    std::vector<Eigen::VectorXd> mq{mf * v};
    std::vector<double> alpha, beta;
    bool converged_one = false;

    while (total_iter < iter_cap && static_cast<int>(q.size()) <= max_subspace) {
      ++total_iter;
      Eigen::VectorXd w = factor->solve(mq.back());
      m_orthogonalize(w);
      double a = mq.back().dot(w);
      alpha.push_back(a);
      w -= a * q.back();
      if (q.size() >= 2) w -= beta.back() * q[q.size() - 2];
      // full reorthogonalization in the M-inner product
      for (size_t i = 0; i < q.size(); ++i) w -= mq[i].dot(w) * q[i];

      double theta;
      Eigen::VectorXd s;
      tridiag_top_pair(alpha, beta, &theta, &s);
      if (theta > 0) {
        double lam = sigma + 1.0 / theta;
        if (locked.empty()) result.ritz_history.push_back(lam);
        Eigen::VectorXd x = Eigen::VectorXd::Zero(n);
        for (size_t i = 0; i < q.size(); ++i) x += s[i] * q[i];
        Eigen::VectorXd mx = mf * x;
        double xm = std::sqrt(x.dot(mx));
        x /= xm;
        mx /= xm;
        double resid = (kf * x - lam * mx).norm();
        if (resid <= tol) {
          fix_sign(&x);
          locked.push_back(x);
          locked_m.push_back(mf * x);
          locked_vals.push_back(lam);
          result.residuals.push_back(resid);
          converged_one = true;
          break;
        }
      }

      Eigen::VectorXd mw = mf * w;
      double b = std::sqrt(w.dot(mw));
      if (!(b > 1e-14)) break;  // invariant subspace exhausted; restart fresh
      beta.push_back(b);
      q.push_back(w / b);
      mq.push_back(mw / b);
    }

    if (!converged_one && total_iter >= iter_cap)
      throw Error(Err::NotConverged, "iteration cap reached before convergence");
  }

  // Deflation finds eigenvalues in ascending order; sort defensively anyway.
  std::vector<int> order(locked.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return locked_vals[a] < locked_vals[b]; });
  EigenResult out;
  out.ritz_history = std::move(result.ritz_history);
  out.iterations = total_iter;
  for (int idx : order) {
    out.values.push_back(locked_vals[idx]);
    out.vectors.push_back(std::move(locked[idx]));
    out.residuals.push_back(result.residuals[idx]);
  }
  return out;
}

}  // namespace shellspec
