#ifndef SHELLSPEC_SPARSE_HPP
#define SHELLSPEC_SPARSE_HPP

#include <vector>

namespace shellspec {

/// Symmetric sparse matrix, upper triangle stored in compressed-sparse-row
/// form with sorted unique column indices per row.
struct SparseSym {
  int n = 0;
  std::vector<int> row_ptr;  // size n+1
  std::vector<int> col_idx;  // j >= i entries only
  std::vector<double> values;

  /// y = A x with the symmetric part expanded.
  void multiply(const double* x, double* y) const;

  double max_diag() const;
};

struct Triplet {
  int i, j;
  double v;
};

/// Builds a SparseSym from triplets; entries are folded into the upper
/// triangle and duplicates summed.
SparseSym sparse_from_triplets(int n, std::vector<Triplet> triplets);

}  // namespace shellspec

#endif  // SHELLSPEC_SPARSE_HPP
