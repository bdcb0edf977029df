#include "shellspec/sparse.hpp"

#include <algorithm>
#include <utility>

namespace shellspec {

void SparseSym::multiply(const double* x, double* y) const {
  for (int i = 0; i < n; ++i) y[i] = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int p = row_ptr[i]; p < row_ptr[i + 1]; ++p) {
      int j = col_idx[p];
      double v = values[p];
      y[i] += v * x[j];
      if (j != i) y[j] += v * x[i];
    }
  }
}

double SparseSym::max_diag() const {
  double m = 0.0;
  for (int i = 0; i < n; ++i) {
    int p = row_ptr[i];
    if (p < row_ptr[i + 1] && col_idx[p] == i) m = std::max(m, values[p]);
  }
  return m;
}

SparseSym sparse_from_triplets(int n, std::vector<Triplet> triplets) {
  for (auto& t : triplets)
    if (t.i > t.j) std::swap(t.i, t.j);
  std::sort(triplets.begin(), triplets.end(), [](const Triplet& a, const Triplet& b) {
    return a.i != b.i ? a.i < b.i : a.j < b.j;
  });

  SparseSym s;
  s.n = n;
  s.row_ptr.assign(n + 1, 0);
  size_t k = 0;
  while (k < triplets.size()) {
    size_t e = k + 1;
    double sum = triplets[k].v;
    while (e < triplets.size() && triplets[e].i == triplets[k].i &&
           triplets[e].j == triplets[k].j) {
      sum += triplets[e].v;
      ++e;
    }
    s.col_idx.push_back(triplets[k].j);
    s.values.push_back(sum);
    ++s.row_ptr[triplets[k].i + 1];
    k = e;
  }
  for (int i = 0; i < n; ++i) s.row_ptr[i + 1] += s.row_ptr[i];
  return s;
}

}  // namespace shellspec
