#include "shellspec/radial.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace shellspec {

double gamma_k(int k, int n) {
  if (k < 0) throw Error(Err::UnsupportedCombination, "harmonic degree must be >= 0");
  return static_cast<double>(k) * (n + k - 2);
}

namespace {

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

double profile(SpaceForm form, double r) {
  switch (form) {
    case SpaceForm::Euclidean: return r;
    case SpaceForm::Spherical: return std::sin(r);
    case SpaceForm::Hyperbolic: return std::sinh(r);
  }
  return r;
}

// Number of eigenvalues of the symmetric tridiagonal (d, e) below x,
// counted by the Sturm sequence of the shifted LDL^T pivots.
int count_below(const std::vector<double>& d, const std::vector<double>& e, double x) {
  int count = 0;
  double q = 1.0;
  const size_t n = d.size();
  for (size_t i = 0; i < n; ++i) {
    q = d[i] - x - (i > 0 ? e[i - 1] * e[i - 1] / q : 0.0);
    if (q == 0.0) q = -1e-300;
    if (q < 0.0) ++count;
  }
  return count;
}

// l-th smallest eigenvalue (1-based) by bisection.
double bisect_eigenvalue(const std::vector<double>& d, const std::vector<double>& e, int l) {
  double lo = d[0], hi = d[0];
  for (size_t i = 0; i < d.size(); ++i) {
    double off = (i > 0 ? std::abs(e[i - 1]) : 0.0) + (i + 1 < d.size() ? std::abs(e[i]) : 0.0);
    lo = std::min(lo, d[i] - off);
    hi = std::max(hi, d[i] + off);
  }
  double scale = std::max({1.0, std::abs(lo), std::abs(hi)});
  for (int it = 0; it < 200 && hi - lo > 1e-14 * scale; ++it) {
    double mid = 0.5 * (lo + hi);
    if (count_below(d, e, mid) >= l)
      hi = mid;
    else
      lo = mid;
  }
  return 0.5 * (lo + hi);
}

// Eigenvalues of the flux-form discretization on N cells, transformed to a
// standard symmetric tridiagonal problem.
std::vector<double> grid_eigs(const RadialProblem& p, int count, int cells) {
  const int interior = cells - 1;
  const double h = (p.r1 - p.r0) / cells;
  const double gamma = gamma_k(p.k, p.n);

  std::vector<double> aw(cells);  // a^{n-1} at cell midpoints
  for (int i = 0; i < cells; ++i)
    aw[i] = std::pow(profile(p.form, p.r0 + (i + 0.5) * h), p.n - 1);

  std::vector<double> diag(interior), off(interior - 1), mass(interior);
  for (int i = 0; i < interior; ++i) {
    double r = p.r0 + (i + 1) * h;
    double a = profile(p.form, r);
    mass[i] = std::pow(a, p.n - 1);
    diag[i] = (aw[i] + aw[i + 1]) / (h * h) + gamma * std::pow(a, p.n - 3);
    if (i + 1 < interior) off[i] = -aw[i + 1] / (h * h);
  }

  // B^{-1/2} A B^{-1/2} keeps the problem symmetric tridiagonal
  std::vector<double> d(interior), e(interior - 1);
  for (int i = 0; i < interior; ++i) d[i] = diag[i] / mass[i];
  for (int i = 0; i + 1 < interior; ++i) e[i] = off[i] / std::sqrt(mass[i] * mass[i + 1]);

  std::vector<double> mu(count);
  for (int l = 1; l <= count; ++l) mu[l - 1] = bisect_eigenvalue(d, e, l);
  return mu;
}

}  // namespace

long long harmonic_multiplicity(int k, int n) {
  if (k < 0 || n < 2) throw Error(Err::UnsupportedCombination, "need k >= 0, n >= 2");
  if (k == 0) return 1;
  if (k == 1) return n;
  return binomial(n + k - 1, k) - binomial(n + k - 3, k - 2);
}

std::vector<RadialValue> radial_eigs(const RadialProblem& p, int count, int grid) {
  if (count < 1) throw Error(Err::GridTooCoarse, "count must be >= 1");
  if (!(p.r0 > 0) || !(p.r1 > p.r0))
    throw Error(Err::RadiiOutOfOrder, "need 0 < r0 < r1");
  if (p.form == SpaceForm::Spherical && !(p.r1 < std::numbers::pi))
    throw Error(Err::SphereTooLarge, "profile sin r must stay positive");
  if (p.n < 1) throw Error(Err::UnsupportedDimension, "need n >= 1");
  if (grid < 16 || grid - 1 < 4 * count)
    throw Error(Err::GridTooCoarse, "grid too coarse for the requested count");

  std::vector<double> coarse = grid_eigs(p, count, grid);
  std::vector<double> fine = grid_eigs(p, count, 2 * grid);

  std::vector<RadialValue> out(count);
  for (int i = 0; i < count; ++i) {
    double step = (fine[i] - coarse[i]) / 3.0;  // second-order scheme
    out[i].mu = fine[i] + step;
    out[i].error_estimate = std::abs(step);
  }
  return out;
}

RadialSpectrum shell_spectrum(SpaceForm form, int n, double r0, double r1, int count,
                              int grid) {
  if (count < 1) throw Error(Err::GridTooCoarse, "count must be >= 1");
  constexpr int k_cap = 64;

  RadialSpectrum spec;
  for (int k = 0; k <= k_cap + 1; ++k) {
    if (k > k_cap)
      throw Error(Err::KMaxExceeded, "harmonic degree cap exceeded while merging");
    RadialProblem p{form, n, k, r0, r1};
    std::vector<RadialValue> mu = radial_eigs(p, count, grid);

    // Degrees are exhausted once even the lowest mode of this k exceeds the
    // current count-th entry.
    if (k > 0 && static_cast<int>(spec.entries.size()) >= count) {
      std::nth_element(spec.entries.begin(), spec.entries.begin() + (count - 1),
                       spec.entries.end(),
                       [](const SpectrumEntry& a, const SpectrumEntry& b) { return a.mu < b.mu; });
      if (mu[0].mu > spec.entries[count - 1].mu) break;
    }

    long long mult = harmonic_multiplicity(k, n);
    for (int l = 0; l < count; ++l)
      spec.entries.push_back({mu[l].mu, k, l + 1, mult, mu[l].error_estimate});
  }

  std::sort(spec.entries.begin(), spec.entries.end(),
            [](const SpectrumEntry& a, const SpectrumEntry& b) {
              if (a.mu != b.mu) return a.mu < b.mu;
              return a.k < b.k;
            });
  spec.entries.resize(count);
  return spec;
}

}  // namespace shellspec
