#ifndef SHELLSPEC_RADIAL_HPP
#define SHELLSPEC_RADIAL_HPP

#include <vector>

#include "shellspec/geometry.hpp"

namespace shellspec {

/// One separated radial problem on (r0, r1) with Dirichlet ends:
///   -(a^{n-1} f')' + gamma_k a^{n-3} f = mu a^{n-1} f,
/// where a(r) is r, sin r, or sinh r depending on the space form.
struct RadialProblem {
  SpaceForm form = SpaceForm::Euclidean;
  int n = 2;  ///< >= 1 (n = 1 degenerates to the plain string)
  int k = 0;  ///< harmonic degree
  double r0 = 0;
  double r1 = 0;
};

/// Angular eigenvalue k(n+k-2) of the degree-k harmonics on S^{n-1}.
double gamma_k(int k, int n);

/// Dimension of the degree-k spherical harmonics on S^{n-1}.
long long harmonic_multiplicity(int k, int n);

struct RadialValue {
  double mu = 0;
  double error_estimate = 0;  ///< Richardson estimate from the N vs 2N grids
};

/// Smallest `count` eigenvalues, finite differences on a uniform grid of N
/// cells solved by Sturm-sequence bisection and Richardson-extrapolated
/// against the 2N grid.
std::vector<RadialValue> radial_eigs(const RadialProblem& p, int count, int grid = 2000);

struct SpectrumEntry {
  double mu = 0;
  int k = 0;
  int l = 0;          ///< 1-based radial index
  long long mult = 1;
  double error_estimate = 0;
};

struct RadialSpectrum {
  std::vector<SpectrumEntry> entries;  ///< sorted by mu, `count` entries
};

/// Merged concentric-shell spectrum over harmonic degrees: the re-ordered
/// union of the radial eigenvalues with their harmonic multiplicities.
RadialSpectrum shell_spectrum(SpaceForm form, int n, double r0, double r1, int count,
                              int grid = 2000);

}  // namespace shellspec

#endif  // SHELLSPEC_RADIAL_HPP
