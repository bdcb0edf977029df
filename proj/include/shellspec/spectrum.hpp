#ifndef SHELLSPEC_SPECTRUM_HPP
#define SHELLSPEC_SPECTRUM_HPP

#include <Eigen/Dense>

#include "shellspec/eigensolver.hpp"
#include "shellspec/fem.hpp"

namespace shellspec {

struct Discretization {
  double h = 0.02;        ///< target chart edge length of the base mesh
  int refinements = 1;    ///< uniform refinement levels on top of the base mesh
  double eig_tol = 1e-9;  ///< eigensolver residual tolerance
  int count = 2;          ///< eigenpairs per sector, >= 2
};

enum class Branch { Minus, Plus };

/// Eigenvalues on one mesh for one sector / azimuthal mode, plus the first
/// eigenfunction scattered back to full vertex numbering (zero on the
/// constrained boundary) with positive interior sign.
struct SectorSolve {
  std::vector<double> values;
  Eigen::VectorXd first_full;
  int ndof = 0;
};

SectorSolve solve_sector(const DomainSpec& spec, const Mesh& mesh, Sector sector, int m,
                         int count, double tol);

/// Meshes at the base resolution and `refinements` uniform refinements.
/// `base` optionally pins the base topology (used to match discretizations
/// across nearby offsets).
std::vector<Mesh> mesh_levels(const DomainSpec& spec, const Discretization& disc,
                              MeshCounts base = {});

/// Richardson combination of the two finest second-order values:
/// extrapolated value and |difference|/3 as the error estimate. A single
/// level yields the raw value with an infinite estimate.
void richardson(const std::vector<double>& level_values, double* value, double* estimate);

/// Anti-invariant ground state per level: all-Dirichlet half-domain solve for
/// n = 2 charts, first m = 1 azimuthal mode on the meridian for n = 3.
struct MinusLevels {
  std::vector<Mesh> meshes;
  std::vector<double> values;
  std::vector<Eigen::VectorXd> functions;  ///< full numbering, per level
  std::vector<int> ndofs;
  double value = 0;  ///< extrapolated
  double error_estimate = 0;
};

MinusLevels lambda_minus_levels(const DomainSpec& spec, const Discretization& disc,
                                MeshCounts base = {});

struct LambdaMinusResult {
  double value = 0;
  double error_estimate = 0;
  Eigen::VectorXd eigenfunction;  ///< finest mesh, full numbering
  Mesh mesh;                      ///< finest mesh
  int ndof = 0;
};

LambdaMinusResult lambda_minus(const DomainSpec& spec, const Discretization& disc);

struct PlusList {
  std::vector<double> values;     ///< ascending, extrapolated
  std::vector<double> estimates;
  int ndof = 0;  ///< finest level; summed over modes for n = 3
};

/// Invariant-sector eigenvalues: natural symmetry segment for n = 2; merged
/// m = 0,1,2 azimuthal modes for n = 3.
PlusList lambda_plus_list(const DomainSpec& spec, const Discretization& disc, int count);

struct SpectrumResult {
  double lambda1 = 0;
  double lambda1_minus = 0;
  double lambda2_plus = 0;
  double lambda2 = 0;
  Branch branch = Branch::Minus;
  bool tie = false;  ///< branches indistinguishable within error estimates
  double err_lambda1 = 0;
  double err_lambda1_minus = 0;
  double err_lambda2_plus = 0;
  double err_lambda2 = 0;
  bool lambda1_gap_resolved = false;  ///< lambda1 < lambda1_minus beyond the estimates
  int ndof_minus = 0;
  int ndof_plus = 0;
};

/// lambda2 = min(lambda1^-, lambda2^+) with both branches reported.
SpectrumResult lambda_2(const DomainSpec& spec, const Discretization& disc);

}  // namespace shellspec

#endif  // SHELLSPEC_SPECTRUM_HPP
