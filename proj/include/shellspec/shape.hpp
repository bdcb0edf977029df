#ifndef SHELLSPEC_SHAPE_HPP
#define SHELLSPEC_SHAPE_HPP

#include <Eigen/Dense>

#include "shellspec/spectrum.hpp"

namespace shellspec {

/// One-sided normal-derivative samples along a tagged boundary part: the
/// adjacent triangle's constant gradient dotted with the inward unit normal
/// at each edge midpoint. Chart quantities; metric conversion is the
/// integrator's job.
struct TraceSample {
  Vec2 midpoint;
  Vec2 inward_normal;
  double dudn = 0;
  double edge_length = 0;
};

struct BoundaryTrace {
  BoundaryTag tag = BoundaryTag::InnerArc;
  std::vector<TraceSample> samples;
};

/// `field` holds nodal values in full vertex numbering and must vanish on the
/// tagged boundary.
BoundaryTrace normal_derivative_on(const Mesh& mesh, const Eigen::VectorXd& field,
                                   BoundaryTag tag);

struct RateValue {
  double value = 0;           ///< finest-level rate
  double error_estimate = 0;  ///< |finest - next| across refinement levels
  std::vector<double> level_values;
};

/// Boundary-integral derivative of the anti-invariant ground state with
/// respect to the inner-ball offset: the squared normal derivative of the
/// normalized eigenfunction integrated over the inner arc against the
/// motion weight of the rotation (resp. translation) field.
RateValue hadamard_rate_detail(const DomainSpec& spec, const Discretization& disc);
double hadamard_rate(const DomainSpec& spec, const Discretization& disc);

/// Centered difference (lambda1^-(t+delta) - lambda1^-(t-delta)) / (2 delta),
/// both solves on meshes with the topology of the center offset. At t = 0
/// the two solves coincide by reflection and the rate is exactly zero.
RateValue fd_rate_detail(const DomainSpec& spec, const Discretization& disc, double delta);
double fd_rate(const DomainSpec& spec, const Discretization& disc, double delta);

struct RateReport {
  double t = 0;
  double hadamard = 0;
  double fd = 0;
  double relative_gap = 0;  ///< |hadamard - fd| / max(|fd|, 1e-12)
  double err_hadamard = 0;
  double err_fd = 0;
};

RateReport rate_report(const DomainSpec& spec, const Discretization& disc, double delta);

/// Concentric-only check: the squared normal derivative of the second
/// eigenspace, reconstructed from the anti-invariant trace divided by its
/// angular factor, must be constant along each boundary circle. Returns the
/// worst relative deviation from constancy over both circles. Edges whose
/// angular factor is below 0.2 are excluded (the trace is 0/0 there).
double extremality_defect(const DomainSpec& spec, const Discretization& disc);

}  // namespace shellspec

#endif  // SHELLSPEC_SHAPE_HPP
