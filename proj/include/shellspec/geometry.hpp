#ifndef SHELLSPEC_GEOMETRY_HPP
#define SHELLSPEC_GEOMETRY_HPP

#include <array>

#include "shellspec/common.hpp"

namespace shellspec {

enum class SpaceForm { Euclidean, Spherical, Hyperbolic };

const char* form_name(SpaceForm f);

/// Shell domain: ball of radius r1 minus the closed ball of radius r0 whose
/// center sits at distance t from the large ball's center.
struct DomainSpec {
  SpaceForm form = SpaceForm::Euclidean;
  int n = 2;      ///< ambient dimension, >= 2
  double r0 = 0;  ///< inner radius, 0 < r0 < r1
  double r1 = 0;  ///< outer radius (< pi for the sphere)
  double t = 0;   ///< center offset, 0 <= t < r1 - r0
};

/// Validates and returns a DomainSpec. Offsets t > 0 are only accepted for
/// the (form, n) pairs the 2D solver chart supports; t = 0 is accepted for
/// every dimension (radial-only use).
DomainSpec make_domain(SpaceForm form, int n, double r0, double r1, double t);

/// True when the pair supports eccentric (t > 0) solves.
bool supports_offset(SpaceForm form, int n);

/// Both shell boundaries as Euclidean circles in the 2D working chart
/// (plane / stereographic disk / Poincare disk). The outer circle is always
/// centered at the chart origin. `meridian` marks the Euclidean n = 3 chart
/// where the second coordinate is distance to the rotation axis.
struct ModelGeometry {
  SpaceForm form = SpaceForm::Euclidean;
  Vec2 outer_center;
  double outer_radius = 0;
  Vec2 inner_center;
  double inner_radius = 0;
  bool meridian = false;
};

ModelGeometry model_circles(const DomainSpec& spec);

/// Conformal factor rho of the chart metric: 1 (Euclidean),
/// 4/(1+|p|^2)^2 (sphere), 4/(1-|p|^2)^2 (hyperbolic).
double conformal_factor(SpaceForm form, Vec2 p);

/// Point of the ambient quadric model (x0, x1, x2); the sphere lives in
/// R^3 with the Euclidean product, the hyperboloid in Minkowski space.
struct AmbientPoint {
  std::array<double, 3> x{};
};

/// Inverse stereographic (resp. Poincare) map of a chart point. The chart
/// origin maps to the pole P = (1, 0, 0).
AmbientPoint embed_boundary_point(const DomainSpec& spec, Vec2 p);

/// Forward projection, inverse of embed_boundary_point.
Vec2 chart_point(const DomainSpec& spec, const AmbientPoint& a);

/// Center C(t) of the inner ball in ambient coordinates:
/// (cos t, sin t, 0) on the sphere, (cosh t, sinh t, 0) on the hyperboloid.
AmbientPoint ball_center(const DomainSpec& spec);

/// Ambient product: Euclidean dot for the sphere, the Minkowski form
/// -x0 y0 + x1 y1 + x2 y2 for hyperbolic space.
double ambient_product(SpaceForm form, const AmbientPoint& a, const AmbientPoint& b);

/// Geodesic distance between ambient points of the same quadric.
double geodesic_distance(SpaceForm form, const AmbientPoint& a, const AmbientPoint& b);

}  // namespace shellspec

#endif  // SHELLSPEC_GEOMETRY_HPP
