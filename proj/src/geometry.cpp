#include "shellspec/geometry.hpp"

#include <algorithm>
#include <numbers>

namespace shellspec {

const char* form_name(SpaceForm f) {
  switch (f) {
    case SpaceForm::Euclidean: return "euclidean";
    case SpaceForm::Spherical: return "spherical";
    case SpaceForm::Hyperbolic: return "hyperbolic";
  }
  return "?";
}

bool supports_offset(SpaceForm form, int n) {
  if (form == SpaceForm::Euclidean) return n == 2 || n == 3;
  return n == 2;
}

DomainSpec make_domain(SpaceForm form, int n, double r0, double r1, double t) {
  // Inputs are user-given; validation uses exact comparisons.
  if (n < 2) throw Error(Err::UnsupportedDimension, "dimension must be >= 2");
  if (!(r0 > 0.0)) throw Error(Err::NonPositiveRadius, "inner radius must be positive");
  if (!(r0 < r1)) throw Error(Err::RadiiOutOfOrder, "radii must satisfy r0 < r1");
  if (form == SpaceForm::Spherical && !(r1 < std::numbers::pi))
    throw Error(Err::SphereTooLarge, "outer radius must be < pi on the sphere");
  if (!(t >= 0.0) || !(t < r1 - r0))
    throw Error(Err::OffsetTooLarge, "offset must satisfy 0 <= t < r1 - r0");
  if (t > 0.0 && !supports_offset(form, n))
    throw Error(Err::UnsupportedDimension,
                "eccentric solves are only supported for Euclidean n=2,3 and curved n=2");
  return DomainSpec{form, n, r0, r1, t};
}

namespace {

// Signed chart coordinate of the point at geodesic distance u from the pole
// along the positive axis ray.
double axis_coordinate(SpaceForm form, double u) {
  switch (form) {
    case SpaceForm::Euclidean: return u;
    case SpaceForm::Spherical: return std::tan(0.5 * u);
    case SpaceForm::Hyperbolic: return std::tanh(0.5 * u);
  }
  return 0.0;
}

}  // namespace

ModelGeometry model_circles(const DomainSpec& spec) {
  if (spec.form != SpaceForm::Euclidean && spec.n != 2)
    throw Error(Err::UnsupportedDimension, "curved charts are 2D only");

  ModelGeometry g;
  g.form = spec.form;
  g.meridian = (spec.form == SpaceForm::Euclidean && spec.n == 3);
  g.outer_center = {0.0, 0.0};

  if (spec.form == SpaceForm::Euclidean) {
    g.outer_radius = spec.r1;
    g.inner_center = {spec.t, 0.0};
    g.inner_radius = spec.r0;
    return g;
  }

  // Geodesic circles project to Euclidean circles; recover center and radius
  // from the two axis intercepts.
  double lo = axis_coordinate(spec.form, spec.t - spec.r0);
  double hi = axis_coordinate(spec.form, spec.t + spec.r0);
  g.outer_radius = axis_coordinate(spec.form, spec.r1);
  g.inner_center = {0.5 * (hi + lo), 0.0};
  g.inner_radius = 0.5 * (hi - lo);
  return g;
}

double conformal_factor(SpaceForm form, Vec2 p) {
  double r2 = p.x * p.x + p.y * p.y;
  switch (form) {
    case SpaceForm::Euclidean: return 1.0;
    case SpaceForm::Spherical: {
      double d = 1.0 + r2;
      return 4.0 / (d * d);
    }
    case SpaceForm::Hyperbolic: {
      double d = 1.0 - r2;
      return 4.0 / (d * d);
    }
  }
  return 1.0;
}

AmbientPoint embed_boundary_point(const DomainSpec& spec, Vec2 p) {
  double r2 = p.x * p.x + p.y * p.y;
  AmbientPoint a;
  switch (spec.form) {
    case SpaceForm::Euclidean:
      throw Error(Err::UnsupportedCombination, "embedding is defined for curved forms");
    case SpaceForm::Spherical: {
      double s = 1.0 + r2;
      a.x = {(1.0 - r2) / s, 2.0 * p.x / s, 2.0 * p.y / s};
      return a;
    }
    case SpaceForm::Hyperbolic: {
      if (!(r2 < 1.0)) throw Error(Err::PointOutsideModel, "point outside the Poincare disk");
      double s = 1.0 - r2;
      a.x = {(1.0 + r2) / s, 2.0 * p.x / s, 2.0 * p.y / s};
      return a;
    }
  }
  return a;
}

Vec2 chart_point(const DomainSpec& spec, const AmbientPoint& a) {
  double d = 1.0 + a.x[0];
  if (spec.form == SpaceForm::Euclidean)
    throw Error(Err::UnsupportedCombination, "embedding is defined for curved forms");
  return {a.x[1] / d, a.x[2] / d};
}

AmbientPoint ball_center(const DomainSpec& spec) {
  AmbientPoint c;
  if (spec.form == SpaceForm::Spherical)
    c.x = {std::cos(spec.t), std::sin(spec.t), 0.0};
  else if (spec.form == SpaceForm::Hyperbolic)
    c.x = {std::cosh(spec.t), std::sinh(spec.t), 0.0};
  else
    throw Error(Err::UnsupportedCombination, "ball_center is defined for curved forms");
  return c;
}

double ambient_product(SpaceForm form, const AmbientPoint& a, const AmbientPoint& b) {
  double s = a.x[1] * b.x[1] + a.x[2] * b.x[2];
  if (form == SpaceForm::Hyperbolic) return s - a.x[0] * b.x[0];
  return s + a.x[0] * b.x[0];
}

double geodesic_distance(SpaceForm form, const AmbientPoint& a, const AmbientPoint& b) {
  double p = ambient_product(form, a, b);
  if (form == SpaceForm::Spherical) return std::acos(std::clamp(p, -1.0, 1.0));
  if (form == SpaceForm::Hyperbolic) return std::acosh(std::max(1.0, -p));
  throw Error(Err::UnsupportedCombination, "geodesic_distance is defined for curved forms");
}

}  // namespace shellspec
