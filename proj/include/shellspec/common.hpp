#ifndef SHELLSPEC_COMMON_HPP
#define SHELLSPEC_COMMON_HPP

#include <cmath>
#include <stdexcept>
#include <string>

namespace shellspec {

/// Error codes for every failure mode the library reports.
enum class Err {
  NonPositiveRadius,
  RadiiOutOfOrder,
  OffsetTooLarge,
  SphereTooLarge,
  UnsupportedDimension,
  PointOutsideModel,
  MeshTooCoarse,
  GeometryDegenerate,
  UnsupportedCombination,
  SingularQuadraturePoint,
  AllConstrained,
  SingularPivot,
  NotConverged,
  MassNotSPD,
  GridTooCoarse,
  KMaxExceeded,
  ZeroOffset,
  NonZeroOffset,
  StepTooLarge,
  TagEmpty,
  InsufficientSweep,
  InvalidConfig,
};

class Error : public std::runtime_error {
 public:
  Error(Err code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  Err code() const { return code_; }

 private:
  Err code_;
};

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }

}  // namespace shellspec

#endif  // SHELLSPEC_COMMON_HPP
