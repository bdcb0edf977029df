#ifndef SHELLSPEC_MESH_HPP
#define SHELLSPEC_MESH_HPP

#include <array>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "shellspec/geometry.hpp"

namespace shellspec {

enum class BoundaryTag : std::uint8_t { OuterArc, InnerArc, SymmetrySegment, Axis };

const char* tag_name(BoundaryTag t);

struct BoundaryEdge {
  int a = 0;
  int b = 0;
  BoundaryTag tag = BoundaryTag::OuterArc;
};

/// Conforming triangle mesh of the upper half of the eccentric annulus, with
/// the generating chart geometry kept for exact boundary re-snapping.
struct Mesh {
  std::vector<Vec2> vertices;
  std::vector<std::array<int, 3>> triangles;  // counterclockwise
  std::vector<BoundaryEdge> boundary_edges;
  ModelGeometry geom;

  int vertex_count() const { return static_cast<int>(vertices.size()); }
  int triangle_count() const { return static_cast<int>(triangles.size()); }
};

struct QualityReport {
  double min_angle_deg = 0;
  double max_area_ratio = 0;
  int vertex_count = 0;
  int triangle_count = 0;
  double boundary_gap = 0;  ///< max distance of tagged arc vertices from their circle
};

/// Optional explicit resolution override; zero fields mean "derive from h".
/// Used to keep mesh topology identical across nearby offsets t.
struct MeshCounts {
  int n_theta = 0;
  int n_layers = 0;
};

/// Resolution the mesher would derive from a target edge length h.
MeshCounts derive_counts(const ModelGeometry& geom, double h);

/// Structured transfinite mesh between the two circles: rings blended from
/// the inner to the outer circle, layer thickness graded geometrically
/// (ratio 0.9) toward the inner arc, quads split along the shorter diagonal.
/// Deterministic for fixed inputs.
Mesh triangulate_half_domain(const ModelGeometry& geom, double h, MeshCounts counts = {});

/// Splits every triangle into four by edge midpoints; arc midpoints are
/// re-snapped onto the exact circles, tags inherited.
Mesh refine_uniform(const Mesh& m);

QualityReport mesh_quality(const Mesh& m);

/// Plain-text dump: "V T B", V lines "x y", T lines "i j k", B lines "i j TAG".
void dump_mesh(const Mesh& m, std::ostream& os);

double triangle_area(const Mesh& m, int tri);
double mesh_area(const Mesh& m);

/// True if vertex v is an endpoint of some boundary edge carrying `tag`.
std::vector<bool> vertices_on_tag(const Mesh& m, BoundaryTag tag);

}  // namespace shellspec

#endif  // SHELLSPEC_MESH_HPP
