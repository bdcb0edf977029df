#include "shellspec/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>
#include <ostream>
#include <utility>

namespace shellspec {

const char* tag_name(BoundaryTag t) {
  switch (t) {
    case BoundaryTag::OuterArc: return "OuterArc";
    case BoundaryTag::InnerArc: return "InnerArc";
    case BoundaryTag::SymmetrySegment: return "SymmetrySegment";
    case BoundaryTag::Axis: return "Axis";
  }
  return "?";
}

namespace {

constexpr int kGradedLayers = 12;     // layers thinned toward the inner arc
constexpr double kGradingRatio = 0.9;
constexpr double kLayerCap = 1.25;    // max layer thickness, in units of h

// Normalized layer fractions, innermost first, geometrically graded toward
// the inner arc and uniform further out.
std::vector<double> layer_fractions(int layers) {
  int graded = std::min(kGradedLayers, layers - 1);
  std::vector<double> w(layers);
  for (int i = 0; i < layers; ++i)
    w[i] = std::pow(kGradingRatio, std::max(0, graded - i));
  double sum = 0;
  for (double v : w) sum += v;
  for (double& v : w) v /= sum;
  return w;
}

double min_gap(const ModelGeometry& g) {
  return g.outer_radius - g.inner_radius - std::abs(g.inner_center.x);
}

}  // namespace

MeshCounts derive_counts(const ModelGeometry& geom, double h) {
  MeshCounts c;
  double arc = std::numbers::pi * geom.outer_radius;
  c.n_theta = std::max(8, static_cast<int>(std::ceil(arc / h)));
  double gap = geom.outer_radius - geom.inner_radius;
  int layers = 3;
  while (layers < 100000) {
    std::vector<double> f = layer_fractions(layers);
    if (gap * f.back() <= kLayerCap * h) break;
    ++layers;
  }
  c.n_layers = layers;
  return c;
}

Mesh triangulate_half_domain(const ModelGeometry& geom, double h, MeshCounts counts) {
  if (!(h > 0)) throw Error(Err::GeometryDegenerate, "edge length must be positive");
  if (min_gap(geom) < 2.0 * h)
    throw Error(Err::GeometryDegenerate, "annular gap thinner than 2h");

  MeshCounts c = counts;
  if (c.n_theta <= 0 || c.n_layers <= 0) {
    MeshCounts d = derive_counts(geom, h);
    if (c.n_theta <= 0) c.n_theta = d.n_theta;
    if (c.n_layers <= 0) c.n_layers = d.n_layers;
  }
  const int nt = c.n_theta;
  const int nl = c.n_layers;

  Mesh m;
  m.geom = geom;
  m.vertices.reserve(static_cast<size_t>(nl + 1) * (nt + 1));

  std::vector<double> frac = layer_fractions(nl);
  std::vector<double> level(nl + 1, 0.0);
  for (int j = 0; j < nl; ++j) level[j + 1] = level[j] + frac[j];
  level[nl] = 1.0;

  const Vec2 ic = geom.inner_center;
  for (int j = 0; j <= nl; ++j) {
    double s = level[j];
    for (int k = 0; k <= nt; ++k) {
      double theta = std::numbers::pi * k / nt;
      Vec2 e{std::cos(theta), std::sin(theta)};
      Vec2 inner = ic + geom.inner_radius * e;
      Vec2 outer = geom.outer_radius * e;
      Vec2 p = (1.0 - s) * inner + s * outer;
      if (k == 0 || k == nt) p.y = 0.0;  // exactly on the symmetry line
      m.vertices.push_back(p);
    }
  }

  auto vid = [nt](int j, int k) { return j * (nt + 1) + k; };
  auto area2 = [&m](int a, int b, int cc) {
    return cross(m.vertices[b] - m.vertices[a], m.vertices[cc] - m.vertices[a]);
  };

  m.triangles.reserve(static_cast<size_t>(2) * nl * nt);
  for (int j = 0; j < nl; ++j) {
    for (int k = 0; k < nt; ++k) {
      int a = vid(j, k), b = vid(j, k + 1), cidx = vid(j + 1, k + 1), d = vid(j + 1, k);
      double diag_ac = norm(m.vertices[cidx] - m.vertices[a]);
      double diag_bd = norm(m.vertices[d] - m.vertices[b]);
      bool use_ac = diag_ac <= diag_bd;
      std::array<std::array<int, 3>, 2> tris =
          use_ac ? std::array<std::array<int, 3>, 2>{{{a, b, cidx}, {a, cidx, d}}}
                 : std::array<std::array<int, 3>, 2>{{{a, b, d}, {b, cidx, d}}};
      if (area2(tris[0][0], tris[0][1], tris[0][2]) <= 0 ||
          area2(tris[1][0], tris[1][1], tris[1][2]) <= 0) {
        // fall back to the other diagonal
        tris = use_ac ? std::array<std::array<int, 3>, 2>{{{a, b, d}, {b, cidx, d}}}
                      : std::array<std::array<int, 3>, 2>{{{a, b, cidx}, {a, cidx, d}}};
        if (area2(tris[0][0], tris[0][1], tris[0][2]) <= 0 ||
            area2(tris[1][0], tris[1][1], tris[1][2]) <= 0)
          throw Error(Err::GeometryDegenerate, "degenerate quad in transfinite layer");
      }
      m.triangles.push_back(tris[0]);
      m.triangles.push_back(tris[1]);
    }
  }

  BoundaryTag side = geom.meridian ? BoundaryTag::Axis : BoundaryTag::SymmetrySegment;
  for (int k = 0; k < nt; ++k) {
    m.boundary_edges.push_back({vid(0, k), vid(0, k + 1), BoundaryTag::InnerArc});
    m.boundary_edges.push_back({vid(nl, k), vid(nl, k + 1), BoundaryTag::OuterArc});
  }
  for (int j = 0; j < nl; ++j) {
    m.boundary_edges.push_back({vid(j, 0), vid(j + 1, 0), side});
    m.boundary_edges.push_back({vid(j, nt), vid(j + 1, nt), side});
  }

  int boundary = 2 * nt + 2 * nl;  // boundary vertex count of the structured grid
  if (m.vertex_count() - boundary < 10)
    throw Error(Err::MeshTooCoarse, "fewer than 10 interior vertices");
  return m;
}

Mesh refine_uniform(const Mesh& parent) {
  Mesh m;
  m.geom = parent.geom;
  m.vertices = parent.vertices;

  std::map<std::pair<int, int>, int> midpoint;
  auto mid_of = [&](int a, int b) {
    auto key = std::minmax(a, b);
    auto it = midpoint.find(key);
    if (it != midpoint.end()) return it->second;
    int idx = m.vertex_count();
    m.vertices.push_back(0.5 * (parent.vertices[a] + parent.vertices[b]));
    midpoint.emplace(key, idx);
    return idx;
  };

  m.triangles.reserve(parent.triangles.size() * 4);
  for (const auto& t : parent.triangles) {
    int m01 = mid_of(t[0], t[1]);
    int m12 = mid_of(t[1], t[2]);
    int m20 = mid_of(t[2], t[0]);
    m.triangles.push_back({t[0], m01, m20});
    m.triangles.push_back({t[1], m12, m01});
    m.triangles.push_back({t[2], m20, m12});
    m.triangles.push_back({m01, m12, m20});
  }

  m.boundary_edges.reserve(parent.boundary_edges.size() * 2);
  for (const auto& e : parent.boundary_edges) {
    int mid = mid_of(e.a, e.b);
    Vec2& p = m.vertices[mid];
    if (e.tag == BoundaryTag::InnerArc || e.tag == BoundaryTag::OuterArc) {
      bool inner = e.tag == BoundaryTag::InnerArc;
      Vec2 center = inner ? m.geom.inner_center : m.geom.outer_center;
      double radius = inner ? m.geom.inner_radius : m.geom.outer_radius;
      Vec2 d = p - center;
      double len = norm(d);
      p = center + (radius / len) * d;
    } else {
      p.y = 0.0;
    }
    m.boundary_edges.push_back({e.a, mid, e.tag});
    m.boundary_edges.push_back({mid, e.b, e.tag});
  }
  return m;
}

double triangle_area(const Mesh& m, int tri) {
  const auto& t = m.triangles[tri];
  return 0.5 * cross(m.vertices[t[1]] - m.vertices[t[0]], m.vertices[t[2]] - m.vertices[t[0]]);
}

double mesh_area(const Mesh& m) {
  double a = 0;
  for (int i = 0; i < m.triangle_count(); ++i) a += triangle_area(m, i);
  return a;
}

std::vector<bool> vertices_on_tag(const Mesh& m, BoundaryTag tag) {
  std::vector<bool> on(m.vertices.size(), false);
  for (const auto& e : m.boundary_edges)
    if (e.tag == tag) {
      on[e.a] = true;
      on[e.b] = true;
    }
  return on;
}

QualityReport mesh_quality(const Mesh& m) {
  QualityReport q;
  q.vertex_count = m.vertex_count();
  q.triangle_count = m.triangle_count();

  double min_angle = std::numbers::pi;
  double amin = 1e300, amax = 0;
  for (int i = 0; i < m.triangle_count(); ++i) {
    const auto& t = m.triangles[i];
    double a = triangle_area(m, i);
    amin = std::min(amin, a);
    amax = std::max(amax, a);
    for (int v = 0; v < 3; ++v) {
      Vec2 u = m.vertices[t[(v + 1) % 3]] - m.vertices[t[v]];
      Vec2 w = m.vertices[t[(v + 2) % 3]] - m.vertices[t[v]];
      double ang = std::atan2(std::abs(cross(u, w)), dot(u, w));
      min_angle = std::min(min_angle, ang);
    }
  }
  q.min_angle_deg = min_angle * 180.0 / std::numbers::pi;
  q.max_area_ratio = amax / amin;

  double gap = 0;
  for (const auto& e : m.boundary_edges) {
    if (e.tag != BoundaryTag::InnerArc && e.tag != BoundaryTag::OuterArc) continue;
    bool inner = e.tag == BoundaryTag::InnerArc;
    Vec2 center = inner ? m.geom.inner_center : m.geom.outer_center;
    double radius = inner ? m.geom.inner_radius : m.geom.outer_radius;
    for (int v : {e.a, e.b})
      gap = std::max(gap, std::abs(norm(m.vertices[v] - center) - radius));
  }
  q.boundary_gap = gap;
  return q;
}

void dump_mesh(const Mesh& m, std::ostream& os) {
  char buf[80];
  os << m.vertex_count() << ' ' << m.triangle_count() << ' ' << m.boundary_edges.size()
     << '\n';
  for (const auto& v : m.vertices) {
    std::snprintf(buf, sizeof(buf), "%.17g %.17g\n", v.x, v.y);
    os << buf;
  }
  for (const auto& t : m.triangles) os << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
  for (const auto& e : m.boundary_edges)
    os << e.a << ' ' << e.b << ' ' << tag_name(e.tag) << '\n';
}

}  // namespace shellspec
