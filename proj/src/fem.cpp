#include "shellspec/fem.hpp"

#include <cmath>

namespace shellspec {

WeightSpec weight_spec(const DomainSpec& spec, int m, Sector sector) {
  WeightSpec w;
  auto one = [](Vec2) { return 1.0; };
  auto zero = [](Vec2) { return 0.0; };

  if (spec.form == SpaceForm::Euclidean && spec.n == 2) {
    w.stiffness_weight = one;
    w.mass_weight = one;
    w.potential = zero;
    w.dirichlet_tags = {BoundaryTag::OuterArc, BoundaryTag::InnerArc};
    if (sector == Sector::Minus) w.dirichlet_tags.insert(BoundaryTag::SymmetrySegment);
    return w;
  }

  if (spec.form == SpaceForm::Euclidean && spec.n == 3) {
    if (m < 0) throw Error(Err::UnsupportedCombination, "azimuthal mode must be >= 0");
    // Meridian coordinates (x1, s): s weights both forms, the azimuthal
    // potential is m^2/s.
    w.stiffness_weight = [](Vec2 p) { return p.y; };
    w.mass_weight = [](Vec2 p) { return p.y; };
    if (m == 0) {
      w.potential = zero;
    } else {
      double m2 = static_cast<double>(m) * m;
      w.potential = [m2](Vec2 p) { return m2 / p.y; };
    }
    w.dirichlet_tags = {BoundaryTag::OuterArc, BoundaryTag::InnerArc};
    if (m >= 1) w.dirichlet_tags.insert(BoundaryTag::Axis);
    return w;
  }

  if ((spec.form == SpaceForm::Spherical || spec.form == SpaceForm::Hyperbolic) &&
      spec.n == 2) {
    SpaceForm f = spec.form;
    w.stiffness_weight = one;
    w.mass_weight = [f](Vec2 p) { return conformal_factor(f, p); };
    w.potential = zero;
    w.dirichlet_tags = {BoundaryTag::OuterArc, BoundaryTag::InnerArc};
    if (sector == Sector::Minus) w.dirichlet_tags.insert(BoundaryTag::SymmetrySegment);
    return w;
  }

  throw Error(Err::UnsupportedCombination, "no weight rule for this (form, n) pair");
}

namespace {

std::vector<bool> constrained_vertices(const Mesh& mesh, const std::set<BoundaryTag>& tags) {
  std::vector<bool> fixed(mesh.vertices.size(), false);
  for (const auto& e : mesh.boundary_edges)
    if (tags.count(e.tag)) {
      fixed[e.a] = true;
      fixed[e.b] = true;
    }
  return fixed;
}

}  // namespace

std::pair<SparseSym, SparseSym> assemble(const Mesh& mesh, const WeightSpec& w) {
  const int n = mesh.vertex_count();
  std::vector<Triplet> kt, mt;
  kt.reserve(mesh.triangles.size() * 6);
  mt.reserve(mesh.triangles.size() * 6);

  std::vector<bool> fixed = constrained_vertices(mesh, w.dirichlet_tags);

  for (const auto& tri : mesh.triangles) {
    Vec2 p0 = mesh.vertices[tri[0]];
    Vec2 p1 = mesh.vertices[tri[1]];
    Vec2 p2 = mesh.vertices[tri[2]];
    double area = 0.5 * cross(p1 - p0, p2 - p0);

    // constant P1 gradients
    Vec2 g[3] = {{(p1.y - p2.y) / (2 * area), (p2.x - p1.x) / (2 * area)},
                 {(p2.y - p0.y) / (2 * area), (p0.x - p2.x) / (2 * area)},
                 {(p0.y - p1.y) / (2 * area), (p1.x - p0.x) / (2 * area)}};

    // edge midpoints; hat values there: phi_i(mid_jk) = 1/2 iff i in {j,k}
    Vec2 mid[3] = {0.5 * (p0 + p1), 0.5 * (p1 + p2), 0.5 * (p2 + p0)};
    static const int mid_verts[3][2] = {{0, 1}, {1, 2}, {2, 0}};

    double wk = 0;
    for (const Vec2& mp : mid) wk += w.stiffness_weight(mp);
    wk *= area / 3.0;

    double local_k[3][3] = {};
    double local_m[3][3] = {};
    for (int i = 0; i < 3; ++i)
      for (int j = i; j < 3; ++j) local_k[i][j] = wk * dot(g[i], g[j]);

    for (int q = 0; q < 3; ++q) {
      double wm = w.mass_weight(mid[q]) * area / 3.0;
      double qv = w.potential(mid[q]);
      int a = mid_verts[q][0], b = mid_verts[q][1];
      // hats of a and b are 1/2 at this midpoint, the third hat vanishes
      if (!std::isfinite(qv)) {
        if (!fixed[tri[a]] || !fixed[tri[b]])
          throw Error(Err::SingularQuadraturePoint,
                      "singular potential at a quadrature point with free hats");
        qv = 0.0;  // contributions would be eliminated with the constrained rows
      }
      double c = 0.25 * area / 3.0;
      local_m[std::min(a, b)][std::max(a, b)] += wm * 0.25;
      local_m[a][a] += wm * 0.25;
      local_m[b][b] += wm * 0.25;
      local_k[std::min(a, b)][std::max(a, b)] += qv * c;
      local_k[a][a] += qv * c;
      local_k[b][b] += qv * c;
    }

    for (int i = 0; i < 3; ++i)
      for (int j = i; j < 3; ++j) {
        int gi = tri[i], gj = tri[j];
        if (gi > gj) std::swap(gi, gj);
        if (local_k[i][j] != 0.0) kt.push_back({gi, gj, local_k[i][j]});
        if (local_m[i][j] != 0.0) mt.push_back({gi, gj, local_m[i][j]});
      }
  }

  return {sparse_from_triplets(n, std::move(kt)), sparse_from_triplets(n, std::move(mt))};
}

DirichletReduction apply_dirichlet(const SparseSym& k, const SparseSym& m, const Mesh& mesh,
                                   const std::set<BoundaryTag>& tags) {
  std::vector<bool> fixed = constrained_vertices(mesh, tags);

  DirichletReduction red;
  red.full_to_reduced.assign(mesh.vertices.size(), -1);
  for (size_t v = 0; v < mesh.vertices.size(); ++v)
    if (!fixed[v]) {
      red.full_to_reduced[v] = static_cast<int>(red.reduced_to_full.size());
      red.reduced_to_full.push_back(static_cast<int>(v));
    }
  int nr = static_cast<int>(red.reduced_to_full.size());
  if (nr == 0) throw Error(Err::AllConstrained, "every vertex is constrained");

  auto reduce = [&](const SparseSym& a) {
    std::vector<Triplet> t;
    t.reserve(a.values.size());
    for (int i = 0; i < a.n; ++i) {
      int ri = red.full_to_reduced[i];
      if (ri < 0) continue;
      for (int p = a.row_ptr[i]; p < a.row_ptr[i + 1]; ++p) {
        int rj = red.full_to_reduced[a.col_idx[p]];
        if (rj < 0) continue;
        t.push_back({ri, rj, a.values[p]});
      }
    }
    return sparse_from_triplets(nr, std::move(t));
  };

  red.k = reduce(k);
  red.m = reduce(m);
  return red;
}

}  // namespace shellspec
