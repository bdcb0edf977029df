#include "shellspec/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace shellspec {

std::vector<Mesh> mesh_levels(const DomainSpec& spec, const Discretization& disc,
                              MeshCounts base) {
  ModelGeometry geom = model_circles(spec);
  std::vector<Mesh> levels;
  levels.push_back(triangulate_half_domain(geom, disc.h, base));
  for (int r = 0; r < disc.refinements; ++r) levels.push_back(refine_uniform(levels.back()));
  return levels;
}

SectorSolve solve_sector(const DomainSpec& spec, const Mesh& mesh, Sector sector, int m,
                         int count, double tol) {
  WeightSpec w = weight_spec(spec, m, sector);
  auto [k, mm] = assemble(mesh, w);
  DirichletReduction red = apply_dirichlet(k, mm, mesh, w.dirichlet_tags);
  EigenResult eig = smallest_eigs(red.k, red.m, count, 0.0, tol);

  SectorSolve out;
  out.values = eig.values;
  out.ndof = red.k.n;
  out.first_full = Eigen::VectorXd::Zero(mesh.vertex_count());
  const Eigen::VectorXd& u = eig.vectors[0];
  // positive in the interior: flip on the largest-magnitude component
  int imax = 0;
  for (int i = 1; i < u.size(); ++i)
    if (std::abs(u[i]) > std::abs(u[imax])) imax = i;
  double sign = u[imax] >= 0 ? 1.0 : -1.0;
  for (int i = 0; i < u.size(); ++i) out.first_full[red.reduced_to_full[i]] = sign * u[i];
  return out;
}

void richardson(const std::vector<double>& level_values, double* value, double* estimate) {
  if (level_values.empty()) {
    *value = 0;
    *estimate = std::numeric_limits<double>::infinity();
    return;
  }
  if (level_values.size() == 1) {
    *value = level_values[0];
    *estimate = std::numeric_limits<double>::infinity();
    return;
  }
  double coarse = level_values[level_values.size() - 2];
  double fine = level_values.back();
  double step = (fine - coarse) / 3.0;
  *value = fine + step;
  *estimate = std::abs(step);
}

MinusLevels lambda_minus_levels(const DomainSpec& spec, const Discretization& disc,
                                MeshCounts base) {
  MinusLevels out;
  out.meshes = mesh_levels(spec, disc, base);
  int m = spec.n == 3 ? 1 : 0;
  for (const Mesh& mesh : out.meshes) {
    SectorSolve s = solve_sector(spec, mesh, Sector::Minus, m, 1, disc.eig_tol);
    out.values.push_back(s.values[0]);
    out.functions.push_back(std::move(s.first_full));
    out.ndofs.push_back(s.ndof);
  }
  richardson(out.values, &out.value, &out.error_estimate);
  return out;
}

LambdaMinusResult lambda_minus(const DomainSpec& spec, const Discretization& disc) {
  MinusLevels lv = lambda_minus_levels(spec, disc);
  LambdaMinusResult out;
  out.value = lv.value;
  out.error_estimate = lv.error_estimate;
  out.eigenfunction = std::move(lv.functions.back());
  out.mesh = std::move(lv.meshes.back());
  out.ndof = lv.ndofs.back();
  return out;
}

namespace {

struct ModeStream {
  std::vector<std::vector<double>> level_values;  // [level][index]
};

// Extrapolate each index of one eigenvalue stream across levels.
void extrapolate_stream(const ModeStream& s, int count, std::vector<double>* values,
                        std::vector<double>* estimates) {
  for (int i = 0; i < count; ++i) {
    std::vector<double> lv;
    for (const auto& level : s.level_values) lv.push_back(level[i]);
    double v, e;
    richardson(lv, &v, &e);
    values->push_back(v);
    estimates->push_back(e);
  }
}

}  // namespace

PlusList lambda_plus_list(const DomainSpec& spec, const Discretization& disc, int count) {
  if (count < 1) throw Error(Err::UnsupportedCombination, "count must be >= 1");
  std::vector<Mesh> meshes = mesh_levels(spec, disc);

  PlusList out;
  std::vector<double> values, estimates;

  if (spec.n == 3) {
    // Merge the m = 0,1,2 azimuthal modes; m = 2 is computed rather than
    // assumed dominated.
    for (int m = 0; m <= 2; ++m) {
      ModeStream s;
      int ndof = 0;
      for (const Mesh& mesh : meshes) {
        SectorSolve solve = solve_sector(spec, mesh, Sector::Plus, m, count, disc.eig_tol);
        s.level_values.push_back(solve.values);
        ndof = solve.ndof;
      }
      extrapolate_stream(s, count, &values, &estimates);
      out.ndof += ndof;
    }
  } else {
    ModeStream s;
    for (const Mesh& mesh : meshes) {
      SectorSolve solve = solve_sector(spec, mesh, Sector::Plus, 0, count, disc.eig_tol);
      s.level_values.push_back(solve.values);
      out.ndof = solve.ndof;
    }
    extrapolate_stream(s, count, &values, &estimates);
  }

  std::vector<int> order(values.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return values[a] < values[b]; });
  for (size_t i = 0; i < order.size() && static_cast<int>(i) < count; ++i) {
    out.values.push_back(values[order[i]]);
    out.estimates.push_back(estimates[order[i]]);
  }
  return out;
}

SpectrumResult lambda_2(const DomainSpec& spec, const Discretization& disc) {
  if (disc.count < 2) throw Error(Err::UnsupportedCombination, "count must be >= 2");
  int count = std::max(2, disc.count);

  MinusLevels minus = lambda_minus_levels(spec, disc);
  PlusList plus = lambda_plus_list(spec, disc, count);

  SpectrumResult r;
  r.lambda1 = plus.values[0];
  r.err_lambda1 = plus.estimates[0];
  r.lambda1_minus = minus.value;
  r.err_lambda1_minus = minus.error_estimate;
  r.lambda2_plus = plus.values[1];
  r.err_lambda2_plus = plus.estimates[1];
  r.ndof_minus = minus.ndofs.back();
  r.ndof_plus = plus.ndof;

  if (r.lambda1_minus <= r.lambda2_plus) {
    r.lambda2 = r.lambda1_minus;
    r.err_lambda2 = r.err_lambda1_minus;
    r.branch = Branch::Minus;
  } else {
    r.lambda2 = r.lambda2_plus;
    r.err_lambda2 = r.err_lambda2_plus;
    r.branch = Branch::Plus;
  }
  double gap = std::abs(r.lambda1_minus - r.lambda2_plus);
  if (gap <= r.err_lambda1_minus + r.err_lambda2_plus) {
    r.tie = true;
    r.branch = Branch::Minus;
  }
  r.lambda1_gap_resolved =
      (r.lambda1_minus - r.lambda1) > (r.err_lambda1 + r.err_lambda1_minus);
  return r;
}

}  // namespace shellspec
