#ifndef SHELLSPEC_FEM_HPP
#define SHELLSPEC_FEM_HPP

#include <functional>
#include <set>
#include <utility>

#include "shellspec/mesh.hpp"
#include "shellspec/sparse.hpp"

namespace shellspec {

/// Which symmetry sector a 2D chart solve targets: Minus pins the symmetry
/// segment to zero (anti-invariant functions), Plus leaves it natural.
enum class Sector { Plus, Minus };

/// Weights of the weighted eigenvalue form
///   K_ij = \int w_K grad(phi_i).grad(phi_j) + \int q phi_i phi_j,
///   M_ij = \int w_M phi_i phi_j.
/// The potential q may be +inf on the rotation axis; assembly skips such
/// quadrature points only when every hat active there is constrained.
struct WeightSpec {
  std::function<double(Vec2)> stiffness_weight;
  std::function<double(Vec2)> mass_weight;
  std::function<double(Vec2)> potential;
  std::set<BoundaryTag> dirichlet_tags;
};

/// Weights and boundary conditions for one (domain, azimuthal mode, sector)
/// combination. `m` is used only for Euclidean n = 3; `sector` only for 2D
/// charts.
WeightSpec weight_spec(const DomainSpec& spec, int m, Sector sector);

/// P1 assembly with the 3-point edge-midpoint rule (exact for quadratics
/// against constant weights). Returns (stiffness-plus-potential, mass).
std::pair<SparseSym, SparseSym> assemble(const Mesh& m, const WeightSpec& w);

struct DirichletReduction {
  SparseSym k;
  SparseSym m;
  std::vector<int> reduced_to_full;
  std::vector<int> full_to_reduced;  // -1 for constrained vertices
};

/// Removes rows/columns of vertices incident to boundary edges whose tag is
/// in `tags`.
DirichletReduction apply_dirichlet(const SparseSym& k, const SparseSym& m, const Mesh& mesh,
                                   const std::set<BoundaryTag>& tags);

}  // namespace shellspec

#endif  // SHELLSPEC_FEM_HPP
