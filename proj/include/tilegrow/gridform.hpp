#pragma once

#include <vector>

#include "tilegrow/growth_form.hpp"
#include "tilegrow/multigrid.hpp"

namespace tilegrow {

/// Per ordered pair (i, j), i != j. Diagonal entries are unused (zero).
struct GridFormTables2D {
  int N = 0;
  Eigen::MatrixXd alpha;    // arccos |<g_i, g_j>|
  Eigen::MatrixXd delta;    // 1 / sin alpha_ij
  Eigen::MatrixXd D;        // det(g_i, g_j)
  Eigen::MatrixXi epsilon;  // sign D_ij
  Eigen::VectorXd Delta;    // sum_j 1 / delta_ij
  Eigen::Matrix2Xd upsilon; // sum_j epsilon_ij g_j / delta_ij
};

/// Per ordered triple (i, j, k) of distinct indices, stored at (i * N + j) * N + k.
struct GridFormTables3D {
  int N = 0;
  std::vector<Vec3> h;            // g_i x g_j at i * N + j
  std::vector<double> alpha;      // arcsin (h_ij, g_k) / |h_ij|
  std::vector<double> delta;      // |h_ij| / |(h_ij, g_k)|, infinite when (h_ij, g_k) = 0
  std::vector<double> D;          // det(g_i, g_j, g_k)
  std::vector<int> epsilon;       // sign D_ijk, 0 for a degenerate triple
  std::vector<double> Delta;      // at i * N + j
  std::vector<Vec3> upsilon;      // at i * N + j

  std::size_t pair(int i, int j) const { return static_cast<std::size_t>(i * N + j); }
  std::size_t triple(int i, int j, int k) const { return static_cast<std::size_t>((i * N + j) * N + k); }
};

GridFormTables2D tables_2d(const GridSpec& spec, const Tolerance& tol = {});
GridFormTables3D tables_3d(const GridSpec& spec, const Tolerance& tol = {});

/// Polygon with vertices +-upsilon_i / Delta_i.
GrowthForm growth_form_formula_2d(const GridSpec& spec, const Tolerance& tol = {});

/// Polyhedron with vertices +-upsilon_ij / Delta_ij, i < j.
GrowthForm growth_form_formula_3d(const GridSpec& spec, const Tolerance& tol = {});

/// Image under y -> G G^T y of {y : sum_i |<g_i, y>| <= 1}, i.e. the projection of the section
/// of the cross-polytope by the row space of G.
GrowthForm growth_form_orthoplex(const GridSpec& spec, const Tolerance& tol = {});

}  // namespace tilegrow
