#pragma once

#include <random>
#include <string>
#include <vector>

#include "tilegrow/tiling.hpp"

namespace tilegrow {

/// N families of parallel hyperplanes {x : <x, g_i> - gamma_i in Z} in R^d.
struct GridSpec {
  std::string name;
  int d = 2;
  Eigen::MatrixXd vectors;  // d x N, unit columns g_i
  Eigen::VectorXd phases;   // N

  int N() const { return static_cast<int>(vectors.cols()); }
  Eigen::VectorXd g(int i) const { return vectors.col(i); }

  /// Throws InvalidSpec (bad shapes, non-unit vectors, N < d) or ParallelGridVectors.
  void validate(const Tolerance& tol = {}) const;
};

/// Presets: penrose, hexagrid, ortho2, ortho3, ammann3d.
GridSpec grid_preset(const std::string& name);
std::vector<std::string> grid_preset_names();

/// Grid with N random unit vectors and random phases, redrawn until regular within radius.
GridSpec random_regular_grid(int d, int N, std::mt19937_64& rng, double radius = 6.0);

struct GridIntersection {
  std::vector<int> families;  // i < j (< k)
  std::vector<long> levels;   // m_i, m_j (, m_k)
  Eigen::VectorXd location;
};

/// All intersections of d hyperplanes from distinct families inside the ball of given radius,
/// sorted by (families, levels).
std::vector<GridIntersection> intersections(const GridSpec& spec, double radius);

/// Every d-fold intersection inside the ball is at distance > 10 eps_geom from every
/// hyperplane not involved in it.
bool is_regular(const GridSpec& spec, double radius, const Tolerance& tol = {});

/// ceil(<x, g_i> - gamma_i); OnGridHyperplane if x lies on a hyperplane of family i.
long K_index(const GridSpec& spec, int i, const Eigen::VectorXd& x, const Tolerance& tol = {});

/// sum_i K_i(x) g_i
Eigen::VectorXd K_point(const GridSpec& spec, const Eigen::VectorXd& x, const Tolerance& tol = {});

/// Dual tiling restricted to intersections inside a ball. combinatorial[t] lists the tiles
/// whose intersections are consecutive with that of t along a common grid line.
template <int Dim>
struct DualTiling {
  Patch<Dim> patch;
  std::vector<GridIntersection> source;  // source[t] produced tile t
  std::vector<std::vector<int>> combinatorial;
};

DualTiling<2> dual_tiling_2d(const GridSpec& spec, double region_radius, const Tolerance& tol = {});
DualTiling<3> dual_tiling_3d(const GridSpec& spec, double region_radius, const Tolerance& tol = {});

/// Largest distance between consecutive intersections along a grid line (2D) or a line where
/// two grid planes meet (3D); tiles whose intersection is farther than this from the region
/// boundary have all their neighbours in the patch.
double neighbour_reach(const GridSpec& spec);

struct LineCount {
  long count = 0;          // N_ij
  double expected = 0.0;   // l / delta_ij
  double bound_check = 0;  // |N_ij - l / delta_ij|
};

/// Lines of family j crossing the segment start + s * u, s in [0, l], where u is a unit
/// vector orthogonal to g_i (2D only).
LineCount line_count_statistic(const GridSpec& spec, int i, int j, const Vec2& start, double l);

}  // namespace tilegrow
