#pragma once

#include <limits>
#include <string>
#include <vector>

#include "tilegrow/tiling.hpp"

namespace tilegrow {

/// x -> A x + t with A orthogonal.
struct RigidMotion {
  Eigen::Matrix2d A = Eigen::Matrix2d::Identity();
  Vec2 t = Vec2::Zero();

  Vec2 operator()(const Vec2& p) const { return A * p + t; }
};

struct Placement {
  RigidMotion motion;
  int target = 0;  // prototile index of the placed copy
};

struct Prototile {
  std::string label;
  Polygon polygon;
};

/// rules[i] places copies of prototiles that exactly tile Q * prototiles[i].
struct SubstitutionSystem {
  std::string name;
  std::vector<Prototile> prototiles;
  Eigen::Matrix2d Q = 2.0 * Eigen::Matrix2d::Identity();
  std::vector<std::vector<Placement>> rules;

  int prototile_index(const std::string& label) const;

  /// Throws InvalidRules unless every rule set is a dissection of the inflated prototile.
  void validate(const Tolerance& tol = {}) const;
};

SubstitutionSystem chair_system();
SubstitutionSystem l_tetromino_system();

/// Tiles of Q^level * seed. parent[t] numbers the level-one supertile containing t and
/// child[t] is the rule index that placed t inside it.
struct SupertilePatch {
  Patch<2> patch;
  Polygon region;
  std::vector<long> parent;
  std::vector<int> child;
};

SupertilePatch supertile(const SubstitutionSystem& sys, const std::string& seed, int level,
                         const NeighborRule& rule = NeighborRule::edge_share(), const Tolerance& tol = {});

/// Only the tiles of Q^level * seed lying in supertiles that meet the disc (center, radius).
/// Tiles are complete when they avoid the region boundary and their centroid is at least
/// two tile diameters inside the disc.
SupertilePatch supertile_window(const SubstitutionSystem& sys, const std::string& seed, int level,
                                const Vec2& center, double radius,
                                const NeighborRule& rule = NeighborRule::edge_share(), const Tolerance& tol = {});

/// Centre (r, r), r = 2^level sqrt 2 / (1 + sqrt 2), of the largest disc centred on the diagonal
/// inside the level-fold supertile of an L-shaped prototile with a 2x2 bounding box; the disc has
/// radius r.
Vec2 l_supertile_center(int level);

/// Index of the tile containing q. Throws EmptySet if there is none.
int tile_at(const Patch<2>& p, const Vec2& q);

struct DualGraph {
  std::vector<Vec2> vertices;                 // marked point per tile
  std::vector<std::pair<int, int>> edges;     // u < v
  std::vector<char> diagonal;                 // per edge
};

/// Marked point is the inner corner of each chair. An edge is a diagonal when it joins the
/// central chair of a level-one supertile to the corner chair sharing its orientation.
DualGraph chair_dual_graph(const SupertilePatch& sp);

struct DiagonalDeletionReport {
  long pairs = 0;         // vertex pairs not joined by a deleted diagonal
  long changed = 0;       // pairs whose graph distance changed
  int max_increase = 0;
  bool invariant() const { return changed == 0; }
};

/// Compares all-pairs graph distances with and without the diagonal edges.
DiagonalDeletionReport diagonal_deletion(const DualGraph& g);

/// Vertical strips of unit squares and 2x2 squares, 4^i columns each, for i < levels,
/// over rows -half_height..half_height. The left edge is the boundary of the tiling; tiles
/// within four units of the top, bottom or right edge are incomplete.
Patch<2> strips_tiling(int levels, int half_height, const NeighborRule& rule = NeighborRule::edge_share(),
                       const Tolerance& tol = {});

/// Unit square at the left edge and mid-height.
int strips_seed(const Patch<2>& p);

}  // namespace tilegrow
