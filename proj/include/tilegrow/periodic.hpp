#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tilegrow/growth_form.hpp"
#include "tilegrow/tiling.hpp"

namespace tilegrow {

struct FundamentalTile {
  std::string label;
  Polygon polygon;
};

/// Planar periodic tiling: lattice basis (columns) and one tile per translation class.
struct PeriodicSpec {
  std::string name;
  Eigen::Matrix2d basis = Eigen::Matrix2d::Identity();
  std::vector<FundamentalTile> tiles;

  /// Throws InvalidSpec unless the basis is non-degenerate, every polygon is valid and the
  /// tile areas add up to the cell area.
  void validate(const Tolerance& tol = {}) const;

  Vec2 lattice_vector(long n1, long n2) const { return basis.col(0) * double(n1) + basis.col(1) * double(n2); }
  double max_tile_diameter() const;
};

/// Built-in specs: square44, hex63, tri36, arch3344.
PeriodicSpec periodic_preset(const std::string& name);
std::vector<std::string> periodic_preset_names();

/// All lattice translates of the fundamental tiles whose centroid lies within radius of the
/// origin, with EdgeShare adjacency unless another rule is given. Tiles closer than two tile
/// diameters to the rim are marked incomplete.
Patch2 unroll(const PeriodicSpec& spec, double radius, const NeighborRule& rule = NeighborRule::edge_share(),
              const Tolerance& tol = {});

/// Lattice vector v with t2 = t1 + v, if the tiles are translates of each other in the same class.
std::optional<Vec2> equivalent_mod_lattice(const Tile2& t1, const Tile2& t2, const PeriodicSpec& spec,
                                           const Tolerance& tol = {});

struct Algorithm1Result {
  GrowthForm form;
  std::vector<Vec2> w;  // every collected w = v / k
  int shells = 0;
  double radius = 0.0;  // unroll radius that was used
};

/// Growth form by Algorithm 1. shells <= 0 means z = number of fundamental tiles.
Algorithm1Result algorithm1(const PeriodicSpec& spec, const NeighborRule& rule, int shells = 0,
                            const Tolerance& tol = {});

GrowthForm growth_form_periodic(const PeriodicSpec& spec, const NeighborRule& rule = NeighborRule::edge_share(),
                                int shells = 0, const Tolerance& tol = {});

GrowthForm growth_form_heesch(const PeriodicSpec& spec, int shells = 0, const Tolerance& tol = {});

}  // namespace tilegrow
