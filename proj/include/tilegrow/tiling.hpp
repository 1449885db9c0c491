#pragma once

#include <limits>
#include <span>
#include <string>
#include <type_traits>
#include <vector>

#include "tilegrow/geom.hpp"

namespace tilegrow {

enum class NeighborKind { EdgeShare, HeeschShare };

/// EdgeShare: tiles are neighbours when their common boundary has (d-1)-measure of at least
/// min_shared_measure. HeeschShare: any boundary contact counts.
struct NeighborRule {
  NeighborKind kind = NeighborKind::EdgeShare;
  double min_shared_measure = 1e-6;

  static NeighborRule edge_share() { return {NeighborKind::EdgeShare, 1e-6}; }
  static NeighborRule heesch() { return {NeighborKind::HeeschShare, 1e-6}; }
  void validate() const;
};

std::string_view to_string(NeighborKind k);

template <int Dim>
using Shape = std::conditional_t<Dim == 2, Polygon, Parallelepiped>;

template <int Dim>
struct Tile {
  int id = 0;
  Shape<Dim> shape;
  std::string label;
  Vec<Dim> centroid = Vec<Dim>::Zero();
  int klass = -1;                                           // fundamental class (periodic tilings)
  Eigen::Matrix<long, Dim, 1> lattice = Eigen::Matrix<long, Dim, 1>::Zero();  // lattice coefficients

  Tile() = default;
  Tile(int id_, Shape<Dim> s, std::string label_);
};

using Tile2 = Tile<2>;
using Tile3 = Tile<3>;

template <int Dim>
double measure(const Shape<Dim>& s);

template <int Dim>
double shape_diameter(const Shape<Dim>& s);

/// Finite tiling fragment. complete[i] is true when every neighbour tile i has in the full
/// tiling is present in the patch; BFS refuses to expand tiles that are not complete.
template <int Dim>
struct Patch {
  std::vector<Tile<Dim>> tiles;
  std::vector<std::vector<int>> adjacency;  // sorted neighbour ids
  std::vector<char> complete;
  Vec<Dim> center = Vec<Dim>::Zero();
  double guard_radius = std::numeric_limits<double>::infinity();

  std::size_t size() const { return tiles.size(); }
  double max_tile_diameter() const;

  /// Marks tiles complete iff their centroid lies within guard_radius of center.
  void set_guard(const Vec<Dim>& c, double radius);

  /// Index of the tile with centroid closest to p.
  int nearest_tile(const Vec<Dim>& p) const;
};

using Patch2 = Patch<2>;
using Patch3 = Patch<3>;

/// Builds the adjacency graph of a set of interior-disjoint tiles. Tile ids are reassigned to
/// their positions. Every tile is marked complete; generators override with set_guard.
template <int Dim>
Patch<Dim> build_adjacency(std::vector<Tile<Dim>> tiles, const NeighborRule& rule, const Tolerance& tol = {},
                           bool check_overlap = true);

struct ShellDecomposition {
  std::vector<std::vector<int>> shells;  // shells[k] = P_k, sorted ids
  std::vector<int> seed_ids;
  std::vector<int> index;                // shell index per tile, -1 if unreached

  int depth() const { return static_cast<int>(shells.size()) - 1; }
};

/// BFS layering P_0 = seed, P_k = neighbours of P_{k-1} not in P_{k-1} or P_{k-2}.
/// Throws GuardBandExceeded when an incomplete tile would have to be expanded.
template <int Dim>
ShellDecomposition shells(const Patch<Dim>& patch, std::span<const int> seed_ids, int n);

/// [|P_1|, ..., |P_n|]
template <int Dim>
std::vector<long> coordination_sequence(const Patch<Dim>& patch, std::span<const int> seed_ids, int n);

/// Centroids of the tiles of P_k divided by k.
template <int Dim>
PointList<Dim> scaled_shell(const ShellDecomposition& sd, const Patch<Dim>& patch, int k);

/// Ids of P_0 through P_k.
std::vector<int> corona(const ShellDecomposition& sd, int k);

}  // namespace tilegrow
