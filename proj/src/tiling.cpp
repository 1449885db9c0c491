#include "tilegrow/tiling.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "tilegrow/parallel.hpp"

namespace tilegrow {

void NeighborRule::validate() const {
  if (kind == NeighborKind::EdgeShare && !(min_shared_measure > 0.0))
    throw Error(ErrorKind::InvalidSpec, "EdgeShare needs min_shared_measure > 0");
}

std::string_view to_string(NeighborKind k) { return k == NeighborKind::EdgeShare ? "edge" : "heesch"; }

template <>
double measure<2>(const Polygon& s) {
  return polygon_area(s);
}
template <>
double measure<3>(const Parallelepiped& s) {
  return s.volume();
}
template <>
double shape_diameter<2>(const Polygon& s) {
  return diameter(s);
}
template <>
double shape_diameter<3>(const Parallelepiped& s) {
  return s.diameter();
}

namespace {

Vec2 shape_centroid(const Polygon& p) { return polygon_centroid(p); }
Vec3 shape_centroid(const Parallelepiped& p) { return p.centroid(); }

template <int Dim>
struct Box {
  Vec<Dim> lo, hi;
};

Box<2> bbox(const Polygon& p) {
  Box<2> b{p[0], p[0]};
  for (const auto& v : p.vertices) b.lo = b.lo.cwiseMin(v), b.hi = b.hi.cwiseMax(v);
  return b;
}

Box<3> bbox(const Parallelepiped& p) {
  const auto c = p.corners();
  Box<3> b{c[0], c[0]};
  for (const auto& v : c) b.lo = b.lo.cwiseMin(v), b.hi = b.hi.cwiseMax(v);
  return b;
}

template <int Dim>
bool boxes_meet(const Box<Dim>& a, const Box<Dim>& b, double eps) {
  for (int k = 0; k < Dim; ++k)
    if (a.lo[k] > b.hi[k] + eps || b.lo[k] > a.hi[k] + eps) return false;
  return true;
}

// Convex pieces of a polygon, used for the overlap test.
std::vector<std::vector<Vec2>> convex_parts(const Polygon& p) {
  if (is_convex(p, 1e-12)) return {p.vertices};
  std::vector<std::vector<Vec2>> out;
  for (const auto& t : triangulate(p)) out.push_back({t[0], t[1], t[2]});
  return out;
}

struct Pair2 {
  static bool overlap(const std::vector<std::vector<Vec2>>& a, const std::vector<std::vector<Vec2>>& b,
                      double eps) {
    double s = 0.0;
    for (const auto& x : a)
      for (const auto& y : b) s += convex_intersection_area(x, y);
    return s > eps;
  }
};

std::int64_t cell_key(std::int64_t x, std::int64_t y, std::int64_t z) {
  return (x & 0x1fffff) | ((y & 0x1fffff) << 21) | ((z & 0x1fffff) << 42);
}

}  // namespace

template <int Dim>
Tile<Dim>::Tile(int id_, Shape<Dim> s, std::string label_)
    : id(id_), shape(std::move(s)), label(std::move(label_)), centroid(shape_centroid(shape)) {}

template <int Dim>
double Patch<Dim>::max_tile_diameter() const {
  double d = 0.0;
  for (const auto& t : tiles) d = std::max(d, shape_diameter<Dim>(t.shape));
  return d;
}

template <int Dim>
void Patch<Dim>::set_guard(const Vec<Dim>& c, double radius) {
  center = c;
  guard_radius = radius;
  complete.assign(tiles.size(), 0);
  for (std::size_t i = 0; i < tiles.size(); ++i) complete[i] = (tiles[i].centroid - c).norm() <= radius;
}

template <int Dim>
int Patch<Dim>::nearest_tile(const Vec<Dim>& p) const {
  if (tiles.empty()) throw Error(ErrorKind::EmptySet, "patch has no tiles");
  int best = 0;
  double bd = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < tiles.size(); ++i) {
    const double d = (tiles[i].centroid - p).squaredNorm();
    if (d < bd) bd = d, best = static_cast<int>(i);
  }
  return best;
}

template <int Dim>
Patch<Dim> build_adjacency(std::vector<Tile<Dim>> tiles, const NeighborRule& rule, const Tolerance& tol,
                           bool check_overlap) {
  rule.validate();
  Patch<Dim> patch;
  patch.tiles = std::move(tiles);
  const std::size_t n = patch.tiles.size();
  for (std::size_t i = 0; i < n; ++i) {
    patch.tiles[i].id = static_cast<int>(i);
    if (!(measure<Dim>(patch.tiles[i].shape) > tol.eps_geom))
      throw Error(ErrorKind::InvalidSpec, "tile " + std::to_string(i) + " has no positive measure");
  }
  patch.adjacency.assign(n, {});
  patch.complete.assign(n, 1);
  if (n == 0) return patch;

  std::vector<Box<Dim>> boxes(n);
  double cell = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    boxes[i] = bbox(patch.tiles[i].shape);
    cell = std::max(cell, (boxes[i].hi - boxes[i].lo).maxCoeff());
  }
  cell += 1e-6;
  const double eps = tol.eps_geom;
  auto cell_of = [&](double v) { return static_cast<std::int64_t>(std::floor(v / cell)); };

  // Each tile is binned by the cell of its lower box corner; since no box is wider than a
  // cell, candidates live in the 3^Dim cells around it.
  std::unordered_map<std::int64_t, std::vector<int>> grid;
  grid.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& lo = boxes[i].lo;
    grid[cell_key(cell_of(lo[0]), cell_of(lo[1]), Dim == 3 ? cell_of(lo[Dim - 1]) : 0)].push_back(static_cast<int>(i));
  }

  std::vector<std::vector<std::vector<Vec2>>> parts;
  if constexpr (Dim == 2) {
    if (check_overlap) {
      parts.resize(n);
      parallel_for(n, [&](std::size_t b, std::size_t e) {
        for (std::size_t i = b; i < e; ++i) parts[i] = convex_parts(patch.tiles[i].shape);
      });
    }
  }

  std::vector<std::vector<int>> upper(n);
  parallel_for(n, [&](std::size_t b, std::size_t e) {
    std::vector<int> cand;
    for (std::size_t i = b; i < e; ++i) {
      cand.clear();
      const auto& lo = boxes[i].lo;
      const std::int64_t cx = cell_of(lo[0]), cy = cell_of(lo[1]), cz = Dim == 3 ? cell_of(lo[Dim - 1]) : 0;
      const int zr = Dim == 3 ? 1 : 0;
      for (int dx = -1; dx <= 1; ++dx)
        for (int dy = -1; dy <= 1; ++dy)
          for (int dz = -zr; dz <= zr; ++dz) {
            auto it = grid.find(cell_key(cx + dx, cy + dy, cz + dz));
            if (it == grid.end()) continue;
            for (int j : it->second)
              if (static_cast<std::size_t>(j) > i && boxes_meet<Dim>(boxes[i], boxes[static_cast<std::size_t>(j)], eps))
                cand.push_back(j);
          }
      std::sort(cand.begin(), cand.end());
      for (int j : cand) {
        const auto& A = patch.tiles[i].shape;
        const auto& B = patch.tiles[static_cast<std::size_t>(j)].shape;
        bool adjacent = false;
        if constexpr (Dim == 2) {
          if (check_overlap && Pair2::overlap(parts[i], parts[static_cast<std::size_t>(j)], eps))
            throw Error(ErrorKind::OverlappingTiles,
                        "tiles " + std::to_string(i) + " and " + std::to_string(j) + " overlap");
          if (rule.kind == NeighborKind::EdgeShare)
            adjacent = shared_boundary_length(A, B, eps) >= rule.min_shared_measure;
          else
            adjacent = boundaries_touch(A, B, eps);
        } else {
          if (check_overlap && interiors_overlap(A, B, std::max(eps, 1e-7)))
            throw Error(ErrorKind::OverlappingTiles,
                        "cells " + std::to_string(i) + " and " + std::to_string(j) + " overlap");
          if (rule.kind == NeighborKind::EdgeShare)
            adjacent = shared_facet_area(A, B, eps) >= rule.min_shared_measure;
          else
            adjacent = cells_touch(A, B, eps);
        }
        if (adjacent) upper[i].push_back(j);
      }
    }
  });
  for (std::size_t i = 0; i < n; ++i)
    for (int j : upper[i]) {
      patch.adjacency[i].push_back(j);
      patch.adjacency[static_cast<std::size_t>(j)].push_back(static_cast<int>(i));
    }
  for (auto& a : patch.adjacency) std::sort(a.begin(), a.end());
  return patch;
}

template <int Dim>
ShellDecomposition shells(const Patch<Dim>& patch, std::span<const int> seed_ids, int n) {
  if (seed_ids.empty()) throw Error(ErrorKind::EmptySeed, "seed set is empty");
  if (n < 0) throw Error(ErrorKind::IndexOutOfRange, "negative shell count");
  const std::size_t size = patch.tiles.size();
  ShellDecomposition sd;
  sd.index.assign(size, -1);
  std::vector<int> current;
  for (int s : seed_ids) {
    if (s < 0 || static_cast<std::size_t>(s) >= size)
      throw Error(ErrorKind::IndexOutOfRange, "seed id " + std::to_string(s) + " not in patch");
    if (sd.index[static_cast<std::size_t>(s)] == 0) continue;
    sd.index[static_cast<std::size_t>(s)] = 0;
    current.push_back(s);
  }
  std::sort(current.begin(), current.end());
  sd.seed_ids = current;
  sd.shells.push_back(current);
  for (int k = 1; k <= n; ++k) {
    std::vector<int> next;
    for (int t : current) {
      if (!patch.complete.empty() && !patch.complete[static_cast<std::size_t>(t)])
        throw GuardBandExceeded(k - 1, "shell " + std::to_string(k) + " would need neighbours of tile " +
                                           std::to_string(t) + " outside the guard band; largest safe shell is " +
                                           std::to_string(k - 1));
      for (int u : patch.adjacency[static_cast<std::size_t>(t)]) {
        if (sd.index[static_cast<std::size_t>(u)] != -1) continue;
        sd.index[static_cast<std::size_t>(u)] = k;
        next.push_back(u);
      }
    }
    std::sort(next.begin(), next.end());
    sd.shells.push_back(next);
    current = std::move(next);
  }
  return sd;
}

template <int Dim>
std::vector<long> coordination_sequence(const Patch<Dim>& patch, std::span<const int> seed_ids, int n) {
  const auto sd = shells(patch, seed_ids, n);
  std::vector<long> out;
  for (int k = 1; k <= n; ++k) out.push_back(static_cast<long>(sd.shells[static_cast<std::size_t>(k)].size()));
  return out;
}

template <int Dim>
PointList<Dim> scaled_shell(const ShellDecomposition& sd, const Patch<Dim>& patch, int k) {
  if (k < 1 || k > sd.depth())
    throw Error(ErrorKind::IndexOutOfRange, "shell " + std::to_string(k) + " not computed (depth " +
                                                std::to_string(sd.depth()) + ")");
  PointList<Dim> out;
  for (int t : sd.shells[static_cast<std::size_t>(k)])
    out.push_back(patch.tiles[static_cast<std::size_t>(t)].centroid / static_cast<double>(k));
  return out;
}

std::vector<int> corona(const ShellDecomposition& sd, int k) {
  if (k < 0 || k > sd.depth()) throw Error(ErrorKind::IndexOutOfRange, "corona beyond computed shells");
  std::vector<int> out;
  for (int j = 0; j <= k; ++j)
    out.insert(out.end(), sd.shells[static_cast<std::size_t>(j)].begin(), sd.shells[static_cast<std::size_t>(j)].end());
  std::sort(out.begin(), out.end());
  return out;
}

template struct Tile<2>;
template struct Tile<3>;
template struct Patch<2>;
template struct Patch<3>;
template Patch<2> build_adjacency<2>(std::vector<Tile<2>>, const NeighborRule&, const Tolerance&, bool);
template Patch<3> build_adjacency<3>(std::vector<Tile<3>>, const NeighborRule&, const Tolerance&, bool);
template ShellDecomposition shells<2>(const Patch<2>&, std::span<const int>, int);
template ShellDecomposition shells<3>(const Patch<3>&, std::span<const int>, int);
template std::vector<long> coordination_sequence<2>(const Patch<2>&, std::span<const int>, int);
template std::vector<long> coordination_sequence<3>(const Patch<3>&, std::span<const int>, int);
template PointList<2> scaled_shell<2>(const ShellDecomposition&, const Patch<2>&, int);
template PointList<3> scaled_shell<3>(const ShellDecomposition&, const Patch<3>&, int);

}  // namespace tilegrow
