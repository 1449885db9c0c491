#include "tilegrow/periodic.hpp"

#include <cmath>

namespace tilegrow {

void PeriodicSpec::validate(const Tolerance& tol) const {
  const double det = basis.determinant();
  if (!basis.allFinite() || !(std::abs(det) > tol.eps_geom))
    throw Error(ErrorKind::InvalidSpec, "lattice basis is degenerate");
  if (tiles.empty()) throw Error(ErrorKind::InvalidSpec, "no fundamental tiles");
  double area = 0.0;
  for (const auto& t : tiles) {
    if (!is_valid_polygon(t.polygon, tol.eps_geom))
      throw Error(ErrorKind::InvalidSpec, "fundamental tile '" + t.label + "' is not a simple counterclockwise polygon");
    area += polygon_area(t.polygon);
  }
  // Translates close enough to touch: |coefficients| <= |B^-1| (2 diam + centroid spread).
  double spread = 0.0;
  for (const auto& a : tiles)
    for (const auto& b : tiles) spread = std::max(spread, (polygon_centroid(a.polygon) - polygon_centroid(b.polygon)).norm());
  const Eigen::Matrix2d inv = basis.inverse();
  const long K = static_cast<long>(std::ceil(inv.norm() * (2.0 * max_tile_diameter() + spread)));
  for (std::size_t i = 0; i < tiles.size(); ++i)
    for (std::size_t j = i; j < tiles.size(); ++j)
      for (long a = -K; a <= K; ++a)
        for (long b = -K; b <= K; ++b) {
          if (i == j && a == 0 && b == 0) continue;
          const Polygon moved = translated(tiles[j].polygon, lattice_vector(a, b));
          if (intersection_area(tiles[i].polygon, moved) > 1e-6)
            throw Error(ErrorKind::OverlappingTiles, "fundamental tile '" + tiles[i].label + "' overlaps a translate of '" +
                                                         tiles[j].label + "' by (" + std::to_string(a) + ", " +
                                                         std::to_string(b) + ")");
        }
  if (std::abs(area - std::abs(det)) > 1e-6 * std::max(1.0, std::abs(det)))
    throw Error(ErrorKind::InvalidSpec, "fundamental tiles cover area " + std::to_string(area) +
                                            " but the lattice cell has area " + std::to_string(std::abs(det)));
}

double PeriodicSpec::max_tile_diameter() const {
  double d = 0.0;
  for (const auto& t : tiles) d = std::max(d, diameter(t.polygon));
  return d;
}

PeriodicSpec periodic_preset(const std::string& name) {
  const double h = std::sqrt(3.0) / 2.0;
  PeriodicSpec s;
  s.name = name;
  if (name == "square44") {
    s.basis << 1, 0, 0, 1;
    s.tiles.push_back({"square", Polygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}})});
  } else if (name == "hex63") {
    // Pointy-top hexagon of circumradius 1 centred at the origin.
    Polygon hex;
    for (int k = 0; k < 6; ++k) {
      const double a = M_PI / 6 + k * M_PI / 3;
      hex.vertices.emplace_back(std::cos(a), std::sin(a));
    }
    canonicalize(hex);
    s.basis << std::sqrt(3.0), std::sqrt(3.0) / 2, 0, 1.5;
    s.tiles.push_back({"hexagon", hex});
  } else if (name == "tri36") {
    s.basis << 1, 0.5, 0, h;
    s.tiles.push_back({"up", Polygon({{0, 0}, {1, 0}, {0.5, h}})});
    s.tiles.push_back({"down", Polygon({{0.5, h}, {1, 0}, {1.5, h}})});
  } else if (name == "arch3344") {
    // Row of unit squares at y in [0,1], row of triangles at y in [1, 1+h]; the next square
    // row is shifted by half a square.
    s.basis << 1, 0.5, 0, 1 + h;
    s.tiles.push_back({"square", Polygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}})});
    s.tiles.push_back({"up", Polygon({{0, 1}, {1, 1}, {0.5, 1 + h}})});
    s.tiles.push_back({"down", Polygon({{0.5, 1 + h}, {1, 1}, {1.5, 1 + h}})});
  } else {
    throw Error(ErrorKind::InvalidSpec, "unknown periodic preset '" + name + "'");
  }
  for (auto& t : s.tiles) canonicalize(t.polygon);
  return s;
}

std::vector<std::string> periodic_preset_names() { return {"square44", "hex63", "tri36", "arch3344"}; }

Patch2 unroll(const PeriodicSpec& spec, double radius, const NeighborRule& rule, const Tolerance& tol) {
  spec.validate(tol);
  const double diam = spec.max_tile_diameter();
  double reach = 0.0;
  std::vector<Vec2> cents;
  for (const auto& t : spec.tiles) {
    cents.push_back(polygon_centroid(t.polygon));
    reach = std::max(reach, cents.back().norm());
  }
  const Eigen::Matrix2d inv = spec.basis.inverse();
  const long n1max = static_cast<long>(std::ceil(inv.row(0).norm() * (radius + reach))) + 1;
  const long n2max = static_cast<long>(std::ceil(inv.row(1).norm() * (radius + reach))) + 1;
  std::vector<Tile2> tiles;
  for (long a = -n1max; a <= n1max; ++a)
    for (long b = -n2max; b <= n2max; ++b) {
      const Vec2 v = spec.lattice_vector(a, b);
      for (std::size_t f = 0; f < spec.tiles.size(); ++f) {
        if ((cents[f] + v).norm() > radius) continue;
        Tile2 t(0, translated(spec.tiles[f].polygon, v), spec.tiles[f].label);
        t.klass = static_cast<int>(f);
        t.lattice << a, b;
        tiles.push_back(std::move(t));
      }
    }
  Patch2 patch = build_adjacency<2>(std::move(tiles), rule, tol);
  // Centroids of touching tiles are at most two diameters apart.
  patch.set_guard(Vec2::Zero(), radius - 2.0 * diam);
  return patch;
}

std::optional<Vec2> equivalent_mod_lattice(const Tile2& t1, const Tile2& t2, const PeriodicSpec& spec,
                                           const Tolerance& tol) {
  if (t1.label != t2.label || t1.shape.size() != t2.shape.size()) return std::nullopt;
  if (t1.klass >= 0 && t2.klass >= 0 && t1.klass != t2.klass) return std::nullopt;
  const Vec2 v = t2.centroid - t1.centroid;
  const Vec2 coeff = spec.basis.inverse() * v;
  if ((coeff - coeff.array().round().matrix()).norm() > 1e-7) return std::nullopt;
  const Vec2 exact = spec.lattice_vector(std::lround(coeff[0]), std::lround(coeff[1]));
  for (const auto& p : t1.shape.vertices) {
    bool found = false;
    for (const auto& q : t2.shape.vertices)
      if ((p + exact - q).norm() <= std::max(tol.eps_geom, 1e-9 * exact.norm())) {
        found = true;
        break;
      }
    if (!found) return std::nullopt;
  }
  return exact;
}

Algorithm1Result algorithm1(const PeriodicSpec& spec, const NeighborRule& rule, int shells_req,
                            const Tolerance& tol) {
  spec.validate(tol);
  const int z = shells_req > 0 ? shells_req : static_cast<int>(spec.tiles.size());
  const double diam = spec.max_tile_diameter();
  double step = 0.0;
  step = std::max({step, spec.basis.col(0).norm(), spec.basis.col(1).norm(), diam});
  double radius = (z + 3) * 2.0 * step + 2.0 * diam;
  for (int attempt = 0; attempt < 8; ++attempt, radius *= 2.0) {
    const Patch2 patch = unroll(spec, radius, rule, tol);
    Algorithm1Result res;
    res.shells = z;
    res.radius = radius;
    try {
      for (std::size_t f = 0; f < spec.tiles.size(); ++f) {
        int seed = -1;
        for (std::size_t i = 0; i < patch.size(); ++i)
          if (patch.tiles[i].klass == static_cast<int>(f) && patch.tiles[i].lattice.isZero()) seed = static_cast<int>(i);
        if (seed < 0) throw Error(ErrorKind::InvalidSpec, "fundamental tile outside unrolled patch");
        const int seeds[1] = {seed};
        const auto sd = shells<2>(patch, seeds, z);
        std::size_t found = 0;
        for (int k = 1; k <= z; ++k)
          for (int t : sd.shells[static_cast<std::size_t>(k)]) {
            const auto v = equivalent_mod_lattice(patch.tiles[static_cast<std::size_t>(seed)],
                                                  patch.tiles[static_cast<std::size_t>(t)], spec, tol);
            if (!v) continue;
            res.w.push_back(*v / static_cast<double>(k));
            ++found;
          }
        if (found == 0)
          throw Error(ErrorKind::NoEquivalentsFound, "no translate of fundamental tile '" + spec.tiles[f].label +
                                                         "' within " + std::to_string(z) + " shells");
      }
    } catch (const GuardBandExceeded&) {
      continue;
    }
    res.form = GrowthForm::from_points(res.w, Provenance::Algorithm1, tol);
    return res;
  }
  throw GuardBandExceeded(0, "unroll radius could not be grown far enough");
}

GrowthForm growth_form_periodic(const PeriodicSpec& spec, const NeighborRule& rule, int shells,
                                const Tolerance& tol) {
  return algorithm1(spec, rule, shells, tol).form;
}

GrowthForm growth_form_heesch(const PeriodicSpec& spec, int shells, const Tolerance& tol) {
  return algorithm1(spec, NeighborRule::heesch(), shells, tol).form;
}

}  // namespace tilegrow
