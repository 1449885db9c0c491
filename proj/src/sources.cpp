#include "tilegrow/sources.hpp"

#include <cmath>

namespace tilegrow {

namespace {

double grid_scale(const GridSpec& g) {
  // Tile positions are roughly G G^T x for a grid point x.
  const Eigen::MatrixXd GGt = g.vectors * g.vectors.transpose();
  return Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(GGt).eigenvalues().minCoeff();
}

template <int Dim>
Patch<Dim> with_rule(Patch<Dim> p, const NeighborRule& rule, const Tolerance& tol) {
  if (rule.kind == NeighborKind::EdgeShare) return p;
  auto q = build_adjacency<Dim>(p.tiles, rule, tol, /*check_overlap=*/false);
  q.complete = p.complete;
  q.center = p.center;
  q.guard_radius = p.guard_radius;
  return q;
}

}  // namespace

std::string_view to_string(SourceKind k) {
  switch (k) {
    case SourceKind::Periodic: return "periodic";
    case SourceKind::Grid: return "grid";
    case SourceKind::Substitution: return "substitution";
    case SourceKind::Strips: return "strips";
  }
  return "?";
}

void Source::validate(const Tolerance& tol) const {
  switch (kind) {
    case SourceKind::Periodic: periodic.validate(tol); break;
    case SourceKind::Grid: grid.validate(tol); break;
    case SourceKind::Substitution:
      substitution.validate(tol);
      substitution.prototile_index(seed_label);
      if (level < 0) throw Error(ErrorKind::InvalidSpec, "level must be non-negative");
      break;
    case SourceKind::Strips:
      if (strips_levels < 1 || strips_half_height < 8 || strips_half_height % 2)
        throw Error(ErrorKind::InvalidSpec, "strips need levels >= 1 and an even half height >= 8");
      break;
  }
}

Source source_preset(const std::string& name) {
  Source s;
  s.name = name;
  for (const auto& p : periodic_preset_names())
    if (p == name) {
      s.kind = SourceKind::Periodic;
      s.periodic = periodic_preset(name);
      return s;
    }
  for (const auto& g : grid_preset_names())
    if (g == name) {
      s.kind = SourceKind::Grid;
      s.grid = grid_preset(name);
      return s;
    }
  if (name == "chair" || name == "ltetromino") {
    s.kind = SourceKind::Substitution;
    s.substitution = name == "chair" ? chair_system() : l_tetromino_system();
    s.seed_label = name;
    s.level = name == "chair" ? 10 : 11;
    return s;
  }
  if (name == "strips") {
    s.kind = SourceKind::Strips;
    return s;
  }
  throw Error(ErrorKind::InvalidSpec, "unknown preset '" + name + "'");
}

std::vector<std::string> source_preset_names() {
  std::vector<std::string> out = periodic_preset_names();
  for (const auto& g : grid_preset_names()) out.push_back(g);
  for (const char* s : {"chair", "ltetromino", "strips"}) out.emplace_back(s);
  return out;
}

Generated generate(const Source& src, double radius, const NeighborRule& rule, const Tolerance& tol) {
  if (!(radius > 0.0)) throw Error(ErrorKind::InvalidSpec, "radius must be positive");
  src.validate(tol);
  Generated g;
  g.radius = radius;
  switch (src.kind) {
    case SourceKind::Periodic: {
      g.p2 = unroll(src.periodic, radius, rule, tol);
      for (std::size_t i = 0; i < g.p2.size(); ++i)
        if (g.p2.tiles[i].klass == 0 && g.p2.tiles[i].lattice.isZero()) g.seeds = {static_cast<int>(i)};
      if (g.seeds.empty()) throw Error(ErrorKind::EmptySet, "radius too small for the fundamental tile");
      break;
    }
    case SourceKind::Grid:
      g.dim = src.grid.d;
      if (g.dim == 2) {
        g.p2 = with_rule(dual_tiling_2d(src.grid, radius, tol).patch, rule, tol);
        g.seeds = {g.p2.nearest_tile(Vec2::Zero())};
      } else {
        g.p3 = with_rule(dual_tiling_3d(src.grid, radius, tol).patch, rule, tol);
        g.seeds = {g.p3.nearest_tile(Vec3::Zero())};
      }
      break;
    case SourceKind::Substitution: {
      int level = src.level;
      while (l_supertile_center(level).x() < radius + 8.0) ++level;
      g.level = level;
      const Vec2 c = l_supertile_center(level);
      g.p2 = supertile_window(src.substitution, src.seed_label, level, c, radius, rule, tol).patch;
      g.seeds = {tile_at(g.p2, c)};
      break;
    }
    case SourceKind::Strips: {
      int levels = src.strips_levels;
      while (std::ldexp(1.0, 2 * levels) - 1.0 < radius + 8.0) ++levels;
      int hh = src.strips_half_height;
      while (hh < radius + 8.0) hh += 2;
      g.level = levels;
      g.p2 = strips_tiling(levels, hh, rule, tol);
      g.seeds = {strips_seed(g.p2)};
      break;
    }
  }
  return g;
}

Generated generate_for_shells(const Source& src, int n, const NeighborRule& rule, const Tolerance& tol) {
  if (n < 1) throw Error(ErrorKind::IndexOutOfRange, "shell index must be >= 1");
  src.validate(tol);
  double radius = 0.0;
  switch (src.kind) {
    case SourceKind::Periodic: {
      const auto& b = src.periodic.basis;
      const double step = std::max({b.col(0).norm(), b.col(1).norm(), src.periodic.max_tile_diameter()});
      radius = (n + 3) * step + 2.0 * src.periodic.max_tile_diameter();
      break;
    }
    case SourceKind::Grid: radius = (n + 6.0) / grid_scale(src.grid) + 2.0 * neighbour_reach(src.grid); break;
    case SourceKind::Substitution: radius = 2.2 * n + 10.0; break;
    case SourceKind::Strips: radius = 2.0 * n + 8.0; break;
  }
  for (int attempt = 0;; ++attempt, radius *= 2.0) {
    Generated g = generate(src, radius, rule, tol);
    try {
      if (g.dim == 2)
        shells<2>(g.p2, g.seeds, n);
      else
        shells<3>(g.p3, g.seeds, n);
      return g;
    } catch (const GuardBandExceeded&) {
      if (attempt == 6) throw;
    }
  }
}

}  // namespace tilegrow
