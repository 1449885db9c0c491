#include "tilegrow/substitution.hpp"

#include <cmath>
#include <queue>

namespace tilegrow {

namespace {

Eigen::Matrix2d rot(int quarter_turns) {
  static const int c[4] = {1, 0, -1, 0}, s[4] = {0, 1, 0, -1};
  const int k = ((quarter_turns % 4) + 4) % 4;
  Eigen::Matrix2d A;
  A << c[k], -s[k], s[k], c[k];
  return A;
}

Placement place(int quarter_turns, double tx, double ty) { return {{rot(quarter_turns), Vec2(tx, ty)}, 0}; }

Polygon inflate(const Polygon& p, const Eigen::Matrix2d& Q) { return transformed(p, Q, Vec2::Zero()); }

struct Affine {
  Eigen::Matrix2d A = Eigen::Matrix2d::Identity();
  Vec2 t = Vec2::Zero();
};

Affine compose(const Affine& outer, const Eigen::Matrix2d& A, const Vec2& t) {
  return {outer.A * A, outer.A * t + outer.t};
}

double bbox_distance(const Polygon& p, const Vec2& c) {
  Vec2 lo = p[0], hi = p[0];
  for (const auto& v : p.vertices) {
    lo = lo.cwiseMin(v);
    hi = hi.cwiseMax(v);
  }
  return (c.cwiseMax(lo).cwiseMin(hi) - c).norm();
}

SupertilePatch expand(const SubstitutionSystem& sys, const std::string& seed, int level, const Vec2& center,
                      double radius, const NeighborRule& rule, const Tolerance& tol) {
  if (level < 0) throw Error(ErrorKind::InvalidSpec, "level must be non-negative");
  sys.validate(tol);
  const int root = sys.prototile_index(seed);

  // Q^l and Q^-l for every level reached.
  std::vector<Eigen::Matrix2d> Qp(level + 1), Qi(level + 1);
  Qp[0] = Qi[0] = Eigen::Matrix2d::Identity();
  for (int l = 1; l <= level; ++l) {
    Qp[l] = Qp[l - 1] * sys.Q;
    Qi[l] = Qp[l].inverse();
  }

  SupertilePatch out;
  out.region = inflate(sys.prototiles[root].polygon, Qp[level]);
  std::vector<Tile2> tiles;
  long groups = 0;

  // Node: a copy of Q^l * prototile placed by the affine map W.
  struct Node {
    int level, proto, child;
    long parent;
    Affine W;
  };
  std::vector<Node> stack{{level, root, 0, -1, {}}};
  while (!stack.empty()) {
    const Node n = stack.back();
    stack.pop_back();
    const Polygon& proto = sys.prototiles[n.proto].polygon;
    if (std::isfinite(radius)) {
      const Polygon here = transformed(proto, n.W.A * Qp[n.level], n.W.t);
      if (bbox_distance(here, center) > radius) continue;
    }
    if (n.level == 0) {
      tiles.emplace_back(static_cast<int>(tiles.size()), transformed(proto, n.W.A, n.W.t), sys.prototiles[n.proto].label);
      tiles.back().klass = n.proto;
      out.parent.push_back(n.parent);
      out.child.push_back(n.child);
      continue;
    }
    const long group = n.level == 1 ? groups++ : -1;
    const auto& rs = sys.rules[n.proto];
    // Q^l T = union of Q^(l-1) (R T' + t) = (Q^(l-1) R Q^-(l-1)) Q^(l-1) T' + Q^(l-1) t.
    for (int k = static_cast<int>(rs.size()) - 1; k >= 0; --k) {
      const auto& pl = rs[k];
      const Eigen::Matrix2d M = Qp[n.level - 1] * pl.motion.A * Qi[n.level - 1];
      stack.push_back({n.level - 1, pl.target, k, group, compose(n.W, M, Qp[n.level - 1] * pl.motion.t)});
    }
  }
  if (tiles.empty()) throw Error(ErrorKind::EmptySet, "window misses the supertile");

  out.patch = build_adjacency<2>(std::move(tiles), rule, tol, /*check_overlap=*/false);
  const double guard = radius - 2.0 * out.patch.max_tile_diameter();
  out.patch.center = center;
  out.patch.guard_radius = guard;
  for (std::size_t i = 0; i < out.patch.size(); ++i) {
    const auto& t = out.patch.tiles[i];
    const bool inside = !std::isfinite(radius) || (t.centroid - center).norm() <= guard;
    out.patch.complete[i] = inside && !boundaries_touch(t.shape, out.region, tol.eps_geom);
  }
  return out;
}

}  // namespace

int SubstitutionSystem::prototile_index(const std::string& label) const {
  for (std::size_t i = 0; i < prototiles.size(); ++i)
    if (prototiles[i].label == label) return static_cast<int>(i);
  throw Error(ErrorKind::InvalidSpec, "no prototile labelled '" + label + "'");
}

void SubstitutionSystem::validate(const Tolerance& tol) const {
  if (prototiles.empty()) throw Error(ErrorKind::InvalidRules, name + ": no prototiles");
  if (rules.size() != prototiles.size()) throw Error(ErrorKind::InvalidRules, name + ": one rule set per prototile");
  const double det = std::abs(Q.determinant());
  if (!(det > 1.0)) throw Error(ErrorKind::InvalidRules, name + ": inflation must expand");
  for (std::size_t i = 0; i < prototiles.size(); ++i) {
    const Polygon big = inflate(prototiles[i].polygon, Q);
    const double target = det * polygon_area(prototiles[i].polygon);
    std::vector<Polygon> copies;
    double sum = 0.0;
    for (const auto& pl : rules[i]) {
      if (pl.target < 0 || pl.target >= static_cast<int>(prototiles.size()))
        throw Error(ErrorKind::InvalidRules, name + ": placement targets unknown prototile");
      if (!(pl.motion.A.transpose() * pl.motion.A).isIdentity(1e-12))
        throw Error(ErrorKind::InvalidRules, name + ": placement is not a rigid motion");
      copies.push_back(transformed(prototiles[pl.target].polygon, pl.motion.A, pl.motion.t));
      const double a = polygon_area(copies.back());
      sum += a;
      if (std::abs(intersection_area(copies.back(), big) - a) > tol.eps_geom)
        throw Error(ErrorKind::InvalidRules, name + ": copy " + std::to_string(copies.size() - 1) +
                                                 " leaves the inflated " + prototiles[i].label);
    }
    if (std::abs(sum - target) > tol.eps_geom)
      throw Error(ErrorKind::InvalidRules, name + ": copies of " + prototiles[i].label + " have area " +
                                               std::to_string(sum) + ", expected " + std::to_string(target));
    for (std::size_t a = 0; a < copies.size(); ++a)
      for (std::size_t b = a + 1; b < copies.size(); ++b)
        if (intersection_area(copies[a], copies[b]) > tol.eps_geom)
          throw Error(ErrorKind::InvalidRules, name + ": copies " + std::to_string(a) + " and " +
                                                   std::to_string(b) + " overlap");
  }
}

SubstitutionSystem chair_system() {
  SubstitutionSystem s;
  s.name = "chair";
  s.prototiles.push_back({"chair", Polygon({{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}})});
  // Corner chair, chairs along the two arms, central chair.
  s.rules = {{place(0, 0, 0), place(3, 0, 4), place(0, 1, 1), place(1, 4, 0)}};
  return s;
}

SubstitutionSystem l_tetromino_system() {
  SubstitutionSystem s;
  s.name = "ltetromino";
  s.prototiles.push_back({"ltetromino", Polygon({{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 3}, {0, 3}})});
  s.rules = {{place(3, 0, 2), place(0, 0, 2), place(2, 2, 6), place(1, 4, 0)}};
  return s;
}

SupertilePatch supertile(const SubstitutionSystem& sys, const std::string& seed, int level, const NeighborRule& rule,
                         const Tolerance& tol) {
  return expand(sys, seed, level, Vec2::Zero(), std::numeric_limits<double>::infinity(), rule, tol);
}

SupertilePatch supertile_window(const SubstitutionSystem& sys, const std::string& seed, int level,
                                const Vec2& center, double radius, const NeighborRule& rule, const Tolerance& tol) {
  if (!(radius > 0.0)) throw Error(ErrorKind::InvalidSpec, "window radius must be positive");
  return expand(sys, seed, level, center, radius, rule, tol);
}

Vec2 l_supertile_center(int level) {
  const double r = std::ldexp(1.0, level) * std::sqrt(2.0) / (1.0 + std::sqrt(2.0));
  return Vec2(r, r);
}

int tile_at(const Patch<2>& p, const Vec2& q) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (contains(p.tiles[i].shape, q, 0.0)) return static_cast<int>(i);
  throw Error(ErrorKind::EmptySet, "no tile contains the point");
}

DualGraph chair_dual_graph(const SupertilePatch& sp) {
  const auto& p = sp.patch;
  DualGraph g;
  for (const auto& t : p.tiles) {
    // The only reflex vertex of the L outline.
    const auto& poly = t.shape;
    const std::size_t n = poly.size();
    int reflex = -1;
    for (std::size_t i = 0; i < n; ++i)
      if (orient2(poly[(i + n - 1) % n], poly[i], poly.next(i)) < 0) reflex = static_cast<int>(i);
    if (reflex < 0) throw Error(ErrorKind::InvalidSpec, "tile " + std::to_string(t.id) + " is not a chair");
    g.vertices.push_back(poly[reflex]);
  }
  for (std::size_t u = 0; u < p.size(); ++u)
    for (int v : p.adjacency[u]) {
      if (v <= static_cast<int>(u)) continue;
      g.edges.emplace_back(static_cast<int>(u), v);
      const bool same = sp.parent[u] >= 0 && sp.parent[u] == sp.parent[v];
      const int a = std::min(sp.child[u], sp.child[v]), b = std::max(sp.child[u], sp.child[v]);
      g.diagonal.push_back(same && a == 0 && b == 2);
    }
  return g;
}

DiagonalDeletionReport diagonal_deletion(const DualGraph& g) {
  const int n = static_cast<int>(g.vertices.size());
  std::vector<std::vector<int>> full(n), reduced(n);
  std::vector<std::vector<char>> dropped(n, std::vector<char>(n, 0));
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const auto [u, v] = g.edges[e];
    full[u].push_back(v);
    full[v].push_back(u);
    if (g.diagonal[e]) {
      dropped[u][v] = dropped[v][u] = 1;
    } else {
      reduced[u].push_back(v);
      reduced[v].push_back(u);
    }
  }
  auto bfs = [n](const std::vector<std::vector<int>>& adj, int s) {
    std::vector<int> d(n, -1);
    std::queue<int> q;
    d[s] = 0;
    q.push(s);
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (int v : adj[u])
        if (d[v] < 0) {
          d[v] = d[u] + 1;
          q.push(v);
        }
    }
    return d;
  };
  DiagonalDeletionReport r;
  for (int s = 0; s < n; ++s) {
    const auto a = bfs(full, s), b = bfs(reduced, s);
    for (int t = 0; t < n; ++t) {
      if (t == s || dropped[s][t]) continue;
      ++r.pairs;
      if (a[t] != b[t]) {
        ++r.changed;
        // b[t] < 0 means the deletion disconnected the pair.
        r.max_increase = std::max(r.max_increase, b[t] < 0 ? n : b[t] - a[t]);
      }
    }
  }
  return r;
}

Patch<2> strips_tiling(int levels, int half_height, const NeighborRule& rule, const Tolerance& tol) {
  if (levels < 1) throw Error(ErrorKind::InvalidSpec, "strips need at least one level");
  if (half_height < 8 || half_height % 2) throw Error(ErrorKind::InvalidSpec, "half height must be even and >= 8");
  std::vector<Tile2> tiles;
  auto square = [&](double x, double y, double s, const char* label) {
    tiles.emplace_back(static_cast<int>(tiles.size()), Polygon({{x, y}, {x + s, y}, {x + s, y + s}, {x, y + s}}), label);
  };
  long x = 0;
  for (int i = 0; i < levels; ++i) {
    const long w = 1L << (2 * i);
    for (long c = 0; c < w; ++c, ++x)
      for (int y = -half_height; y < half_height; ++y) square(x, y, 1, "s");
    for (long c = 0; c < w; ++c, x += 2)
      for (int y = -half_height; y < half_height; y += 2) square(x, y, 2, "l");
  }
  auto p = build_adjacency<2>(std::move(tiles), rule, tol, /*check_overlap=*/false);
  const double width = static_cast<double>(x);
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Vec2& c = p.tiles[i].centroid;
    p.complete[i] = std::abs(c.y()) < half_height - 4 && c.x() < width - 4;
  }
  return p;
}

int strips_seed(const Patch<2>& p) { return p.nearest_tile(Vec2(0.5, 0.5)); }

}  // namespace tilegrow
