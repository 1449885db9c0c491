#include "tilegrow/geom.hpp"

#include <map>
#include <numeric>
#include <unordered_map>

namespace tilegrow {

void Tolerance::validate() const {
  if (!(eps_geom > 0.0) || !(eps_geom < eps_form))
    throw Error(ErrorKind::InvalidSpec, "tolerance requires 0 < eps_geom < eps_form");
}

// ---------------------------------------------------------------------------
// Polygons

double signed_area(const Polygon& p) {
  double s = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) s += cross2(p[i], p.next(i));
  return 0.5 * s;
}

double polygon_area(const Polygon& p) {
  if (p.size() < 3) throw Error(ErrorKind::InvalidSpec, "polygon needs at least 3 vertices");
  const double a = signed_area(p);
  if (!(a > 0.0)) throw Error(ErrorKind::InvalidSpec, "polygon is not counterclockwise");
  return a;
}

Vec2 polygon_centroid(const Polygon& p) {
  // Shifted to the first vertex to keep the sums well conditioned far from the origin.
  const Vec2 o = p[0];
  double a = 0.0;
  Vec2 c = Vec2::Zero();
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Vec2 u = p[i] - o, v = p.next(i) - o;
    const double w = cross2(u, v);
    a += w;
    c += w * (u + v);
  }
  if (a == 0.0) {
    Vec2 m = Vec2::Zero();
    for (const auto& v : p.vertices) m += v;
    return m / static_cast<double>(p.size());
  }
  return o + c / (3.0 * a);
}

void canonicalize(Polygon& p) {
  if (p.vertices.empty()) return;
  auto it = std::min_element(p.vertices.begin(), p.vertices.end(),
                             [](const Vec2& a, const Vec2& b) { return lex_less<2>(a, b); });
  std::rotate(p.vertices.begin(), it, p.vertices.end());
}

namespace {

bool segments_intersect(const Vec2& a, const Vec2& b, const Vec2& c, const Vec2& d, double eps) {
  const double d1 = orient2(a, b, c), d2 = orient2(a, b, d);
  const double d3 = orient2(c, d, a), d4 = orient2(c, d, b);
  if (((d1 > eps && d2 < -eps) || (d1 < -eps && d2 > eps)) && ((d3 > eps && d4 < -eps) || (d3 < -eps && d4 > eps)))
    return true;
  return point_segment_distance<2>(c, a, b) <= eps || point_segment_distance<2>(d, a, b) <= eps ||
         point_segment_distance<2>(a, c, d) <= eps || point_segment_distance<2>(b, c, d) <= eps;
}

}  // namespace

bool is_valid_polygon(const Polygon& p, double eps) {
  const std::size_t n = p.size();
  if (n < 3) return false;
  for (const auto& v : p.vertices)
    if (!v.allFinite()) return false;
  if (!(signed_area(p) > eps)) return false;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
      if (adjacent) {
        if ((p[i] - p[j]).norm() <= eps) return false;
        continue;
      }
      if (segments_intersect(p[i], p.next(i), p[j], p.next(j), eps)) return false;
    }
  }
  return true;
}

bool is_convex(const Polygon& p, double eps) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Vec2& a = p[i];
    const Vec2& b = p.next(i);
    const Vec2& c = p.next((i + 1) % p.size());
    if (orient2(a, b, c) < -eps) return false;
  }
  return true;
}

double diameter(const Polygon& p) {
  double d = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j) d = std::max(d, (p[i] - p[j]).norm());
  return d;
}

double circumradius_about_centroid(const Polygon& p) {
  const Vec2 c = polygon_centroid(p);
  double r = 0.0;
  for (const auto& v : p.vertices) r = std::max(r, (v - c).norm());
  return r;
}

double distance_to_boundary(const Polygon& p, const Vec2& q) {
  double d = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < p.size(); ++i) d = std::min(d, point_segment_distance<2>(q, p[i], p.next(i)));
  return d;
}

bool contains(const Polygon& p, const Vec2& q, double eps) {
  if (distance_to_boundary(p, q) <= eps) return true;
  bool inside = false;
  for (std::size_t i = 0, j = p.size() - 1; i < p.size(); j = i++) {
    const Vec2& a = p[i];
    const Vec2& b = p[j];
    if ((a.y() > q.y()) != (b.y() > q.y())) {
      const double x = a.x() + (q.y() - a.y()) * (b.x() - a.x()) / (b.y() - a.y());
      if (q.x() < x) inside = !inside;
    }
  }
  return inside;
}

Polygon translated(const Polygon& p, const Vec2& v) {
  Polygon r = p;
  for (auto& x : r.vertices) x += v;
  return r;
}

Polygon scaled(const Polygon& p, double s) {
  Polygon r = p;
  for (auto& x : r.vertices) x *= s;
  return r;
}

Polygon transformed(const Polygon& p, const Eigen::Matrix2d& A, const Vec2& t) {
  Polygon r;
  r.vertices.reserve(p.size());
  for (const auto& x : p.vertices) r.vertices.push_back(A * x + t);
  if (A.determinant() < 0) std::reverse(r.vertices.begin(), r.vertices.end());
  return r;
}

std::vector<std::array<Vec2, 3>> triangulate(const Polygon& p) {
  std::vector<std::array<Vec2, 3>> out;
  std::vector<Vec2> v = p.vertices;
  const double eps = 1e-12;
  auto is_ear = [&](std::size_t i) {
    const std::size_t n = v.size();
    const Vec2& a = v[(i + n - 1) % n];
    const Vec2& b = v[i];
    const Vec2& c = v[(i + 1) % n];
    if (orient2(a, b, c) <= eps) return false;
    for (std::size_t k = 0; k < n; ++k) {
      if (k == i || k == (i + 1) % n || k == (i + n - 1) % n) continue;
      const Vec2& q = v[k];
      if (orient2(a, b, q) >= -eps && orient2(b, c, q) >= -eps && orient2(c, a, q) >= -eps) {
        // Reflex vertices coinciding with ear corners do not block the ear.
        if ((q - a).norm() > eps && (q - c).norm() > eps) return false;
      }
    }
    return true;
  };
  while (v.size() > 3) {
    const std::size_t n = v.size();
    bool cut = false;
    for (std::size_t i = 0; i < n; ++i) {
      const Vec2& a = v[(i + n - 1) % n];
      const Vec2& c = v[(i + 1) % n];
      if (std::abs(orient2(a, v[i], c)) <= eps) {
        // Collinear vertex: drop it, the polygon is unchanged.
        v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
        cut = true;
        break;
      }
      if (is_ear(i)) {
        out.push_back({a, v[i], c});
        v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
        cut = true;
        break;
      }
    }
    if (!cut) throw Error(ErrorKind::InvalidSpec, "polygon could not be triangulated (not simple?)");
  }
  if (v.size() == 3 && orient2(v[0], v[1], v[2]) > eps) out.push_back({v[0], v[1], v[2]});
  return out;
}

double convex_intersection_area(std::span<const Vec2> a, std::span<const Vec2> b) {
  std::vector<Vec2> poly(a.begin(), a.end());
  for (std::size_t e = 0; e < b.size() && !poly.empty(); ++e) {
    const Vec2& p = b[e];
    const Vec2& q = b[(e + 1) % b.size()];
    std::vector<Vec2> next;
    next.reserve(poly.size() + 1);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      const Vec2& s = poly[i];
      const Vec2& t = poly[(i + 1) % poly.size()];
      const double ds = orient2(p, q, s), dt = orient2(p, q, t);
      if (ds >= 0) next.push_back(s);
      if ((ds >= 0) != (dt >= 0)) next.push_back(s + (t - s) * (ds / (ds - dt)));
    }
    poly = std::move(next);
  }
  if (poly.size() < 3) return 0.0;
  double s = 0.0;
  for (std::size_t i = 0; i < poly.size(); ++i) s += cross2(poly[i], poly[(i + 1) % poly.size()]);
  return std::max(0.0, 0.5 * s);
}

double intersection_area(const Polygon& a, const Polygon& b) {
  const bool ca = is_convex(a, 1e-12), cb = is_convex(b, 1e-12);
  if (ca && cb) return convex_intersection_area(a.vertices, b.vertices);
  std::vector<std::array<Vec2, 3>> ta, tb;
  if (ca) ta.push_back({}); else ta = triangulate(a);
  if (cb) tb.push_back({}); else tb = triangulate(b);
  double s = 0.0;
  for (const auto& x : ta) {
    std::span<const Vec2> sx = ca ? std::span<const Vec2>(a.vertices) : std::span<const Vec2>(x);
    for (const auto& y : tb) {
      std::span<const Vec2> sy = cb ? std::span<const Vec2>(b.vertices) : std::span<const Vec2>(y);
      s += convex_intersection_area(sx, sy);
    }
  }
  return s;
}

double shared_boundary_length(const Polygon& a, const Polygon& b, double eps) {
  double total = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Vec2& a0 = a[i];
    const Vec2 da = a.next(i) - a0;
    const double la = da.norm();
    if (la == 0.0) continue;
    const Vec2 u = da / la;
    for (std::size_t j = 0; j < b.size(); ++j) {
      const Vec2 b0 = b[j] - a0, b1 = b.next(j) - a0;
      if (std::abs(cross2(u, b0)) > eps || std::abs(cross2(u, b1)) > eps) continue;
      const double t0 = u.dot(b0), t1 = u.dot(b1);
      const double lo = std::max(0.0, std::min(t0, t1));
      const double hi = std::min(la, std::max(t0, t1));
      if (hi > lo) total += hi - lo;
    }
  }
  return total;
}

bool boundaries_touch(const Polygon& a, const Polygon& b, double eps) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      if (segments_intersect(a[i], a.next(i), b[j], b.next(j), eps)) return true;
  return false;
}

// ---------------------------------------------------------------------------
// Dedupe

template <int Dim>
PointList<Dim> dedupe_points(std::span<const Vec<Dim>> points, double eps) {
  PointList<Dim> sorted(points.begin(), points.end());
  for (const auto& p : sorted)
    if (!p.allFinite()) throw Error(ErrorKind::InvalidSpec, "non-finite point");
  std::sort(sorted.begin(), sorted.end(), [](const Vec<Dim>& a, const Vec<Dim>& b) { return lex_less<Dim>(a, b); });
  PointList<Dim> out;
  out.reserve(sorted.size());
  for (const auto& p : sorted) {
    bool dup = false;
    for (auto it = out.rbegin(); it != out.rend() && p[0] - (*it)[0] <= eps; ++it) {
      if ((p - *it).norm() <= eps) {
        dup = true;
        break;
      }
    }
    if (!dup) out.push_back(p);
  }
  return out;
}

template PointList<2> dedupe_points<2>(std::span<const Vec2>, double);
template PointList<3> dedupe_points<3>(std::span<const Vec3>, double);

// ---------------------------------------------------------------------------
// 2D hull

namespace {

// Monotone chain on lexicographically sorted, deduplicated points. A point is dropped when
// it lies within eps of the line through its chain neighbours (or to its right).
std::vector<Vec2> monotone_chain(const std::vector<Vec2>& pts, double eps) {
  const std::size_t n = pts.size();
  if (n < 3) return pts;
  std::vector<Vec2> h(2 * n);
  std::size_t k = 0;
  auto keep_left = [&](const Vec2& a, const Vec2& b, const Vec2& c) {
    const double len = (c - a).norm();
    return orient2(a, b, c) > eps * std::max(len, 1e-300);
  };
  for (std::size_t i = 0; i < n; ++i) {
    while (k >= 2 && !keep_left(h[k - 2], h[k - 1], pts[i])) --k;
    h[k++] = pts[i];
  }
  for (std::size_t i = n - 1, t = k + 1; i-- > 0;) {
    while (k >= t && !keep_left(h[k - 2], h[k - 1], pts[i])) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

}  // namespace

Polygon convex_hull_2d(std::span<const Vec2> points, const Tolerance& tol) {
  const auto pts = dedupe_points<2>(points, tol.eps_geom);
  if (pts.size() < 3) throw Error(ErrorKind::DegenerateHull, "fewer than 3 distinct points");
  auto h = monotone_chain(pts, tol.eps_geom);
  if (h.size() < 3) throw Error(ErrorKind::DegenerateHull, "points are collinear");
  return Polygon(std::move(h));
}

// ---------------------------------------------------------------------------
// 3D hull

std::size_t ConvexPolytope3::edge_count() const {
  std::size_t s = 0;
  for (const auto& f : faces) s += f.size();
  return s / 2;
}

Vec3 ConvexPolytope3::face_normal(std::size_t f) const {
  // Newell's method, robust for planar polygons of any size.
  Vec3 n = Vec3::Zero();
  const auto& idx = faces[f];
  for (std::size_t i = 0; i < idx.size(); ++i) {
    const Vec3& a = vertices[static_cast<std::size_t>(idx[i])];
    const Vec3& b = vertices[static_cast<std::size_t>(idx[(i + 1) % idx.size()])];
    n += a.cross(b);
  }
  return n.normalized();
}

namespace {

struct TriFace {
  std::array<int, 3> v;
  Vec3 n;
  double d;
  bool alive = true;
};

TriFace make_face(const std::vector<Vec3>& p, int a, int b, int c) {
  TriFace f;
  f.v = {a, b, c};
  f.n = (p[static_cast<std::size_t>(b)] - p[static_cast<std::size_t>(a)])
            .cross(p[static_cast<std::size_t>(c)] - p[static_cast<std::size_t>(a)]);
  const double len = f.n.norm();
  if (len > 0) f.n /= len;
  f.d = f.n.dot(p[static_cast<std::size_t>(a)]);
  return f;
}

inline std::uint64_t edge_key(int a, int b) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) | static_cast<std::uint32_t>(b);
}

int find_root(std::vector<int>& parent, int x) {
  while (parent[static_cast<std::size_t>(x)] != x) {
    parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    x = parent[static_cast<std::size_t>(x)];
  }
  return x;
}

}  // namespace

ConvexPolytope3 convex_hull_3d(std::span<const Vec3> points, const Tolerance& tol) {
  const auto pts = dedupe_points<3>(points, tol.eps_geom);
  if (pts.size() < 4) throw Error(ErrorKind::DegenerateHull, "fewer than 4 distinct points");
  double scale = 1.0;
  for (const auto& p : pts) scale = std::max(scale, p.cwiseAbs().maxCoeff());
  const double eps = tol.eps_geom * scale;

  // Initial tetrahedron from extreme points.
  const int i0 = 0;
  int i1 = -1, i2 = -1, i3 = -1;
  double best = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const double d = (pts[i] - pts[0]).norm();
    if (d > best) best = d, i1 = static_cast<int>(i);
  }
  if (i1 < 0 || best <= eps) throw Error(ErrorKind::DegenerateHull, "points coincide");
  const Vec3 dir = (pts[static_cast<std::size_t>(i1)] - pts[0]).normalized();
  best = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const Vec3 r = pts[i] - pts[0];
    const double d = (r - r.dot(dir) * dir).norm();
    if (d > best) best = d, i2 = static_cast<int>(i);
  }
  if (i2 < 0 || best <= eps) throw Error(ErrorKind::DegenerateHull, "points are collinear");
  const Vec3 nrm = (pts[static_cast<std::size_t>(i1)] - pts[0]).cross(pts[static_cast<std::size_t>(i2)] - pts[0]).normalized();
  best = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const double d = std::abs(nrm.dot(pts[i] - pts[0]));
    if (d > best) best = d, i3 = static_cast<int>(i);
  }
  if (i3 < 0 || best <= eps) throw Error(ErrorKind::DegenerateHull, "points are coplanar");

  std::vector<TriFace> faces;
  std::unordered_map<std::uint64_t, int> edge_face;
  auto add_face = [&](int a, int b, int c) {
    faces.push_back(make_face(pts, a, b, c));
    const int id = static_cast<int>(faces.size()) - 1;
    edge_face[edge_key(a, b)] = id;
    edge_face[edge_key(b, c)] = id;
    edge_face[edge_key(c, a)] = id;
  };
  {
    int a = i0, b = i1, c = i2;
    if (nrm.dot(pts[static_cast<std::size_t>(i3)] - pts[0]) > 0) std::swap(b, c);
    // Now (a,b,c) faces away from i3.
    add_face(a, b, c);
    add_face(a, i3, b);
    add_face(b, i3, c);
    add_face(c, i3, a);
  }

  std::vector<int> visible;
  std::vector<std::pair<int, int>> horizon;
  for (std::size_t pi = 0; pi < pts.size(); ++pi) {
    const int p = static_cast<int>(pi);
    if (p == i0 || p == i1 || p == i2 || p == i3) continue;
    visible.clear();
    for (std::size_t f = 0; f < faces.size(); ++f)
      if (faces[f].alive && faces[f].n.dot(pts[pi]) - faces[f].d > eps) visible.push_back(static_cast<int>(f));
    if (visible.empty()) continue;
    for (int f : visible) faces[static_cast<std::size_t>(f)].alive = false;
    horizon.clear();
    for (int f : visible) {
      const auto& v = faces[static_cast<std::size_t>(f)].v;
      for (int e = 0; e < 3; ++e) {
        const int a = v[static_cast<std::size_t>(e)], b = v[static_cast<std::size_t>((e + 1) % 3)];
        const int twin = edge_face.at(edge_key(b, a));
        if (faces[static_cast<std::size_t>(twin)].alive) horizon.emplace_back(a, b);
      }
    }
    for (int f : visible) {
      const auto& v = faces[static_cast<std::size_t>(f)].v;
      for (int e = 0; e < 3; ++e) {
        const auto key = edge_key(v[static_cast<std::size_t>(e)], v[static_cast<std::size_t>((e + 1) % 3)]);
        auto it = edge_face.find(key);
        if (it != edge_face.end() && it->second == f) edge_face.erase(it);
      }
    }
    for (const auto& [a, b] : horizon) add_face(a, b, p);
  }

  // Merge coplanar neighbouring triangles into polygonal faces.
  std::vector<int> alive;
  for (std::size_t f = 0; f < faces.size(); ++f)
    if (faces[f].alive) alive.push_back(static_cast<int>(f));
  std::vector<int> parent(faces.size());
  std::iota(parent.begin(), parent.end(), 0);
  for (int f : alive) {
    const auto& F = faces[static_cast<std::size_t>(f)];
    for (int e = 0; e < 3; ++e) {
      const int a = F.v[static_cast<std::size_t>(e)], b = F.v[static_cast<std::size_t>((e + 1) % 3)];
      const int g = edge_face.at(edge_key(b, a));
      const auto& G = faces[static_cast<std::size_t>(g)];
      bool coplanar = true;
      for (int w : G.v)
        if (std::abs(F.n.dot(pts[static_cast<std::size_t>(w)]) - F.d) > eps) coplanar = false;
      for (int w : F.v)
        if (std::abs(G.n.dot(pts[static_cast<std::size_t>(w)]) - G.d) > eps) coplanar = false;
      if (coplanar) parent[static_cast<std::size_t>(find_root(parent, f))] = find_root(parent, g);
    }
  }
  std::map<int, std::vector<int>> groups;
  for (int f : alive) groups[find_root(parent, f)].push_back(f);

  std::vector<std::vector<int>> poly_faces;
  for (const auto& [root, members] : groups) {
    std::vector<int> ids;
    Vec3 n = Vec3::Zero();
    for (int f : members) {
      const auto& F = faces[static_cast<std::size_t>(f)];
      n += F.n;
      ids.insert(ids.end(), F.v.begin(), F.v.end());
    }
    n.normalize();
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    Vec3 u = n.unitOrthogonal();
    Vec3 w = n.cross(u);
    std::vector<std::pair<Vec2, int>> loc;
    for (int id : ids) {
      const Vec3& q = pts[static_cast<std::size_t>(id)];
      loc.emplace_back(Vec2(u.dot(q), w.dot(q)), id);
    }
    std::sort(loc.begin(), loc.end(), [](const auto& x, const auto& y) { return lex_less<2>(x.first, y.first); });
    std::vector<Vec2> p2;
    for (const auto& l : loc) p2.push_back(l.first);
    const auto hull = monotone_chain(p2, tol.eps_geom);
    std::vector<int> face;
    for (const auto& h : hull) {
      for (const auto& l : loc)
        if (l.first == h) {
          face.push_back(l.second);
          break;
        }
    }
    if (face.size() >= 3) poly_faces.push_back(std::move(face));
  }

  // Reindex to lexicographically sorted extreme vertices.
  std::vector<int> used;
  for (const auto& f : poly_faces) used.insert(used.end(), f.begin(), f.end());
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  std::sort(used.begin(), used.end(), [&](int a, int b) {
    return lex_less<3>(pts[static_cast<std::size_t>(a)], pts[static_cast<std::size_t>(b)]);
  });
  std::unordered_map<int, int> remap;
  ConvexPolytope3 out;
  for (int id : used) {
    remap[id] = static_cast<int>(out.vertices.size());
    out.vertices.push_back(pts[static_cast<std::size_t>(id)]);
  }
  for (auto& f : poly_faces) {
    for (auto& x : f) x = remap.at(x);
    std::rotate(f.begin(), std::min_element(f.begin(), f.end()), f.end());
  }
  std::sort(poly_faces.begin(), poly_faces.end());
  out.faces = std::move(poly_faces);
  return out;
}

// ---------------------------------------------------------------------------
// Halfspaces

namespace {

template <int Dim>
std::vector<Halfspace<Dim>> normalized(std::span<const Halfspace<Dim>> hs) {
  std::vector<Halfspace<Dim>> out;
  out.reserve(hs.size());
  for (const auto& h : hs) {
    const double len = h.normal.norm();
    if (!(len > 0.0) || !std::isfinite(len) || !std::isfinite(h.offset))
      throw Error(ErrorKind::InvalidSpec, "halfspace with zero or non-finite normal");
    out.push_back({h.normal / len, h.offset / len});
  }
  return out;
}

// The intersection is bounded iff the normals positively span R^d, i.e. the origin is an
// interior point of their convex hull.
template <int Dim>
bool normals_positively_span(const std::vector<Halfspace<Dim>>& hs, const Tolerance& tol) {
  PointList<Dim> ns;
  for (const auto& h : hs) ns.push_back(h.normal);
  try {
    if constexpr (Dim == 2) {
      const Polygon hull = convex_hull_2d(ns, tol);
      for (std::size_t i = 0; i < hull.size(); ++i)
        if (orient2(hull[i], hull.next(i), Vec2::Zero().eval()) <= tol.eps_geom) return false;
      return true;
    } else {
      const ConvexPolytope3 hull = convex_hull_3d(ns, tol);
      for (std::size_t f = 0; f < hull.faces.size(); ++f) {
        const Vec3 n = hull.face_normal(f);
        const double off = n.dot(hull.vertices[static_cast<std::size_t>(hull.faces[f][0])]);
        if (off <= tol.eps_geom) return false;
      }
      return true;
    }
  } catch (const Error&) {
    return false;
  }
}

template <int Dim>
bool feasible(const std::vector<Halfspace<Dim>>& hs, const Vec<Dim>& x, double eps) {
  for (const auto& h : hs)
    if (h.normal.dot(x) > h.offset + eps) return false;
  return true;
}

}  // namespace

Polygon halfspace_intersection_2d(std::span<const Halfspace<2>> input, const Tolerance& tol) {
  const auto hs = normalized<2>(input);
  if (hs.size() < 3) throw Error(ErrorKind::Unbounded, "fewer than 3 halfspaces in the plane");
  double scale = 1.0;
  for (const auto& h : hs) scale = std::max(scale, std::abs(h.offset));
  const double eps = tol.eps_geom * scale;
  std::vector<Vec2> verts;
  for (std::size_t a = 0; a < hs.size(); ++a) {
    for (std::size_t b = a + 1; b < hs.size(); ++b) {
      Eigen::Matrix2d M;
      M.row(0) = hs[a].normal.transpose();
      M.row(1) = hs[b].normal.transpose();
      const double det = M.determinant();
      if (std::abs(det) < 1e-12) continue;
      const Vec2 x = M.inverse() * Vec2(hs[a].offset, hs[b].offset);
      if (feasible<2>(hs, x, eps)) verts.push_back(x);
    }
  }
  const bool bounded = normals_positively_span<2>(hs, tol);
  if (!bounded) throw Error(ErrorKind::Unbounded, "normals do not positively span the plane");
  if (verts.empty()) throw Error(ErrorKind::Empty, "no feasible vertex");
  try {
    return convex_hull_2d(verts, tol);
  } catch (const Error&) {
    throw Error(ErrorKind::LowerDimensional, "feasible region has empty interior");
  }
}

ConvexPolytope3 halfspace_intersection_3d(std::span<const Halfspace<3>> input, const Tolerance& tol) {
  const auto hs = normalized<3>(input);
  if (hs.size() < 4) throw Error(ErrorKind::Unbounded, "fewer than 4 halfspaces in space");
  if (!normals_positively_span<3>(hs, tol)) throw Error(ErrorKind::Unbounded, "normals do not positively span space");
  double scale = 1.0;
  for (const auto& h : hs) scale = std::max(scale, std::abs(h.offset));
  const double eps = tol.eps_geom * scale;
  std::vector<Vec3> verts;
  const std::size_t m = hs.size();
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a + 1; b < m; ++b) {
      const Vec3 nab = hs[a].normal.cross(hs[b].normal);
      if (nab.norm() < 1e-12) continue;
      for (std::size_t c = b + 1; c < m; ++c) {
        const double det = nab.dot(hs[c].normal);
        if (std::abs(det) < 1e-12) continue;
        // Cramer's rule via cross products.
        const Vec3 x = (hs[a].offset * hs[b].normal.cross(hs[c].normal) +
                        hs[b].offset * hs[c].normal.cross(hs[a].normal) + hs[c].offset * nab) /
                       det;
        if (feasible<3>(hs, x, eps)) verts.push_back(x);
      }
    }
  }
  if (verts.empty()) throw Error(ErrorKind::Empty, "no feasible vertex");
  try {
    return convex_hull_3d(verts, tol);
  } catch (const Error&) {
    throw Error(ErrorKind::LowerDimensional, "feasible region has empty interior");
  }
}

std::vector<Halfspace<2>> facet_halfspaces(const Polygon& convex) {
  std::vector<Halfspace<2>> out;
  for (std::size_t i = 0; i < convex.size(); ++i) {
    const Vec2 e = convex.next(i) - convex[i];
    const Vec2 n = Vec2(e.y(), -e.x()).normalized();
    out.push_back({n, n.dot(convex[i])});
  }
  return out;
}

std::vector<Halfspace<3>> facet_halfspaces(const ConvexPolytope3& hull) {
  std::vector<Halfspace<3>> out;
  for (std::size_t f = 0; f < hull.faces.size(); ++f) {
    const Vec3 n = hull.face_normal(f);
    out.push_back({n, n.dot(hull.vertices[static_cast<std::size_t>(hull.faces[f][0])])});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Hausdorff

std::vector<Vec2> sample_boundary(const Polygon& p, double step) {
  if (!(step > 0.0)) throw Error(ErrorKind::InvalidSpec, "sampling step must be positive");
  std::vector<Vec2> out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Vec2& a = p[i];
    const Vec2& b = p.next(i);
    const int k = std::max(1, static_cast<int>(std::ceil((b - a).norm() / step)));
    for (int s = 0; s < k; ++s) out.push_back(a + (b - a) * (static_cast<double>(s) / k));
  }
  return out;
}

double hausdorff_points_boundary(std::span<const Vec2> points, const Polygon& p, double step) {
  if (points.empty() || p.size() == 0) throw Error(ErrorKind::EmptySet, "Hausdorff distance of an empty set");
  double d1 = 0.0;
  for (const auto& q : points) d1 = std::max(d1, distance_to_boundary(p, q));
  const auto samples = sample_boundary(p, step);
  const double d2 = directed_hausdorff<2>(samples, points);
  return std::max(d1, d2);
}

double hausdorff_boundary(const Polygon& a, const Polygon& b, double step) {
  const auto sa = sample_boundary(a, step);
  const auto sb = sample_boundary(b, step);
  double d = 0.0;
  for (const auto& q : sa) d = std::max(d, distance_to_boundary(b, q));
  for (const auto& q : sb) d = std::max(d, distance_to_boundary(a, q));
  return d;
}

// ---------------------------------------------------------------------------
// Parallelepipeds

std::array<Vec3, 8> Parallelepiped::corners() const {
  std::array<Vec3, 8> c;
  for (int m = 0; m < 8; ++m) {
    Vec3 p = origin;
    for (int k = 0; k < 3; ++k)
      if (m & (1 << k)) p += edges.col(k);
    c[static_cast<std::size_t>(m)] = p;
  }
  return c;
}

double Parallelepiped::diameter() const {
  const auto c = corners();
  double d = 0.0;
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = i + 1; j < 8; ++j) d = std::max(d, (c[i] - c[j]).norm());
  return d;
}

namespace {

struct Facet3 {
  Vec3 o, e1, e2, n;
};

std::array<Facet3, 6> facets(const Parallelepiped& p) {
  std::array<Facet3, 6> out;
  const Vec3 c = p.centroid();
  for (int k = 0; k < 3; ++k) {
    const Vec3 e1 = p.edges.col((k + 1) % 3), e2 = p.edges.col((k + 2) % 3);
    Vec3 n = e1.cross(e2).normalized();
    for (int side = 0; side < 2; ++side) {
      const Vec3 o = side ? Vec3(p.origin + p.edges.col(k)) : p.origin;
      Vec3 nn = n;
      if (nn.dot(o - c) < 0) nn = -nn;
      out[static_cast<std::size_t>(2 * k + side)] = {o, e1, e2, nn};
    }
  }
  return out;
}

}  // namespace

double shared_facet_area(const Parallelepiped& a, const Parallelepiped& b, double eps) {
  const auto fa = facets(a), fb = facets(b);
  double total = 0.0;
  for (const auto& f : fa) {
    for (const auto& g : fb) {
      if (f.n.dot(g.n) > -1.0 + 1e-9) continue;
      if (std::abs(f.n.dot(g.o - f.o)) > eps) continue;
      const Vec3 u = f.e1.normalized();
      const Vec3 w = f.n.cross(u);
      auto proj = [&](const Facet3& h) {
        std::vector<Vec2> q = {Vec2(u.dot(h.o), w.dot(h.o)), Vec2(u.dot(h.o + h.e1), w.dot(h.o + h.e1)),
                               Vec2(u.dot(h.o + h.e1 + h.e2), w.dot(h.o + h.e1 + h.e2)),
                               Vec2(u.dot(h.o + h.e2), w.dot(h.o + h.e2))};
        if (orient2(q[0], q[1], q[2]) < 0) std::reverse(q.begin(), q.end());
        return q;
      };
      total += convex_intersection_area(proj(f), proj(g));
    }
  }
  return total;
}

namespace {

// Projection intervals along axis; returns the gap (negative when overlapping).
double interval_gap(const std::array<Vec3, 8>& ca, const std::array<Vec3, 8>& cb, const Vec3& axis) {
  double amin = std::numeric_limits<double>::infinity(), amax = -amin, bmin = amin, bmax = -amin;
  for (const auto& p : ca) {
    const double t = axis.dot(p);
    amin = std::min(amin, t), amax = std::max(amax, t);
  }
  for (const auto& p : cb) {
    const double t = axis.dot(p);
    bmin = std::min(bmin, t), bmax = std::max(bmax, t);
  }
  return std::max(bmin - amax, amin - bmax);
}

std::vector<Vec3> sat_axes(const Parallelepiped& a, const Parallelepiped& b) {
  std::vector<Vec3> axes;
  for (const auto* p : {&a, &b})
    for (int k = 0; k < 3; ++k) axes.push_back(p->edges.col((k + 1) % 3).cross(p->edges.col((k + 2) % 3)));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) axes.push_back(a.edges.col(i).cross(b.edges.col(j)));
  std::vector<Vec3> out;
  for (auto& ax : axes) {
    const double len = ax.norm();
    if (len > 1e-12) out.push_back(ax / len);
  }
  return out;
}

}  // namespace

bool cells_touch(const Parallelepiped& a, const Parallelepiped& b, double eps) {
  const auto ca = a.corners(), cb = b.corners();
  for (const auto& ax : sat_axes(a, b))
    if (interval_gap(ca, cb, ax) > eps) return false;
  return true;
}

bool interiors_overlap(const Parallelepiped& a, const Parallelepiped& b, double eps) {
  const auto ca = a.corners(), cb = b.corners();
  for (const auto& ax : sat_axes(a, b))
    if (interval_gap(ca, cb, ax) > -eps) return false;
  return true;
}

}  // namespace tilegrow
