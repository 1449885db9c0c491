#include "tilegrow/multigrid.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <iomanip>

namespace tilegrow {

void GridSpec::validate(const Tolerance& tol) const {
  if (d != 2 && d != 3) throw Error(ErrorKind::InvalidSpec, "grid dimension must be 2 or 3");
  if (vectors.rows() != d) throw Error(ErrorKind::InvalidSpec, "grid vectors must have d components");
  if (phases.size() != vectors.cols()) throw Error(ErrorKind::InvalidSpec, "one phase per grid vector required");
  if (N() < d) throw Error(ErrorKind::InvalidSpec, "a d-dimensional grid needs at least d vectors");
  if (!vectors.allFinite() || !phases.allFinite()) throw Error(ErrorKind::InvalidSpec, "non-finite grid data");
  for (int i = 0; i < N(); ++i)
    if (std::abs(vectors.col(i).norm() - 1.0) > tol.eps_geom)
      throw Error(ErrorKind::InvalidSpec, "grid vector " + std::to_string(i) + " is not a unit vector");
  for (int i = 0; i < N(); ++i)
    for (int j = i + 1; j < N(); ++j)
      if (1.0 - std::abs(vectors.col(i).dot(vectors.col(j))) <= tol.eps_geom)
        throw Error(ErrorKind::ParallelGridVectors,
                    "grid vectors " + std::to_string(i) + " and " + std::to_string(j) + " are parallel");
}

GridSpec grid_preset(const std::string& name) {
  GridSpec s;
  s.name = name;
  if (name == "penrose") {
    s.d = 2;
    s.vectors.resize(2, 5);
    for (int i = 0; i < 5; ++i) s.vectors.col(i) << std::cos(2 * M_PI * i / 5), std::sin(2 * M_PI * i / 5);
    s.phases = Eigen::VectorXd::Constant(5, 0.2);
  } else if (name == "hexagrid") {
    s.d = 2;
    s.vectors.resize(2, 3);
    for (int i = 0; i < 3; ++i) s.vectors.col(i) << std::cos(2 * M_PI * i / 3), std::sin(2 * M_PI * i / 3);
    // The three families meet in triple points whenever the phase sum is an integer.
    s.phases = Eigen::VectorXd::Constant(3, 0.2);
  } else if (name == "ortho2") {
    s.d = 2;
    s.vectors = Eigen::MatrixXd::Identity(2, 2);
    s.phases = Eigen::VectorXd::Constant(2, 0.2);
  } else if (name == "ortho3") {
    s.d = 3;
    s.vectors = Eigen::MatrixXd::Identity(3, 3);
    s.phases = Eigen::VectorXd::Constant(3, 0.2);
  } else if (name == "ammann3d") {
    // The six 5-fold axes of the icosahedron.
    const double t = (1 + std::sqrt(5.0)) / 2;
    s.d = 3;
    s.vectors.resize(3, 6);
    s.vectors << 0, 0, 1, -1, t, t,
                 1, -1, t, t, 0, 0,
                 t, t, 0, 0, 1, -1;
    s.vectors /= std::sqrt(1 + t * t);
    s.phases.resize(6);
    s.phases << 0.1234, 0.2718, 0.3141, 0.4142, 0.1618, 0.5772;
  } else {
    throw Error(ErrorKind::InvalidSpec, "unknown grid preset '" + name + "'");
  }
  return s;
}

std::vector<std::string> grid_preset_names() { return {"penrose", "hexagrid", "ortho2", "ortho3", "ammann3d"}; }

namespace {

Eigen::VectorXd random_unit(int d, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Eigen::VectorXd v(d);
  for (int k = 0; k < d; ++k) v[k] = g(rng);
  return v.normalized();
}

// Visits the d-subsets of {0..N-1} in lexicographic order.
template <typename F>
void for_each_subset(int N, int d, F&& f) {
  std::vector<int> idx(static_cast<std::size_t>(d));
  for (int k = 0; k < d; ++k) idx[static_cast<std::size_t>(k)] = k;
  while (true) {
    f(idx);
    int k = d - 1;
    while (k >= 0 && idx[static_cast<std::size_t>(k)] == N - d + k) --k;
    if (k < 0) return;
    ++idx[static_cast<std::size_t>(k)];
    for (int m = k + 1; m < d; ++m) idx[static_cast<std::size_t>(m)] = idx[static_cast<std::size_t>(m - 1)] + 1;
  }
}

double frac_distance(double t) { return std::abs(t - std::round(t)); }

}  // namespace

GridSpec random_regular_grid(int d, int N, std::mt19937_64& rng, double radius) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    GridSpec s;
    s.name = "random";
    s.d = d;
    s.vectors.resize(d, N);
    for (int i = 0; i < N; ++i) s.vectors.col(i) = random_unit(d, rng);
    s.phases.resize(N);
    for (int i = 0; i < N; ++i) s.phases[i] = u(rng);
    bool ok = true;
    for (int i = 0; i < N && ok; ++i)
      for (int j = i + 1; j < N && ok; ++j)
        if (std::abs(s.vectors.col(i).dot(s.vectors.col(j))) > 0.98) ok = false;
    if (ok && d == 3)
      for_each_subset(N, 3, [&](const std::vector<int>& t) {
        Eigen::Matrix3d M;
        for (int k = 0; k < 3; ++k) M.col(k) = s.vectors.col(t[static_cast<std::size_t>(k)]);
        if (std::abs(M.determinant()) < 0.05) ok = false;
      });
    if (ok && is_regular(s, radius)) return s;
  }
  throw Error(ErrorKind::IrregularGrid, "could not draw a regular grid");
}

std::vector<GridIntersection> intersections(const GridSpec& spec, double radius) {
  spec.validate();
  const int d = spec.d;
  std::vector<GridIntersection> out;
  for_each_subset(spec.N(), d, [&](const std::vector<int>& fam) {
    Eigen::MatrixXd M(d, d);
    for (int r = 0; r < d; ++r) M.row(r) = spec.vectors.col(fam[static_cast<std::size_t>(r)]).transpose();
    Eigen::FullPivLU<Eigen::MatrixXd> lu(M);
    if (!lu.isInvertible()) return;
    const Eigen::MatrixXd Minv = lu.inverse();
    std::vector<long> lo(static_cast<std::size_t>(d)), hi(static_cast<std::size_t>(d));
    for (int r = 0; r < d; ++r) {
      const double g = spec.phases[fam[static_cast<std::size_t>(r)]];
      lo[static_cast<std::size_t>(r)] = static_cast<long>(std::ceil(-radius - g));
      hi[static_cast<std::size_t>(r)] = static_cast<long>(std::floor(radius - g));
    }
    std::vector<long> m = lo;
    Eigen::VectorXd rhs(d);
    while (true) {
      for (int r = 0; r < d; ++r)
        rhs[r] = static_cast<double>(m[static_cast<std::size_t>(r)]) + spec.phases[fam[static_cast<std::size_t>(r)]];
      Eigen::VectorXd X = Minv * rhs;
      if (X.norm() <= radius) out.push_back({fam, m, std::move(X)});
      int r = d - 1;
      while (r >= 0 && m[static_cast<std::size_t>(r)] == hi[static_cast<std::size_t>(r)]) {
        m[static_cast<std::size_t>(r)] = lo[static_cast<std::size_t>(r)];
        --r;
      }
      if (r < 0) break;
      ++m[static_cast<std::size_t>(r)];
    }
  });
  return out;
}

bool is_regular(const GridSpec& spec, double radius, const Tolerance& tol) {
  for (const auto& x : intersections(spec, radius))
    for (int k = 0; k < spec.N(); ++k) {
      if (std::find(x.families.begin(), x.families.end(), k) != x.families.end()) continue;
      if (frac_distance(x.location.dot(spec.vectors.col(k)) - spec.phases[k]) <= 10 * tol.eps_geom) return false;
    }
  return true;
}

long K_index(const GridSpec& spec, int i, const Eigen::VectorXd& x, const Tolerance& tol) {
  if (i < 0 || i >= spec.N()) throw Error(ErrorKind::IndexOutOfRange, "grid index out of range");
  const double t = x.dot(spec.vectors.col(i)) - spec.phases[i];
  if (frac_distance(t) <= tol.eps_geom)
    throw Error(ErrorKind::OnGridHyperplane, "point lies on a hyperplane of family " + std::to_string(i));
  return static_cast<long>(std::ceil(t));
}

Eigen::VectorXd K_point(const GridSpec& spec, const Eigen::VectorXd& x, const Tolerance& tol) {
  Eigen::VectorXd v = Eigen::VectorXd::Zero(spec.d);
  for (int i = 0; i < spec.N(); ++i) v += static_cast<double>(K_index(spec, i, x, tol)) * spec.vectors.col(i);
  return v;
}

double neighbour_reach(const GridSpec& spec) {
  double reach = 0.0;
  if (spec.d == 2) {
    for (int i = 0; i < spec.N(); ++i) {
      double best = std::numeric_limits<double>::infinity();
      for (int j = 0; j < spec.N(); ++j) {
        if (j == i) continue;
        const double s = std::abs(cross2(Vec2(spec.vectors.col(i)), Vec2(spec.vectors.col(j))));
        if (s > 0) best = std::min(best, 1.0 / s);
      }
      reach = std::max(reach, best);
    }
  } else {
    for (int i = 0; i < spec.N(); ++i)
      for (int j = i + 1; j < spec.N(); ++j) {
        const Vec3 h = Vec3(spec.vectors.col(i)).cross(Vec3(spec.vectors.col(j))).normalized();
        double best = std::numeric_limits<double>::infinity();
        for (int k = 0; k < spec.N(); ++k) {
          if (k == i || k == j) continue;
          const double s = std::abs(h.dot(Vec3(spec.vectors.col(k))));
          if (s > 1e-12) best = std::min(best, 1.0 / s);
        }
        if (std::isfinite(best)) reach = std::max(reach, best);
      }
  }
  return reach;
}

namespace {

// Base vertex of the dual tile of intersection x: the K-image of the cell on the negative side
// of every hyperplane through x.
Eigen::VectorXd base_vertex(const GridSpec& spec, const GridIntersection& x) {
  Eigen::VectorXd v = Eigen::VectorXd::Zero(spec.d);
  for (int k = 0; k < spec.N(); ++k) {
    auto it = std::find(x.families.begin(), x.families.end(), k);
    long K;
    if (it != x.families.end())
      K = x.levels[static_cast<std::size_t>(it - x.families.begin())];
    else
      K = static_cast<long>(std::ceil(x.location.dot(spec.vectors.col(k)) - spec.phases[k]));
    v += static_cast<double>(K) * spec.vectors.col(k);
  }
  return v;
}

std::string number_label(const std::string& prefix, double v) {
  std::ostringstream os;
  os << prefix << std::fixed << std::setprecision(prefix == "rhomb" ? 1 : 6) << v;
  return os.str();
}

template <int Dim>
std::vector<std::vector<int>> consecutive_adjacency(const GridSpec& spec, const std::vector<GridIntersection>& xs) {
  // A grid line is keyed by the families and levels of the d-1 hyperplanes containing it.
  std::map<std::vector<long>, std::vector<std::pair<double, int>>> lines;
  for (std::size_t t = 0; t < xs.size(); ++t) {
    const auto& x = xs[t];
    for (int drop = 0; drop < Dim; ++drop) {
      std::vector<long> key;
      std::vector<int> fam;
      for (int r = 0; r < Dim; ++r) {
        if (r == drop) continue;
        key.push_back(x.families[static_cast<std::size_t>(r)]);
        key.push_back(x.levels[static_cast<std::size_t>(r)]);
        fam.push_back(x.families[static_cast<std::size_t>(r)]);
      }
      Eigen::VectorXd dir(Dim);
      if constexpr (Dim == 2) {
        const Eigen::VectorXd g = spec.vectors.col(fam[0]);
        dir << -g[1], g[0];
      } else {
        dir = Vec3(spec.vectors.col(fam[0])).cross(Vec3(spec.vectors.col(fam[1])));
      }
      lines[key].emplace_back(x.location.dot(dir), static_cast<int>(t));
    }
  }
  std::vector<std::vector<int>> adj(xs.size());
  for (auto& [key, pts] : lines) {
    std::sort(pts.begin(), pts.end());
    for (std::size_t q = 1; q < pts.size(); ++q) {
      adj[static_cast<std::size_t>(pts[q - 1].second)].push_back(pts[q].second);
      adj[static_cast<std::size_t>(pts[q].second)].push_back(pts[q - 1].second);
    }
  }
  for (auto& a : adj) {
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
  }
  return adj;
}

}  // namespace

DualTiling<2> dual_tiling_2d(const GridSpec& spec, double region_radius, const Tolerance& tol) {
  if (spec.d != 2) throw Error(ErrorKind::MethodMismatch, "dual_tiling_2d needs a planar grid");
  if (!is_regular(spec, region_radius, tol)) throw Error(ErrorKind::IrregularGrid, "grid is singular in the region");
  DualTiling<2> out;
  out.source = intersections(spec, region_radius);
  std::vector<Tile2> tiles;
  tiles.reserve(out.source.size());
  for (const auto& x : out.source) {
    const Vec2 V = base_vertex(spec, x);
    const Vec2 gi = spec.vectors.col(x.families[0]), gj = spec.vectors.col(x.families[1]);
    Polygon p({V, V + gi, V + gi + gj, V + gj});
    if (cross2(gi, gj) < 0) std::reverse(p.vertices.begin(), p.vertices.end());
    canonicalize(p);
    const double angle = std::acos(std::min(1.0, std::abs(gi.dot(gj)))) * 180.0 / M_PI;
    tiles.emplace_back(0, std::move(p), number_label("rhomb", angle));
  }
  out.patch = build_adjacency<2>(std::move(tiles), NeighborRule::edge_share(), tol);
  const double reach = neighbour_reach(spec);
  out.patch.guard_radius = region_radius - reach;
  for (std::size_t t = 0; t < out.source.size(); ++t)
    out.patch.complete[t] = out.source[t].location.norm() + reach <= region_radius;
  out.combinatorial = consecutive_adjacency<2>(spec, out.source);
  return out;
}

DualTiling<3> dual_tiling_3d(const GridSpec& spec, double region_radius, const Tolerance& tol) {
  if (spec.d != 3) throw Error(ErrorKind::MethodMismatch, "dual_tiling_3d needs a spatial grid");
  if (!is_regular(spec, region_radius, tol)) throw Error(ErrorKind::IrregularGrid, "grid is singular in the region");
  DualTiling<3> out;
  out.source = intersections(spec, region_radius);
  std::vector<Tile3> tiles;
  tiles.reserve(out.source.size());
  for (const auto& x : out.source) {
    Parallelepiped c;
    c.origin = base_vertex(spec, x);
    for (int r = 0; r < 3; ++r) c.edges.col(r) = spec.vectors.col(x.families[static_cast<std::size_t>(r)]);
    const double vol = c.volume();
    tiles.emplace_back(0, c, number_label("cell", vol));
  }
  out.patch = build_adjacency<3>(std::move(tiles), NeighborRule::edge_share(), tol);
  const double reach = neighbour_reach(spec);
  out.patch.guard_radius = region_radius - reach;
  for (std::size_t t = 0; t < out.source.size(); ++t)
    out.patch.complete[t] = out.source[t].location.norm() + reach <= region_radius;
  out.combinatorial = consecutive_adjacency<3>(spec, out.source);
  return out;
}

LineCount line_count_statistic(const GridSpec& spec, int i, int j, const Vec2& start, double l) {
  if (spec.d != 2) throw Error(ErrorKind::MethodMismatch, "line counts are defined for planar grids");
  if (i == j || i < 0 || j < 0 || i >= spec.N() || j >= spec.N())
    throw Error(ErrorKind::IndexOutOfRange, "need two distinct grid indices");
  const Vec2 gi = spec.vectors.col(i), gj = spec.vectors.col(j);
  const Vec2 u(-gi.y(), gi.x());
  const double c = u.dot(gj);
  if (std::abs(c) < 1e-15) throw Error(ErrorKind::ParallelGridVectors, "families are parallel");
  const double f0 = start.dot(gj) - spec.phases[j];
  const double f1 = f0 + l * c;
  const double lo = std::min(f0, f1), hi = std::max(f0, f1);
  LineCount r;
  r.count = static_cast<long>(std::floor(hi) - std::ceil(lo) + 1);
  r.expected = l * std::abs(c);  // l / delta_ij with delta_ij = 1 / sin(alpha_ij)
  r.bound_check = std::abs(static_cast<double>(r.count) - r.expected);
  return r;
}

}  // namespace tilegrow
