#include "tilegrow/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace tilegrow {

namespace {

Vec2 seed_point(const Patch<2>& patch, std::span<const int> seeds) {
  if (seeds.empty()) throw Error(ErrorKind::EmptySeed, "no seed tiles");
  Vec2 c = Vec2::Zero();
  for (int s : seeds) {
    if (s < 0 || s >= static_cast<int>(patch.size())) throw Error(ErrorKind::IndexOutOfRange, "seed id out of range");
    c += patch.tiles[s].centroid;
  }
  return c / static_cast<double>(seeds.size());
}

void normalise(std::vector<int>& n_list) {
  std::sort(n_list.begin(), n_list.end());
  n_list.erase(std::unique(n_list.begin(), n_list.end()), n_list.end());
  if (n_list.empty() || n_list.front() < 1) throw Error(ErrorKind::IndexOutOfRange, "shell indices must be >= 1");
}

std::vector<Vec2> relative_shell(const Patch<2>& patch, const ShellDecomposition& sd, int n, const Vec2& x0) {
  std::vector<Vec2> pts;
  pts.reserve(sd.shells[n].size());
  for (int t : sd.shells[n]) pts.push_back((patch.tiles[t].centroid - x0) / n);
  return pts;
}

double fit_inverse(const std::vector<int>& n, const std::vector<double>& d) {
  double num = 0.0, den = 0.0;
  for (std::size_t k = 0; k < d.size(); ++k) {
    num += d[k] / n[k];
    den += 1.0 / (double(n[k]) * n[k]);
  }
  return den > 0.0 ? num / den : 0.0;
}

}  // namespace

double recentred_hausdorff(const Polygon& a, const Polygon& b, double step) {
  return hausdorff_boundary(translated(a, -polygon_centroid(a)), translated(b, -polygon_centroid(b)), step);
}

GrowthEstimate estimate_growth_form(const Patch<2>& patch, std::span<const int> seeds, std::vector<int> n_list,
                                    const GrowthForm* candidate, const Tolerance& tol) {
  normalise(n_list);
  if (candidate && candidate->dim != 2) throw Error(ErrorKind::MethodMismatch, "candidate form is not planar");
  const Vec2 x0 = seed_point(patch, seeds);
  const auto sd = shells<2>(patch, seeds, n_list.back());

  GrowthEstimate est;
  auto& r = est.report;
  r.n = n_list;
  for (int n : n_list) {
    est.scaled_shells.push_back(relative_shell(patch, sd, n, x0));
    est.hulls.push_back(convex_hull_2d(est.scaled_shells.back(), tol));
    r.count.push_back(static_cast<long>(sd.shells[n].size()));
  }
  for (std::size_t k = 0; k + 1 < n_list.size(); ++k)
    r.d_successive.push_back(hausdorff_boundary(est.hulls[k], est.hulls[k + 1], kCompareStep));
  if (candidate) {
    for (const auto& h : est.hulls) r.d_to_candidate.push_back(recentred_hausdorff(h, candidate->polygon, kCompareStep));
    r.fitted_C = fit_inverse(n_list, r.d_to_candidate);
  } else {
    r.fitted_C = fit_inverse(std::vector<int>(n_list.begin(), n_list.end() - 1), r.d_successive);
  }
  est.form = GrowthForm::from_points(est.hulls.back().vertices, Provenance::Empirical, tol);
  return est;
}

double nonconvexity_measure(std::span<const Vec2> points, double step, const Tolerance& tol) {
  if (points.size() < 3) throw Error(ErrorKind::DegenerateHull, "need at least three points");
  if (!(step > 0.0)) throw Error(ErrorKind::InvalidSpec, "sampling step must be positive");
  const Polygon h = convex_hull_2d(points, tol);
  const auto samples = sample_boundary(h, step);
  return directed_hausdorff<2>(samples, points);
}

NoGrowthReport detect_no_growth_form(const Patch<2>& patch, std::span<const int> seeds, std::vector<int> n_list,
                                     double gap) {
  normalise(n_list);
  if (n_list.size() < 2) throw Error(ErrorKind::InsufficientSamples, "need at least two shell indices");
  const Vec2 x0 = seed_point(patch, seeds);
  const auto sd = shells<2>(patch, seeds, n_list.back());
  NoGrowthReport r;
  r.n = n_list;
  r.gap = gap;
  for (int n : n_list) {
    double m = -std::numeric_limits<double>::infinity();
    for (int t : sd.shells[n]) m = std::max(m, patch.tiles[t].centroid.x() - x0.x());
    r.ratio.push_back(m / n);
  }
  const auto [lo, hi] = std::minmax_element(r.ratio.begin(), r.ratio.end());
  r.range = *hi - *lo;
  r.non_convergent = r.range > gap;
  return r;
}

Polygon simplify_convex(const Polygon& p, double tol) {
  std::vector<Vec2> v = p.vertices;
  while (v.size() > 3) {
    const std::size_t n = v.size();
    std::size_t best = 0;
    double bd = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
      const double d = point_segment_distance<2>(v[i], v[(i + n - 1) % n], v[(i + 1) % n]);
      if (d < bd) {
        bd = d;
        best = i;
      }
    }
    if (bd > tol) break;
    v.erase(v.begin() + static_cast<std::ptrdiff_t>(best));
  }
  return Polygon(std::move(v));
}

SquareFit fit_square(const Polygon& hull, const Polygon& reference, double simplify_tol, double max_scale,
                     double step) {
  SquareFit f;
  f.simplified = simplify_convex(hull, simplify_tol);
  std::vector<double> len;
  for (std::size_t i = 0; i < f.simplified.size(); ++i)
    len.push_back((f.simplified.next(i) - f.simplified[i]).norm());
  const auto [lo, hi] = std::minmax_element(len.begin(), len.end());
  f.edge_spread = (*hi - *lo) / (std::accumulate(len.begin(), len.end(), 0.0) / len.size());

  const Polygon h = translated(hull, -polygon_centroid(hull));
  const Polygon ref = translated(reference, -polygon_centroid(reference));
  auto cost = [&](double s) { return hausdorff_boundary(h, scaled(ref, s), step); };
  // Coarse scan, then golden-section refinement around the best sample.
  const int coarse = 200;
  double bs = max_scale / coarse, bc = cost(bs);
  for (int k = 2; k <= coarse; ++k) {
    const double s = max_scale * k / coarse, c = cost(s);
    if (c < bc) {
      bc = c;
      bs = s;
    }
  }
  double a = std::max(bs - max_scale / coarse, 1e-9), b = std::min(bs + max_scale / coarse, max_scale);
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = b - g * (b - a), x2 = a + g * (b - a), c1 = cost(x1), c2 = cost(x2);
  for (int it = 0; it < 60; ++it) {
    if (c1 < c2) {
      b = x2;
      x2 = x1;
      c2 = c1;
      x1 = b - g * (b - a);
      c1 = cost(x1);
    } else {
      a = x1;
      x1 = x2;
      c1 = c2;
      x2 = a + g * (b - a);
      c2 = cost(x2);
    }
  }
  f.scale = 0.5 * (a + b);
  f.hausdorff = cost(f.scale);
  if (bc < f.hausdorff) {
    f.scale = bs;
    f.hausdorff = bc;
  }
  return f;
}

HatParams hat_params(double b) {
  if (!(b > 0.0) || b == 1.0) throw Error(ErrorKind::InvalidB, "b must be positive and different from 1");
  const double r3 = std::sqrt(3.0);
  HatParams h;
  h.b = b;
  h.area_tile = r3 * (2.0 + r3 * b + b * b);
  h.area_growth = 2.0 * r3 * h.area_tile;
  // Side of the regular hexagon with that area.
  h.edge_length = std::sqrt(2.0 * h.area_growth / (3.0 * r3));
  if (std::abs(b - r3) <= 1e-12) h.tilt = std::atan(r3 / (3.0 + 2.0 * kTau));
  return h;
}

}  // namespace tilegrow
