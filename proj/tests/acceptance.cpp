// One line per acceptance criterion. Exit status is the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>

#include "tilegrow/analysis.hpp"
#include "tilegrow/gridform.hpp"
#include "tilegrow/periodic.hpp"
#include "tilegrow/sources.hpp"
#include "tilegrow/substitution.hpp"

using namespace tilegrow;

namespace {

// Frozen from tests/oracles/cells.py (golden.json).
constexpr long kL255Count = 1663;
constexpr long kL255PublishedCount = 1651;
constexpr double kT0 = 0.01391668521803474;
constexpr double kG0 = 0.1321022727272727;

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void run(int id, const char* title, double limit_s, const std::function<Outcome()>& f) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = f();
  } catch (const std::exception& e) {
    o = {false, std::string("threw ") + e.what()};
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool ok = o.pass && s < limit_s;
  failures += !ok;
  std::printf("%s %2d %s: %s [%.2f s, limit %.0f s]\n", ok ? "PASS" : "FAIL", id, title, o.detail.c_str(), s, limit_s);
  std::fflush(stdout);
}

std::string fmt(const char* f, double a = 0, double b = 0, double c = 0, double d = 0) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, a, b, c, d);
  return buf;
}

Polygon regular_decagon_like(const GrowthForm& f, double radius) { return scaled(f.polygon, radius / f.circumradius()); }

Outcome c1() {
  const auto f = algorithm1(periodic_preset("square44"), NeighborRule::edge_share()).form;
  double err = f.vertex_count() == 4 ? 0.0 : 1.0;
  for (const Vec2 v : {Vec2(1, 0), Vec2(0, 1), Vec2(-1, 0), Vec2(0, -1)}) {
    double best = 1e9;
    for (const auto& p : f.polygon.vertices) best = std::min(best, (p - v).norm());
    err = std::max(err, best);
  }
  return {err < 1e-12, fmt("%g vertices, max vertex error %.1e", double(f.vertex_count()), err)};
}

Outcome c2() {
  const auto f = growth_form_formula_2d(grid_preset("penrose"));
  const double stated = 2.5 * std::sqrt(5 - 2 * std::sqrt(5.0));
  const double derived = 2.5 * std::tan(M_PI / 10);
  double rmin = 1e9, rmax = 0, aerr = 0;
  for (std::size_t k = 0; k < f.polygon.size(); ++k) {
    const double r = f.polygon[k].norm();
    rmin = std::min(rmin, r);
    rmax = std::max(rmax, r);
    const double a = std::acos(std::clamp(f.polygon[k].normalized().dot(f.polygon.next(k).normalized()), -1.0, 1.0));
    aerr = std::max(aerr, std::abs(a - M_PI / 5));
  }
  const bool radius_ok = std::abs(f.circumradius() - stated) < 1e-9;
  const bool shape_ok = f.vertex_count() == 10 && rmax - rmin < 1e-9 && aerr < 1e-9;
  return {radius_ok && shape_ok,
          fmt("circumradius %.10f vs stated %.10f (derived 5/2 tan(pi/10) = %.10f); radii spread %.1e", f.circumradius(),
              stated, derived, rmax - rmin) +
              fmt(", angle error %.1e", aerr)};
}

Outcome c3() {
  const auto f = growth_form_formula_3d(grid_preset("ammann3d"));
  const double want = std::sqrt(5 - 2 * std::sqrt(5.0));
  const int chi = f.polytope.euler_characteristic();
  const bool ok = f.vertex_count() == 30 && std::abs(f.circumradius() - want) < 1e-9 && chi == 2;
  return {ok, fmt("%g vertices, circumradius %.10f (want %.10f), V-E+F = %g", double(f.vertex_count()), f.circumradius(),
                  want, double(chi))};
}

Outcome c4() {
  std::mt19937_64 rng(20240601);
  double worst = 0.0;
  int count = 0;
  for (int N : {3, 4, 5, 7})
    for (int t = 0; t < 5; ++t, ++count) {
      const auto g = random_regular_grid(2, N, rng);
      worst = std::max(worst, form_hausdorff(growth_form_formula_2d(g), growth_form_orthoplex(g)));
    }
  for (int N : {4, 5, 6})
    for (int t = 0; t < (N == 4 ? 4 : 3); ++t, ++count) {
      const auto g = random_regular_grid(3, N, rng, 3.0);
      worst = std::max(worst, form_hausdorff(growth_form_formula_3d(g), growth_form_orthoplex(g)));
    }
  return {worst < 1e-7 && count == 30, fmt("%g grids, worst Hausdorff(formula, orthoplex) %.1e", count, worst)};
}

Outcome c5() {
  const Source src = source_preset("penrose");
  const auto g = generate_for_shells(src, 29);
  const auto f = growth_form_formula_2d(src.grid);
  const Polygon stated = regular_decagon_like(f, 2.5 * std::sqrt(5 - 2 * std::sqrt(5.0)));
  const auto e = estimate_growth_form(g.p2, g.seeds, {8, 16, 29}, &f);
  std::vector<double> d;
  for (const auto& h : e.hulls) d.push_back(recentred_hausdorff(h, stated, kCompareStep));
  const bool mono = d[0] > d[1] && d[1] > d[2];
  const auto& dc = e.report.d_to_candidate;
  return {mono && d[2] <= 0.15,
          fmt("Hausdorff to stated decagon %.4f, %.4f, %.4f", d[0], d[1], d[2]) +
              fmt(" (to derived decagon %.4f, %.4f, %.4f; empirical circumradius %.4f)", dc[0], dc[1], dc[2],
                  e.form.circumradius())};
}

Outcome c6() {
  const auto p = grid_preset("penrose");
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> u(-100, 100);
  double worst = 0.0;
  for (int s = 0; s < 20; ++s) {
    const Vec2 start(u(rng), u(rng));
    for (double l : {10.0, 100.0, 1000.0})
      for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j)
          if (i != j) worst = std::max(worst, line_count_statistic(p, i, j, start, l).bound_check);
  }
  return {worst <= 2.0, fmt("max |N_ij - l/delta_ij| = %.4f over 20 segments", worst)};
}

Outcome c7() {
  const Source src = source_preset("chair");
  const auto g = generate_for_shells(src, 128);
  const auto e = estimate_growth_form(g.p2, g.seeds, {32, 64, 128});
  const auto sq = algorithm1(periodic_preset("square44"), NeighborRule::edge_share()).form;
  const auto fit = fit_square(e.hulls.back(), sq.polygon, 2.0 / 128);
  const bool square = fit.simplified.size() == 4 && fit.edge_spread < 0.05 && fit.hausdorff < 0.05;
  long changed = 0, pairs = 0;
  int worst = 0;
  for (int level = 1; level <= 4; ++level) {
    const auto r = diagonal_deletion(chair_dual_graph(supertile(chair_system(), "chair", level)));
    changed += r.changed;
    pairs += r.pairs;
    worst = std::max(worst, r.max_increase);
  }
  return {square && changed == 0,
          fmt("hull %g vertices after 2/n simplification, edge spread %.4f, scale %.4f, Hausdorff %.4f; ",
              double(fit.simplified.size()), fit.edge_spread, fit.scale, fit.hausdorff) +
              fmt("diagonal deletion changes %g of %g distances (max increase %g)", double(changed), double(pairs),
                  double(worst))};
}

Outcome c8() {
  std::vector<int> ns;
  for (int n = 16; n <= 256; n += 16) ns.push_back(n);
  const Source strips = source_preset("strips");
  const auto g = generate_for_shells(strips, 256);
  const auto r = detect_no_growth_form(g.p2, g.seeds, ns, kG0);
  const Source sq = source_preset("square44");
  const auto gs = generate_for_shells(sq, 64);
  const auto c = detect_no_growth_form(gs.p2, gs.seeds, {16, 32, 48, 64}, kG0);
  return {r.non_convergent && c.range < 0.05,
          fmt("strips ratio range %.4f > g0 %.4f; square control range %.4f", r.range, kG0, c.range)};
}

Outcome c9() {
  const Source src = source_preset("ltetromino");
  const auto g = generate_for_shells(src, 255);
  const auto e = estimate_growth_form(g.p2, g.seeds, {255});
  const double m = nonconvexity_measure(e.scaled_shells[0]);
  const long count = e.report.count[0];
  return {m >= kT0 && count == kL255Count,
          fmt("nonconvexity %.5f >= t0 %.5f; |P_255| = %g (oracle %g", m, kT0, double(count), double(kL255Count)) +
              fmt(", published %g)", double(kL255PublishedCount))};
}

Outcome c10() {
  const double r3 = std::sqrt(3.0);
  const auto a = hat_params(r3), b = hat_params(3.0);
  const bool ok = std::abs(a.area_tile - 8 * r3) < 1e-12 && std::abs(a.area_growth - 48) < 1e-12 &&
                  std::abs(a.edge_length - 4 * std::sqrt(2.0) / std::pow(3.0, 0.25)) < 1e-12 && a.tilt &&
                  std::abs(*a.tilt - 0.270919) < 1e-5 && std::abs(b.area_tile - (9 + 11 * r3)) < 1e-12 &&
                  std::abs(b.edge_length - 2 * std::sqrt(3 + 11 / r3)) < 1e-12 &&
                  std::abs(b.area_growth - (66 + 18 * r3)) < 1e-12 && !b.tilt;
  return {ok, fmt("b=sqrt3: %.4f, %.4f, %.5f, tilt %.6f", a.area_tile, a.area_growth, a.edge_length, a.tilt.value_or(0)) +
                  fmt("; b=3: %.4f, %.4f, %.5f", b.area_tile, b.area_growth, b.edge_length)};
}

template <int Dim>
bool shell_invariants(const Patch<Dim>& p, const std::vector<int>& seeds, int n) {
  const auto sd = shells<Dim>(p, seeds, n);
  std::set<int> seen;
  for (int k = 0; k <= n; ++k)
    for (int t : sd.shells[k]) {
      if (!seen.insert(t).second || sd.index[t] != k) return false;
      bool back = k == 0;
      for (int u : p.adjacency[t]) {
        const int ku = sd.index[u];
        if (ku >= 0 && std::abs(ku - k) > 1) return false;  // neighbours sit in adjacent shells
        back |= ku == k - 1;
      }
      if (!back) return false;
    }
  return true;
}

Outcome c11() {
  int checks = 0, failed = 0;
  std::string why;
  auto check = [&](bool ok, const std::string& what) {
    ++checks;
    if (!ok) {
      ++failed;
      if (why.size() < 200) why += " " + what;
    }
  };
  for (const auto& name : source_preset_names()) {
    const Source src = source_preset(name);
    const int n = src.dim() == 3 ? 4 : 16;
    const auto g = generate_for_shells(src, n);
    if (g.dim == 2) {
      check(shell_invariants<2>(g.p2, g.seeds, n), name + ":shells");
      const auto e = estimate_growth_form(g.p2, g.seeds, {n / 2, n});
      const Polygon h = e.hulls.back();
      const Polygon hh = convex_hull_2d(h.vertices);
      check(h.size() == hh.size() && hausdorff_distance<2>(h.vertices, hh.vertices) == 0.0, name + ":idempotence");
      // Heesch adjacency contains EdgeShare adjacency, so Heesch shells never reach later.
      const auto gh = generate_for_shells(src, n, NeighborRule::heesch());
      const auto se = shells<2>(g.p2, g.seeds, n), sh = shells<2>(gh.p2, gh.seeds, n);
      bool contained = (gh.p2.tiles[gh.seeds[0]].centroid - g.p2.tiles[g.seeds[0]].centroid).norm() < 1e-9;
      for (std::size_t i = 0; contained && i < g.p2.size(); ++i) {
        if (se.index[i] < 0) continue;
        const int j = gh.p2.nearest_tile(g.p2.tiles[i].centroid);
        contained = (gh.p2.tiles[j].centroid - g.p2.tiles[i].centroid).norm() < 1e-9 && sh.index[j] >= 0 &&
                    sh.index[j] <= se.index[i];
      }
      check(contained, name + ":heesch");
      if (src.kind != SourceKind::Strips) {
        // A second seed a few tiles away gives the same estimate up to 2 C / n.
        const int far = g.p2.nearest_tile(g.p2.tiles[g.seeds[0]].centroid + Vec2(3.3, 2.1));
        const int s2[] = {far};
        const int N = 3 * n;
        const auto big = generate_for_shells(src, N + 8);
        const int a1[] = {big.p2.nearest_tile(g.p2.tiles[g.seeds[0]].centroid)};
        const int a2[] = {big.p2.nearest_tile(g.p2.tiles[s2[0]].centroid)};
        const auto e1 = estimate_growth_form(big.p2, a1, {N / 2, N});
        const auto e2 = estimate_growth_form(big.p2, a2, {N / 2, N});
        const double C = std::max({e1.report.fitted_C, e2.report.fitted_C, 1.0});
        check(recentred_hausdorff(e1.hulls.back(), e2.hulls.back(), kCompareStep) <= 2.0 * C / N, name + ":seed");
      }
    } else {
      check(shell_invariants<3>(g.p3, g.seeds, n), name + ":shells");
    }
    // Exact forms are centrosymmetric.
    if (src.kind == SourceKind::Periodic) {
      const auto fe = algorithm1(src.periodic, NeighborRule::edge_share()).form;
      const auto fh = growth_form_heesch(src.periodic);
      check(fe.is_centrosymmetric(1e-9) && fh.is_centrosymmetric(1e-9), name + ":centro");
      check(form_contains(fh, fe, 1e-9), name + ":heesch-form");
    }
    if (src.kind == SourceKind::Grid) {
      const auto ff = src.grid.d == 2 ? growth_form_formula_2d(src.grid) : growth_form_formula_3d(src.grid);
      check(ff.is_centrosymmetric(1e-9) && growth_form_orthoplex(src.grid).is_centrosymmetric(1e-9), name + ":centro");
    }
  }
  return {failed == 0, fmt("%g of %g property checks hold", double(checks - failed), double(checks)) +
                           (failed ? "; failing:" + why : std::string())};
}

}  // namespace

int main() {
  run(1, "4^4 exactness", 1, c1);
  run(2, "Penrose decagon", 1, c2);
  run(3, "Ammann 3D icosidodecahedron", 5, c3);
  run(4, "cross-method agreement", 30, c4);
  run(5, "Penrose empirical convergence", 60, c5);
  run(6, "line-count bound", 10, c6);
  run(7, "chair square form", 120, c7);
  run(8, "strips non-convergence", 120, c8);
  run(9, "L-tetromino regression", 120, c9);
  run(10, "hat parameters", 1, c10);
  run(11, "property suites", 300, c11);
  std::printf("%d of 11 criteria failed\n", failures);
  return failures;
}
