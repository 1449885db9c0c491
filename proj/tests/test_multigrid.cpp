#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "tilegrow/multigrid.hpp"

using namespace tilegrow;

namespace {

Eigen::VectorXd v2(double x, double y) {
  Eigen::VectorXd v(2);
  v << x, y;
  return v;
}

double nearest_plane(const GridSpec& s, const Eigen::VectorXd& x) {
  double d = 1e9;
  for (int i = 0; i < s.N(); ++i) {
    const double t = x.dot(s.vectors.col(i)) - s.phases[i];
    d = std::min(d, std::abs(t - std::round(t)));
  }
  return d;
}

}  // namespace

TEST_CASE("K index and K point") {
  GridSpec s;
  s.d = 2;
  s.vectors.resize(2, 1);
  s.vectors << 1, 0;
  s.phases = Eigen::VectorXd::Zero(1);
  CHECK(K_index(s, 0, v2(0.3, 7)) == 1);
  s.phases[0] = 0.5;
  CHECK(K_index(s, 0, v2(0.3, 0)) == 0);
  CHECK_THROWS_AS(K_index(s, 0, v2(0.5, 0)), Error);

  GridSpec o = grid_preset("ortho2");
  o.phases.setZero();
  CHECK((K_point(o, v2(0.3, 0.6)) - v2(1, 1)).norm() < 1e-15);
  CHECK(K_point(o, v2(-0.3, -0.6)).norm() < 1e-15);

  const auto p = grid_preset("penrose");
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-10, 10), dir(-1, 1);
  for (int trial = 0; trial < 50; ++trial) {
    const Eigen::VectorXd x = v2(u(rng), u(rng));
    const double r = nearest_plane(p, x) * 0.5;
    const Eigen::VectorXd K = K_point(p, x);
    for (int q = 0; q < 10; ++q) {
      Eigen::VectorXd y = v2(dir(rng), dir(rng));
      y = x + r * y / std::max(1.0, y.norm());
      CHECK((K_point(p, y) - K).norm() < 1e-12);
      for (int i = 0; i < p.N(); ++i) CHECK(K_index(p, i, y) == K_index(p, i, x));
    }
  }
}

TEST_CASE("regularity") {
  CHECK(is_regular(grid_preset("penrose"), 20.0));
  CHECK(is_regular(grid_preset("hexagrid"), 20.0));
  CHECK(is_regular(grid_preset("ammann3d"), 6.0));
  auto tri = grid_preset("hexagrid");
  tri.phases.setZero();
  CHECK(!is_regular(tri, 5.0));

  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> u(0, 1);
  auto p = grid_preset("penrose");
  int regular = 0;
  for (int t = 0; t < 100; ++t) {
    for (int i = 0; i < 5; ++i) p.phases[i] = u(rng);
    regular += is_regular(p, 10.0);
  }
  CHECK(regular == 100);

  auto bad = grid_preset("penrose");
  bad.vectors.col(1) = bad.vectors.col(0);
  CHECK_THROWS_AS(bad.validate(), Error);
}

TEST_CASE("dual tiling in the plane") {
  const auto sq = dual_tiling_2d(grid_preset("ortho2"), 6.0);
  for (const auto& t : sq.patch.tiles) CHECK(polygon_area(t.shape) == doctest::Approx(1.0));

  const auto pen = dual_tiling_2d(grid_preset("penrose"), 10.0);
  CHECK(pen.patch.size() == pen.source.size());
  std::map<std::string, int> census;
  for (const auto& t : pen.patch.tiles) census[t.label]++;
  CHECK(census.size() == 2);
  CHECK(census.count("rhomb36.0") == 1);
  CHECK(census.count("rhomb72.0") == 1);
  for (const auto& t : pen.patch.tiles) {
    const double a = polygon_area(t.shape);
    CHECK((std::abs(a - std::sin(M_PI / 5)) < 1e-9 || std::abs(a - std::sin(2 * M_PI / 5)) < 1e-9));
    // Every edge is a translate of some grid vector.
    for (std::size_t k = 0; k < t.shape.size(); ++k) {
      const Vec2 e = t.shape.next(k) - t.shape[k];
      bool found = false;
      for (int i = 0; i < 5; ++i) {
        const Vec2 g(std::cos(2 * M_PI * i / 5), std::sin(2 * M_PI * i / 5));
        if ((e - g).norm() < 1e-9 || (e + g).norm() < 1e-9) found = true;
      }
      CHECK(found);
    }
  }
  // Geometric EdgeShare adjacency equals the combinatorial adjacency.
  CHECK(pen.patch.adjacency == pen.combinatorial);
  const auto hex = dual_tiling_2d(grid_preset("hexagrid"), 10.0);
  CHECK(hex.patch.adjacency == hex.combinatorial);

  auto tri = grid_preset("hexagrid");
  tri.phases.setZero();
  CHECK_THROWS_AS(dual_tiling_2d(tri, 5.0), Error);
}

TEST_CASE("dual tiling in space") {
  const auto cube = dual_tiling_3d(grid_preset("ortho3"), 4.0);
  for (const auto& t : cube.patch.tiles) CHECK(t.shape.volume() == doctest::Approx(1.0));
  CHECK(cube.patch.adjacency == cube.combinatorial);

  const auto amm = dual_tiling_3d(grid_preset("ammann3d"), 3.0);
  std::set<std::string> shapes;
  for (const auto& t : amm.patch.tiles) shapes.insert(t.label);
  CHECK(shapes.size() == 2);
  CHECK(amm.patch.adjacency == amm.combinatorial);
}

TEST_CASE("line count statistic") {
  const auto o = grid_preset("ortho2");
  const auto r = line_count_statistic(o, 0, 1, Vec2(0.37, 0.11), 10.0);
  CHECK(std::abs(r.count - 10) <= 1);

  const auto p = grid_preset("penrose");
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(-50, 50);
  for (double l : {10.0, 100.0, 1000.0}) {
    double worst = 0.0;
    for (int s = 0; s < 20; ++s) {
      const Vec2 start(u(rng), u(rng));
      for (int i = 0; i < 5; ++i) {
        long total = 0;
        for (int j = 0; j < 5; ++j) {
          if (i == j) continue;
          const auto c = line_count_statistic(p, i, j, start, l);
          worst = std::max(worst, c.bound_check);
          total += c.count;
        }
        // N_i(l) by walking the segment and counting every crossing of a non-i line.
        const Vec2 gi(p.vectors.col(i));
        const Vec2 dir(-gi.y(), gi.x());
        long direct = 0;
        for (int j = 0; j < 5; ++j) {
          if (j == i) continue;
          const Vec2 gj(p.vectors.col(j));
          const double a = start.dot(gj) - p.phases[j], b = (start + l * dir).dot(gj) - p.phases[j];
          for (long m = static_cast<long>(std::floor(std::min(a, b))) - 1; m <= std::max(a, b) + 1; ++m)
            if (m >= std::min(a, b) && m <= std::max(a, b)) ++direct;
        }
        CHECK(total == direct);
      }
    }
    CHECK(worst <= 2.0);
  }
}
