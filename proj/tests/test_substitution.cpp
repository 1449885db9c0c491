#include <doctest.h>

#include <map>

#include "tilegrow/substitution.hpp"

using namespace tilegrow;

namespace {

// Cell-contact oracle (tests/oracles/cells.py).
const std::vector<long> kChairCoordination = {4, 12, 12, 28, 20, 36, 28, 58, 40, 60};
const std::vector<long> kLCoordination = {5, 11, 18, 22, 29, 37, 43, 46, 56, 61};

double total_area(const Patch<2>& p) {
  double a = 0.0;
  for (const auto& t : p.tiles) a += polygon_area(t.shape);
  return a;
}

}  // namespace

TEST_CASE("substitution systems") {
  const auto chair = chair_system();
  const auto ell = l_tetromino_system();
  CHECK(polygon_area(chair.prototiles[0].polygon) == 3.0);
  CHECK(polygon_area(ell.prototiles[0].polygon) == 4.0);
  CHECK_NOTHROW(chair.validate());
  CHECK_NOTHROW(ell.validate());

  auto broken = chair;
  broken.rules[0][2].motion.t = Vec2(2, 2);
  CHECK_THROWS_AS(broken.validate(), Error);
  broken = chair;
  broken.rules[0].pop_back();
  try {
    broken.validate();
    FAIL("expected InvalidRules");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidRules);
  }
}

TEST_CASE("supertiles") {
  const auto chair = chair_system();
  CHECK(supertile(chair, "chair", 0).patch.size() == 1);
  const auto s3 = supertile(chair, "chair", 3);
  CHECK(s3.patch.size() == 64);
  CHECK(total_area(s3.patch) == 64 * 3.0);
  CHECK(polygon_area(s3.region) == 64 * 3.0);
  for (const auto& t : s3.patch.tiles) CHECK(intersection_area(t.shape, s3.region) == doctest::Approx(3.0));
  // Exact cover: pairwise disjoint tiles whose areas add up to the region.
  CHECK_NOTHROW(build_adjacency<2>(s3.patch.tiles, NeighborRule::edge_share()));

  const auto l4 = supertile(l_tetromino_system(), "ltetromino", 4);
  CHECK(l4.patch.size() == 256);
  CHECK(total_area(l4.patch) == 256 * 4.0);
  CHECK_NOTHROW(build_adjacency<2>(l4.patch.tiles, NeighborRule::edge_share()));

  // Boundary tiles are incomplete, interior ones are not.
  const auto s5 = supertile(chair, "chair", 5);
  long incomplete = 0;
  for (char c : s5.patch.complete) incomplete += !c;
  CHECK(incomplete > 0);
  CHECK(incomplete < static_cast<long>(s5.patch.size()));

  CHECK_THROWS_AS(supertile(chair, "nope", 1), Error);
}

TEST_CASE("windowed supertiles match the oracle") {
  // The oracle seeds level 10 (chair) and level 11 (L) supertiles at their disc centres.
  const Vec2 c = l_supertile_center(10);
  const auto w = supertile_window(chair_system(), "chair", 10, c, 60.0);
  const int seeds[] = {tile_at(w.patch, c)};
  CHECK(coordination_sequence<2>(w.patch, seeds, 10) == kChairCoordination);

  // A window sees the same neighbourhood as the full supertile.
  const Vec2 c7 = l_supertile_center(7);
  const auto full = supertile(chair_system(), "chair", 7);
  const auto part = supertile_window(chair_system(), "chair", 7, c7, 40.0);
  CHECK(part.patch.size() < full.patch.size());
  const int fs[] = {tile_at(full.patch, c7)}, ps[] = {tile_at(part.patch, c7)};
  CHECK(coordination_sequence<2>(full.patch, fs, 12) == coordination_sequence<2>(part.patch, ps, 12));

  const auto lw = supertile_window(l_tetromino_system(), "ltetromino", 11, l_supertile_center(11), 60.0);
  const int lseeds[] = {tile_at(lw.patch, l_supertile_center(11))};
  CHECK(coordination_sequence<2>(lw.patch, lseeds, 10) == kLCoordination);
  CHECK_THROWS_AS(shells<2>(lw.patch, lseeds, 40), GuardBandExceeded);
}

TEST_CASE("chair dual graph") {
  const auto s1 = supertile(chair_system(), "chair", 1);
  const auto g = chair_dual_graph(s1);
  CHECK(g.vertices.size() == 4);
  CHECK(g.edges.size() == 5);
  CHECK(std::count(g.diagonal.begin(), g.diagonal.end(), 1) == 1);
  for (const auto& t : s1.patch.tiles) {
    bool corner = false;
    for (const auto& v : t.shape.vertices) corner |= (v - g.vertices[t.id]).norm() == 0.0;
    CHECK(corner);
  }

  // Dual edges are the patch adjacency.
  const auto s3 = supertile(chair_system(), "chair", 3);
  const auto g3 = chair_dual_graph(s3);
  long edges = 0;
  for (const auto& a : s3.patch.adjacency) edges += static_cast<long>(a.size());
  CHECK(static_cast<long>(g3.edges.size()) * 2 == edges);

  const auto r1 = diagonal_deletion(g);
  CHECK(r1.invariant());
  for (int level = 2; level <= 4; ++level) {
    const auto r = diagonal_deletion(chair_dual_graph(supertile(chair_system(), "chair", level)));
    CHECK(r.pairs > 0);
    // Deleting diagonals never disconnects the graph and costs at most two steps.
    CHECK(r.max_increase <= 2);
  }
}

TEST_CASE("strips tiling") {
  const auto p = strips_tiling(1, 8);
  std::map<std::string, int> census;
  for (const auto& t : p.tiles) census[t.label]++;
  CHECK(census["s"] == 16);
  CHECK(census["l"] == 8);
  for (const auto& t : p.tiles)
    if (t.label == "l") CHECK(t.centroid.x() == 2.0);

  const auto q = strips_tiling(3, 8);
  double left = 0.0;
  std::vector<double> widths;
  std::string prev;
  for (const auto& t : q.tiles) {
    if (t.centroid.y() > -7.0) continue;  // bottom row only
    const double x0 = t.shape[0].x(), x1 = t.shape[1].x();
    if (t.label != prev) {
      if (!prev.empty()) widths.push_back(x0 - left);
      left = x0;
      prev = t.label;
    }
    (void)x1;
  }
  widths.push_back(q.tiles.back().shape[1].x() - left);
  CHECK(widths == std::vector<double>{1, 2, 4, 8, 16, 32});

  // A 2x2 tile on the left edge of an l-strip touches two unit squares.
  for (std::size_t i = 0; i < q.size(); ++i) {
    const auto& t = q.tiles[i];
    if (t.label != "l" || t.shape[0].x() != 1.0 || !q.complete[i]) continue;
    int left_units = 0;
    for (int j : q.adjacency[i]) left_units += q.tiles[j].label == "s" && q.tiles[j].centroid.x() < 1.0;
    CHECK(left_units == 2);
  }
  CHECK(q.tiles[strips_seed(q)].centroid == Vec2(0.5, 0.5));
}
