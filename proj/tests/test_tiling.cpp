#include <doctest.h>

#include <deque>
#include <map>

#include "tilegrow/periodic.hpp"
#include "tilegrow/tiling.hpp"

using namespace tilegrow;

namespace {

std::vector<Tile2> square_block(int half) {
  std::vector<Tile2> t;
  for (int x = -half; x <= half; ++x)
    for (int y = -half; y <= half; ++y)
      t.emplace_back(0, Polygon({{x - 0.5, y - 0.5}, {x + 0.5, y - 0.5}, {x + 0.5, y + 0.5}, {x - 0.5, y + 0.5}}),
                     "square");
  return t;
}

// Independent BFS on Z^2 with the given step set.
std::vector<long> lattice_bfs(const std::vector<std::pair<int, int>>& steps, int n) {
  std::map<std::pair<int, int>, int> dist;
  std::deque<std::pair<int, int>> q;
  dist[{0, 0}] = 0;
  q.push_back({0, 0});
  std::vector<long> count(static_cast<std::size_t>(n) + 1, 0);
  while (!q.empty()) {
    auto p = q.front();
    q.pop_front();
    const int d = dist[p];
    count[static_cast<std::size_t>(d)]++;
    if (d == n) continue;
    for (auto [dx, dy] : steps) {
      std::pair<int, int> r{p.first + dx, p.second + dy};
      if (dist.count(r)) continue;
      dist[r] = d + 1;
      q.push_back(r);
    }
  }
  return {count.begin() + 1, count.end()};
}

}  // namespace

TEST_CASE("neighbour rules on a 3x3 block") {
  auto edge = build_adjacency<2>(square_block(1), NeighborRule::edge_share());
  auto moore = build_adjacency<2>(square_block(1), NeighborRule::heesch());
  const int c = edge.nearest_tile(Vec2::Zero());
  CHECK(edge.adjacency[c].size() == 4);
  CHECK(moore.adjacency[c].size() == 8);
  for (std::size_t i = 0; i < edge.size(); ++i) {
    for (int j : edge.adjacency[i]) {
      CHECK(j != static_cast<int>(i));
      const auto& back = edge.adjacency[static_cast<std::size_t>(j)];
      CHECK(std::binary_search(back.begin(), back.end(), static_cast<int>(i)));
      // Heesch adjacency contains EdgeShare adjacency.
      CHECK(std::binary_search(moore.adjacency[i].begin(), moore.adjacency[i].end(), j));
    }
  }
}

TEST_CASE("overlapping tiles are rejected") {
  auto t = square_block(1);
  t.emplace_back(0, Polygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}}), "extra");
  try {
    build_adjacency<2>(t, NeighborRule::edge_share());
    FAIL("expected OverlappingTiles");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::OverlappingTiles);
  }
}

TEST_CASE("square tiling coordination sequences") {
  auto patch = build_adjacency<2>(square_block(30), NeighborRule::edge_share());
  patch.set_guard(Vec2::Zero(), 28.0);
  const int seed[1] = {patch.nearest_tile(Vec2::Zero())};
  CHECK(coordination_sequence<2>(patch, seed, 20) == lattice_bfs({{1, 0}, {-1, 0}, {0, 1}, {0, -1}}, 20));
  auto seq = coordination_sequence<2>(patch, seed, 3);
  CHECK(seq == std::vector<long>{4, 8, 12});

  auto moore = build_adjacency<2>(square_block(30), NeighborRule::heesch());
  moore.set_guard(Vec2::Zero(), 28.0);
  const auto ms = coordination_sequence<2>(moore, seed, 20);
  CHECK(ms == lattice_bfs({{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {1, -1}, {-1, 1}, {-1, -1}}, 20));
  for (int k = 1; k <= 20; ++k) CHECK(ms[static_cast<std::size_t>(k - 1)] == 8 * k);

  // Heesch shell index never exceeds the EdgeShare index.
  const auto se = shells<2>(patch, seed, 20), sh = shells<2>(moore, seed, 20);
  for (std::size_t i = 0; i < patch.size(); ++i)
    if (se.index[i] >= 0) CHECK((sh.index[i] >= 0 && sh.index[i] <= se.index[i]));
}

TEST_CASE("shell invariants") {
  auto patch = build_adjacency<2>(square_block(12), NeighborRule::edge_share());
  patch.set_guard(Vec2::Zero(), 11.0);
  const int seed[2] = {patch.nearest_tile(Vec2::Zero()), patch.nearest_tile(Vec2(3, 1))};
  const auto sd = shells<2>(patch, seed, 8);
  std::vector<int> seen(patch.size(), 0);
  for (int k = 0; k <= sd.depth(); ++k)
    for (int t : sd.shells[k]) {
      seen[t]++;
      CHECK(sd.index[t] == k);
      if (k == 0) continue;
      int lowest = 1 << 30;
      for (int u : patch.adjacency[t])
        if (sd.index[u] >= 0) lowest = std::min(lowest, sd.index[u]);
      CHECK(lowest == k - 1);
    }
  for (int s : seen) CHECK(s <= 1);

  std::vector<int> all(patch.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  // Without a guard every tile counts as complete.
  const auto finite = build_adjacency<2>(square_block(12), NeighborRule::edge_share());
  const auto whole = shells<2>(finite, all, 1);
  CHECK(whole.shells[1].empty());

  CHECK_THROWS_AS(shells<2>(patch, std::span<const int>(), 3), Error);
  try {
    shells<2>(patch, seed, 30);
    FAIL("expected GuardBandExceeded");
  } catch (const GuardBandExceeded& e) {
    CHECK(e.max_safe_shell() >= 8);
    CHECK(e.max_safe_shell() < 30);
  }
}

TEST_CASE("scaled shells") {
  auto patch = build_adjacency<2>(square_block(20), NeighborRule::edge_share());
  patch.set_guard(Vec2::Zero(), 18.0);
  const int seed[1] = {patch.nearest_tile(Vec2::Zero())};
  const auto sd = shells<2>(patch, seed, 12);
  const auto s1 = scaled_shell<2>(sd, patch, 1);
  CHECK(s1.size() == 4);
  for (const auto& p : s1) CHECK(p.lpNorm<1>() == doctest::Approx(1.0));
  const auto s12 = scaled_shell<2>(sd, patch, 12);
  for (std::size_t i = 0; i < s12.size(); ++i) {
    CHECK(s12[i].lpNorm<1>() == doctest::Approx(1.0));
    CHECK((s12[i] * 12 - patch.tiles[sd.shells[12][i]].centroid).norm() < 1e-12);
  }
  CHECK_THROWS_AS(scaled_shell<2>(sd, patch, 13), Error);
  CHECK_THROWS_AS(scaled_shell<2>(sd, patch, 0), Error);
}

TEST_CASE("hexagonal tiling sequence matches triangular-lattice BFS") {
  const auto spec = periodic_preset("hex63");
  const auto patch = unroll(spec, 40.0);
  const int seed[1] = {patch.nearest_tile(Vec2::Zero())};
  // Axial neighbours of the triangular lattice.
  const auto oracle = lattice_bfs({{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, -1}, {-1, 1}}, 15);
  CHECK(coordination_sequence<2>(patch, seed, 15) == oracle);
  CHECK(oracle[0] == 6);
  CHECK(oracle[2] == 18);
}

TEST_CASE("guard band: radius r and 2r patches agree") {
  for (const auto& name : periodic_preset_names()) {
    const auto spec = periodic_preset(name);
    const auto small = unroll(spec, 14.0), large = unroll(spec, 28.0);
    const int s1[1] = {small.nearest_tile(Vec2(0.3, 0.4))};
    const int s2[1] = {large.nearest_tile(Vec2(0.3, 0.4))};
    int n = 1;
    while (true) {
      try {
        shells<2>(small, s1, n + 1);
        ++n;
      } catch (const GuardBandExceeded&) {
        break;
      }
    }
    INFO(name);
    CHECK(n >= 4);
    CHECK(coordination_sequence<2>(small, s1, n) == coordination_sequence<2>(large, s2, n));
  }
}

TEST_CASE("arch3344 sequence is seed-independent within a class") {
  const auto spec = periodic_preset("arch3344");
  const auto patch = unroll(spec, 40.0);
  for (int f = 0; f < 3; ++f) {
    std::vector<int> members;
    for (std::size_t i = 0; i < patch.size(); ++i)
      if (patch.tiles[i].klass == f && patch.tiles[i].centroid.norm() < 6) members.push_back(static_cast<int>(i));
    REQUIRE(members.size() >= 2);
    const int a[1] = {members.front()}, b[1] = {members.back()};
    CHECK(coordination_sequence<2>(patch, a, 12) == coordination_sequence<2>(patch, b, 12));
  }
}
