#include <algorithm>

#include "doctest.h"
#include "fixtures.hpp"

using namespace lpgraph;
using fixtures::fig1;

TEST_CASE("strong connectivity on the running example") {
  const Digraph g = fig1();
  CHECK(is_strongly_connected(g, {1, 2, 3, 4}));
  CHECK_FALSE(is_strongly_connected(g, {1, 4}));
  for (int i = 1; i <= 4; ++i) CHECK(is_strongly_connected(g, {i}));
  CHECK_THROWS_AS(is_strongly_connected(g, VertexSet{}), Error);
}

TEST_CASE("eleven strongly connected subsets; four failures listed explicitly") {
  const Digraph g = fig1();
  const auto fam = strongly_connected_subsets(g);
  CHECK(fam.subsets.size() == 11);
  const std::vector<VertexSet> not_sc = {{1, 4}, {2, 4}, {3, 4}, {1, 3, 4}};
  for (VertexSet s : not_sc) CHECK(std::find(fam.subsets.begin(), fam.subsets.end(), s) == fam.subsets.end());
  int nonempty = 0;
  for_each_subset(g.vertices(), [&](VertexSet s) { nonempty += !s.empty(); });
  CHECK(nonempty - static_cast<int>(not_sc.size()) == 11);
  REQUIRE(fam.components.size() == 1);
  CHECK(fam.components[0] == VertexSet{1, 2, 3, 4});
}

TEST_CASE("edgeless and path families") {
  const auto e = strongly_connected_subsets(Digraph::edgeless(5));
  CHECK(e.subsets.size() == 5);
  for (auto s : e.subsets) CHECK(s.size() == 1);
  CHECK(e.components.size() == 5);

  const auto p = strongly_connected_subsets(Digraph::path(3));
  std::vector<VertexSet> want = {{1}, {2}, {3}, {1, 2}, {2, 3}, {1, 2, 3}};
  std::sort(want.begin(), want.end());
  auto got = p.subsets;
  std::sort(got.begin(), got.end());
  CHECK(got == want);
}

TEST_CASE("scc partition") {
  const Digraph g = fig1();
  const auto parts = scc_partition(g, {1, 3, 4});
  // oracle: two vertices share a component iff mutually reachable inside the set
  const auto r = fixtures::closure(g, {1, 3, 4});
  for (auto a : parts)
    for (int i : a.members())
      for (int j : VertexSet{1, 3, 4}.members()) CHECK((a.contains(j)) == (r[i][j] && r[j][i]));
  CHECK(parts.size() == 2);
  CHECK(scc_partition(g, {2}) == std::vector<VertexSet>{{2}});
  CHECK(scc_partition(g, {1, 2, 3, 4}) == std::vector<VertexSet>{{1, 2, 3, 4}});
  CHECK(scc_partition(g, VertexSet{}).empty());
}

TEST_CASE("oplus / ominus") {
  const Digraph g = fig1();
  CHECK(oplus(g, {3, 4}, 1) == VertexSet{1, 3});
  CHECK(ominus(g, {3, 4}, 1) == VertexSet{4});
  CHECK(oplus(g, {3, 4}, 2) == VertexSet{2, 3, 4});
  CHECK(ominus(g, {3, 4}, 2).empty());
  CHECK(oplus(g, {}, 2) == VertexSet{2});
  CHECK(ominus(g, {}, 2).empty());
}

TEST_CASE("properties against brute force on random graphs") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const int n = 2 + static_cast<int>(seed % 5);
    const Digraph g = fixtures::random_digraph(n, 0.4, seed);
    const auto fam = strongly_connected_subsets(g);
    std::size_t count = 0;
    for_each_subset(g.vertices(), [&](VertexSet s) {
      if (s.empty()) return;
      const bool sc = fixtures::brute_strongly_connected(g, s);
      CHECK(is_strongly_connected(g, s) == sc);
      count += sc;
      VertexSet uni;
      for (auto part : scc_partition(g, s)) {
        CHECK_FALSE(uni.intersects(part));
        CHECK(is_strongly_connected(g, part));
        uni |= part;
      }
      CHECK(uni == s);
      if (sc) CHECK(scc_partition(g, s) == std::vector<VertexSet>{s});
      for (int j = 1; j <= n; ++j) {
        const auto a = oplus(g, s, j);
        const auto b = ominus(g, s, j);
        CHECK((a | b) == s.with(j));
        CHECK_FALSE(a.intersects(b));
      }
    });
    CHECK(fam.subsets.size() == count);
  }
}

TEST_CASE("construction errors") {
  CHECK_THROWS_AS(Digraph(3, {{1, 1}}), Error);
  CHECK_THROWS_AS(Digraph(3, {{1, 2}, {1, 2}}), Error);
  CHECK_THROWS_AS(Digraph(3, {{1, 4}}), Error);
  CHECK_THROWS_AS(Digraph(0, {}), Error);
  CHECK(Digraph::complete(4).edge_count() == 12);
  CHECK(Digraph::cycle(4).edge_count() == 8);
}
