#include <algorithm>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "lpgraph/nested.hpp"

using namespace lpgraph;
using fixtures::fig1;

namespace {

std::vector<std::vector<int>> permutations_of_subsets(int n) {
  std::vector<std::vector<int>> out;
  for_each_subset(VertexSet::range(n), [&](VertexSet s) {
    auto v = s.members();
    do out.push_back(v);
    while (std::next_permutation(v.begin(), v.end()));
  });
  return out;
}

}  // namespace

TEST_CASE("nestedness") {
  const Digraph g = fig1();
  CHECK(is_nested(g, {{3}, {4}, {2, 3, 4}, {1, 2, 3, 4}}));
  CHECK(is_nested(g, {}));
  CHECK_FALSE(is_nested(Digraph::path(3), {{1}, {2}}));
  CHECK_FALSE(is_nested(g, {{1, 4}}));
  CHECK_FALSE(is_nested(g, {{1, 2}, {2, 3}}));
  CHECK_FALSE(check_nested(g, {{1, 4}}).reason.empty());
}

TEST_CASE("activation sequences and the indexing") {
  const Digraph g = fig1();
  const auto a = MaximalNestedCollection::from_activation(g, {3, 4, 2, 1});
  CHECK(a.to_string() == "{{3},{4},{2,3,4},{1,2,3,4}}");
  CHECK(a.set_of(1) == VertexSet{1, 2, 3, 4});
  CHECK(a.set_of(2) == VertexSet{2, 3, 4});
  CHECK(a.plus(3) == 2);
  CHECK(a.plus(4) == 2);
  CHECK(a.plus(2) == 1);
  CHECK(a.plus(1) == 0);
  CHECK(a.maxima() == VertexSet{1});
  const auto b = MaximalNestedCollection::from_activation(g, {3, 4, 1, 2});
  CHECK(b.to_string() == "{{3},{4},{1,3},{1,2,3,4}}");
  CHECK_THROWS_AS(activate(g, a, 2), Error);
  CHECK(MaximalNestedCollection::from_activation(g, {2}).sets() == std::vector<VertexSet>{{2}});
  CHECK_THROWS_AS(MaximalNestedCollection::from_activation(g, {2, 2}), Error);
}

TEST_CASE("mutation moves") {
  const Digraph g = fig1();
  const auto a = MaximalNestedCollection::from_sets(g, {{3}, {4}, {2, 3, 4}, {1, 2, 3, 4}});
  CHECK(move_kind(a, 2) == MoveKind::InternalMutation);
  CHECK(mutate_collection(g, a, 2).to_string() == "{{3},{4},{1,3},{1,2,3,4}}");
  CHECK(move_kind(a, 1) == MoveKind::Deactivation);
  CHECK(mutate_collection(g, a, 1).to_string() == "{{3},{4},{2,3,4}}");
}

TEST_CASE("enumeration counts") {
  const auto eg = collection_exchange_graph(fig1());
  CHECK(eg.vertices.size() == 46);
  for (int n = 1; n <= 5; ++n) CHECK(enumerate_maximal_collections(Digraph::edgeless(n)).size() == (1u << n));
  int full = 0;
  for (const auto& m : enumerate_maximal_collections(Digraph::path(3))) full += m.support() == VertexSet::range(3);
  CHECK(full == 5);
  CHECK_THROWS_AS(collection_exchange_graph(Digraph::edgeless(13)), Error);
}

TEST_CASE("exchange graph structure: involution, regularity, bijection") {
  std::vector<Digraph> graphs = {fig1(), Digraph::path(4), Digraph::cycle(4), Digraph::complete(4)};
  for (std::uint64_t seed = 1; seed <= 10; ++seed) graphs.push_back(fixtures::random_digraph(5, 0.35, seed));
  for (const auto& g : graphs) {
    const auto eg = collection_exchange_graph(g);
    for (std::size_t v = 0; v < eg.vertices.size(); ++v) {
      const auto& m = eg.vertices[v];
      // bijection: every member is S_i for exactly one i
      CHECK(m.sets().size() == m.size());
      m.support().for_each([&](int i) {
        for (VertexSet s : m.sets())
          if (s.contains(i)) CHECK(m.set_of(i).is_subset_of(s));
      });
      std::set<int> targets;
      for (int s = 1; s <= g.n(); ++s) {
        const int u = eg.neighbor[v][s - 1];
        CHECK(u != static_cast<int>(v));
        // the move back is labelled s, except after an internal mutation,
        // where the old cover s+ now owns the replacement set
        const int back = move_kind(m, s) == MoveKind::InternalMutation ? m.plus(s) : s;
        CHECK(eg.neighbor[u][back - 1] == static_cast<int>(v));
        CHECK(mutate_collection(g, mutate_collection(g, m, s), back) == m);
        if (back != s) CHECK(eg.vertices[u].set_of(back) == oplus(g, m.set_of(back).without(s), back));
        targets.insert(u);
      }
      CHECK(targets.size() == static_cast<std::size_t>(g.n()));
    }
  }
}

TEST_CASE("internal mutation is the unique alternative") {
  for (std::uint64_t seed = 20; seed < 30; ++seed) {
    const Digraph g = fixtures::random_digraph(4 + static_cast<int>(seed % 2), 0.45, seed);
    const auto all = enumerate_maximal_collections(g);
    for (const auto& m : all)
      m.support().for_each([&](int s) {
        if (m.is_maximal(s)) return;
        std::vector<VertexSet> keep;
        m.support().for_each([&](int r) {
          if (r != s) keep.push_back(m.set_of(r));
        });
        std::vector<MaximalNestedCollection> hits;
        for (const auto& o : all) {
          if (o.support() != m.support()) continue;
          if (std::all_of(keep.begin(), keep.end(), [&](VertexSet k) { return o.contains(k); })) hits.push_back(o);
        }
        REQUIRE(hits.size() == 2);
        const auto mu = mutate_collection(g, m, s);
        CHECK(((hits[0] == m && hits[1] == mu) || (hits[1] == m && hits[0] == mu)));
      });
  }
}

TEST_CASE("exchangeable swaps characterise equal collections") {
  const Digraph g = fig1();
  CHECK(exchangeable_swap_equiv(g, {3, 4, 2, 1}, {4, 3, 2, 1}));
  CHECK(exchangeable_swap_equiv(g, {3, 4, 2, 1}, {3, 4, 2, 1}));
  CHECK_FALSE(exchangeable_swap_equiv(g, {3, 4, 2, 1}, {3, 4, 1, 2}));
  CHECK_THROWS_AS(exchangeable_swap_equiv(g, {3, 3}, {3}), Error);
  const auto seqs = permutations_of_subsets(4);
  for (const auto& a : seqs)
    for (const auto& b : seqs) {
      if (a.size() != b.size() || VertexSet::from_vector(a) != VertexSet::from_vector(b)) continue;
      const bool same = MaximalNestedCollection::from_activation(g, a) == MaximalNestedCollection::from_activation(g, b);
      CHECK(exchangeable_swap_equiv(g, a, b) == same);
    }
}

TEST_CASE("nested complexes") {
  const Digraph g = fig1();
  const auto cx = nested_complexes(g);
  // faces of the extended complex whose size equals their support size are
  // exactly the maximal collections
  std::set<std::vector<VertexSet>> from_faces;
  for (const auto& f : cx.extended_faces) {
    VertexSet sup;
    for (auto s : f) sup |= s;
    if (static_cast<int>(f.size()) == sup.size()) from_faces.insert(f);
  }
  std::set<std::vector<VertexSet>> from_graph;
  int full = 0;
  for (const auto& m : enumerate_maximal_collections(g)) {
    auto s = m.sets();
    std::sort(s.begin(), s.end());
    from_graph.insert(s);
    full += m.support() == g.vertices();
  }
  CHECK(from_faces == from_graph);
  CHECK(cx.extended_facets.size() == static_cast<std::size_t>(full));

  const auto one = nested_complexes(Digraph::edgeless(1));
  CHECK(one.extended_faces.size() == 2);

  const auto p3 = nested_complexes(Digraph::path(3));
  CHECK(p3.nested_facets.size() == 5);
  std::set<VertexSet> verts;
  for (const auto& f : p3.nested_faces)
    for (auto s : f) verts.insert(s);
  CHECK(verts.size() == 5);
}
