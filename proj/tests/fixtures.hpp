#pragma once

#include <random>
#include <vector>

#include "lpgraph/digraph.hpp"
#include "lpgraph/poly.hpp"

namespace fixtures {

using lpgraph::Digraph;
using lpgraph::LaurentPoly;
using lpgraph::Var;
using lpgraph::VertexSet;

/// The four-vertex running example: 1<->2, 1<->3, 2<->3, 1->4, 3->4, 4->2.
inline Digraph fig1() { return Digraph(4, {{1, 2}, {2, 1}, {1, 3}, {3, 1}, {3, 2}, {2, 3}, {1, 4}, {3, 4}, {4, 2}}); }

/// Each ordered pair becomes an edge independently with probability p.
inline Digraph random_digraph(int n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j && coin(rng)) e.emplace_back(i, j);
  return Digraph(n, e);
}

/// Every digraph on n vertices, indexed by a bitmask over ordered pairs.
inline std::vector<Digraph> all_digraphs(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j) pairs.emplace_back(i, j);
  std::vector<Digraph> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << pairs.size()); ++m) {
    std::vector<std::pair<int, int>> e;
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if ((m >> k) & 1u) e.push_back(pairs[k]);
    out.emplace_back(n, e);
  }
  return out;
}

inline LaurentPoly X(int i) { return LaurentPoly::var(Var::X(i)); }
inline LaurentPoly A(int i) { return LaurentPoly::var(Var::A(i)); }
inline LaurentPoly Z(int i) { return LaurentPoly::var(Var::Z(i)); }
inline LaurentPoly Ysym(VertexSet s) { return LaurentPoly::var(Var::Y(s)); }
inline LaurentPoly P(const char* text) { return lpgraph::parse_poly(text); }

/// Transitive closure by Floyd-Warshall on the subgraph induced on s;
/// reach[i][j] for 1-based i, j.
inline std::vector<std::vector<bool>> closure(const Digraph& g, VertexSet s) {
  const int n = g.n();
  std::vector<std::vector<bool>> r(n + 1, std::vector<bool>(n + 1, false));
  for (int i : s.members()) {
    r[i][i] = true;
    for (int j : s.members())
      if (g.has_edge(i, j)) r[i][j] = true;
  }
  for (int k : s.members())
    for (int i : s.members())
      for (int j : s.members())
        if (r[i][k] && r[k][j]) r[i][j] = true;
  return r;
}

inline bool brute_strongly_connected(const Digraph& g, VertexSet s) {
  auto r = closure(g, s);
  for (int i : s.members())
    for (int j : s.members())
      if (!r[i][j]) return false;
  return true;
}

}  // namespace fixtures
