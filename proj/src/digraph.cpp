#include "lpgraph/digraph.hpp"

#include <algorithm>
#include <string>

namespace lpgraph {

Digraph::Digraph(int n, const std::vector<std::pair<int, int>>& edges) : n_(n) {
  if (n < 1) throw Error(ErrorKind::InvalidInput, "graph must have at least one vertex");
  if (n > kMaxVertices) throw Error(ErrorKind::ResourceLimit, "graphs above 64 vertices are not supported");
  out_.assign(n + 1, VertexSet{});
  in_.assign(n + 1, VertexSet{});
  for (auto [i, j] : edges) {
    if (i < 1 || i > n || j < 1 || j > n)
      throw Error(ErrorKind::InvalidInput, "edge endpoint out of range: [" + std::to_string(i) + "," + std::to_string(j) + "]");
    if (i == j) throw Error(ErrorKind::InvalidInput, "loop at vertex " + std::to_string(i));
    if (out_[i].contains(j))
      throw Error(ErrorKind::InvalidInput, "duplicate edge [" + std::to_string(i) + "," + std::to_string(j) + "]");
    out_[i].insert(j);
    in_[j].insert(i);
  }
}

Digraph Digraph::path(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i < n; ++i) {
    e.emplace_back(i, i + 1);
    e.emplace_back(i + 1, i);
  }
  return Digraph(n, e);
}

Digraph Digraph::cycle(int n) {
  if (n < 3) throw Error(ErrorKind::InvalidInput, "cycle needs at least 3 vertices");
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= n; ++i) {
    int next = i % n + 1;
    e.emplace_back(i, next);
    e.emplace_back(next, i);
  }
  return Digraph(n, e);
}

Digraph Digraph::complete(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j) e.emplace_back(i, j);
  return Digraph(n, e);
}

std::vector<std::pair<int, int>> Digraph::edges() const {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= n_; ++i) out_[i].for_each([&](int j) { e.emplace_back(i, j); });
  return e;
}

int Digraph::edge_count() const {
  int c = 0;
  for (int i = 1; i <= n_; ++i) c += out_[i].size();
  return c;
}

VertexSet Digraph::reachable_from(int v, VertexSet within) const {
  VertexSet seen = VertexSet::singleton(v);
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    frontier.for_each([&](int u) { next |= out_[u]; });
    next = (next & within) - seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

VertexSet Digraph::reaching(int v, VertexSet within) const {
  VertexSet seen = VertexSet::singleton(v);
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    frontier.for_each([&](int u) { next |= in_[u]; });
    next = (next & within) - seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

Digraph Digraph::with_extra_vertex(const std::vector<std::pair<int, int>>& new_edges) const {
  auto e = edges();
  e.insert(e.end(), new_edges.begin(), new_edges.end());
  return Digraph(n_ + 1, e);
}

bool is_strongly_connected(const Digraph& g, VertexSet s) {
  if (s.empty()) throw Error(ErrorKind::Precondition, "empty-set connectivity undefined");
  const int v = s.min();
  return g.reachable_from(v, s) == s && g.reaching(v, s) == s;
}

std::vector<VertexSet> scc_partition(const Digraph& g, VertexSet s) {
  std::vector<VertexSet> parts;
  VertexSet rest = s;
  while (!rest.empty()) {
    const int v = rest.min();
    VertexSet comp = g.reachable_from(v, s) & g.reaching(v, s);
    parts.push_back(comp);
    rest -= comp;
  }
  return parts;
}

StronglyConnectedFamily strongly_connected_subsets(const Digraph& g, int cap) {
  if (g.n() > cap) throw Error(ErrorKind::ResourceLimit, "strongly connected subset enumeration capped at n = " + std::to_string(cap));
  StronglyConnectedFamily out;
  for_each_subset(g.vertices(), [&](VertexSet s) {
    if (!s.empty() && is_strongly_connected(g, s)) out.subsets.push_back(s);
  });
  out.components = scc_partition(g, g.vertices());
  return out;
}

VertexSet oplus(const Digraph& g, VertexSet s, int j) {
  const VertexSet sj = s.with(j);
  return g.reachable_from(j, sj) & g.reaching(j, sj);
}

VertexSet ominus(const Digraph& g, VertexSet s, int j) { return s.with(j) - oplus(g, s, j); }

}  // namespace lpgraph
