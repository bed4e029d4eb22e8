#pragma once

#include <utility>
#include <vector>

#include "lpgraph/vertex_set.hpp"

namespace lpgraph {

/// Loopless, multiplicity-free directed graph on vertices 1..n.
///
/// Immutable after construction. Adjacency is kept as one out-mask and one
/// in-mask per vertex, so every reachability query is a handful of word ops.
class Digraph {
 public:
  Digraph() = default;

  /// Throws InvalidInput on loops, duplicate edges or out-of-range ids.
  Digraph(int n, const std::vector<std::pair<int, int>>& edges);

  static Digraph edgeless(int n) { return Digraph(n, {}); }
  /// Bidirected path 1 - 2 - ... - n.
  static Digraph path(int n);
  /// Bidirected cycle on 1..n (n >= 3).
  static Digraph cycle(int n);
  /// All ordered pairs i != j.
  static Digraph complete(int n);

  int n() const { return n_; }
  VertexSet vertices() const { return VertexSet::range(n_); }

  bool has_edge(int i, int j) const { return out_[i].contains(j); }
  VertexSet successors(int i) const { return out_[i]; }
  VertexSet predecessors(int i) const { return in_[i]; }
  /// Edges sorted lexicographically.
  std::vector<std::pair<int, int>> edges() const;
  int edge_count() const;

  /// Vertices reachable from v by directed paths inside `within` (v included).
  VertexSet reachable_from(int v, VertexSet within) const;
  /// Vertices that reach v by directed paths inside `within` (v included).
  VertexSet reaching(int v, VertexSet within) const;

  /// Copy with one extra vertex n+1 and the given edges touching it.
  Digraph with_extra_vertex(const std::vector<std::pair<int, int>>& new_edges) const;

  friend bool operator==(const Digraph&, const Digraph&) = default;

 private:
  int n_ = 0;
  // index 0 unused
  std::vector<VertexSet> out_{VertexSet{}};
  std::vector<VertexSet> in_{VertexSet{}};
};

/// True iff the subgraph induced on `s` is strongly connected.
/// Throws Precondition on the empty set.
bool is_strongly_connected(const Digraph& g, VertexSet s);

/// Strongly connected components of the subgraph induced on `s`, ordered by
/// their smallest vertex. Empty input gives an empty list.
std::vector<VertexSet> scc_partition(const Digraph& g, VertexSet s);

struct StronglyConnectedFamily {
  std::vector<VertexSet> subsets;     // all nonempty strongly connected subsets, by mask
  std::vector<VertexSet> components;  // strongly connected components of the whole graph
};

/// Enumerates every nonempty strongly connected subset (2^n candidates).
/// Throws ResourceLimit when n exceeds `cap`.
StronglyConnectedFamily strongly_connected_subsets(const Digraph& g, int cap = 20);

/// The strongly connected component of s + {j} containing j.
VertexSet oplus(const Digraph& g, VertexSet s, int j);
/// (s + {j}) minus oplus(g, s, j).
VertexSet ominus(const Digraph& g, VertexSet s, int j);

}  // namespace lpgraph
