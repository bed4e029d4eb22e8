#pragma once

#include <cstdint>
#include <string>
#include <tuple>
#include <vector>

#include "lpgraph/digraph.hpp"

namespace lpgraph {

struct NestedCheck {
  bool nested = true;
  std::string reason;  // empty when nested
};

/// Both nestedness conditions: members strongly connected and pairwise
/// nested-or-disjoint, and every disjoint subfamily is the SCC partition of
/// its union. The empty family is nested.
NestedCheck check_nested(const Digraph& g, const std::vector<VertexSet>& family);
inline bool is_nested(const Digraph& g, const std::vector<VertexSet>& family) { return check_nested(g, family).nested; }

/// A maximal nested collection, indexed through the smallest-containing-set
/// bijection: vertex i of the support owns S_i.
class MaximalNestedCollection {
 public:
  MaximalNestedCollection() = default;
  static MaximalNestedCollection empty(int n);
  /// Validates nestedness and maximality; throws InvalidInput otherwise.
  static MaximalNestedCollection from_sets(const Digraph& g, const std::vector<VertexSet>& sets);
  /// Activates the vertices in order starting from the empty collection.
  static MaximalNestedCollection from_activation(const Digraph& g, const std::vector<int>& sequence);

  int n() const { return n_; }
  VertexSet support() const { return support_; }
  std::size_t size() const { return static_cast<std::size_t>(support_.size()); }
  /// Members ordered by size, then by mask.
  std::vector<VertexSet> sets() const;

  /// S_i; throws Precondition when i is not in the support.
  VertexSet set_of(int i) const;
  /// The cover i+, or 0 when i is maximal.
  int plus(int i) const;
  bool is_maximal(int i) const { return support_.contains(i) && plus_[i] == 0; }
  VertexSet maxima() const;
  /// i precedes j iff S_i is a subset of S_j.
  bool precedes(int i, int j) const { return set_of(i).is_subset_of(set_of(j)); }
  /// The vertex owning member s, or 0 when s is not a member.
  int vertex_of(VertexSet s) const;
  bool contains(VertexSet s) const { return vertex_of(s) != 0; }
  /// Members contained in m (again a maximal collection, on their union).
  MaximalNestedCollection restricted_to(VertexSet m) const;

  /// S_i masks by vertex (0 outside the support); a canonical encoding.
  const std::vector<std::uint64_t>& key() const { return key_; }
  friend bool operator==(const MaximalNestedCollection& a, const MaximalNestedCollection& b) {
    return a.n_ == b.n_ && a.key_ == b.key_;
  }
  std::size_t hash() const;

  /// "{{3},{4},{2,3,4},{1,2,3,4}}"
  std::string to_string() const;

 private:
  // Computes the indexing; throws InvalidInput unless the bijection holds.
  static MaximalNestedCollection assemble(int n, const std::vector<VertexSet>& sets);

  int n_ = 0;
  VertexSet support_;
  std::vector<VertexSet> by_vertex_;
  std::vector<int> plus_;
  std::vector<std::uint64_t> key_;
};

struct CollectionHash {
  std::size_t operator()(const MaximalNestedCollection& m) const { return m.hash(); }
};

enum class MoveKind { Activation, Deactivation, InternalMutation };
const char* move_name(MoveKind k);
MoveKind move_kind(const MaximalNestedCollection& m, int s);

/// Adds S (+) s; throws Precondition when s is already active.
MaximalNestedCollection activate(const Digraph& g, const MaximalNestedCollection& m, int s);
/// Activation, deactivation or internal mutation according to where s lies.
MaximalNestedCollection mutate_collection(const Digraph& g, const MaximalNestedCollection& m, int s);

/// The n-regular graph on all maximal nested collections.
struct CollectionExchangeGraph {
  int n = 0;
  std::vector<MaximalNestedCollection> vertices;  // BFS order from the empty collection
  std::vector<std::vector<int>> neighbor;         // neighbor[v][s - 1]

  int index_of(const MaximalNestedCollection& m) const;
  /// (u, v, label) with u < v.
  std::vector<std::tuple<int, int, int>> edges() const;
};

/// BFS by mutate_collection from the empty collection. Throws ResourceLimit
/// when n exceeds `cap`.
CollectionExchangeGraph collection_exchange_graph(const Digraph& g, int cap = 12);
std::vector<MaximalNestedCollection> enumerate_maximal_collections(const Digraph& g, int cap = 12);

struct NestedComplexes {
  /// Every nested family on the strongly connected subsets (the extended complex).
  std::vector<std::vector<VertexSet>> extended_faces;
  /// Nested families avoiding the strongly connected components of the graph.
  std::vector<std::vector<VertexSet>> nested_faces;
  /// Inclusion-maximal faces of each complex.
  std::vector<std::vector<VertexSet>> extended_facets;
  std::vector<std::vector<VertexSet>> nested_facets;
};

/// Enumerates both complexes face by face (independently of the collection
/// exchange graph). Throws ResourceLimit when n exceeds `cap`.
NestedComplexes nested_complexes(const Digraph& g, int cap = 6);

/// True iff seq2 is reachable from seq1 by swapping adjacent activations
/// whose sets in the resulting collection are disjoint. Throws InvalidInput
/// on invalid sequences.
bool exchangeable_swap_equiv(const Digraph& g, const std::vector<int>& seq1, const std::vector<int>& seq2);

}  // namespace lpgraph
