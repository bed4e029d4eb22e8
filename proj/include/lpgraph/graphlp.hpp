#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "lpgraph/acyclic.hpp"
#include "lpgraph/digraph.hpp"
#include "lpgraph/lpcore.hpp"
#include "lpgraph/nested.hpp"

namespace lpgraph {

/// X_1..X_n with F_i = A_i + sum_{i -> j} Z_j.
Seed initial_seed(const Digraph& g);

/// The cluster variable symbols of t_m by position: X_i for i outside the
/// support, Y{S_i} inside.
std::vector<Var> collection_symbols(const MaximalNestedCollection& m);

struct DirectSeed {
  Seed seed;
  /// hatF_i from the closed formula, over the position symbols Z.
  std::vector<LaurentPoly> hat;
  /// hat[i] agrees with hat_f(seed, i), which is computed from den.
  bool hat_matches_den = true;
};

/// t_m built from the closed formulas for the cluster and the exchange
/// Laurent polynomials, re-expressed in the seed's own cluster through
/// CollectionExpressor. Throws Internal when a denominator is not a monomial
/// in the seed's variables.
DirectSeed direct_seed(const Digraph& g, const MaximalNestedCollection& m, YCache& cache);
inline Seed seed_for_collection(const Digraph& g, const MaximalNestedCollection& m) {
  YCache cache(g);
  return direct_seed(g, m, cache).seed;
}

/// hatF_i of t_m over the collection symbols (X_j and Y{S_k}).
LaurentPoly direct_hat(const Digraph& g, const MaximalNestedCollection& m, int i, CollectionExpressor& ex);

/// Reorders positions: position p moves to perm[p - 1]; Z symbols follow.
Seed permute_positions(const Seed& t, const std::vector<int>& perm);

struct BuildOptions {
  int cap = 6;
  std::size_t budget = 5000;
  int threads = 1;
  /// Run the direct construction against every discovered seed.
  bool cross_check = true;
};

struct AlgebraEdge {
  int target = -1;
  /// Position p of mutate(seed, label) sits at perm[p - 1] in the target.
  std::vector<int> perm;
};

struct AlgebraSeed {
  MaximalNestedCollection collection;
  Seed seed;  // positions in collection indexing
  std::vector<AlgebraEdge> edges;  // by direction
};

struct MainTheoremCheck {
  std::size_t seeds_checked = 0;
  std::size_t edges_checked = 0;
  std::size_t collections_expected = 0;
  std::vector<std::string> mismatches;
  bool ok() const { return mismatches.empty(); }
};

/// The cluster variables of a graph LP algebra, named X_i and Y_I.
struct VariableInventory {
  std::unordered_map<LaurentPoly, Var, LaurentPolyHash> by_value;
  std::unordered_map<Var, LaurentPoly> value;
};
VariableInventory variable_inventory(const Digraph& g, YCache& cache);

/// The names of a seed's cluster variables and the collection they form.
struct SeedNames {
  MaximalNestedCollection collection;
  std::vector<Var> names;  // by position
  std::vector<int> label;  // label[p - 1]: collection index of position p
};

/// nullopt, with the reason in `why`, when a variable is neither an X nor a
/// Y value or the Y sets do not form a maximal nested collection.
std::optional<SeedNames> name_seed(const Digraph& g, const VariableInventory& inv, const Seed& t,
                                   std::string* why = nullptr);

struct GraphLPAlgebra {
  Digraph graph;
  std::vector<AlgebraSeed> seeds;  // BFS order from the initial seed
  std::vector<Var> variables;      // distinct cluster variables, sorted
  bool complete = true;            // false when the budget stopped the search
  MainTheoremCheck main;
  std::shared_ptr<YCache> cache;

  int index_of(const MaximalNestedCollection& m) const;
};

/// BFS by mutation from the initial seed. Every discovered seed is named
/// through the inventory of X_i and Y_I, placed in collection indexing, and,
/// with cross_check, compared to direct_seed. Edges are checked against
/// mutate_collection and the seed set against enumerate_maximal_collections.
/// Throws ResourceLimit when n exceeds the cap.
GraphLPAlgebra build_algebra(const Digraph& g, const BuildOptions& opt = {});

struct FrozenAlgebra {
  std::vector<VertexSet> frozen;          // the strongly connected components
  std::vector<int> seed_index;            // parent seeds containing every frozen variable
  std::vector<std::vector<int>> neighbor; // per seed, along free_directions; -1 leaves the frozen seeds
  std::vector<std::vector<int>> free_directions;  // labels of the non-frozen positions, per seed
  std::vector<std::vector<VertexSet>> clusters;  // internal sets minus the frozen ones
  int rank = 0;
  bool no_external_variables = true;
  bool complex_matches_nested = false;    // clusters are the facets of the nested complex
};

/// Restricts to seeds whose collection contains every component and drops
/// the frozen positions. Mutation in a free direction stays inside.
FrozenAlgebra freeze(const GraphLPAlgebra& a);

struct ChainRelation {
  int seed = 0;  // index in the algebra
  int vertex = 0;
  VertexSet I, J, K;
  bool special = false;  // cycle case S_j = [n]
  bool ambiguous = false;
  bool ok = false;
  std::string detail;
};

struct ChainReport {
  std::size_t seeds = 0;
  std::vector<ChainRelation> relations;
  std::size_t ambiguous = 0;
  std::size_t failed() const;
  bool ok() const { return failed() == 0 && !relations.empty(); }
};

/// Explores the frozen path (cycle) algebra by mutation from the activation
/// 1..n. For every seed and every internal vertex i, splits S_i = I i J and
/// S_{i+} = I i J j K through the collection (J is the child touching j) and
/// checks Y_{IiJ} Y_{JjK} = Y_J Y_{IiJjK} + Y_I Y_K three ways: the seed's
/// hatF_i, the mutated collection and grounded values. Cycles with
/// S_j = [n] use Y_{IiJ} Y_{JjI} = Y_I Y_J Y_[n] + (Y_I + Y_J)^2.
ChainReport path_exchange_check(int n, int threads = 1);
ChainReport cycle_exchange_check(int n, int threads = 1);
ChainReport chain_exchange_check(const Digraph& g, bool cyclic, int threads = 1);

struct CompleteGraphSeed {
  std::vector<int> activation;
  Seed closed;   // from the closed forms, positions as in the mutated seed
  Seed mutated;  // mutation replay from the initial seed
  std::vector<LaurentPoly> exchange_named;  // closed-form F over X_j and Y{S}
  std::vector<LaurentPoly> hat_named;
  bool matches = false;
  std::string detail;
};

/// Closed forms for the seed of K_n reached by an activation sequence,
/// compared with the mutated seed up to equivalence and hat denominators.
/// Throws InvalidInput on repeated or out-of-range vertices.
CompleteGraphSeed complete_graph_seed(int n, const std::vector<int>& activation);

}  // namespace lpgraph
