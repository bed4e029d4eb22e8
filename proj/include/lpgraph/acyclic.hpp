#pragma once

#include <cstddef>
#include <functional>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "lpgraph/digraph.hpp"
#include "lpgraph/matrix.hpp"
#include "lpgraph/nested.hpp"
#include "lpgraph/poly.hpp"

namespace lpgraph {

/// Sum over acyclic functions f on I of prod X~_f(i), over prod X_i, where
/// X~ is A_i on a loop f(i) = i and X_f(i) otherwise. The empty set gives 1.
LaurentPoly y_by_enumeration(const Digraph& g, VertexSet I);

/// The n x n matrix with Y_i on the diagonal, -1 on edges and 0 elsewhere.
/// Grounded: Y_i = F_i / X_i. Symbolic: Y_i is the opaque variable Y{i}.
DenseMatrix<LaurentPoly> y_matrix(const Digraph& g);
DenseMatrix<LaurentPoly> y_matrix_symbolic(const Digraph& g);

/// det of the principal minor on I of the grounded matrix; 1 for the empty set.
LaurentPoly y_by_determinant(const Digraph& g, VertexSet I);

/// Vertex sets of the simple paths i -> j whose intermediate vertices lie in
/// S (endpoints included). i = j gives the trivial path only.
std::vector<VertexSet> simple_paths(const Digraph& g, VertexSet S, int i, int j);

/// P_S^{i,j} with Y given by `y` (which must map the empty set to 1).
LaurentPoly p_sum(const Digraph& g, VertexSet S, int i, int j, const std::function<LaurentPoly(VertexSet)>& y);

/// Thread-safe memo of grounded Y values and path sums for one graph.
class YCache {
 public:
  explicit YCache(Digraph g) : g_(std::move(g)) {}

  const Digraph& graph() const { return g_; }
  /// Y_I by enumeration; references stay valid for the cache's lifetime.
  const LaurentPoly& y(VertexSet I);
  /// Grounded P_S^{i,j}.
  LaurentPoly p(VertexSet S, int i, int j);

 private:
  Digraph g_;
  std::mutex mu_;
  std::unordered_map<VertexSet, LaurentPoly> y_;
};

/// Grounded P_S^{i,j}.
LaurentPoly p_path(const Digraph& g, VertexSet S, int i, int j);

/// (-1)^(1 + #{s in S strictly between i and j}) det of the grounded minor
/// with rows S'+i and columns S'+j, S' = S - {i, j}, both in increasing
/// order. Throws Precondition when i = j.
LaurentPoly p_by_minor(const Digraph& g, VertexSet S, int i, int j);

struct IdentityTally {
  std::string name;
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::string first_failure;  // empty when none failed
};

struct IdentityReport {
  std::vector<IdentityTally> identities;
  bool ok() const;
  std::size_t checked() const;
  std::size_t failed() const;
  std::string to_string() const;
};

/// Instantiates every identity below over all admissible index choices and
/// checks exact equality:
///   prop-det  Y_I = det of the principal minor on I
///   Yfac      Y_I = product over the strongly connected components of I
///   YiS       Y_{Si} = Y_{S(+)i} Y_{S(-)i}
///   maxmut    X_i Y_{S(+)i} Y_{S(-)i} = sum_{j not in Si} P X_j + sum_{j in Si} P A_j
///   Fpoly     the maxmut right side over Y_{S(-)i} equals the right side for S(+)i - i
///   det       P_S^{i,j} by paths = signed minor
///   Yex       Y_{S(+)i} Y_{S(+)j} Y_{S(-)i} Y_{S(-)j} = Y_{Sij} Y_S + P^{i,j} P^{j,i}
///   Jacobi    Dodgson condensation on every principal submatrix of the symbolic matrix
///   ikj       P_{Sk}^{i,j} Y_S = P_S^{i,k} P_S^{k,j} + P_S^{i,j} Y_{Sk} (last term only for i = j),
///             also through the virtual vertex n+1 with the edge j -> n+1 when j is in S
/// Throws ResourceLimit when n exceeds `cap`.
IdentityReport verify_identities(const Digraph& g, int cap = 6);

/// Rewrites Y_I in the symbols Y_{S_i} of a maximal nested collection by
/// replaying internal mutations through the Yex relation, then splitting
/// into components. Values are memoized per collection.
class CollectionExpressor {
 public:
  CollectionExpressor(const Digraph& g, const MaximalNestedCollection& m);

  const MaximalNestedCollection& collection() const { return m_; }
  /// Y_I as a Laurent polynomial in the symbols Y{S_i}. Throws InvalidInput
  /// unless I is inside the support.
  LaurentPoly y(VertexSet I);
  /// P_S^{i,j} in the same symbols; S must lie inside the support.
  LaurentPoly p(VertexSet S, int i, int j);

 private:
  LaurentPoly solve(VertexSet T, const MaximalNestedCollection& coll);

  Digraph g_;
  MaximalNestedCollection m_;
  std::unordered_map<VertexSet, LaurentPoly> known_;
};

struct YExpression {
  LaurentPoly value;      // in the symbols Y{S_i}
  bool validated = false; // grounding the symbols reproduces Y_I
};

/// One-shot CollectionExpressor with the grounding check.
YExpression express_y_in_collection(const Digraph& g, const MaximalNestedCollection& m, VertexSet I);

/// Substitutes the grounded value for every Y symbol in p.
LaurentPoly ground_y_symbols(const LaurentPoly& p, YCache& cache);

}  // namespace lpgraph
