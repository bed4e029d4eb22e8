#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lpgraph/graphlp.hpp"

namespace lpgraph {

/// Where a conjecture instance failed, with enough to replay it alone.
struct ConjectureWitness {
  Digraph graph;
  MaximalNestedCollection base;  // the seed the expansion is taken in
  std::vector<int> path;         // raw mutation positions from the base seed
  int position = 0;              // position of the variable after the path
  std::string variable;          // X3, Y124, or F2 for an exchange polynomial
  LaurentPoly value;             // over the base cluster symbols
  std::string detail;
};

struct DegreeCount {
  int degree = 0;
  std::size_t monomials = 0;
  std::size_t rank = 0;
};

struct ConjectureReport {
  std::string id;  // "positivity" or "cluster-monomials"
  std::size_t instances = 0;
  std::vector<ConjectureWitness> failures;
  double runtime_ms = 0;
  // cluster-monomials only: totals over degrees 0..d and the split by degree
  std::size_t monomials = 0;
  std::size_t rank = 0;
  std::vector<DegreeCount> by_degree;

  bool ok() const { return failures.empty(); }
};

/// For every seed, expands every cluster variable in that seed's cluster by
/// mutating a copy whose variables are the cluster symbols, walking the
/// stored exchange graph. Each expansion must have positive coefficients and
/// ground to the variable's value; every exchange polynomial F_i must have
/// positive coefficients. An incomplete algebra is checked on what it has.
ConjectureReport check_positivity(const GraphLPAlgebra& a, int threads = 1);

/// Replays `path` from the direct seed of `base` over its cluster symbols
/// and returns the variable at `position`.
LaurentPoly replay_expansion(const Digraph& g, const MaximalNestedCollection& base, const std::vector<int>& path,
                             int position);

/// Cluster monomials of total degree <= d, expanded in the initial cluster.
/// Rows are compared over Q(A), with each X-monomial as a coordinate. The
/// rank is taken modulo a prime after specializing the A's to fixed
/// integers; an exact rank over the fraction field decides when that is
/// short. Every dependent block is a failure.
ConjectureReport check_cluster_monomials(const GraphLPAlgebra& a, int d = 3);

}  // namespace lpgraph
