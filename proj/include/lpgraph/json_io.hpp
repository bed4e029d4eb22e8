#pragma once

#include <string>

#include "json.hpp"
#include "lpgraph/acyclic.hpp"
#include "lpgraph/conjectures.hpp"
#include "lpgraph/graphlp.hpp"

namespace lpgraph {

using json = nlohmann::json;

/// {"n": 4, "edges": [[1,2],...], "undirected_edges": [[1,2],...]}; the
/// second list is optional and expands to both directions. Throws
/// InvalidInput on a malformed document or a repeated edge.
Digraph graph_from_json(const json& j);
json graph_to_json(const Digraph& g);
/// Reads and parses a graph file; InvalidInput on I/O or syntax errors.
Digraph load_graph(const std::string& path);

/// {"support": [...], "sets": [[...], ...]}, sets in canonical order.
json collection_to_json(const MaximalNestedCollection& m);
MaximalNestedCollection collection_from_json(const Digraph& g, const json& j);

/// [{"coeff": c, "exps": {"X1": e, ...}}, ...] in term order. Coefficients
/// outside 64 bits are written as decimal strings.
json poly_to_terms(const LaurentPoly& p);
LaurentPoly poly_from_terms(const json& j);

/// {"vars": [...], "exchange": [...], "hat_denominators": [...]}, all in
/// canonical text over the seed's own symbols (exchange over Z_p).
json seed_to_json(const Seed& t);
/// Inverse of seed_to_json. Throws InvalidInput on size mismatch or a hat
/// denominator that is not a monomial.
Seed seed_from_json(const json& j);

json identities_to_json(const IdentityReport& r);
json main_check_to_json(const MainTheoremCheck& m);
json chain_to_json(const ChainReport& r);
json conjecture_to_json(const ConjectureReport& r);
json frozen_to_json(const FrozenAlgebra& f);

/// Seeds with collections and cluster names, and labelled edges (u < v).
json exchange_graph_json(const GraphLPAlgebra& a);
/// Undirected DOT graph; nodes labelled by collection, edges by direction.
std::string exchange_graph_dot(const GraphLPAlgebra& a);

}  // namespace lpgraph
