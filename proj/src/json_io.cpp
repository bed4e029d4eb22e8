#include "lpgraph/json_io.hpp"

#include <fstream>
#include <limits>
#include <set>
#include <sstream>

namespace lpgraph {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::InvalidInput, what); }

std::vector<int> int_list(const json& j, const char* what) {
  if (!j.is_array()) bad(std::string(what) + " must be an array");
  std::vector<int> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) bad(std::string(what) + " must hold integers");
    out.push_back(v.get<int>());
  }
  return out;
}

json vertex_list(VertexSet s) { return s.members(); }

json set_list(const std::vector<VertexSet>& sets) {
  json out = json::array();
  for (VertexSet s : sets) out.push_back(vertex_list(s));
  return out;
}

json names_json(const std::vector<Var>& names) {
  json out = json::array();
  for (Var v : names) out.push_back(v.name());
  return out;
}

}  // namespace

Digraph graph_from_json(const json& j) {
  if (!j.is_object()) bad("graph must be a JSON object");
  if (!j.contains("n") || !j["n"].is_number_integer()) bad("graph needs an integer \"n\"");
  const int n = j["n"].get<int>();
  if (n < 0) bad("n must be nonnegative");
  if (n > kMaxVertices) bad("n above 64 is not supported");
  std::vector<std::pair<int, int>> edges;
  std::set<std::pair<int, int>> seen;
  auto add = [&](int a, int b) {
    if (!seen.emplace(a, b).second)
      bad("duplicate edge " + std::to_string(a) + " -> " + std::to_string(b));
    edges.emplace_back(a, b);
  };
  auto read = [&](const char* key, bool both) {
    if (!j.contains(key)) return;
    if (!j[key].is_array()) bad(std::string("\"") + key + "\" must be an array of pairs");
    for (const auto& e : j[key]) {
      const auto p = int_list(e, key);
      if (p.size() != 2) bad(std::string("\"") + key + "\" entries must be pairs");
      add(p[0], p[1]);
      if (both) add(p[1], p[0]);
    }
  };
  read("edges", false);
  read("undirected_edges", true);
  return Digraph(n, edges);
}

json graph_to_json(const Digraph& g) {
  json e = json::array();
  for (auto [a, b] : g.edges()) e.push_back({a, b});
  return {{"n", g.n()}, {"edges", e}};
}

Digraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot read graph file " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    bad("graph file " + path + ": " + e.what());
  }
  return graph_from_json(j);
}

json collection_to_json(const MaximalNestedCollection& m) {
  return {{"support", vertex_list(m.support())}, {"sets", set_list(m.sets())}};
}

MaximalNestedCollection collection_from_json(const Digraph& g, const json& j) {
  const json& sets = j.is_object() && j.contains("sets") ? j["sets"] : j;
  if (!sets.is_array()) bad("collection must be an array of vertex lists");
  std::vector<VertexSet> out;
  for (const auto& s : sets) out.push_back(VertexSet::from_vector(int_list(s, "set")));
  return MaximalNestedCollection::from_sets(g, out);
}

json poly_to_terms(const LaurentPoly& p) {
  json out = json::array();
  for (const auto& t : p.terms()) {
    json exps = json::object();
    for (const auto& f : t.mono.factors()) exps[f.var.name()] = f.exp;
    json c;
    if (t.coeff >= std::numeric_limits<std::int64_t>::min() && t.coeff <= std::numeric_limits<std::int64_t>::max())
      c = static_cast<std::int64_t>(t.coeff);
    else
      c = t.coeff.str();
    out.push_back({{"coeff", c}, {"exps", exps}});
  }
  return out;
}

LaurentPoly poly_from_terms(const json& j) {
  if (!j.is_array()) bad("term list must be an array");
  std::vector<LaurentPoly::Term> terms;
  for (const auto& t : j) {
    if (!t.is_object() || !t.contains("coeff") || !t.contains("exps") || !t["exps"].is_object())
      bad("term needs \"coeff\" and \"exps\"");
    Integer c;
    if (t["coeff"].is_number_integer()) c = t["coeff"].get<std::int64_t>();
    else if (t["coeff"].is_string()) {
      try {
        c = Integer(t["coeff"].get<std::string>());
      } catch (const std::exception&) {
        bad("bad coefficient " + t["coeff"].get<std::string>());
      }
    } else bad("coefficient must be an integer or a decimal string");
    std::vector<VarPow> f;
    for (const auto& [name, e] : t["exps"].items()) {
      if (!e.is_number_integer()) bad("exponent of " + name + " must be an integer");
      f.push_back({parse_var(name), e.get<int>()});
    }
    terms.push_back({Monomial::from_pairs(std::move(f)), c});
  }
  return LaurentPoly::from_terms(std::move(terms));
}

json seed_to_json(const Seed& t) {
  json vars = json::array(), ex = json::array(), hat = json::array();
  for (int p = 0; p < t.n(); ++p) {
    vars.push_back(render(t.vars[p]));
    ex.push_back(render(t.exchange[p]));
    hat.push_back(t.hat_den[p].to_string());
  }
  return {{"vars", vars}, {"exchange", ex}, {"hat_denominators", hat}};
}

Seed seed_from_json(const json& j) {
  for (const char* key : {"vars", "exchange", "hat_denominators"})
    if (!j.is_object() || !j.contains(key) || !j[key].is_array()) bad(std::string("seed needs an array \"") + key + "\"");
  const std::size_t n = j["vars"].size();
  if (j["exchange"].size() != n || j["hat_denominators"].size() != n) bad("seed arrays differ in length");
  auto text = [](const json& v) {
    if (!v.is_string()) bad("seed entries must be strings");
    return parse_poly(v.get<std::string>());
  };
  Seed t;
  for (std::size_t p = 0; p < n; ++p) {
    t.vars.push_back(text(j["vars"][p]));
    t.exchange.push_back(text(j["exchange"][p]));
    const LaurentPoly h = text(j["hat_denominators"][p]);
    if (!h.is_monomial() || h.least_term().coeff != 1) bad("hat denominator must be a monomial");
    t.hat_den.push_back(h.least_term().mono);
  }
  return t;
}

json identities_to_json(const IdentityReport& r) {
  json ids = json::array();
  for (const auto& t : r.identities)
    ids.push_back({{"name", t.name}, {"checked", t.checked}, {"failed", t.failed}, {"first_failure", t.first_failure}});
  return {{"ok", r.ok()}, {"checked", r.checked()}, {"failed", r.failed()}, {"identities", ids}};
}

json main_check_to_json(const MainTheoremCheck& m) {
  return {{"ok", m.ok()},
          {"seeds_checked", m.seeds_checked},
          {"edges_checked", m.edges_checked},
          {"collections_expected", m.collections_expected},
          {"mismatches", m.mismatches}};
}

json chain_to_json(const ChainReport& r) {
  json failures = json::array();
  for (const auto& rel : r.relations)
    if (!rel.ok)
      failures.push_back({{"seed", rel.seed}, {"vertex", rel.vertex}, {"special", rel.special}, {"detail", rel.detail}});
  return {{"ok", r.ok()},
          {"seeds", r.seeds},
          {"relations", r.relations.size()},
          {"ambiguous", r.ambiguous},
          {"failures", failures}};
}

json conjecture_to_json(const ConjectureReport& r) {
  json failures = json::array();
  for (const auto& w : r.failures) {
    failures.push_back({{"graph", graph_to_json(w.graph)},
                        {"base", collection_to_json(w.base)},
                        {"path", w.path},
                        {"position", w.position},
                        {"variable", w.variable},
                        {"value", render(w.value)},
                        {"detail", w.detail}});
  }
  json out = {{"conjecture", r.id},
              {"ok", r.ok()},
              {"instances", r.instances},
              {"failures", failures},
              {"runtime_ms", r.runtime_ms}};
  if (r.id == "cluster-monomials") {
    json deg = json::array();
    for (const auto& d : r.by_degree) deg.push_back({{"degree", d.degree}, {"monomials", d.monomials}, {"rank", d.rank}});
    out["monomials"] = r.monomials;
    out["rank"] = r.rank;
    out["by_degree"] = deg;
  }
  return out;
}

json frozen_to_json(const FrozenAlgebra& f) {
  json seeds = json::array();
  for (std::size_t k = 0; k < f.seed_index.size(); ++k)
    seeds.push_back({{"seed", f.seed_index[k]},
                     {"cluster", set_list(f.clusters[k])},
                     {"directions", f.free_directions[k]},
                     {"neighbors", f.neighbor[k]}});
  return {{"frozen", set_list(f.frozen)},
          {"rank", f.rank},
          {"seeds", seeds},
          {"no_external_variables", f.no_external_variables},
          {"complex_matches_nested", f.complex_matches_nested}};
}

json exchange_graph_json(const GraphLPAlgebra& a) {
  json nodes = json::array(), edges = json::array();
  for (std::size_t u = 0; u < a.seeds.size(); ++u) {
    const auto& s = a.seeds[u];
    nodes.push_back({{"id", u},
                     {"collection", collection_to_json(s.collection)},
                     {"cluster", names_json(collection_symbols(s.collection))}});
    for (int d = 1; d <= a.graph.n(); ++d) {
      const int v = s.edges[d - 1].target;
      if (v < 0 || v <= static_cast<int>(u)) continue;
      int back = 0;
      for (int e = 1; e <= a.graph.n(); ++e)
        if (a.seeds[v].edges[e - 1].target == static_cast<int>(u)) back = e;
      edges.push_back({{"from", u}, {"to", v}, {"direction", d}, {"back", back}});
    }
  }
  return {{"graph", graph_to_json(a.graph)}, {"complete", a.complete}, {"nodes", nodes}, {"edges", edges}};
}

std::string exchange_graph_dot(const GraphLPAlgebra& a) {
  std::ostringstream out;
  out << "graph exchange {\n";
  for (std::size_t u = 0; u < a.seeds.size(); ++u)
    out << "  s" << u << " [label=\"" << a.seeds[u].collection.to_string() << "\"];\n";
  for (std::size_t u = 0; u < a.seeds.size(); ++u)
    for (int d = 1; d <= a.graph.n(); ++d) {
      const int v = a.seeds[u].edges[d - 1].target;
      if (v > static_cast<int>(u)) out << "  s" << u << " -- s" << v << " [label=\"" << d << "\"];\n";
    }
  out << "}\n";
  return out.str();
}

}  // namespace lpgraph
