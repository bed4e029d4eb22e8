// One PASS/FAIL line per acceptance criterion; exit status 1 when any fails.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "fixtures.hpp"
#include "lpgraph/conjectures.hpp"
#include "lpgraph/graphlp.hpp"
#include "lpgraph/parallel.hpp"

using namespace lpgraph;
using fixtures::fig1;
using fixtures::P;

namespace {

// Wall-clock limits in milliseconds; zero means no limit.
constexpr double kFig1LimitMs = 10'000;
constexpr double kY124LimitMs = 1'000;
constexpr double kIdentityLimitMs = 300'000;
constexpr double kNoLimit = 0;

constexpr int kRandomIdentityGraphs = 50;
constexpr int kRandomMainGraphs = 200;

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (cond) return;
    if (ok) detail = what;
    ok = false;
  }
};

int threads() { return std::max(1u, std::thread::hardware_concurrency()); }

bool unit_equal(const LaurentPoly& a, const LaurentPoly& b) { return a == b || a == -b; }

std::string first(const std::vector<std::string>& v) { return v.empty() ? std::string() : v.front(); }

std::set<Var> var_set(const std::vector<Var>& v) { return {v.begin(), v.end()}; }

Var Y(VertexSet s) { return Var::Y(s); }

Outcome fig1_algebra() {
  Outcome o;
  const Digraph g = fig1();
  const auto sc = strongly_connected_subsets(g);
  o.require(sc.subsets.size() == 11, "strongly connected subsets: " + std::to_string(sc.subsets.size()));
  std::set<VertexSet> non_sc;
  for_each_subset(g.vertices(), [&](VertexSet s) {
    if (!s.empty() && !is_strongly_connected(g, s)) non_sc.insert(s);
  });
  o.require(non_sc == std::set<VertexSet>{{1, 4}, {2, 4}, {3, 4}, {1, 3, 4}}, "non strongly connected subsets differ");

  BuildOptions opt;
  opt.threads = threads();
  const GraphLPAlgebra a = build_algebra(g, opt);
  o.require(a.complete, "search incomplete");
  o.require(a.main.ok(), "main check: " + first(a.main.mismatches));
  o.require(a.seeds.size() == 46, "seeds: " + std::to_string(a.seeds.size()));
  const std::set<Var> printed = {Var::X(1), Var::X(2), Var::X(3), Var::X(4), Y({1}),       Y({2}),
                                 Y({3}),    Y({4}),    Y({1, 2}), Y({2, 3}), Y({1, 3}),    Y({1, 2, 3}),
                                 Y({1, 2, 4}), Y({2, 3, 4}), Y({1, 2, 3, 4})};
  o.require(var_set(a.variables) == printed, "cluster variables differ from the printed list");

  std::set<std::set<Var>> clusters;
  for (const auto& s : a.seeds) clusters.insert(var_set(collection_symbols(s.collection)));
  const std::vector<std::set<Var>> shown = {
      {Var::X(1), Var::X(2), Var::X(3), Var::X(4)},
      {Var::X(1), Y({2}), Var::X(3), Var::X(4)},
      {Var::X(1), Y({2}), Var::X(3), Y({4})},
      {Y({1, 2, 4}), Y({2}), Var::X(3), Y({4})},
      {Y({1, 2, 4}), Y({2}), Y({1, 2, 3, 4}), Y({4})},
  };
  for (const auto& c : shown) o.require(clusters.count(c) == 1, "a printed cluster is missing");
  o.detail = o.ok ? "46 seeds, 15 variables, 11 strongly connected subsets" : o.detail;
  return o;
}

Outcome y124() {
  Outcome o;
  const Digraph g = fig1();
  const LaurentPoly printed = P("(X1*(X2*(X3+A1)+A4*(X3+X4+A1)) + (X2+A4)*(X2+X3+X4+A1)*(X3+A2))/(X1*X2*X4)");
  o.require(y_by_enumeration(g, {1, 2, 4}) == printed, "enumeration differs from the printed formula");
  o.require(y_by_determinant(g, {1, 2, 4}) == printed, "principal minor differs from the printed formula");
  return o;
}

Outcome identity_suite() {
  Outcome o;
  std::vector<Digraph> graphs{fig1()};
  for (int k = 0; k < kRandomIdentityGraphs; ++k)
    graphs.push_back(fixtures::random_digraph(2 + k % 4, 0.3 + 0.1 * (k % 5), 1000 + k));
  std::vector<IdentityReport> reports(graphs.size());
  parallel_for(graphs.size(), threads(), [&](std::size_t k) { reports[k] = verify_identities(graphs[k]); });
  std::size_t checked = 0;
  for (std::size_t k = 0; k < graphs.size(); ++k) {
    checked += reports[k].checked();
    o.require(reports[k].ok(), "graph " + std::to_string(k) + ": " + reports[k].to_string());
  }
  if (o.ok) o.detail = std::to_string(graphs.size()) + " graphs, " + std::to_string(checked) + " instances";
  return o;
}

Outcome main_theorem() {
  Outcome o;
  std::vector<Digraph> graphs;
  for (int n = 1; n <= 3; ++n)
    for (const Digraph& g : fixtures::all_digraphs(n)) graphs.push_back(g);
  o.require(graphs.size() == 69, "digraphs with n <= 3: " + std::to_string(graphs.size()));
  for (int k = 0; k < kRandomMainGraphs; ++k) graphs.push_back(fixtures::random_digraph(4, 0.5, 2000 + k));
  std::vector<std::string> problems(graphs.size());
  parallel_for(graphs.size(), threads(), [&](std::size_t k) {
    const GraphLPAlgebra a = build_algebra(graphs[k]);
    if (!a.complete) problems[k] = "incomplete";
    else if (!a.main.ok()) problems[k] = first(a.main.mismatches);
  });
  for (std::size_t k = 0; k < graphs.size(); ++k)
    o.require(problems[k].empty(), "graph " + std::to_string(k) + ": " + problems[k]);
  if (o.ok) o.detail = std::to_string(graphs.size()) + " graphs";
  return o;
}

Outcome worked_seed() {
  Outcome o;
  const Digraph g = fig1();
  Seed t = initial_seed(g);
  for (int s : {1, 2, 3}) t = mutate(t, s);
  YCache cache(g);
  const VariableInventory inv = variable_inventory(g, cache);
  const auto names = name_seed(g, inv, t);
  if (!names) return {false, "replayed seed cannot be named"};
  o.require(names->names == std::vector<Var>{Y({1}), Y({1, 2}), Y({1, 2, 3}), Var::X(4)}, "cluster differs");
  auto named = [&](const LaurentPoly& p) { return name_symbols(p, names->names); };
  o.require(unit_equal(named(t.exchange[0]), P("1+Y12")), "F1");
  o.require(unit_equal(named(t.exchange[1]), P("1+Y1^2+Y1*(2+Y123)")), "F2");
  o.require(unit_equal(named(t.exchange[2]), P("X4*(1+Y1)*(1+Y12)+A1*(1+Y1+Y12)+A2*Y1*(1+Y1)+A3*Y1*Y12")), "F3");
  o.require(unit_equal(named(t.exchange[3]), P("A1*(1+Y12+Y1^2+Y1*(2+Y123)+Y1*Y12)+A2*(Y1^3+Y1^2*(2+Y123)+Y1)"
                                               "+A3*(Y1^2*Y12+Y1*Y12)+A4*Y1*Y12*Y123")),
            "F4");
  o.require(t.hat_den[2] == Monomial::of(Var::Z(1)), "hat denominator of F3 is not Y1");
  o.require(t.hat_den[3] == Monomial::of(Var::Z(1)) * Monomial::of(Var::Z(2)), "hat denominator of F4 is not Y1 Y12");
  for (int i : {3, 4}) o.require(hat_f(t, i).times(t.hat_den[i - 1]) == t.exchange[i - 1], "hatF" + std::to_string(i));
  // path forms, grounded through the enumeration
  const LaurentPoly hat3 = ground_y_symbols(P("X4*(Y12+Y2+1)+A1*(1+Y2)+A2*(1+Y1)+A3*Y12"), cache);
  const LaurentPoly hat4 = ground_y_symbols(P("A1*(Y3+1)+A2*Y13+A3*(Y1+1)+A4*Y123"), cache);
  o.require(unit_equal(ground(t, hat_f(t, 3)), hat3), "hatF3 path form");
  o.require(unit_equal(ground(t, hat_f(t, 4)), hat4), "hatF4 path form");
  return o;
}

std::string first_failure(const ChainReport& r) {
  for (const auto& rel : r.relations)
    if (!rel.ok) return rel.detail;
  return r.relations.empty() ? "no relations" : "";
}

Outcome closed_forms() {
  Outcome o;
  std::size_t relations = 0;
  for (int n = 2; n <= 6; ++n) {
    const ChainReport r = path_exchange_check(n, threads());
    relations += r.relations.size();
    o.require(r.ok(), "P" + std::to_string(n) + ": " + first_failure(r));
  }
  for (int n = 3; n <= 6; ++n) {
    const ChainReport r = cycle_exchange_check(n, threads());
    relations += r.relations.size();
    std::size_t special = 0;
    for (const auto& rel : r.relations) special += rel.special;
    o.require(r.ok(), "C" + std::to_string(n) + ": " + first_failure(r));
    o.require(special > 0, "C" + std::to_string(n) + ": the special case never occurred");
  }

  const Digraph c4 = Digraph::cycle(4);
  const auto m = MaximalNestedCollection::from_sets(c4, {{1}, {1, 4}, {1, 3, 4}, {1, 2, 3, 4}});
  const Seed t = seed_for_collection(c4, m);
  const auto sym = collection_symbols(m);
  o.require(unit_equal(name_symbols(t.exchange[2], sym), P("(1+Y14)^2+Y1234*Y14")), "C4 seed F3");
  o.require(unit_equal(name_symbols(t.exchange[3], sym), P("Y134+Y1")), "C4 seed F4");
  o.require(unit_equal(name_symbols(t.exchange[0], sym), P("1+Y14")), "C4 seed F1");

  const CompleteGraphSeed k = complete_graph_seed(4, {2, 4, 1});
  o.require(k.matches, "K4 (2,4,1): " + k.detail);
  o.require(k.exchange_named[1] == P("1+Y24"), "K4 (2,4,1) F2");
  o.require(k.exchange_named[3] == P("(1+Y2)^2+Y124*Y2"), "K4 (2,4,1) F4");
  o.require(k.exchange_named[0] == P("A1*Y24*Y2 + A4*Y2*(1+Y2) + A2*(1+Y2+Y24) + X3*(1+Y2)*(1+Y2+Y24)"),
            "K4 (2,4,1) F1");
  o.require(k.exchange_named[2] == P("A3*Y124*Y24*Y2^2 + A1*Y24*Y2*(1+Y2)*(1+Y2+Y24)"
                                     " + A4*Y2*(1+Y2)*((1+Y2)*(1+Y2+Y24)+Y124*Y2)"
                                     " + A2*(1+Y2+Y24)*((1+Y2)*(1+Y2+Y24)+Y124*Y2)"),
            "K4 (2,4,1) F3");

  std::size_t sequences = 0;
  for (int n = 1; n <= 4; ++n) {
    std::vector<std::vector<int>> all;
    std::vector<int> seq;
    std::function<void()> rec = [&] {
      if (!seq.empty()) all.push_back(seq);
      for (int v = 1; v <= n; ++v)
        if (std::find(seq.begin(), seq.end(), v) == seq.end()) {
          seq.push_back(v);
          rec();
          seq.pop_back();
        }
    };
    rec();
    std::vector<std::string> bad(all.size());
    parallel_for(all.size(), threads(), [&](std::size_t i) {
      const auto r = complete_graph_seed(n, all[i]);
      if (!r.matches) bad[i] = "K" + std::to_string(n) + ": " + r.detail;
    });
    for (const auto& b : bad) o.require(b.empty(), b);
    sequences += all.size();
  }
  o.require(sequences == 1 + 4 + 15 + 64, "activation sequences: " + std::to_string(sequences));
  if (o.ok) o.detail = std::to_string(relations) + " chain relations, " + std::to_string(sequences) + " K_n seeds";
  return o;
}

Outcome frozen() {
  Outcome o;
  const FrozenAlgebra p3 = freeze(build_algebra(Digraph::path(3)));
  bool cycle5 = p3.seed_index.size() == 5;
  for (const auto& nb : p3.neighbor) cycle5 = cycle5 && nb.size() == 2 && nb[0] >= 0 && nb[1] >= 0 && nb[0] != nb[1];
  if (cycle5) {
    // 2-regular on five vertices and connected
    std::set<int> reach{0};
    std::vector<int> stack{0};
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int v : p3.neighbor[u])
        if (reach.insert(v).second) stack.push_back(v);
    }
    cycle5 = reach.size() == 5;
  }
  o.require(cycle5, "P3 frozen exchange graph is not a 5-cycle");

  std::vector<std::pair<std::string, Digraph>> graphs = {{"fig1", fig1()}};
  for (int n = 2; n <= 5; ++n) graphs.emplace_back("P" + std::to_string(n), Digraph::path(n));
  for (int n = 3; n <= 5; ++n) graphs.emplace_back("C" + std::to_string(n), Digraph::cycle(n));
  for (int n = 3; n <= 4; ++n) graphs.emplace_back("K" + std::to_string(n), Digraph::complete(n));
  for (std::uint64_t s = 0; s < 4; ++s) graphs.emplace_back("random4-" + std::to_string(s), fixtures::random_digraph(4, 0.5, 3000 + s));
  for (std::uint64_t s = 0; s < 3; ++s) graphs.emplace_back("random5-" + std::to_string(s), fixtures::random_digraph(5, 0.35, 4000 + s));
  std::vector<std::string> bad(graphs.size());
  parallel_for(graphs.size(), threads(), [&](std::size_t k) {
    const GraphLPAlgebra a = build_algebra(graphs[k].second);
    const FrozenAlgebra f = freeze(a);
    if (!a.complete || !f.complex_matches_nested || !f.no_external_variables) bad[k] = graphs[k].first;
  });
  for (const auto& b : bad) o.require(b.empty(), "cluster complex differs from the nested complex on " + b);
  if (o.ok) o.detail = std::to_string(graphs.size()) + " graphs";
  return o;
}

Outcome positivity() {
  Outcome o;
  BuildOptions opt;
  opt.threads = threads();
  const GraphLPAlgebra a = build_algebra(fig1(), opt);
  const ConjectureReport r = check_positivity(a, threads());
  o.require(r.instances == 46 * 4 + 46 * 15, "instances: " + std::to_string(r.instances));
  if (!r.failures.empty()) {
    const auto& w = r.failures.front();
    o.require(false, "witness in " + w.base.to_string() + ", " + w.variable + ": " + w.detail);
  }
  if (o.ok) o.detail = std::to_string(r.instances) + " expansions";
  return o;
}

LaurentPoly random_poly(std::mt19937_64& rng, int terms) {
  std::uniform_int_distribution<int> coeff(-5, 5), exp(-1, 2), var(1, 2);
  std::vector<LaurentPoly::Term> ts;
  for (int t = 0; t < terms; ++t) {
    std::vector<VarPow> f;
    for (int v = 1; v <= 2; ++v) f.push_back({Var::X(v), exp(rng)});
    f.push_back({Var::A(1), std::max(0, exp(rng))});
    const int c = coeff(rng);
    ts.push_back({Monomial::from_pairs(f), c == 0 ? 1 : c});
  }
  return LaurentPoly::from_terms(ts);
}

Outcome properties() {
  Outcome o;
  // mutation is an involution and moves the seed
  for (std::uint64_t s = 1; s <= 6; ++s) {
    const Digraph g = fixtures::random_digraph(4, 0.5, s);
    std::mt19937_64 rng(s);
    Seed t = initial_seed(g);
    for (int step = 0; step < 8; ++step) {
      const int i = 1 + static_cast<int>(rng() % 4);
      const Seed u = mutate(t, i);
      o.require(validate_seed(u).ok, "invalid seed after mutation");
      o.require(seeds_equivalent(mutate(u, i), t), "mutation is not an involution");
      o.require(!seeds_equivalent(u, t), "mutation fixed a seed");
      t = u;
    }
  }

  // equivalence under sign changes is symmetric and transitive
  Seed t = initial_seed(fig1());
  for (int d : {2, 4}) t = mutate(t, d);
  Seed neg = t;
  neg.exchange[1] = -neg.exchange[1];
  Seed flip = t;
  flip.vars[0] = -flip.vars[0];
  for (auto& f : flip.exchange) f = f.evaluate({{Var::Z(1), -LaurentPoly::var(Var::Z(1))}});
  o.require(seeds_equivalent(t, neg) && seeds_equivalent(neg, t), "equivalence is not symmetric");
  o.require(seeds_equivalent(t, flip) && seeds_equivalent(flip, neg) && seeds_equivalent(neg, flip),
            "equivalence is not transitive");
  o.require(!seeds_equivalent(t, mutate(t, 3)), "distinct seeds are equivalent");

  // den is additive for an irreducible Q; the expected value is built in
  std::mt19937_64 rng(7);
  const Var z = Var::Z(1);
  const LaurentPoly q = P("1+Z2+A1");
  for (int trial = 0; trial < 40; ++trial) {
    auto make = [&](int& expected) {
      const int k = static_cast<int>(rng() % 3), e = static_cast<int>(rng() % 3);
      // z^k q^e (1 + z q): the second factor is not divisible by q
      expected = k + e;
      return LaurentPoly::var(z).pow(k) * q.pow(e) * (LaurentPoly(1) + LaurentPoly::var(z) * q);
    };
    int ea = 0, eb = 0;
    const LaurentPoly a = make(ea), b = make(eb);
    o.require(den(a, z, q) == ea && den(b, z, q) == eb, "den of a constructed polynomial");
    o.require(den(a * b, z, q) == den(a, z, q) + den(b, z, q), "den is not additive");
  }

  // exact division undoes multiplication
  std::mt19937_64 drng(11);
  for (int it = 0; it < 60; ++it) {
    const LaurentPoly a = random_poly(drng, 1 + it % 6), b = random_poly(drng, 1 + it % 4);
    const auto back = exact_divide(a * b, b);
    o.require(back && *back == a, "exact division round trip");
  }
  o.require(!exact_divide(LaurentPoly(3), LaurentPoly(2)), "3/2 divided exactly over Z");
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double limit_ms;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"fig1-algebra", kFig1LimitMs, fig1_algebra},
      {"y124", kY124LimitMs, y124},
      {"identity-suite", kIdentityLimitMs, identity_suite},
      {"main-theorem", kNoLimit, main_theorem},
      {"worked-seed", kNoLimit, worked_seed},
      {"closed-forms", kNoLimit, closed_forms},
      {"frozen-algebras", kNoLimit, frozen},
      {"positivity", kNoLimit, positivity},
      {"property-suites", kNoLimit, properties},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (o.ok && c.limit_ms > 0 && ms > c.limit_ms) o = {false, "over the time limit of " + std::to_string(c.limit_ms) + " ms"};
    failed += !o.ok;
    std::printf("%s %s (%.0f ms) %s\n", o.ok ? "PASS" : "FAIL", c.name, ms, o.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
