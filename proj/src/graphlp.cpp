#include "lpgraph/graphlp.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <mutex>
#include <set>

#include "lpgraph/parallel.hpp"

namespace lpgraph {

namespace {

LaurentPoly ysym(VertexSet s) { return s.empty() ? LaurentPoly(1) : LaurentPoly::var(Var::Y(s)); }

std::map<Var, Var> to_positions(const std::vector<Var>& symbols) {
  std::map<Var, Var> m;
  for (std::size_t k = 0; k < symbols.size(); ++k) m.emplace(symbols[k], zsym(static_cast<int>(k) + 1));
  return m;
}

bool unit_equal(const LaurentPoly& a, const LaurentPoly& b) { return a == b || a == -b; }

// Divides by a denominator that must be +-1 times a monomial.
LaurentPoly over_monomial(const LaurentPoly& num, const LaurentPoly& den, const char* what) {
  if (!den.is_unit()) throw Error(ErrorKind::Internal, std::string(what) + ": denominator " + render(den) + " is not a monomial");
  const LaurentPoly q = num.times(den.least_term().mono.inverse());
  return den.least_term().coeff < 0 ? -q : q;
}

struct Exploration {
  std::vector<AlgebraSeed> seeds;
  std::vector<std::string> mismatches;
  std::size_t edges_checked = 0;
  bool complete = true;
};

// BFS by mutation along the allowed directions, seeds kept in collection
// indexing. Each edge is checked against mutate_collection.
Exploration explore(const Digraph& g, const VariableInventory& inv, const Seed& start,
                    const std::function<bool(const MaximalNestedCollection&, int)>& allowed, std::size_t budget) {
  Exploration ex;
  std::string why;
  const auto named = name_seed(g, inv, start, &why);
  if (!named) {
    ex.mismatches.push_back("start seed: " + why);
    return ex;
  }
  std::unordered_map<MaximalNestedCollection, int, CollectionHash> index;
  ex.seeds.push_back({named->collection, permute_positions(start, named->label), {}});
  index.emplace(named->collection, 0);
  const int n = g.n();
  for (std::size_t u = 0; u < ex.seeds.size(); ++u) {
    ex.seeds[u].edges.assign(n, {});
    for (int s = 1; s <= n; ++s) {
      const MaximalNestedCollection& m = ex.seeds[u].collection;
      if (!allowed(m, s)) continue;
      const std::string where = m.to_string() + " at " + std::to_string(s);
      Seed t;
      try {
        t = mutate(ex.seeds[u].seed, s);
      } catch (const Error& e) {
        ex.mismatches.push_back(where + ": mutation failed: " + e.what());
        continue;
      }
      const auto nm = name_seed(g, inv, t, &why);
      if (!nm) {
        ex.mismatches.push_back(where + ": " + why);
        continue;
      }
      ++ex.edges_checked;
      const MaximalNestedCollection expected = mutate_collection(g, m, s);
      if (!(nm->collection == expected))
        ex.mismatches.push_back(where + ": reached " + nm->collection.to_string() + ", expected " + expected.to_string());
      Seed placed = permute_positions(t, nm->label);
      auto it = index.find(nm->collection);
      int target;
      if (it != index.end()) {
        target = it->second;
        if (!seeds_equivalent(placed, ex.seeds[target].seed))
          ex.mismatches.push_back(where + ": inequivalent seeds for " + nm->collection.to_string());
      } else if (ex.seeds.size() >= budget) {
        ex.complete = false;
        continue;
      } else {
        target = static_cast<int>(ex.seeds.size());
        index.emplace(nm->collection, target);
        ex.seeds.push_back({nm->collection, std::move(placed), {}});
      }
      ex.seeds[u].edges[s - 1] = {target, nm->label};
    }
  }
  return ex;
}

}  // namespace

Seed initial_seed(const Digraph& g) {
  std::vector<LaurentPoly> vars, F;
  for (int i = 1; i <= g.n(); ++i) {
    vars.push_back(LaurentPoly::var(Var::X(i)));
    LaurentPoly f = LaurentPoly::var(Var::A(i));
    g.successors(i).for_each([&](int j) { f += LaurentPoly::var(zsym(j)); });
    F.push_back(f);
  }
  return make_seed(std::move(vars), std::move(F));
}

std::vector<Var> collection_symbols(const MaximalNestedCollection& m) {
  std::vector<Var> out;
  for (int i = 1; i <= m.n(); ++i) out.push_back(m.support().contains(i) ? Var::Y(m.set_of(i)) : Var::X(i));
  return out;
}

LaurentPoly direct_hat(const Digraph& g, const MaximalNestedCollection& m, int i, CollectionExpressor& ex) {
  const VertexSet S = m.support();
  if (!S.contains(i) || m.is_maximal(i)) {
    const VertexSet Si = S.with(i);
    LaurentPoly num;
    for (int j = 1; j <= g.n(); ++j) {
      const LaurentPoly p = ex.p(S, i, j);
      if (p.is_zero()) continue;
      num += p * LaurentPoly::var(Si.contains(j) ? Var::A(j) : Var::X(j));
    }
    return over_monomial(num, ex.y(ominus(g, S, i)), "external hatF");
  }
  const int j = m.plus(i);
  const VertexSet R = m.set_of(j).without(i).without(j);
  const LaurentPoly num = ex.y(m.set_of(j)) * ex.y(R) + ex.p(R, i, j) * ex.p(R, j, i);
  return over_monomial(num, ex.y(ominus(g, R, i)) * ex.y(ominus(g, R, j)), "internal hatF");
}

DirectSeed direct_seed(const Digraph& g, const MaximalNestedCollection& m, YCache& cache) {
  CollectionExpressor ex(g, m);
  const std::vector<Var> symbols = collection_symbols(m);
  const auto pos = to_positions(symbols);
  DirectSeed out;
  std::vector<LaurentPoly> vars, F;
  for (int i = 1; i <= g.n(); ++i) {
    vars.push_back(symbols[i - 1].tag() == VarTag::X ? LaurentPoly::var(symbols[i - 1]) : cache.y(symbols[i - 1].y_set()));
    const LaurentPoly h = direct_hat(g, m, i, ex).rename(pos);
    for (Var v : h.variables())
      if (v.tag() != VarTag::Z && v.tag() != VarTag::A)
        throw Error(ErrorKind::Internal, "hatF" + std::to_string(i) + " of " + m.to_string() + " involves " + v.name());
    out.hat.push_back(h);
    F.push_back(without_z_content(h).normalized_sign());
  }
  out.seed = make_seed(std::move(vars), std::move(F));
  for (int i = 1; i <= g.n(); ++i) out.hat_matches_den &= unit_equal(hat_f(out.seed, i), out.hat[i - 1]);
  return out;
}

Seed permute_positions(const Seed& t, const std::vector<int>& perm) {
  const int n = t.n();
  std::map<Var, Var> ren;
  for (int p = 1; p <= n; ++p) ren.emplace(zsym(p), zsym(perm[p - 1]));
  Seed out;
  out.vars.resize(n);
  out.exchange.resize(n);
  out.hat_den.resize(n);
  for (int p = 1; p <= n; ++p) {
    const int q = perm[p - 1];
    out.vars[q - 1] = t.vars[p - 1];
    out.exchange[q - 1] = t.exchange[p - 1].rename(ren);
    std::vector<VarPow> f;
    for (const auto& vp : t.hat_den[p - 1].factors()) f.push_back({ren.at(vp.var), vp.exp});
    out.hat_den[q - 1] = Monomial::from_pairs(std::move(f));
  }
  return out;
}

VariableInventory variable_inventory(const Digraph& g, YCache& cache) {
  VariableInventory inv;
  auto add = [&](Var v, LaurentPoly value) {
    inv.by_value.emplace(value, v);
    inv.value.emplace(v, std::move(value));
  };
  for (int i = 1; i <= g.n(); ++i) add(Var::X(i), LaurentPoly::var(Var::X(i)));
  for (VertexSet I : strongly_connected_subsets(g).subsets) add(Var::Y(I), cache.y(I));
  return inv;
}

std::optional<SeedNames> name_seed(const Digraph& g, const VariableInventory& inv, const Seed& t, std::string* why) {
  auto fail = [&](std::string msg) -> std::optional<SeedNames> {
    if (why) *why = std::move(msg);
    return std::nullopt;
  };
  SeedNames out;
  std::vector<VertexSet> sets;
  for (int p = 1; p <= t.n(); ++p) {
    auto it = inv.by_value.find(t.vars[p - 1]);
    if (it == inv.by_value.end())
      return fail("position " + std::to_string(p) + " holds " + render(t.vars[p - 1]) + ", not an X or Y variable");
    out.names.push_back(it->second);
    if (it->second.tag() == VarTag::Y) sets.push_back(it->second.y_set());
  }
  try {
    out.collection = MaximalNestedCollection::from_sets(g, sets);
  } catch (const Error& e) {
    return fail(std::string("cluster is not a maximal nested collection: ") + e.what());
  }
  std::vector<bool> seen(t.n() + 1, false);
  for (Var v : out.names) {
    const int k = v.tag() == VarTag::X ? static_cast<int>(v.index()) : out.collection.vertex_of(v.y_set());
    if (k < 1 || k > t.n() || seen[k] || (v.tag() == VarTag::X && out.collection.support().contains(k)))
      return fail("cluster variables do not match the collection indexing");
    seen[k] = true;
    out.label.push_back(k);
  }
  return out;
}

int GraphLPAlgebra::index_of(const MaximalNestedCollection& m) const {
  for (std::size_t k = 0; k < seeds.size(); ++k)
    if (seeds[k].collection == m) return static_cast<int>(k);
  return -1;
}

GraphLPAlgebra build_algebra(const Digraph& g, const BuildOptions& opt) {
  if (g.n() > opt.cap)
    throw Error(ErrorKind::ResourceLimit, "graph has " + std::to_string(g.n()) + " vertices, cap is " + std::to_string(opt.cap));
  GraphLPAlgebra a;
  a.graph = g;
  a.cache = std::make_shared<YCache>(g);
  const VariableInventory inv = variable_inventory(g, *a.cache);
  Exploration ex = explore(g, inv, initial_seed(g), [](const MaximalNestedCollection&, int) { return true; }, opt.budget);
  a.seeds = std::move(ex.seeds);
  a.complete = ex.complete;
  a.main.mismatches = std::move(ex.mismatches);
  a.main.edges_checked = ex.edges_checked;

  std::set<Var> vars;
  for (const auto& s : a.seeds)
    for (Var v : collection_symbols(s.collection)) vars.insert(v);
  a.variables.assign(vars.begin(), vars.end());

  if (a.complete) {
    const auto all = enumerate_maximal_collections(g, opt.cap);
    a.main.collections_expected = all.size();
    if (all.size() != a.seeds.size())
      a.main.mismatches.push_back(std::to_string(a.seeds.size()) + " seeds, " + std::to_string(all.size()) + " collections");
    std::unordered_map<MaximalNestedCollection, int, CollectionHash> have;
    for (std::size_t k = 0; k < a.seeds.size(); ++k) have.emplace(a.seeds[k].collection, static_cast<int>(k));
    for (const auto& m : all)
      if (!have.count(m)) a.main.mismatches.push_back("no seed for " + m.to_string());
    const std::size_t expected_vars = g.n() + strongly_connected_subsets(g).subsets.size();
    if (vars.size() != expected_vars)
      a.main.mismatches.push_back(std::to_string(vars.size()) + " cluster variables, expected " + std::to_string(expected_vars));
  }

  if (opt.cross_check) {
    std::mutex mu;
    parallel_for(a.seeds.size(), opt.threads, [&](std::size_t k) {
      const auto& s = a.seeds[k];
      std::string problem;
      try {
        const DirectSeed d = direct_seed(g, s.collection, *a.cache);
        if (!seeds_equivalent(d.seed, s.seed)) problem = "mutated seed differs from the direct seed";
        else if (!d.hat_matches_den) problem = "closed-form hatF differs from the den formula";
      } catch (const Error& e) {
        problem = std::string("direct construction failed: ") + e.what();
      }
      std::lock_guard lock(mu);
      ++a.main.seeds_checked;
      if (!problem.empty()) a.main.mismatches.push_back(s.collection.to_string() + ": " + problem);
    });
  }
  return a;
}

FrozenAlgebra freeze(const GraphLPAlgebra& a) {
  const Digraph& g = a.graph;
  FrozenAlgebra f;
  f.frozen = strongly_connected_subsets(g).components;
  f.rank = g.n() - static_cast<int>(f.frozen.size());
  std::vector<int> local(a.seeds.size(), -1);
  for (std::size_t k = 0; k < a.seeds.size(); ++k) {
    const auto& m = a.seeds[k].collection;
    if (std::all_of(f.frozen.begin(), f.frozen.end(), [&](VertexSet c) { return m.contains(c); })) {
      local[k] = static_cast<int>(f.seed_index.size());
      f.seed_index.push_back(static_cast<int>(k));
    }
  }
  using Facet = std::vector<std::uint64_t>;
  std::set<Facet> clusters;
  for (int k : f.seed_index) {
    const auto& s = a.seeds[k];
    const auto& m = s.collection;
    f.no_external_variables &= m.support() == g.vertices();
    std::vector<int> dirs, nb;
    std::vector<VertexSet> cl;
    for (int i = 1; i <= g.n(); ++i) {
      const VertexSet S = m.set_of(i);
      if (std::find(f.frozen.begin(), f.frozen.end(), S) != f.frozen.end()) continue;
      dirs.push_back(i);
      cl.push_back(S);
      const int t = s.edges[i - 1].target;
      nb.push_back(t < 0 ? -1 : local[t]);
    }
    f.free_directions.push_back(std::move(dirs));
    f.neighbor.push_back(std::move(nb));
    Facet key;
    for (VertexSet S : cl) key.push_back(S.mask());
    std::sort(key.begin(), key.end());
    clusters.insert(key);
    f.clusters.push_back(std::move(cl));
  }
  std::set<Facet> facets;
  for (const auto& face : nested_complexes(g).nested_facets) {
    Facet key;
    for (VertexSet S : face) key.push_back(S.mask());
    std::sort(key.begin(), key.end());
    facets.insert(key);
  }
  f.complex_matches_nested = a.complete && clusters == facets && clusters.size() == f.seed_index.size();
  return f;
}

std::size_t ChainReport::failed() const {
  return static_cast<std::size_t>(std::count_if(relations.begin(), relations.end(), [](const ChainRelation& r) { return !r.ok; }));
}

ChainReport chain_exchange_check(const Digraph& g, bool cyclic, int threads) {
  const int n = g.n();
  const VertexSet all = g.vertices();
  YCache cache(g);
  const VariableInventory inv = variable_inventory(g, cache);
  std::vector<int> order;
  for (int i = 1; i <= n; ++i) order.push_back(i);
  Seed start = initial_seed(g);
  for (int s : order) start = mutate(start, s);
  // explore the frozen algebra: the owner of [n] never moves
  Exploration ex = explore(
      g, inv, start, [&](const MaximalNestedCollection& m, int s) { return m.set_of(s) != all; }, 100000);
  ChainReport rep;
  rep.seeds = ex.seeds.size();
  for (const auto& msg : ex.mismatches) rep.relations.push_back({0, 0, {}, {}, {}, false, false, false, msg});

  std::vector<std::vector<ChainRelation>> per_seed(ex.seeds.size());
  parallel_for(ex.seeds.size(), threads, [&](std::size_t k) {
    const auto& m = ex.seeds[k].collection;
    const Seed& t = ex.seeds[k].seed;
    const auto symbols = collection_symbols(m);
    for (int i = 1; i <= n; ++i) {
      if (m.set_of(i) == all) continue;
      ChainRelation r;
      r.seed = static_cast<int>(k);
      r.vertex = i;
      const int j = m.plus(i);
      const VertexSet Si = m.set_of(i), Sj = m.set_of(j);
      std::vector<VertexSet> children;
      Si.for_each([&](int c) {
        if (m.plus(c) == i) children.push_back(m.set_of(c));
      });
      auto touches_j = [&](VertexSet C) {
        bool hit = false;
        C.for_each([&](int c) { hit |= g.has_edge(j, c) || g.has_edge(c, j); });
        return hit;
      };
      std::vector<VertexSet> near, far;
      for (VertexSet C : children) (touches_j(C) ? near : far).push_back(C);
      r.special = cyclic && Sj == all;
      if (near.size() > 1 && !r.special) r.ambiguous = true;
      if (children.size() > 2 || (near.size() > 1 && !r.special) || far.size() > 1) {
        r.detail = "S_i does not split as I i J";
        per_seed[k].push_back(r);
        continue;
      }
      if (r.special && near.size() == 2) {
        r.I = near[0];
        r.J = near[1];
      } else {
        r.J = near.empty() ? VertexSet{} : near[0];
        r.I = far.empty() ? VertexSet{} : far[0];
      }
      r.K = Sj - Si;
      r.K.erase(j);
      if (!r.K.empty() && !m.contains(r.K)) {
        r.detail = "K = " + r.K.to_string() + " is not a member";
        per_seed[k].push_back(r);
        continue;
      }
      LaurentPoly expected;
      VertexSet fresh;
      if (r.special) {
        expected = ysym(r.I) * ysym(r.J) * ysym(all) + (ysym(r.I) + ysym(r.J)).pow(2);
        fresh = all.without(i);
      } else {
        expected = ysym(r.J) * ysym(Sj) + ysym(r.I) * ysym(r.K);
        fresh = r.J.with(j) | r.K;
      }
      const LaurentPoly hat = name_symbols(hat_f(t, i), symbols);
      const MaximalNestedCollection after = mutate_collection(g, m, i);
      if (!unit_equal(hat, expected)) r.detail = "hatF is " + render(hat) + ", relation gives " + render(expected);
      else if (!after.contains(fresh)) r.detail = "mutation does not produce " + fresh.to_string();
      else if (cache.y(Si) * cache.y(fresh) != ground_y_symbols(expected, cache)) r.detail = "grounded relation fails";
      else r.ok = true;
      per_seed[k].push_back(r);
    }
  });
  for (auto& v : per_seed)
    for (auto& r : v) {
      rep.ambiguous += r.ambiguous;
      rep.relations.push_back(std::move(r));
    }
  return rep;
}

ChainReport path_exchange_check(int n, int threads) { return chain_exchange_check(Digraph::path(n), false, threads); }
ChainReport cycle_exchange_check(int n, int threads) { return chain_exchange_check(Digraph::cycle(n), true, threads); }

CompleteGraphSeed complete_graph_seed(int n, const std::vector<int>& activation) {
  CompleteGraphSeed out;
  out.activation = activation;
  VertexSet S;
  for (int s : activation) {
    if (s < 1 || s > n || S.contains(s)) throw Error(ErrorKind::InvalidInput, "activation must list distinct vertices of [n]");
    S.insert(s);
  }
  const Digraph g = Digraph::complete(n);
  const int k = static_cast<int>(activation.size());
  // chain[j] = S_{s_j} = {s_1..s_j}, chain[0] empty
  std::vector<VertexSet> chain(k + 1);
  for (int j = 1; j <= k; ++j) chain[j] = chain[j - 1].with(activation[j - 1]);
  auto Y = [&](int j) { return ysym(chain[j]); };
  // big[j] = prod_{l<j} Y_{S_l}^{2^{j-l-1}}, big[0] = 1
  std::vector<LaurentPoly> big(k + 1, LaurentPoly(1));
  for (int j = 1; j <= k; ++j)
    for (int l = 1; l < j; ++l) big[j] *= Y(l).pow(1u << (j - l - 1));
  // small[j] for j >= 1
  std::vector<LaurentPoly> small(k + 1, LaurentPoly(1));
  for (int j = 1; j <= k; ++j) {
    if (j == 1) {
      small[1] = 1 + Y(1);
      continue;
    }
    LaurentPoly prod = 1;
    for (int l = 1; l < j; ++l) prod *= small[l];
    small[j] = prod + Y(j) * big[j - 1];
  }
  auto prod_small = [&](int upto, int skip) {
    LaurentPoly p = 1;
    for (int l = 1; l <= upto; ++l)
      if (l != skip) p *= small[l];
    return p;
  };
  auto A = [](int i) { return LaurentPoly::var(Var::A(i)); };
  auto X = [](int i) { return LaurentPoly::var(Var::X(i)); };
  std::vector<LaurentPoly> F(n + 1), hat(n + 1);
  std::vector<Var> symbols(n);
  for (int m = 1; m <= n; ++m) symbols[m - 1] = Var::X(m);
  for (int j = 1; j <= k; ++j) {
    const int s = activation[j - 1];
    symbols[s - 1] = Var::Y(chain[j]);
    if (j < k) {
      F[s] = prod_small(j - 1, 0).pow(2) + Y(j + 1) * big[j];
      hat[s] = over_monomial(F[s], big[j - 1].pow(2), "complete graph hatF");
    } else {
      F[s] = A(s) * Y(k - 1) * big[k - 1];
      for (int jj = 1; jj < k; ++jj) F[s] += A(activation[jj - 1]) * Y(jj - 1) * big[jj - 1] * prod_small(k - 1, jj);
      LaurentPoly xs;
      for (int m = 1; m <= n; ++m)
        if (!S.contains(m)) xs += X(m);
      F[s] += xs * prod_small(k - 1, 0);
      hat[s] = over_monomial(F[s], big[k - 1], "complete graph hatF");
    }
  }
  for (int m = 1; m <= n; ++m) {
    if (S.contains(m)) continue;
    F[m] = A(m) * Y(k) * big[k];
    for (int j = 1; j <= k; ++j) F[m] += A(activation[j - 1]) * Y(j - 1) * big[j - 1] * prod_small(k, j);
    LaurentPoly xs;
    for (int q = 1; q <= n; ++q)
      if (!S.contains(q) && q != m) xs += X(q);
    F[m] += xs * prod_small(k, 0);
    hat[m] = over_monomial(F[m], big[k], "complete graph hatF");
  }

  YCache cache(g);
  const auto pos = to_positions(symbols);
  std::vector<LaurentPoly> vars, Fz;
  for (int p = 1; p <= n; ++p) {
    vars.push_back(symbols[p - 1].tag() == VarTag::X ? LaurentPoly::var(symbols[p - 1]) : cache.y(symbols[p - 1].y_set()));
    Fz.push_back(F[p].rename(pos));
    out.exchange_named.push_back(F[p]);
    out.hat_named.push_back(hat[p]);
  }
  out.closed = make_seed(std::move(vars), std::move(Fz));
  Seed t = initial_seed(g);
  for (int s : activation) t = mutate(t, s);
  out.mutated = t;
  if (!seeds_equivalent(out.closed, out.mutated)) {
    out.detail = "closed-form seed differs from the mutated seed";
    return out;
  }
  for (int p = 1; p <= n; ++p)
    if (!unit_equal(name_symbols(hat_f(out.mutated, p), symbols), hat[p])) {
      out.detail = "hatF at position " + std::to_string(p) + " differs";
      return out;
    }
  out.matches = true;
  return out;
}

}  // namespace lpgraph
