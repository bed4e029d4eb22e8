#include "lpgraph/conjectures.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <random>
#include <set>
#include <unordered_map>

#include "lpgraph/matrix.hpp"
#include "lpgraph/parallel.hpp"

namespace lpgraph {

namespace {

using Clock = std::chrono::steady_clock;

double since_ms(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

bool all_positive(const LaurentPoly& p) {
  for (const auto& t : p.terms())
    if (t.coeff <= 0) return false;
  return !p.is_zero();
}

Seed symbolic(const Seed& t, const std::vector<Var>& symbols) {
  Seed s = t;
  for (int p = 1; p <= t.n(); ++p) s.vars[p - 1] = LaurentPoly::var(symbols[p - 1]);
  return s;
}

struct Walk {
  Seed seed;
  std::vector<int> path;
  std::vector<int> raw;  // raw[label - 1]: position of that label in the unpermuted replay
};

// Specialized values for the A's: fixed, so reports are deterministic.
Integer a_value(std::uint64_t index) {
  std::mt19937_64 rng(0x5eed + index);
  return Integer(rng() % 1000003 + 2);
}

}  // namespace

ConjectureReport check_positivity(const GraphLPAlgebra& a, int threads) {
  const auto t0 = Clock::now();
  ConjectureReport rep;
  rep.id = "positivity";
  const Digraph& g = a.graph;
  const int n = g.n();
  const std::size_t N = a.seeds.size();
  const VariableInventory inv = variable_inventory(g, *a.cache);
  std::mutex mu;

  // part (1): exchange polynomials
  for (std::size_t u = 0; u < N; ++u)
    for (int i = 1; i <= n; ++i) {
      ++rep.instances;
      const LaurentPoly& F = a.seeds[u].seed.exchange[i - 1];
      if (all_positive(F)) continue;
      const auto symbols = collection_symbols(a.seeds[u].collection);
      rep.failures.push_back({g, a.seeds[u].collection, {}, i, "F" + std::to_string(i), name_symbols(F, symbols),
                              "exchange polynomial has a nonpositive coefficient"});
    }

  // part (2): every variable in every seed
  parallel_for(N, threads, [&](std::size_t u) {
    const auto symbols = collection_symbols(a.seeds[u].collection);
    std::map<Var, LaurentPoly> values;
    for (std::size_t p = 0; p < symbols.size(); ++p) values.emplace(symbols[p], inv.value.at(symbols[p]));

    std::vector<std::optional<Walk>> walk(N);
    std::vector<int> identity(n);
    for (int p = 1; p <= n; ++p) identity[p - 1] = p;
    walk[u] = Walk{symbolic(a.seeds[u].seed, symbols), {}, identity};
    std::deque<std::size_t> queue{u};
    std::set<Var> done;
    std::size_t local = 0;
    std::vector<ConjectureWitness> bad;
    while (!queue.empty()) {
      const std::size_t v = queue.front();
      queue.pop_front();
      const Walk& w = *walk[v];
      const auto names = collection_symbols(a.seeds[v].collection);
      for (int p = 1; p <= n; ++p) {
        if (!done.insert(names[p - 1]).second) continue;
        ++local;
        const LaurentPoly& e = w.seed.vars[p - 1];
        ConjectureWitness wit{g, a.seeds[u].collection, w.path, w.raw[p - 1], names[p - 1].name(), e, {}};
        if (!all_positive(e)) {
          wit.detail = "expansion has a nonpositive coefficient";
          bad.push_back(std::move(wit));
        } else if (e.evaluate(values) != inv.value.at(names[p - 1])) {
          wit.detail = "expansion does not ground to the variable";
          bad.push_back(std::move(wit));
        }
      }
      for (int s = 1; s <= n; ++s) {
        const AlgebraEdge& edge = a.seeds[v].edges[s - 1];
        if (edge.target < 0 || walk[edge.target]) continue;
        Walk next{permute_positions(mutate(w.seed, s), edge.perm), w.path, std::vector<int>(n)};
        next.path.push_back(w.raw[s - 1]);
        for (int p = 1; p <= n; ++p) next.raw[edge.perm[p - 1] - 1] = w.raw[p - 1];
        walk[edge.target] = std::move(next);
        queue.push_back(edge.target);
      }
    }
    std::lock_guard lock(mu);
    rep.instances += local;
    for (auto& b : bad) rep.failures.push_back(std::move(b));
  });
  rep.runtime_ms = since_ms(t0);
  return rep;
}

LaurentPoly replay_expansion(const Digraph& g, const MaximalNestedCollection& base, const std::vector<int>& path,
                             int position) {
  if (position < 1 || position > g.n()) throw Error(ErrorKind::InvalidInput, "position out of range");
  return expand_in_cluster(seed_for_collection(g, base), path, collection_symbols(base))[position - 1];
}

ConjectureReport check_cluster_monomials(const GraphLPAlgebra& a, int d) {
  const auto t0 = Clock::now();
  ConjectureReport rep;
  rep.id = "cluster-monomials";
  if (d < 0) throw Error(ErrorKind::InvalidInput, "degree cap must be nonnegative");
  const Digraph& g = a.graph;
  const VariableInventory inv = variable_inventory(g, *a.cache);

  // multisets of size k from each cluster, as sorted variable lists
  std::vector<std::set<std::vector<Var>>> by_degree(d + 1);
  by_degree[0].insert(std::vector<Var>{});
  for (const auto& s : a.seeds) {
    const auto cluster = collection_symbols(s.collection);
    std::vector<Var> sorted(cluster.begin(), cluster.end());
    std::sort(sorted.begin(), sorted.end());
    std::vector<Var> cur;
    std::function<void(std::size_t, int)> rec = [&](std::size_t from, int left) {
      if (left == 0) return;
      for (std::size_t k = from; k < sorted.size(); ++k) {
        cur.push_back(sorted[k]);
        by_degree[cur.size()].insert(cur);
        rec(k, left - 1);
        cur.pop_back();
      }
    };
    rec(0, d);
  }

  // expansion rows: X-monomial -> coefficient polynomial in the A's
  using Row = std::map<std::string, LaurentPoly>;
  auto expand = [&](const std::vector<Var>& mono) {
    LaurentPoly v = 1;
    for (Var x : mono) v *= inv.value.at(x);
    Row row;
    for (const auto& t : v.terms()) {
      std::vector<VarPow> xs, as;
      for (const auto& f : t.mono.factors()) (f.var.tag() == VarTag::A ? as : xs).push_back(f);
      row[Monomial::from_pairs(xs).to_string()] += LaurentPoly::monomial(Monomial::from_pairs(as), t.coeff);
    }
    return row;
  };

  auto rank_of = [&](const std::vector<Row>& rows) -> std::size_t {
    if (rows.empty()) return 0;
    std::map<std::string, std::size_t> col;
    for (const auto& r : rows)
      for (const auto& [k, c] : r) col.emplace(k, 0);
    std::size_t next = 0;
    for (auto& [k, c] : col) c = next++;
    DenseMatrix<Integer> spec(rows.size(), col.size(), Integer(0));
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (const auto& [k, c] : rows[i]) {
        Integer v = 0;
        for (const auto& t : c.terms()) {
          Integer m = t.coeff;
          for (const auto& f : t.mono.factors())
            m *= boost::multiprecision::pow(a_value(f.var.index()), static_cast<unsigned>(f.exp));
          v += m;
        }
        spec(i, col.at(k)) = v;
      }
    const std::size_t r = rank_mod_prime(spec);
    if (r == rows.size()) return r;
    DenseMatrix<LaurentPoly> exact(rows.size(), col.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (const auto& [k, c] : rows[i]) exact(i, col.at(k)) = c;
    return rank(std::move(exact));
  };

  std::vector<Row> all;
  for (int k = 0; k <= d; ++k) {
    std::vector<Row> rows;
    for (const auto& mono : by_degree[k]) rows.push_back(expand(mono));
    DegreeCount dc{k, rows.size(), rank_of(rows)};
    rep.by_degree.push_back(dc);
    for (auto& r : rows) all.push_back(std::move(r));
  }
  rep.monomials = all.size();
  rep.instances = all.size();
  rep.rank = rank_of(all);
  if (rep.rank < rep.monomials) {
    ConjectureWitness w;
    w.graph = g;
    w.detail = std::to_string(rep.monomials) + " cluster monomials of degree <= " + std::to_string(d) + " have rank " +
               std::to_string(rep.rank);
    rep.failures.push_back(std::move(w));
  }
  rep.runtime_ms = since_ms(t0);
  return rep;
}

}  // namespace lpgraph
