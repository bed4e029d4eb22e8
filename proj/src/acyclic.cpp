#include "lpgraph/acyclic.hpp"

#include <algorithm>
#include <sstream>

namespace lpgraph {

namespace {

LaurentPoly linear_f(const Digraph& g, int i) {
  LaurentPoly f = LaurentPoly::var(Var::A(i));
  g.successors(i).for_each([&](int j) { f += LaurentPoly::var(Var::X(j)); });
  return f;
}

std::vector<std::size_t> indices(VertexSet s) {
  std::vector<std::size_t> out;
  s.for_each([&](int v) { out.push_back(static_cast<std::size_t>(v - 1)); });
  return out;
}

}  // namespace

LaurentPoly y_by_enumeration(const Digraph& g, VertexSet I) {
  if (I.empty()) return 1;
  const std::vector<int> verts = I.members();
  const int n = g.n();
  std::vector<int> f(static_cast<std::size_t>(n) + 1, 0);  // 0 = unassigned
  std::vector<int> xcount(static_cast<std::size_t>(n) + 1, 0);
  std::vector<LaurentPoly::Term> terms;

  // Following images from t must not return to i; chains stop at loops,
  // unassigned vertices and vertices outside I.
  auto closes_cycle = [&](int i, int t) {
    while (I.contains(t) && f[t] != 0 && f[t] != t) {
      if (t == i) return true;
      t = f[t];
    }
    return t == i;
  };

  std::function<void(std::size_t)> assign = [&](std::size_t pos) {
    if (pos == verts.size()) {
      std::vector<VarPow> factors;
      for (int v = 1; v <= n; ++v) {
        const int e = xcount[v] - (I.contains(v) ? 1 : 0);
        if (e != 0) factors.push_back({Var::X(v), e});
        if (I.contains(v) && f[v] == v) factors.push_back({Var::A(v), 1});
      }
      terms.push_back({Monomial::from_pairs(std::move(factors)), 1});
      return;
    }
    const int i = verts[pos];
    f[i] = i;
    assign(pos + 1);
    g.successors(i).for_each([&](int t) {
      if (closes_cycle(i, t)) return;
      f[i] = t;
      ++xcount[t];
      assign(pos + 1);
      --xcount[t];
    });
    f[i] = 0;
  };
  assign(0);
  return LaurentPoly::from_terms(std::move(terms));
}

DenseMatrix<LaurentPoly> y_matrix(const Digraph& g) {
  const auto n = static_cast<std::size_t>(g.n());
  DenseMatrix<LaurentPoly> m(n, n);
  for (int i = 1; i <= g.n(); ++i) {
    m(i - 1, i - 1) = linear_f(g, i).times(Monomial::of(Var::X(i), -1));
    g.successors(i).for_each([&](int j) { m(i - 1, j - 1) = -1; });
  }
  return m;
}

DenseMatrix<LaurentPoly> y_matrix_symbolic(const Digraph& g) {
  auto m = y_matrix(g);
  for (int i = 1; i <= g.n(); ++i) m(i - 1, i - 1) = LaurentPoly::var(Var::Y(VertexSet{i}));
  return m;
}

LaurentPoly y_by_determinant(const Digraph& g, VertexSet I) {
  const auto idx = indices(I);
  return determinant(y_matrix(g).submatrix(idx, idx));
}

std::vector<VertexSet> simple_paths(const Digraph& g, VertexSet S, int i, int j) {
  if (i == j) return {VertexSet{i}};
  std::vector<VertexSet> out;
  std::function<void(int, VertexSet)> walk = [&](int v, VertexSet seen) {
    g.successors(v).for_each([&](int w) {
      if (w == j) {
        out.push_back(seen.with(j));
      } else if (S.contains(w) && !seen.contains(w)) {
        walk(w, seen.with(w));
      }
    });
  };
  walk(i, VertexSet{i});
  return out;
}

LaurentPoly p_sum(const Digraph& g, VertexSet S, int i, int j, const std::function<LaurentPoly(VertexSet)>& y) {
  LaurentPoly sum;
  for (VertexSet p : simple_paths(g, S, i, j)) sum += y(S - p);
  return sum;
}

const LaurentPoly& YCache::y(VertexSet I) {
  {
    std::lock_guard lock(mu_);
    if (auto it = y_.find(I); it != y_.end()) return it->second;
  }
  LaurentPoly v = y_by_enumeration(g_, I);
  std::lock_guard lock(mu_);
  return y_.try_emplace(I, std::move(v)).first->second;
}

LaurentPoly YCache::p(VertexSet S, int i, int j) {
  return p_sum(g_, S, i, j, [&](VertexSet T) { return y(T); });
}

LaurentPoly p_path(const Digraph& g, VertexSet S, int i, int j) {
  YCache cache(g);
  return cache.p(S, i, j);
}

LaurentPoly p_by_minor(const Digraph& g, VertexSet S, int i, int j) {
  if (i == j) throw Error(ErrorKind::Precondition, "p_by_minor needs i != j");
  const VertexSet rest = S.without(i).without(j);
  int between = 0;
  rest.for_each([&](int s) { between += (s > std::min(i, j) && s < std::max(i, j)); });
  const LaurentPoly d = determinant(y_matrix(g).submatrix(indices(rest.with(i)), indices(rest.with(j))));
  return between % 2 == 0 ? -d : d;
}

bool IdentityReport::ok() const { return failed() == 0; }

std::size_t IdentityReport::checked() const {
  std::size_t c = 0;
  for (const auto& t : identities) c += t.checked;
  return c;
}

std::size_t IdentityReport::failed() const {
  std::size_t c = 0;
  for (const auto& t : identities) c += t.failed;
  return c;
}

std::string IdentityReport::to_string() const {
  std::ostringstream os;
  for (const auto& t : identities) {
    os << t.name << ": " << t.checked << " checked, " << t.failed << " failed";
    if (!t.first_failure.empty()) os << " (first: " << t.first_failure << ")";
    os << "\n";
  }
  return os.str();
}

namespace {

struct Tally {
  IdentityTally& t;
  void check(bool ok, const std::function<std::string()>& what) {
    ++t.checked;
    if (ok) return;
    if (t.failed++ == 0) t.first_failure = what();
  }
};

std::string inst(VertexSet S, std::initializer_list<std::pair<const char*, int>> idx) {
  std::string s = "S=" + S.to_string();
  for (auto [name, v] : idx) s += std::string(" ") + name + "=" + std::to_string(v);
  return s;
}

LaurentPoly maxmut_rhs(YCache& c, VertexSet S, int i) {
  const Digraph& g = c.graph();
  const VertexSet Si = S.with(i);
  LaurentPoly rhs;
  for (int j = 1; j <= g.n(); ++j) {
    const LaurentPoly p = c.p(S, i, j);
    if (p.is_zero()) continue;
    rhs += p * LaurentPoly::var(Si.contains(j) ? Var::A(j) : Var::X(j));
  }
  return rhs;
}

void check_ikj(YCache& c, Tally& t, VertexSet S, int i, int k, int j, const char* tag) {
  const LaurentPoly lhs = c.p(S.with(k), i, j) * c.y(S);
  LaurentPoly rhs = c.p(S, i, j) * c.y(S.with(k));
  if (i != j) rhs += c.p(S, i, k) * c.p(S, k, j);
  t.check(lhs == rhs, [&] { return std::string(tag) + " " + inst(S, {{"i", i}, {"k", k}, {"j", j}}); });
}

}  // namespace

IdentityReport verify_identities(const Digraph& g, int cap) {
  const int n = g.n();
  if (n > cap) throw Error(ErrorKind::ResourceLimit, "identity suite capped at n=" + std::to_string(cap));
  IdentityReport report;
  for (const char* name : {"prop-det", "Yfac", "YiS", "maxmut", "Fpoly", "det", "Yex", "Jacobi", "ikj"})
    report.identities.push_back({name, 0, 0, {}});
  auto tally = [&](const char* name) {
    for (auto& t : report.identities)
      if (t.name == name) return Tally{t};
    throw Error(ErrorKind::Internal, "unknown identity");
  };
  YCache c(g);
  const VertexSet all = g.vertices();

  auto t_det = tally("prop-det"), t_fac = tally("Yfac");
  for_each_subset(all, [&](VertexSet I) {
    if (I.empty()) return;
    t_det.check(c.y(I) == y_by_determinant(g, I), [&] { return "I=" + I.to_string(); });
    LaurentPoly prod = 1;
    for (VertexSet comp : scc_partition(g, I)) prod *= c.y(comp);
    t_fac.check(c.y(I) == prod, [&] { return "I=" + I.to_string(); });
  });

  auto t_yis = tally("YiS"), t_max = tally("maxmut"), t_fp = tally("Fpoly");
  for_each_subset(all, [&](VertexSet S) {
    (all - S).for_each([&](int i) {
      const VertexSet up = oplus(g, S, i), down = ominus(g, S, i);
      t_yis.check(c.y(S.with(i)) == c.y(up) * c.y(down), [&] { return inst(S, {{"i", i}}); });
      const LaurentPoly rhs = maxmut_rhs(c, S, i);
      t_max.check(LaurentPoly::var(Var::X(i)) * c.y(up) * c.y(down) == rhs, [&] { return inst(S, {{"i", i}}); });
      const auto q = exact_divide(rhs, c.y(down));
      t_fp.check(q && *q == maxmut_rhs(c, up.without(i), i), [&] { return inst(S, {{"i", i}}); });
    });
  });

  auto t_minor = tally("det");
  for_each_subset(all, [&](VertexSet S) {
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        if (i != j)
          t_minor.check(c.p(S, i, j) == p_by_minor(g, S, i, j), [&] { return inst(S, {{"i", i}, {"j", j}}); });
  });

  auto t_yex = tally("Yex");
  for_each_subset(all, [&](VertexSet S) {
    (all - S).for_each([&](int i) {
      (all - S).for_each([&](int j) {
        if (j <= i) return;
        const LaurentPoly lhs =
            c.y(oplus(g, S, i)) * c.y(oplus(g, S, j)) * c.y(ominus(g, S, i)) * c.y(ominus(g, S, j));
        const LaurentPoly rhs = c.y(S.with(i).with(j)) * c.y(S) + c.p(S, i, j) * c.p(S, j, i);
        t_yex.check(lhs == rhs, [&] { return inst(S, {{"i", i}, {"j", j}}); });
      });
    });
  });

  auto t_jac = tally("Jacobi");
  const auto sym = y_matrix_symbolic(g);
  for_each_subset(all, [&](VertexSet I) {
    if (I.size() < 2) return;
    const auto idx = indices(I);
    const std::vector<std::size_t> first(idx.begin(), idx.end() - 1), last(idx.begin() + 1, idx.end()),
        mid(idx.begin() + 1, idx.end() - 1);
    auto d = [&](const std::vector<std::size_t>& r, const std::vector<std::size_t>& cc) {
      return determinant(sym.submatrix(r, cc));
    };
    const LaurentPoly lhs = d(idx, idx) * d(mid, mid);
    const LaurentPoly rhs = d(first, first) * d(last, last) - d(first, last) * d(last, first);
    t_jac.check(lhs == rhs, [&] { return "I=" + I.to_string(); });
  });

  auto t_ikj = tally("ikj");
  for_each_subset(all, [&](VertexSet S) {
    (all - S).for_each([&](int i) {
      (all - S).for_each([&](int k) {
        if (k == i) return;
        for (int j = 1; j <= n; ++j)
          if (j != k) check_ikj(c, t_ikj, S, i, k, j, "direct");
      });
    });
  });
  if (n < kMaxVertices) {
    // j in S through the virtual vertex n+1 fed by j alone
    for (int j = 1; j <= n; ++j) {
      YCache cv(g.with_extra_vertex({{j, n + 1}}));
      for_each_subset(all, [&](VertexSet S) {
        if (!S.contains(j)) return;
        (all - S).for_each([&](int i) {
          (all - S).for_each([&](int k) {
            if (k != i) check_ikj(cv, t_ikj, S, i, k, n + 1, "virtual");
          });
        });
      });
    }
  }
  return report;
}

CollectionExpressor::CollectionExpressor(const Digraph& g, const MaximalNestedCollection& m) : g_(g), m_(m) {
  for (VertexSet s : m.sets()) known_.emplace(s, LaurentPoly::var(Var::Y(s)));
}

LaurentPoly CollectionExpressor::y(VertexSet I) {
  if (!I.is_subset_of(m_.support()))
    throw Error(ErrorKind::InvalidInput, I.to_string() + " is not inside the support " + m_.support().to_string());
  return solve(I, m_);
}

LaurentPoly CollectionExpressor::p(VertexSet S, int i, int j) {
  return p_sum(g_, S, i, j, [&](VertexSet T) { return y(T); });
}

LaurentPoly CollectionExpressor::solve(VertexSet T, const MaximalNestedCollection& coll) {
  if (T.empty()) return 1;
  if (auto it = known_.find(T); it != known_.end()) return it->second;
  LaurentPoly out;
  if (!is_strongly_connected(g_, T)) {
    out = 1;
    for (VertexSet comp : scc_partition(g_, T)) out *= solve(comp, coll);
  } else {
    int m = 0;
    coll.maxima().for_each([&](int v) {
      if (T.is_subset_of(coll.set_of(v))) m = v;
    });
    if (m == 0) throw Error(ErrorKind::Internal, "no member of the collection covers " + T.to_string());
    const VertexSet M = coll.set_of(m);
    if (!T.contains(m)) {
      out = solve(T, coll.restricted_to(M.without(m)));
    } else {
      // mutate k upward until it owns M, then k is outside and T lies below
      const int k = (M - T).min();
      MaximalNestedCollection c = coll.restricted_to(M);
      while (c.set_of(k) != M) {
        const int j = c.plus(k);
        const VertexSet Sj = c.set_of(j), R = Sj.without(k).without(j);
        const VertexSet N = oplus(g_, Sj.without(k), j);
        if (!known_.count(N)) {
          const MaximalNestedCollection inner = c.restricted_to(Sj.without(j));
          const auto yin = [&](VertexSet U) { return solve(U, inner); };
          const LaurentPoly num =
              known_.at(Sj) * yin(R) + p_sum(g_, R, k, j, yin) * p_sum(g_, R, j, k, yin);
          const LaurentPoly den = yin(ominus(g_, R, k)) * yin(ominus(g_, R, j)) * known_.at(c.set_of(k));
          known_.emplace(N, divide_exact(num, den, "collection replay"));
        }
        c = mutate_collection(g_, c, k);
      }
      out = solve(T, c.restricted_to(M.without(k)));
    }
  }
  known_.emplace(T, out);
  return out;
}

LaurentPoly ground_y_symbols(const LaurentPoly& p, YCache& cache) {
  std::map<Var, LaurentPoly> values;
  for (Var v : p.variables())
    if (v.tag() == VarTag::Y) values.emplace(v, cache.y(v.y_set()));
  return p.evaluate(values);
}

YExpression express_y_in_collection(const Digraph& g, const MaximalNestedCollection& m, VertexSet I) {
  CollectionExpressor ex(g, m);
  YExpression out{ex.y(I)};
  YCache cache(g);
  out.validated = ground_y_symbols(out.value, cache) == cache.y(I);
  return out;
}

}  // namespace lpgraph
