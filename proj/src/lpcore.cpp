#include "lpgraph/lpcore.hpp"

#include <map>

namespace lpgraph {

namespace {

bool unit_multiple(const LaurentPoly& a, const LaurentPoly& b) { return a == b || a == -b; }

std::map<Var, LaurentPoly> grounding(const Seed& t) {
  std::map<Var, LaurentPoly> m;
  for (int p = 1; p <= t.n(); ++p) m.emplace(zsym(p), t.vars[p - 1]);
  return m;
}

Monomial den_monomial(const std::vector<LaurentPoly>& F, int i) {
  std::vector<VarPow> f;
  for (int j = 1; j <= static_cast<int>(F.size()); ++j) {
    if (j == i) continue;
    const int d = den(F[i - 1], zsym(j), F[j - 1]);
    if (d) f.push_back({zsym(j), d});
  }
  return Monomial::from_pairs(std::move(f));
}

// Divides out every common factor of g and l.
LaurentPoly strip_common(LaurentPoly g, const LaurentPoly& l) {
  const LaurentPoly lp = without_z_content(l);
  for (;;) {
    const LaurentPoly d = gcd(g, lp);
    if (d.is_one()) return g;
    g = divide_exact(g, d, "common factor removal");
  }
}

}  // namespace

LaurentPoly without_z_content(const LaurentPoly& p) {
  std::vector<VarPow> m;
  for (Var v : p.variables())
    if (v.tag() == VarTag::Z) m.push_back({v, -p.min_degree_in(v)});
  return p.times(Monomial::from_pairs(std::move(m)));
}

Seed make_seed(std::vector<LaurentPoly> vars, std::vector<LaurentPoly> exchange) {
  if (vars.size() != exchange.size()) throw Error(ErrorKind::InvalidInput, "seed needs one exchange polynomial per variable");
  Seed t{std::move(vars), std::move(exchange), {}};
  for (int i = 1; i <= t.n(); ++i) {
    try {
      t.hat_den.push_back(den_monomial(t.exchange, i));
    } catch (const Error& e) {
      throw Error(ErrorKind::InvalidInput, "exchange polynomial " + std::to_string(i) + ": " + e.what());
    }
  }
  return t;
}

LaurentPoly hat_f(const Seed& t, int i) { return t.exchange.at(i - 1).times(t.hat_den.at(i - 1).inverse()); }

LaurentPoly ground(const Seed& t, const LaurentPoly& p) { return p.evaluate(grounding(t)); }

SeedReport validate_seed(const Seed& t) {
  SeedReport r;
  auto fail = [&](std::string msg) {
    r.ok = false;
    r.problems.push_back(std::move(msg));
  };
  const int n = t.n();
  if (static_cast<int>(t.exchange.size()) != n || static_cast<int>(t.hat_den.size()) != n) {
    fail("size mismatch");
    return r;
  }
  for (int i = 1; i <= n; ++i) {
    const LaurentPoly& F = t.exchange[i - 1];
    const std::string tag = "F" + std::to_string(i);
    if (F.is_zero() || is_ring_unit(F)) {
      fail(tag + " is zero or a unit");
      continue;
    }
    if (!F.is_polynomial()) fail(tag + " is not a polynomial");
    for (Var v : F.variables())
      if (v.tag() != VarTag::Z && v.tag() != VarTag::A) fail(tag + " involves " + v.name());
    if (F.involves(zsym(i))) fail(tag + " involves its own variable (LP2)");
    if (without_z_content(F) != F) fail(tag + " is divisible by a variable (LP1)");
  }
  if (!r.ok) return r;
  for (int i = 1; i <= n; ++i) {
    const std::string tag = "hatF" + std::to_string(i);
    try {
      if (den_monomial(t.exchange, i) != t.hat_den[i - 1]) fail(tag + " disagrees with the den formula");
    } catch (const Error& e) {
      fail(tag + ": " + e.what());
      continue;
    }
    const LaurentPoly h = hat_f(t, i);
    const Var fresh = Var::Z(n + 1);
    for (int j = 1; j <= n; ++j) {
      if (j == i) continue;
      const LaurentPoly Fj = t.exchange[j - 1];
      const LaurentPoly sub = Fj.times(Monomial::of(fresh, -1));
      const auto val = h.try_evaluate({{zsym(j), sub}});
      if (!val) {
        fail(tag + " is not Laurent after substituting for Z" + std::to_string(j));
        continue;
      }
      if (ring_divide(*val, Fj)) fail(tag + " stays divisible by F" + std::to_string(j));
    }
  }
  return r;
}

Seed mutate(const Seed& t, int i) {
  const int n = t.n();
  if (i < 1 || i > n) throw Error(ErrorKind::InvalidInput, "mutation direction out of range: " + std::to_string(i));
  const LaurentPoly hat = hat_f(t, i);
  const Var zi = zsym(i);

  std::vector<LaurentPoly> vars = t.vars;
  vars[i - 1] = divide_exact(ground(t, hat), t.vars[i - 1], "new cluster variable").normalized_sign();

  std::vector<LaurentPoly> F = t.exchange;
  for (int j = 1; j <= n; ++j) {
    if (j == i || !t.exchange[j - 1].involves(zi)) continue;
    const Var zj = zsym(j);
    if (hat.min_degree_in(zj) < 0)
      throw Error(ErrorKind::Internal, "hatF" + std::to_string(i) + " has Z" + std::to_string(j) + " in its denominator");
    const LaurentPoly L = hat.substitute(zj, 0);
    if (L.is_zero()) throw Error(ErrorKind::Internal, "hatF" + std::to_string(i) + " vanishes at Z" + std::to_string(j) + "=0");
    const LaurentPoly G = t.exchange[j - 1].substitute(zi, L.times(Monomial::of(zi, -1)));
    F[j - 1] = without_z_content(strip_common(without_z_content(G), L)).normalized_sign();
    if (F[j - 1].involves(zj)) throw Error(ErrorKind::Internal, "mutated F" + std::to_string(j) + " involves Z" + std::to_string(j));
  }
  return make_seed(std::move(vars), std::move(F));
}

bool seeds_equivalent(const Seed& a, const Seed& b) {
  if (a.n() != b.n()) return false;
  std::map<Var, LaurentPoly> flip;
  for (int p = 1; p <= a.n(); ++p) {
    if (a.vars[p - 1] == b.vars[p - 1]) continue;
    if (a.vars[p - 1] != -b.vars[p - 1]) return false;
    flip.emplace(zsym(p), -LaurentPoly::var(zsym(p)));
  }
  for (int p = 1; p <= a.n(); ++p) {
    const LaurentPoly fb = flip.empty() ? b.exchange[p - 1] : b.exchange[p - 1].evaluate(flip);
    if (!unit_multiple(a.exchange[p - 1], fb)) return false;
  }
  return true;
}

CommutationReport check_commutation(const Seed& t, int i, int j) {
  CommutationReport r;
  if (i == j) {
    r.reason = "directions coincide";
    return r;
  }
  if (i < 1 || j < 1 || i > t.n() || j > t.n()) {
    r.reason = "direction out of range";
    return r;
  }
  if (t.exchange[i - 1].involves(zsym(j))) {
    r.reason = "F" + std::to_string(i) + " involves Z" + std::to_string(j);
    return r;
  }
  if (unit_multiple(t.exchange[i - 1], t.exchange[j - 1])) {
    r.reason = "F" + std::to_string(i) + "/F" + std::to_string(j) + " is a unit";
    return r;
  }
  r.precondition = true;
  const Seed ij = mutate(mutate(t, j), i), ji = mutate(mutate(t, i), j);
  r.commutes = seeds_equivalent(ij, ji);
  r.four_cycle = seeds_equivalent(mutate(mutate(ji, i), j), t) && seeds_equivalent(mutate(mutate(ij, j), i), t);
  return r;
}

std::vector<LaurentPoly> expand_in_cluster(const Seed& t, const std::vector<int>& path, std::vector<Var> symbols) {
  if (symbols.empty())
    for (int p = 1; p <= t.n(); ++p) symbols.push_back(Var::X(p));
  if (static_cast<int>(symbols.size()) != t.n()) throw Error(ErrorKind::InvalidInput, "one symbol per position required");
  Seed s = t;
  for (int p = 1; p <= t.n(); ++p) s.vars[p - 1] = LaurentPoly::var(symbols[p - 1]);
  for (int d : path) {
    try {
      s = mutate(s, d);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::Internal) throw Error(ErrorKind::Internal, std::string("non-Laurent expansion: ") + e.what());
      throw;
    }
  }
  return s.vars;
}

LaurentPoly name_symbols(const LaurentPoly& p, const std::vector<Var>& names) {
  std::map<Var, Var> m;
  for (std::size_t k = 0; k < names.size(); ++k) m.emplace(zsym(static_cast<int>(k) + 1), names[k]);
  return p.rename(m);
}

}  // namespace lpgraph
