#include "lpgraph/poly.hpp"

#include <algorithm>
#include <limits>
#include <unordered_map>

namespace lpgraph {

namespace {

void check_exp(long long e) {
  if (e > std::numeric_limits<int>::max() / 2 || e < std::numeric_limits<int>::min() / 2)
    throw Error(ErrorKind::ResourceLimit, "monomial exponent overflow");
}

inline std::size_t mix(std::size_t h, std::size_t v) { return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2)); }

}  // namespace

// ---------------------------------------------------------------- Var

std::uint64_t Var::check_index(int i) {
  if (i < 1) throw Error(ErrorKind::InvalidInput, "variable index must be positive");
  return static_cast<std::uint64_t>(i);
}

Var Var::Y(VertexSet s) {
  if (s.empty()) throw Error(ErrorKind::Precondition, "Y variable needs a nonempty set");
  if (s.max() > kIndexBits) throw Error(ErrorKind::ResourceLimit, "Y variable index above 44 vertices");
  return Var(VarTag::Y, s.mask());
}

std::string Var::name() const {
  static const char kTags[] = {'A', 'X', 'Y', 'Z'};
  std::string out(1, kTags[static_cast<int>(tag())]);
  if (tag() != VarTag::Y) return out + std::to_string(index());
  const VertexSet s = y_set();
  if (s.max() <= 9) {
    s.for_each([&](int v) { out += static_cast<char>('0' + v); });
    return out;
  }
  return out + s.to_string();
}

// ---------------------------------------------------------------- Monomial

Monomial Monomial::of(Var v, int e) {
  Monomial m;
  if (e != 0) {
    m.f_.push_back({v, e});
    m.deg_ = e;
  }
  return m;
}

Monomial Monomial::from_pairs(std::vector<VarPow> pairs) {
  std::sort(pairs.begin(), pairs.end(), [](const VarPow& a, const VarPow& b) { return a.var < b.var; });
  Monomial m;
  long long deg = 0;
  for (std::size_t i = 0; i < pairs.size();) {
    long long e = 0;
    std::size_t j = i;
    for (; j < pairs.size() && pairs[j].var == pairs[i].var; ++j) e += pairs[j].exp;
    check_exp(e);
    if (e != 0) m.f_.push_back({pairs[i].var, static_cast<int>(e)});
    deg += e;
    i = j;
  }
  check_exp(deg);
  m.deg_ = static_cast<int>(deg);
  return m;
}

bool Monomial::is_polynomial() const {
  return std::all_of(f_.begin(), f_.end(), [](const VarPow& p) { return p.exp > 0; });
}

int Monomial::exponent(Var v) const {
  for (const auto& p : f_)
    if (p.var == v) return p.exp;
  return 0;
}

Monomial Monomial::inverse() const {
  Monomial m = *this;
  for (auto& p : m.f_) p.exp = -p.exp;
  m.deg_ = -deg_;
  return m;
}

Monomial Monomial::positive_part() const {
  Monomial m;
  for (const auto& p : f_)
    if (p.exp > 0) {
      m.f_.push_back(p);
      m.deg_ += p.exp;
    }
  return m;
}

Monomial Monomial::negative_part() const {
  Monomial m;
  for (const auto& p : f_)
    if (p.exp < 0) {
      m.f_.push_back({p.var, -p.exp});
      m.deg_ -= p.exp;
    }
  return m;
}

Monomial Monomial::without(Var v) const {
  Monomial m;
  for (const auto& p : f_)
    if (p.var != v) {
      m.f_.push_back(p);
      m.deg_ += p.exp;
    }
  return m;
}

bool Monomial::divides(const Monomial& other) const {
  auto a = f_.begin();
  auto b = other.f_.begin();
  // every exponent of other minus this must be >= 0
  while (a != f_.end() || b != other.f_.end()) {
    if (b == other.f_.end() || (a != f_.end() && a->var < b->var)) {
      if (a->exp > 0) return false;
      ++a;
    } else if (a == f_.end() || b->var < a->var) {
      if (b->exp < 0) return false;
      ++b;
    } else {
      if (b->exp < a->exp) return false;
      ++a;
      ++b;
    }
  }
  return true;
}

namespace {

template <typename Op>
Monomial merge_with(const Monomial::Factors& x, const Monomial::Factors& y, Op op) {
  std::vector<VarPow> out;
  out.reserve(x.size() + y.size());
  auto a = x.begin();
  auto b = y.begin();
  while (a != x.end() || b != y.end()) {
    if (b == y.end() || (a != x.end() && a->var < b->var)) {
      out.push_back({a->var, static_cast<int>(op(a->exp, 0))});
      ++a;
    } else if (a == x.end() || b->var < a->var) {
      out.push_back({b->var, static_cast<int>(op(0, b->exp))});
      ++b;
    } else {
      out.push_back({a->var, static_cast<int>(op(a->exp, b->exp))});
      ++a;
      ++b;
    }
  }
  return Monomial::from_pairs(std::move(out));
}

}  // namespace

Monomial operator*(const Monomial& a, const Monomial& b) {
  if (a.f_.empty()) return b;
  if (b.f_.empty()) return a;
  Monomial m;
  m.f_.reserve(a.f_.size() + b.f_.size());
  auto x = a.f_.begin();
  auto y = b.f_.begin();
  while (x != a.f_.end() || y != b.f_.end()) {
    if (y == b.f_.end() || (x != a.f_.end() && x->var < y->var)) {
      m.f_.push_back(*x++);
    } else if (x == a.f_.end() || y->var < x->var) {
      m.f_.push_back(*y++);
    } else {
      long long e = static_cast<long long>(x->exp) + y->exp;
      check_exp(e);
      if (e != 0) m.f_.push_back({x->var, static_cast<int>(e)});
      ++x;
      ++y;
    }
  }
  long long d = static_cast<long long>(a.deg_) + b.deg_;
  check_exp(d);
  m.deg_ = static_cast<int>(d);
  return m;
}

Monomial min(const Monomial& a, const Monomial& b) {
  return merge_with(a.f_, b.f_, [](int x, int y) { return std::min(x, y); });
}

Monomial max(const Monomial& a, const Monomial& b) {
  return merge_with(a.f_, b.f_, [](int x, int y) { return std::max(x, y); });
}

std::size_t Monomial::hash() const {
  std::size_t h = 0x51ed27;
  for (const auto& p : f_) h = mix(mix(h, p.var.code()), static_cast<std::size_t>(p.exp));
  return h;
}

std::string Monomial::to_string() const {
  if (f_.empty()) return "1";
  std::string out;
  for (const auto& p : f_) {
    if (!out.empty()) out += "*";
    out += p.var.name();
    if (p.exp != 1) out += "^" + std::to_string(p.exp);
  }
  return out;
}

bool term_less(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  const auto& x = a.factors();
  const auto& y = b.factors();
  auto p = x.begin();
  auto q = y.begin();
  while (p != x.end() || q != y.end()) {
    int ea, eb;
    if (q == y.end() || (p != x.end() && p->var < q->var)) {
      ea = p->exp;
      eb = 0;
      ++p;
    } else if (p == x.end() || q->var < p->var) {
      ea = 0;
      eb = q->exp;
      ++q;
    } else {
      ea = p->exp;
      eb = q->exp;
      ++p;
      ++q;
    }
    if (ea != eb) return ea > eb;
  }
  return false;
}

// ---------------------------------------------------------------- LaurentPoly

LaurentPoly::LaurentPoly(long long c) {
  if (c != 0) terms_.push_back({Monomial{}, Integer(c)});
}

LaurentPoly::LaurentPoly(const Integer& c) {
  if (c != 0) terms_.push_back({Monomial{}, c});
}

LaurentPoly LaurentPoly::monomial(const Monomial& m, const Integer& c) {
  LaurentPoly p;
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return term_less(a.mono, b.mono); });
  LaurentPoly p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff == 0) p.terms_.pop_back();
    } else if (t.coeff != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

bool LaurentPoly::is_unit() const {
  return terms_.size() == 1 && (terms_[0].coeff == 1 || terms_[0].coeff == -1);
}

bool LaurentPoly::is_polynomial() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.mono.is_polynomial(); });
}

Integer LaurentPoly::constant_value() const {
  if (!is_constant()) throw Error(ErrorKind::Precondition, "polynomial is not constant");
  return terms_.empty() ? Integer(0) : terms_[0].coeff;
}

std::vector<Var> LaurentPoly::variables() const {
  std::vector<Var> vs;
  for (const auto& t : terms_)
    for (const auto& f : t.mono.factors()) vs.push_back(f.var);
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

bool LaurentPoly::involves(Var v) const {
  return std::any_of(terms_.begin(), terms_.end(), [&](const Term& t) { return t.mono.exponent(v) != 0; });
}

int LaurentPoly::degree_in(Var v) const {
  if (terms_.empty()) return 0;
  int d = std::numeric_limits<int>::min();
  for (const auto& t : terms_) d = std::max(d, t.mono.exponent(v));
  return d;
}

int LaurentPoly::min_degree_in(Var v) const {
  if (terms_.empty()) return 0;
  int d = std::numeric_limits<int>::max();
  for (const auto& t : terms_) d = std::min(d, t.mono.exponent(v));
  return d;
}

int LaurentPoly::total_degree() const { return terms_.empty() ? 0 : terms_.back().mono.degree(); }

std::vector<std::pair<int, LaurentPoly>> LaurentPoly::coefficients(Var v) const {
  std::map<int, std::vector<Term>> buckets;
  for (const auto& t : terms_) buckets[t.mono.exponent(v)].push_back({t.mono.without(v), t.coeff});
  std::vector<std::pair<int, LaurentPoly>> out;
  for (auto& [k, ts] : buckets) out.emplace_back(k, from_terms(std::move(ts)));
  return out;
}

std::pair<Monomial, LaurentPoly> LaurentPoly::split() const {
  if (terms_.empty()) return {Monomial{}, LaurentPoly{}};
  Monomial m = terms_[0].mono;
  for (std::size_t i = 1; i < terms_.size(); ++i) m = min(m, terms_[i].mono);
  return {m, times(m.inverse())};
}

Integer LaurentPoly::integer_content() const {
  Integer g = 0;
  for (const auto& t : terms_) {
    g = boost::multiprecision::gcd(g, t.coeff);
    if (g == 1) break;
  }
  return abs(g);
}

LaurentPoly LaurentPoly::normalized_sign() const {
  if (!terms_.empty() && terms_[0].coeff < 0) return -*this;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

namespace {

template <bool Subtract>
std::vector<LaurentPoly::Term> merge_add(const std::vector<LaurentPoly::Term>& a, const std::vector<LaurentPoly::Term>& b) {
  std::vector<LaurentPoly::Term> out;
  out.reserve(a.size() + b.size());
  auto x = a.begin();
  auto y = b.begin();
  while (x != a.end() || y != b.end()) {
    if (y == b.end() || (x != a.end() && term_less(x->mono, y->mono))) {
      out.push_back(*x++);
    } else if (x == a.end() || term_less(y->mono, x->mono)) {
      out.push_back({y->mono, Subtract ? Integer(-y->coeff) : y->coeff});
      ++y;
    } else {
      Integer c = Subtract ? Integer(x->coeff - y->coeff) : Integer(x->coeff + y->coeff);
      if (c != 0) out.push_back({x->mono, std::move(c)});
      ++x;
      ++y;
    }
  }
  return out;
}

}  // namespace

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) return *this = o;
  terms_ = merge_add<false>(terms_, o.terms_);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge_add<true>(terms_, o.terms_);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly LaurentPoly::times(const Monomial& m, const Integer& c) const {
  if (c == 0) return {};
  LaurentPoly p;
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({t.mono * m, t.coeff * c});
  return p;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.terms_.empty() || b.terms_.empty()) return {};
  if (a.terms_.size() == 1) return b.times(a.terms_[0].mono, a.terms_[0].coeff);
  if (b.terms_.size() == 1) return a.times(b.terms_[0].mono, b.terms_[0].coeff);
  std::unordered_map<Monomial, Integer, MonomialHash> acc;
  acc.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) {
      auto [it, fresh] = acc.try_emplace(x.mono * y.mono, Integer(x.coeff * y.coeff));
      if (!fresh) it->second += x.coeff * y.coeff;
    }
  LaurentPoly p;
  p.terms_.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) p.terms_.push_back({m, std::move(c)});
  std::sort(p.terms_.begin(), p.terms_.end(),
            [](const LaurentPoly::Term& s, const LaurentPoly::Term& t) { return term_less(s.mono, t.mono); });
  return p;
}

LaurentPoly LaurentPoly::pow(unsigned e) const {
  LaurentPoly result = 1;
  LaurentPoly base = *this;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

LaurentPoly LaurentPoly::substitute(Var v, const LaurentPoly& expr) const {
  if (min_degree_in(v) < 0 && !expr.is_monomial())
    throw Error(ErrorKind::Precondition, "cannot substitute a non-monomial for a variable with negative exponent");
  return evaluate({{v, expr}});
}

namespace {

// Caches nonnegative powers of the values assigned to variables.
class PowerCache {
 public:
  explicit PowerCache(const std::map<Var, LaurentPoly>& values) : values_(values) {}

  const LaurentPoly& get(Var v, int e) {
    auto& row = cache_[v];
    if (row.empty()) row.push_back(LaurentPoly(1));
    while (static_cast<int>(row.size()) <= e) row.push_back(row.back() * values_.at(v));
    return row[e];
  }

 private:
  const std::map<Var, LaurentPoly>& values_;
  std::map<Var, std::vector<LaurentPoly>> cache_;
};

}  // namespace

std::optional<LaurentPoly> LaurentPoly::try_evaluate(const std::map<Var, LaurentPoly>& values) const {
  if (terms_.empty()) return LaurentPoly{};
  // Monomial-valued variables can take negative powers directly; the rest
  // are cleared with a common denominator and divided out at the end.
  std::map<Var, int> clear;
  for (const auto& t : terms_)
    for (const auto& f : t.mono.factors()) {
      if (f.exp >= 0) continue;
      auto it = values.find(f.var);
      if (it == values.end() || it->second.is_monomial()) continue;
      clear[f.var] = std::max(clear[f.var], -f.exp);
    }
  std::vector<VarPow> shift_pairs;
  for (auto [v, e] : clear) shift_pairs.push_back({v, e});
  const Monomial shift = Monomial::from_pairs(std::move(shift_pairs));

  PowerCache powers(values);
  LaurentPoly result;
  for (const auto& t : terms_) {
    const Monomial m = t.mono * shift;
    LaurentPoly term = LaurentPoly::monomial(Monomial{}, t.coeff);
    std::vector<VarPow> kept;
    for (const auto& f : m.factors()) {
      auto it = values.find(f.var);
      if (it == values.end()) {
        kept.push_back(f);
      } else if (f.exp >= 0) {
        term = term * powers.get(f.var, f.exp);
      } else {
        const auto& val = it->second;
        if (val.is_zero()) throw Error(ErrorKind::Precondition, "negative power of a variable set to zero");
        const auto& vt = val.terms()[0];
        if (vt.coeff != 1 && vt.coeff != -1) return std::nullopt;
        const Integer sign = (vt.coeff == -1 && (f.exp % 2 != 0)) ? -1 : 1;
        Monomial inv;
        for (int k = 0; k < -f.exp; ++k) inv = inv * vt.mono.inverse();
        term = term.times(inv, sign);
      }
    }
    if (!kept.empty()) term = term.times(Monomial::from_pairs(kept));
    result += term;
  }
  if (shift.is_one()) return result;
  LaurentPoly denom = 1;
  for (const auto& f : shift.factors()) denom = denom * powers.get(f.var, f.exp);
  return exact_divide(result, denom);
}

LaurentPoly LaurentPoly::evaluate(const std::map<Var, LaurentPoly>& values) const {
  auto r = try_evaluate(values);
  if (!r) throw Error(ErrorKind::Internal, "evaluation is not a Laurent polynomial: " + to_string());
  return *r;
}

LaurentPoly LaurentPoly::rename(const std::map<Var, Var>& names) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    std::vector<VarPow> pairs;
    for (const auto& f : t.mono.factors()) {
      auto it = names.find(f.var);
      pairs.push_back({it == names.end() ? f.var : it->second, f.exp});
    }
    out.push_back({Monomial::from_pairs(std::move(pairs)), t.coeff});
  }
  return from_terms(std::move(out));
}

std::size_t LaurentPoly::hash() const {
  std::size_t h = terms_.size();
  for (const auto& t : terms_) h = mix(mix(h, t.mono.hash()), std::hash<Integer>{}(t.coeff));
  return h;
}

std::string LaurentPoly::to_string() const { return render(*this); }

// ---------------------------------------------------------------- division

namespace {

// Exact division of polynomials (nonnegative exponents, q nonzero) by the
// leading-term algorithm; the remainder shrinks in a graded order.
std::optional<LaurentPoly> divide_polynomials(const LaurentPoly& p, const LaurentPoly& q) {
  if (p.is_zero()) return LaurentPoly{};
  const auto& lq = q.leading_term();
  if (q.is_monomial()) {
    std::vector<LaurentPoly::Term> out;
    for (const auto& t : p.terms()) {
      if (t.coeff % lq.coeff != 0 || !lq.mono.divides(t.mono)) return std::nullopt;
      out.push_back({t.mono / lq.mono, t.coeff / lq.coeff});
    }
    return LaurentPoly::from_terms(std::move(out));
  }
  if (p.total_degree() < q.total_degree()) return std::nullopt;
  for (Var v : q.variables())
    if (p.degree_in(v) < q.degree_in(v)) return std::nullopt;

  std::map<Monomial, Integer, TermLess> rem;
  for (const auto& t : p.terms()) rem.emplace_hint(rem.end(), t.mono, t.coeff);
  std::vector<LaurentPoly::Term> quot;
  while (!rem.empty()) {
    auto top = std::prev(rem.end());
    if (!lq.mono.divides(top->first)) return std::nullopt;
    if (top->second % lq.coeff != 0) return std::nullopt;
    const Monomial m = top->first / lq.mono;
    const Integer c = top->second / lq.coeff;
    for (const auto& t : q.terms()) {
      Monomial key = t.mono * m;
      auto [it, fresh] = rem.try_emplace(std::move(key), 0);
      it->second -= t.coeff * c;
      if (it->second == 0) rem.erase(it);
    }
    quot.push_back({m, c});
  }
  return LaurentPoly::from_terms(std::move(quot));
}

}  // namespace

std::optional<LaurentPoly> exact_divide(const LaurentPoly& p, const LaurentPoly& q) {
  if (q.is_zero()) throw Error(ErrorKind::Precondition, "division by zero polynomial");
  if (p.is_zero()) return LaurentPoly{};
  if (q.is_monomial()) {
    const auto& t = q.terms()[0];
    if (t.coeff == 1) return p.times(t.mono.inverse());
    if (t.coeff == -1) return p.times(t.mono.inverse(), -1);
  }
  auto [mp, pp] = p.split();
  auto [mq, qq] = q.split();
  auto r = divide_polynomials(pp, qq);
  if (!r) return std::nullopt;
  return r->times(mp / mq);
}

LaurentPoly divide_exact(const LaurentPoly& p, const LaurentPoly& q, const char* what) {
  auto r = exact_divide(p, q);
  if (!r) throw Error(ErrorKind::Internal, std::string(what) + ": " + render(q) + " does not divide " + render(p));
  return *r;
}

// ---------------------------------------------------------------- gcd

namespace {

using Dense = std::vector<LaurentPoly>;  // coefficient of x^k at index k

Dense to_dense(const LaurentPoly& p, Var x) {
  Dense d;
  for (auto& [k, c] : p.coefficients(x)) {
    if (static_cast<int>(d.size()) <= k) d.resize(k + 1);
    d[k] = std::move(c);
  }
  return d;
}

LaurentPoly from_dense(const Dense& d, Var x) {
  LaurentPoly p;
  for (std::size_t k = 0; k < d.size(); ++k)
    if (!d[k].is_zero()) p += d[k].times(Monomial::of(x, static_cast<int>(k)));
  return p;
}

void trim(Dense& d) {
  while (!d.empty() && d.back().is_zero()) d.pop_back();
}

int deg(const Dense& d) { return static_cast<int>(d.size()) - 1; }

Dense prem(const Dense& a, const Dense& b) {
  Dense r = a;
  const int db = deg(b);
  const LaurentPoly& lb = b.back();
  int e = deg(a) - db + 1;
  while (!r.empty() && deg(r) >= db) {
    const LaurentPoly t = r.back();
    const int s = deg(r) - db;
    for (auto& c : r) c = c * lb;
    for (int k = 0; k <= db; ++k) r[k + s] -= t * b[k];
    trim(r);
    --e;
  }
  if (e > 0) {
    const LaurentPoly f = lb.pow(static_cast<unsigned>(e));
    for (auto& c : r) c = c * f;
  }
  return r;
}

LaurentPoly gcd_rec(const LaurentPoly& a, const LaurentPoly& b);

LaurentPoly content_of(const Dense& d) {
  LaurentPoly g;
  for (const auto& c : d) {
    if (c.is_zero()) continue;
    g = gcd_rec(g, c);
    if (g.is_one()) break;
  }
  return g;
}

Dense divide_coeffs(const Dense& d, const LaurentPoly& c) {
  Dense out;
  out.reserve(d.size());
  for (const auto& x : d) out.push_back(divide_exact(x, c, "gcd coefficient"));
  return out;
}

// Subresultant PRS on primitive inputs of positive degree.
Dense subresultant_gcd(Dense a, Dense b) {
  if (deg(a) < deg(b)) std::swap(a, b);
  LaurentPoly g = 1, h = 1;
  while (true) {
    const int delta = deg(a) - deg(b);
    Dense r = prem(a, b);
    if (r.empty()) break;
    if (deg(r) == 0) return Dense{LaurentPoly(1)};
    a = std::move(b);
    const LaurentPoly divisor = g * h.pow(static_cast<unsigned>(delta));
    b = divide_coeffs(r, divisor);
    g = a.back();
    if (delta == 1) {
      h = g;
    } else if (delta > 1) {
      h = divide_exact(g.pow(static_cast<unsigned>(delta)), h.pow(static_cast<unsigned>(delta - 1)), "subresultant h");
    }
  }
  return divide_coeffs(b, content_of(b));
}

// gcd of two polynomials, either may be zero; sign normalised.
LaurentPoly gcd_rec(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero()) return b.normalized_sign();
  if (b.is_zero()) return a.normalized_sign();
  auto [ma, pa] = a.split();
  auto [mb, pb] = b.split();
  const Monomial mg = min(ma, mb);

  LaurentPoly core;
  if (pa.is_constant() || pb.is_constant()) {
    core = LaurentPoly(boost::multiprecision::gcd(pa.integer_content(), pb.integer_content()));
  } else if (pa == pb || pa == -pb) {
    core = pa;
  } else {
    const auto va = pa.variables();
    const auto vb = pb.variables();
    std::optional<Var> only;
    const LaurentPoly* owner = nullptr;
    const LaurentPoly* other = nullptr;
    for (Var v : va)
      if (!std::binary_search(vb.begin(), vb.end(), v)) {
        only = v;
        owner = &pa;
        other = &pb;
        break;
      }
    if (!only)
      for (Var v : vb)
        if (!std::binary_search(va.begin(), va.end(), v)) {
          only = v;
          owner = &pb;
          other = &pa;
          break;
        }
    if (only) {
      LaurentPoly g = *other;
      for (const auto& [k, c] : owner->coefficients(*only)) {
        g = gcd_rec(g, c);
        if (g.is_one()) break;
      }
      core = g;
    } else {
      // main variable: smallest combined degree
      Var x = va.front();
      int best = std::numeric_limits<int>::max();
      for (Var v : va) {
        int d = std::max(pa.degree_in(v), pb.degree_in(v));
        if (d < best) {
          best = d;
          x = v;
        }
      }
      Dense da = to_dense(pa, x);
      Dense db = to_dense(pb, x);
      const LaurentPoly ca = content_of(da);
      const LaurentPoly cb = content_of(db);
      const LaurentPoly c = gcd_rec(ca, cb);
      const LaurentPoly ppa = divide_exact(pa, ca, "gcd content");
      const LaurentPoly ppb = divide_exact(pb, cb, "gcd content");
      LaurentPoly g;
      if (exact_divide(ppb, ppa)) {
        g = ppa;
      } else if (exact_divide(ppa, ppb)) {
        g = ppb;
      } else if (ppa.degree_in(x) == 0 || ppb.degree_in(x) == 0) {
        g = 1;
      } else {
        g = from_dense(subresultant_gcd(to_dense(ppa, x), to_dense(ppb, x)), x);
      }
      core = c * g;
    }
  }
  return core.times(mg).normalized_sign();
}

}  // namespace

LaurentPoly gcd(const LaurentPoly& p, const LaurentPoly& q) { return gcd_rec(p, q); }

// ---------------------------------------------------------------- den

bool is_ring_unit(const LaurentPoly& q) {
  if (!q.is_unit()) return false;
  for (const auto& f : q.least_term().mono.factors())
    if (f.var.tag() == VarTag::A) return false;
  return true;
}

std::optional<LaurentPoly> ring_divide(const LaurentPoly& p, const LaurentPoly& q) {
  auto d = exact_divide(p, q);
  if (!d) return d;
  for (Var w : d->variables())
    if (w.tag() == VarTag::A && d->min_degree_in(w) < std::min(0, p.min_degree_in(w))) return std::nullopt;
  return d;
}

int den(const LaurentPoly& p, Var v, const LaurentPoly& q) {
  if (p.is_zero()) throw Error(ErrorKind::Precondition, "den undefined on zero");
  if (q.is_zero() || is_ring_unit(q)) throw Error(ErrorKind::Precondition, "den undefined for a unit or zero divisor");
  if (p.min_degree_in(v) < 0) throw Error(ErrorKind::Precondition, "den needs a polynomial in the given variable");
  int best = std::numeric_limits<int>::max();
  for (const auto& [k, pk] : p.coefficients(v)) {
    if (k >= best) break;
    int s = 0;
    LaurentPoly cur = pk;
    while (k + s < best) {
      auto d = ring_divide(cur, q);
      if (!d) break;
      cur = std::move(*d);
      ++s;
    }
    best = std::min(best, k + s);
  }
  return best;
}

}  // namespace lpgraph
