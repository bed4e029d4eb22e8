#pragma once

#include <boost/container/small_vector.hpp>
#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lpgraph/vertex_set.hpp"

namespace lpgraph {

using Integer = boost::multiprecision::cpp_int;

enum class VarTag : std::uint8_t { A = 0, X = 1, Y = 2, Z = 3 };

/// A variable of the global universe: A_i, X_i, Z_i (index = vertex or
/// position) or Y_I (index = bitmask of I).
///
/// The packed code orders variables by tag first (A < X < Y < Z), then index.
class Var {
 public:
  static constexpr int kIndexBits = 44;

  constexpr Var() = default;
  static Var A(int i) { return Var(VarTag::A, check_index(i)); }
  static Var X(int i) { return Var(VarTag::X, check_index(i)); }
  static Var Z(int i) { return Var(VarTag::Z, check_index(i)); }
  static Var Y(VertexSet s);
  static constexpr Var from_code(std::uint64_t code) { return Var(code); }

  constexpr std::uint64_t code() const { return code_; }
  constexpr VarTag tag() const { return static_cast<VarTag>(code_ >> kIndexBits); }
  constexpr std::uint64_t index() const { return code_ & ((std::uint64_t{1} << kIndexBits) - 1); }
  /// Vertex set of a Y variable.
  VertexSet y_set() const { return VertexSet(index()); }

  /// A1, X3, Z2, Y124; Y{1,10} when a member exceeds 9.
  std::string name() const;

  friend constexpr bool operator==(Var, Var) = default;
  friend constexpr auto operator<=>(Var a, Var b) { return a.code_ <=> b.code_; }

 private:
  constexpr explicit Var(std::uint64_t code) : code_(code) {}
  constexpr Var(VarTag t, std::uint64_t index) : code_((std::uint64_t(t) << kIndexBits) | index) {}
  static std::uint64_t check_index(int i);

  std::uint64_t code_ = 0;
};

struct VarPow {
  Var var;
  int exp;
  friend bool operator==(const VarPow&, const VarPow&) = default;
};

/// Laurent monomial: a product of variable powers with nonzero integer
/// exponents, kept sorted by variable.
class Monomial {
 public:
  using Factors = boost::container::small_vector<VarPow, 4>;

  Monomial() = default;
  static Monomial of(Var v, int e = 1);
  /// Takes arbitrary (var, exp) pairs; merges repeats and drops zeros.
  static Monomial from_pairs(std::vector<VarPow> pairs);

  const Factors& factors() const { return f_; }
  int degree() const { return deg_; }
  bool is_one() const { return f_.empty(); }
  bool is_polynomial() const;
  int exponent(Var v) const;

  Monomial inverse() const;
  /// Factors with positive exponents.
  Monomial positive_part() const;
  /// Inverse of the factors with negative exponents (so a polynomial monomial).
  Monomial negative_part() const;
  Monomial without(Var v) const;
  /// True iff other / *this has no negative exponent.
  bool divides(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend Monomial operator/(const Monomial& a, const Monomial& b) { return a * b.inverse(); }
  /// Componentwise minimum / maximum of exponents (absent = 0).
  friend Monomial min(const Monomial& a, const Monomial& b);
  friend Monomial max(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.f_ == b.f_; }
  std::size_t hash() const;

  /// "X1*A2^2", "1" for the empty monomial; exponents may be negative.
  std::string to_string() const;

 private:
  Factors f_;
  int deg_ = 0;
};

/// Global term order: total degree ascending; within a degree, at the first
/// variable where exponents differ, the larger exponent comes first.
/// Translation invariant, so multiplying by a monomial keeps terms sorted.
bool term_less(const Monomial& a, const Monomial& b);

struct TermLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return term_less(a, b); }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// Sparse Laurent polynomial with arbitrary-precision integer coefficients.
///
/// Terms are stored sorted by term_less with no zero coefficients, so
/// structural equality is mathematical equality.
class LaurentPoly {
 public:
  struct Term {
    Monomial mono;
    Integer coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  LaurentPoly() = default;
  LaurentPoly(long long c);  // NOLINT(google-explicit-constructor)
  LaurentPoly(int c) : LaurentPoly(static_cast<long long>(c)) {}  // NOLINT
  explicit LaurentPoly(const Integer& c);
  static LaurentPoly var(Var v) { return monomial(Monomial::of(v)); }
  static LaurentPoly monomial(const Monomial& m, const Integer& c = 1);
  /// Builds from unsorted terms; sums repeats and drops zeros.
  static LaurentPoly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  bool is_one() const { return terms_.size() == 1 && terms_[0].mono.is_one() && terms_[0].coeff == 1; }
  /// Single term (zero is not a monomial).
  bool is_monomial() const { return terms_.size() == 1; }
  /// Single term with coefficient +-1, i.e. a unit of the Laurent ring.
  bool is_unit() const;
  bool is_polynomial() const;
  /// Constant value; throws Precondition when not constant.
  Integer constant_value() const;

  const Term& least_term() const { return terms_.front(); }
  const Term& leading_term() const { return terms_.back(); }

  std::vector<Var> variables() const;
  bool involves(Var v) const;
  /// Max / min exponent of v over all terms (0 for the zero polynomial).
  int degree_in(Var v) const;
  int min_degree_in(Var v) const;
  int total_degree() const;

  /// p = sum_k c_k v^k; returns (k, c_k) for nonzero c_k, k ascending.
  std::vector<std::pair<int, LaurentPoly>> coefficients(Var v) const;

  /// Splits p = m * q where m is a monomial and q is a polynomial divisible
  /// by no variable. Zero gives (1, 0).
  std::pair<Monomial, LaurentPoly> split() const;
  /// gcd of coefficients, nonnegative.
  Integer integer_content() const;
  /// Negates when the least term has a negative coefficient.
  LaurentPoly normalized_sign() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly times(const Monomial& m, const Integer& c = 1) const;
  LaurentPoly pow(unsigned e) const;

  /// Replaces v by expr. Throws Precondition when v occurs with a negative
  /// exponent and expr is not a monomial.
  LaurentPoly substitute(Var v, const LaurentPoly& expr) const;
  /// Simultaneous substitution of every mapped variable. Negative powers of
  /// non-monomial values are resolved by exact division; nullopt when the
  /// result is not a Laurent polynomial.
  std::optional<LaurentPoly> try_evaluate(const std::map<Var, LaurentPoly>& values) const;
  /// As try_evaluate but throws Internal on a non-Laurent result.
  LaurentPoly evaluate(const std::map<Var, LaurentPoly>& values) const;
  /// Variable renaming; the map must be injective on the variables used.
  LaurentPoly rename(const std::map<Var, Var>& names) const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }
  std::size_t hash() const;

  /// Canonical text form, see render().
  std::string to_string() const;

 private:
  std::vector<Term> terms_;
};

struct LaurentPolyHash {
  std::size_t operator()(const LaurentPoly& p) const { return p.hash(); }
};

/// Exact quotient p / q in the Laurent ring, or nullopt when q does not
/// divide p. Throws Precondition on q = 0.
std::optional<LaurentPoly> exact_divide(const LaurentPoly& p, const LaurentPoly& q);
/// exact_divide that throws Internal on failure; `what` names the site.
LaurentPoly divide_exact(const LaurentPoly& p, const LaurentPoly& q, const char* what = "exact division");

/// A-variables generate the coefficient ring Z[A]; the others are invertible.
/// A unit of Z[A][others^+-1]: +-1 times a monomial free of A.
bool is_ring_unit(const LaurentPoly& q);
/// exact_divide, refused when the quotient gains a negative A-exponent that p
/// did not have.
std::optional<LaurentPoly> ring_divide(const LaurentPoly& p, const LaurentPoly& q);

/// Greatest common divisor over Z[vars], sign normalised so the least term
/// has a positive coefficient. Monomial factors are treated as in the
/// polynomial ring (componentwise minimum of the monomial contents).
LaurentPoly gcd(const LaurentPoly& p, const LaurentPoly& q);

/// min over k with p_k != 0 of k + max{s : q^s divides p_k}, where
/// p = sum_k p_k v^k, divisibility in the sense of ring_divide. Throws
/// Precondition on p = 0, on negative powers of v and on unit q.
int den(const LaurentPoly& p, Var v, const LaurentPoly& q);

/// Canonical text: terms in ascending term order joined by " + " / " - ",
/// factors by "*", powers as "^e". Negative exponents are collected into a
/// monomial denominator: "(A4 + X2)/X4", "1/(X1*X2)".
std::string render(const LaurentPoly& p);
/// Parses + - * / ^ and parentheses over integers and variable names.
/// Division must be exact. Throws InvalidInput on syntax errors.
LaurentPoly parse_poly(std::string_view text);
/// Parses a single variable name (A3, X1, Z2, Y124, Y{1,10}).
Var parse_var(std::string_view text);

}  // namespace lpgraph

template <>
struct std::hash<lpgraph::Var> {
  std::size_t operator()(lpgraph::Var v) const noexcept { return std::hash<std::uint64_t>{}(v.code()); }
};
