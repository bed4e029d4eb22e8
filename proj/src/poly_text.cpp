#include <algorithm>
#include <cctype>
#include <map>

#include "lpgraph/poly.hpp"

namespace lpgraph {

namespace {

std::string render_polynomial(const LaurentPoly& p) {
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    const bool neg = t.coeff < 0;
    const Integer mag = neg ? Integer(-t.coeff) : t.coeff;
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    if (t.mono.is_one()) {
      out += mag.str();
    } else if (mag == 1) {
      out += t.mono.to_string();
    } else {
      out += mag.str() + "*" + t.mono.to_string();
    }
  }
  return out;
}

}  // namespace

std::string render(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::map<Var, int> neg;
  for (const auto& t : p.terms())
    for (const auto& f : t.mono.factors())
      if (f.exp < 0) neg[f.var] = std::max(neg[f.var], -f.exp);
  if (neg.empty()) return render_polynomial(p);
  std::vector<VarPow> pairs;
  for (auto [v, e] : neg) pairs.push_back({v, e});
  const Monomial d = Monomial::from_pairs(std::move(pairs));
  const LaurentPoly num = p.times(d);
  std::string out = render_polynomial(num);
  if (num.size() > 1) out = "(" + out + ")";
  std::string ds = d.to_string();
  if (d.factors().size() > 1) ds = "(" + ds + ")";
  return out + "/" + ds;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  LaurentPoly parse_all() {
    LaurentPoly p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::InvalidInput, "polynomial parse error at offset " + std::to_string(pos_) + ": " + what);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  LaurentPoly expr() {
    LaurentPoly p = term();
    while (true) {
      if (eat('+')) {
        p += term();
      } else if (eat('-')) {
        p -= term();
      } else {
        return p;
      }
    }
  }

  LaurentPoly term() {
    LaurentPoly p = unary();
    while (true) {
      if (eat('*')) {
        p = p * unary();
      } else if (eat('/')) {
        LaurentPoly q = unary();
        if (q.is_zero()) fail("division by zero");
        auto r = exact_divide(p, q);
        if (!r) fail("inexact division");
        p = std::move(*r);
      } else {
        return p;
      }
    }
  }

  LaurentPoly unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  LaurentPoly power() {
    LaurentPoly base = atom();
    if (!eat('^')) return base;
    bool paren = eat('(');
    bool negative = eat('-');
    skip();
    const std::string digits = read_digits();
    if (digits.empty()) fail("expected exponent");
    if (digits.size() > 6) fail("exponent too large");
    if (paren && !eat(')')) fail("expected ')'");
    const unsigned e = static_cast<unsigned>(std::stoul(digits));
    LaurentPoly r = base.pow(e);
    if (!negative) return r;
    auto inv = exact_divide(LaurentPoly(1), r);
    if (!inv) fail("negative power of a non-unit");
    return *inv;
  }

  std::string read_digits() {
    std::string d;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) d += s_[pos_++];
    return d;
  }

  LaurentPoly atom() {
    skip();
    if (eat('(')) {
      LaurentPoly p = expr();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) return LaurentPoly(Integer(read_digits()));
    if (c == 'A' || c == 'X' || c == 'Y' || c == 'Z') {
      const std::size_t start = pos_++;
      if (c == 'Y' && pos_ < s_.size() && s_[pos_] == '{') {
        while (pos_ < s_.size() && s_[pos_] != '}') ++pos_;
        if (pos_ >= s_.size()) fail("unterminated Y index");
        ++pos_;
      } else {
        read_digits();
      }
      return LaurentPoly::var(parse_var(s_.substr(start, pos_ - start)));
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Var parse_var(std::string_view text) {
  auto bad = [&]() -> Error { return Error(ErrorKind::InvalidInput, "bad variable name: " + std::string(text)); };
  if (text.size() < 2) throw bad();
  const char tag = text[0];
  std::string_view rest = text.substr(1);
  if (tag == 'Y') {
    VertexSet s;
    if (rest.front() == '{') {
      if (rest.back() != '}') throw bad();
      std::string body(rest.substr(1, rest.size() - 2));
      std::size_t i = 0;
      while (i < body.size()) {
        std::size_t j = body.find(',', i);
        if (j == std::string::npos) j = body.size();
        const std::string num = body.substr(i, j - i);
        if (num.empty() || num.size() > 2 || !std::all_of(num.begin(), num.end(), ::isdigit)) throw bad();
        s.insert(std::stoi(num));
        i = j + 1;
      }
    } else {
      for (char ch : rest) {
        if (ch < '1' || ch > '9') throw bad();
        s.insert(ch - '0');
      }
    }
    if (s.empty()) throw bad();
    return Var::Y(s);
  }
  if (rest.size() > 6 || !std::all_of(rest.begin(), rest.end(), ::isdigit)) throw bad();
  const int i = std::stoi(std::string(rest));
  if (i < 1) throw bad();
  switch (tag) {
    case 'A':
      return Var::A(i);
    case 'X':
      return Var::X(i);
    case 'Z':
      return Var::Z(i);
    default:
      throw bad();
  }
}

LaurentPoly parse_poly(std::string_view text) { return Parser(text).parse_all(); }

}  // namespace lpgraph
