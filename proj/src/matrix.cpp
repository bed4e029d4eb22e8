#include "lpgraph/matrix.hpp"

namespace lpgraph {

namespace {

// Brings a nonzero entry of column c (rows >= r) to row r; false when none.
template <class IsZero, class T>
bool pivot_into(DenseMatrix<T>& m, std::size_t r, std::size_t c, IsZero is_zero, int& sign) {
  for (std::size_t i = r; i < m.rows(); ++i)
    if (!is_zero(m(i, c))) {
      if (i != r) {
        m.swap_rows(i, r);
        sign = -sign;
      }
      return true;
    }
  return false;
}

}  // namespace

LaurentPoly determinant(DenseMatrix<LaurentPoly> m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::Precondition, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  int sign = 1;
  LaurentPoly prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (!pivot_into(m, k, k, [](const LaurentPoly& p) { return p.is_zero(); }, sign)) return {};
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        LaurentPoly v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        m(i, j) = prev.is_one() ? std::move(v) : divide_exact(v, prev, "Bareiss step");
      }
      m(i, k) = LaurentPoly{};
    }
    prev = m(k, k);
  }
  return sign > 0 ? m(n - 1, n - 1) : -m(n - 1, n - 1);
}

std::size_t rank(DenseMatrix<LaurentPoly> m) {
  std::size_t r = 0;
  int sign = 1;
  LaurentPoly prev = 1;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    if (!pivot_into(m, r, c, [](const LaurentPoly& p) { return p.is_zero(); }, sign)) continue;
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      for (std::size_t j = c + 1; j < m.cols(); ++j) {
        LaurentPoly v = m(i, j) * m(r, c) - m(i, c) * m(r, j);
        m(i, j) = prev.is_one() ? std::move(v) : divide_exact(v, prev, "fraction-free rank");
      }
      m(i, c) = LaurentPoly{};
    }
    prev = m(r, c);
    ++r;
  }
  return r;
}

std::size_t rank_mod_prime(const DenseMatrix<Integer>& in) {
  using u64 = std::uint64_t;
  using u128 = unsigned __int128;
  constexpr u64 p = (u64{1} << 61) - 1;
  auto mul = [](u64 a, u64 b) { return static_cast<u64>((static_cast<u128>(a) * b) % p); };
  auto inv = [&](u64 a) {
    u64 r = 1, e = p - 2;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  };
  DenseMatrix<u64> m(in.rows(), in.cols());
  for (std::size_t i = 0; i < in.rows(); ++i)
    for (std::size_t j = 0; j < in.cols(); ++j) {
      Integer v = in(i, j) % Integer(p);
      if (v < 0) v += p;
      m(i, j) = static_cast<u64>(v);
    }
  std::size_t r = 0;
  int sign = 1;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    if (!pivot_into(m, r, c, [](u64 v) { return v == 0; }, sign)) continue;
    const u64 iv = inv(m(r, c));
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (m(i, c) == 0) continue;
      const u64 f = mul(m(i, c), iv);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) = (m(i, j) + p - mul(f, m(r, j))) % p;
    }
    ++r;
  }
  return r;
}

}  // namespace lpgraph
