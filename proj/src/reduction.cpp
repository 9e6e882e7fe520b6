#include "reduction.hpp"

#include <algorithm>
#include <cstdlib>

namespace hecke {

Mat2 Mat2::identity(const Fq& F) {
  return Mat2{LaurentPoly::one(F), LaurentPoly::zero(F), LaurentPoly::zero(F), LaurentPoly::one(F)};
}

Mat2 Mat2::standard_rep(const Fq& F, int n) {
  return Mat2{LaurentPoly::monomial(F, -n, F.one()), LaurentPoly::zero(F), LaurentPoly::zero(F),
              LaurentPoly::one(F)};
}

Mat2 Mat2::operator*(const Mat2& o) const {
  return Mat2{a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

namespace {

// Terminal state is the matrix (pi^n, b; 0, 1); repeatedly window b to
// degrees [1, n) and strip the unit factor until b vanishes, then the class
// is p_|n|.
int reduce_loop(int n, LaurentPoly b) {
  int cap = std::abs(n) + 8;
  if (!b.is_zero()) cap += b.max_degree() - b.valuation();
  while (!b.is_zero()) {
    auto [k, s] = unit_factor(b);
    if (k < 1 || k > n - 1) throw error("internal error: window invariant violated in reduction");
    n -= 2 * k;
    // next b is s^-1 * pi^-k restricted to degrees [1, n)
    int prec = n + k;  // degrees [1+k, n+k) of s^-1
    if (prec <= 1)
      b = LaurentPoly::zero(b.field());
    else
      b = inverse_mod(s, prec).poly.shift(-k).window(1, n);
    if (--cap < 0) throw error("internal error: reduction iteration cap exceeded");
  }
  return std::abs(n);
}

}  // namespace

Mat2 iwasawa(const Mat2& m_in) {
  Mat2 m = m_in;
  const Fq& F = m.a.field();
  if (m.det().is_zero()) throw error("singular matrix");
  if (m.c.is_zero()) return m;
  if (m.d.is_zero() || m.c.valuation() < m.d.valuation()) {
    std::swap(m.a, m.b);
    std::swap(m.c, m.d);
  }
  // clear (2,1) by the column operation (1 0; -c/d 1) in K_x
  int maxdeg = std::max(m.c.max_degree(), m.d.max_degree());
  if (!m.a.is_zero()) maxdeg = std::max(maxdeg, m.a.max_degree());
  if (!m.b.is_zero()) maxdeg = std::max(maxdeg, m.b.max_degree());
  int vd = m.d.valuation();
  int hi = maxdeg - vd + 1;
  // keep enough of the quotient that the valuation of the new (1,1) entry,
  // v(det) - v(d), is inside the exact range
  if (!m.b.is_zero()) hi = std::max(hi, m.det().valuation() - vd - m.b.valuation() + 2);
  LaurentPoly u = divide_window(m.c, m.d, m.c.valuation() - vd, hi);
  LaurentPoly cleared = m.c - u * m.d;
  if (!cleared.window(cleared.is_zero() ? 0 : cleared.valuation(), hi + vd).is_zero())
    throw error("internal error: iwasawa cancellation failed");
  Mat2 r{m.a - u * m.b, m.b, LaurentPoly::zero(F), m.d};
  return r;
}

int reduce(const Mat2& m_in) {
  Mat2 m = m_in;
  LaurentPoly det = m.det();
  if (det.is_zero()) throw error("singular matrix");
  if (!m.c.is_zero() && (m.d.is_zero() || m.c.valuation() < m.d.valuation())) {
    std::swap(m.a, m.b);
    std::swap(m.c, m.d);
  }
  // After conceptually clearing (2,1), the diagonal is (a', d) with
  // a'*d = det up to a unit, so v(a') = v(det) - v(d); the upper-right entry
  // stays m.b.  Only the window [1, n) of b/d is ever needed, which
  // divide_window produces exactly.
  int vd = m.d.valuation();
  int n = det.valuation() - 2 * vd;
  LaurentPoly b = divide_window(m.b, m.d, 1, n);
  return reduce_loop(n, b);
}

}  // namespace hecke
