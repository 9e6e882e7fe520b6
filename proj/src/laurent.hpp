#pragma once

#include <map>
#include <string>
#include <utility>

#include "fq.hpp"

namespace hecke {

/// Exact element of F_q[pi, pi^-1], stored as a sparse degree -> coefficient
/// map with no zero coefficients.  The zero polynomial is the empty map.
class LaurentPoly {
 public:
  explicit LaurentPoly(const Fq& F) : F_(&F) {}

  static LaurentPoly zero(const Fq& F) { return LaurentPoly(F); }
  static LaurentPoly one(const Fq& F) { return monomial(F, 0, F.one()); }
  static LaurentPoly monomial(const Fq& F, int deg, FqElem c);
  static LaurentPoly constant(const Fq& F, FqElem c) { return monomial(F, 0, c); }

  const Fq& field() const { return *F_; }
  bool is_zero() const { return coeffs_.empty(); }
  int valuation() const;   // throws on zero
  int max_degree() const;  // throws on zero
  FqElem coeff(int deg) const;
  const std::map<int, FqElem>& coeffs() const { return coeffs_; }

  void set_coeff(int deg, FqElem c);  // canonicalising

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator-() const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }

  /// Multiply by pi^k.
  LaurentPoly shift(int k) const;

  /// Restriction to degrees lo <= i < hi.
  LaurentPoly window(int lo, int hi) const;

  std::string str() const;  // debugging form, e.g. "2*pi^-1 + 1 + pi^3"

 private:
  const Fq* F_;
  std::map<int, FqElem> coeffs_;
};

/// Element of F_q((pi)) known exactly on degrees [val, prec).
struct TruncatedSeries {
  LaurentPoly poly;  // support contained in [-inf, prec)
  int prec;          // exclusive precision bound

  int valuation() const { return poly.valuation(); }
};

/// b = s * pi^k with s a unit (valuation 0); returns (k, s).  Throws on zero.
std::pair<int, LaurentPoly> unit_factor(const LaurentPoly& b);

/// Inverse of a unit s to precision M: result t has valuation 0, support in
/// [0, M), and s*t = 1 on all degrees < M.  Coefficients follow the linear
/// recurrence t_0 = s_0^-1, t_j = -s_0^-1 * sum_{i=1..j} s_i t_{j-i}.
TruncatedSeries inverse_mod(const LaurentPoly& s, int M);

/// Exact window of the quotient b/d: the restriction of b*d^-1 to degrees
/// [lo, hi).  d must be nonzero.  Internally materialises d^-1 only to the
/// precision the window needs, so the result is exact.
LaurentPoly divide_window(const LaurentPoly& b, const LaurentPoly& d, int lo, int hi);

}  // namespace hecke
