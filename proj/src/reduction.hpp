#pragma once

#include "laurent.hpp"

namespace hecke {

/// Invertible 2x2 matrix over F_q((pi)) with Laurent-polynomial entries.
struct Mat2 {
  LaurentPoly a, b, c, d;  // (a b; c d)

  static Mat2 identity(const Fq& F);
  /// p_n = diag(pi^-n, 1), the standard representative of vertex c_n.
  static Mat2 standard_rep(const Fq& F, int n);

  LaurentPoly det() const { return a * d - b * c; }
  Mat2 operator*(const Mat2& o) const;
};

/// Upper-triangular form of M: returns M*k for some k in K_x with zero
/// lower-left entry.  The quotient entry used to clear position (2,1) is
/// computed to finite precision; the cancelled entry is asserted to vanish
/// on all computed degrees and then dropped.  Throws on singular input.
Mat2 iwasawa(const Mat2& m);

/// The unique n >= 0 with M in Gamma * p_n * Z_x * K_x, computed by the
/// upper-triangular reduction loop.  Throws on singular input.
int reduce(const Mat2& m);

}  // namespace hecke
