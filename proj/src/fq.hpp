#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hecke {

class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Element of F_q, stored as an index in [0, q).  The index is the value of
/// the coefficient vector read as a base-p number, least significant digit
/// being the constant coefficient; for prime fields the index is the residue
/// itself.
struct FqElem {
  unsigned v = 0;
  friend bool operator==(FqElem, FqElem) = default;
  friend auto operator<=>(FqElem a, FqElem b) { return a.v <=> b.v; }
};

/// A point of P^1(F_q): either [1:b] or [0:1].
struct ProjPoint {
  bool infinity = false;
  FqElem b{};  // meaningful only when !infinity
  friend bool operator==(const ProjPoint&, const ProjPoint&) = default;
};

/// Arithmetic in F_q for q = p^k.  Extension fields are realised as
/// F_p[t]/(modulus) with a monic irreducible modulus; the modulus is checked
/// for irreducibility at construction by trial division.  Tables for add,
/// mul and inv are precomputed, so all operations are O(1) lookups.
class Fq {
 public:
  /// modulus: k+1 coefficients, constant term first, leading coefficient 1.
  /// Must be empty when k == 1.
  Fq(unsigned p, unsigned k, std::vector<unsigned> modulus = {});

  /// Construct from q, factoring q = p^k and using a built-in default
  /// modulus for the extension degrees needed at desk scale (q <= 25).
  static Fq from_order(unsigned q);
  static Fq from_order(unsigned q, const std::vector<unsigned>& modulus);

  unsigned p() const { return p_; }
  unsigned k() const { return k_; }
  unsigned q() const { return q_; }
  const std::vector<unsigned>& modulus() const { return modulus_; }

  FqElem zero() const { return FqElem{0}; }
  FqElem one() const { return FqElem{1}; }
  FqElem element(unsigned idx) const;

  FqElem add(FqElem a, FqElem b) const;
  FqElem sub(FqElem a, FqElem b) const;
  FqElem neg(FqElem a) const;
  FqElem mul(FqElem a, FqElem b) const;
  FqElem inv(FqElem a) const;  // throws on zero

  /// Coefficient vector of length k over Z/p, constant term first.
  std::vector<unsigned> coeffs(FqElem a) const;

  /// Canonical string form: the decimal index.
  std::string str(FqElem a) const;
  FqElem parse(const std::string& s) const;

  /// All q elements in canonical order (zero first, lexicographic on
  /// coefficient vectors read most-significant first).
  std::vector<FqElem> elements() const;

  /// The q affine points [1:b] in element order, followed by [0:1].
  std::vector<ProjPoint> projective_line() const;

  std::string str(const ProjPoint& w) const;  // "b" or "inf"

 private:
  void check(FqElem a) const;
  unsigned p_, k_, q_;
  std::vector<unsigned> modulus_;
  std::vector<unsigned> add_, mul_;  // q*q tables
  std::vector<unsigned> inv_, neg_;  // q tables
};

}  // namespace hecke
