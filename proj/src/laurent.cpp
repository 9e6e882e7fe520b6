#include "laurent.hpp"

namespace hecke {

LaurentPoly LaurentPoly::monomial(const Fq& F, int deg, FqElem c) {
  LaurentPoly r(F);
  if (c.v != 0) r.coeffs_[deg] = c;
  return r;
}

int LaurentPoly::valuation() const {
  if (is_zero()) throw error("valuation of zero");
  return coeffs_.begin()->first;
}

int LaurentPoly::max_degree() const {
  if (is_zero()) throw error("max degree of zero");
  return coeffs_.rbegin()->first;
}

FqElem LaurentPoly::coeff(int deg) const {
  auto it = coeffs_.find(deg);
  return it == coeffs_.end() ? F_->zero() : it->second;
}

void LaurentPoly::set_coeff(int deg, FqElem c) {
  if (c.v == 0)
    coeffs_.erase(deg);
  else
    coeffs_[deg] = c;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  for (auto& [d, c] : o.coeffs_) r.set_coeff(d, F_->add(r.coeff(d), c));
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r(*F_);
  for (auto& [d, c] : coeffs_) r.coeffs_[d] = F_->neg(c);
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly r(*F_);
  for (auto& [d1, c1] : coeffs_)
    for (auto& [d2, c2] : o.coeffs_) r.set_coeff(d1 + d2, F_->add(r.coeff(d1 + d2), F_->mul(c1, c2)));
  return r;
}

LaurentPoly LaurentPoly::shift(int k) const {
  LaurentPoly r(*F_);
  for (auto& [d, c] : coeffs_) r.coeffs_[d + k] = c;
  return r;
}

LaurentPoly LaurentPoly::window(int lo, int hi) const {
  LaurentPoly r(*F_);
  if (lo >= hi) return r;
  for (auto it = coeffs_.lower_bound(lo); it != coeffs_.end() && it->first < hi; ++it)
    r.coeffs_[it->first] = it->second;
  return r;
}

std::string LaurentPoly::str() const {
  if (is_zero()) return "0";
  std::string s;
  for (auto& [d, c] : coeffs_) {
    if (!s.empty()) s += " + ";
    if (d == 0) {
      s += F_->str(c);
    } else {
      if (c.v != 1) s += F_->str(c) + "*";
      s += "pi";
      if (d != 1) s += "^" + std::to_string(d);
    }
  }
  return s;
}

std::pair<int, LaurentPoly> unit_factor(const LaurentPoly& b) {
  int k = b.valuation();  // throws on zero
  return {k, b.shift(-k)};
}

TruncatedSeries inverse_mod(const LaurentPoly& s, int M) {
  const Fq& F = s.field();
  if (s.is_zero() || s.valuation() != 0) throw error("inverse_mod requires a unit (valuation 0)");
  LaurentPoly t(F);
  if (M <= 0) return {t, M};
  FqElem s0inv = F.inv(s.coeff(0));
  t.set_coeff(0, s0inv);
  for (int j = 1; j < M; ++j) {
    FqElem acc = F.zero();
    // only the stored coefficients of s contribute
    for (auto& [i, si] : s.coeffs()) {
      if (i < 1) continue;
      if (i > j) break;
      acc = F.add(acc, F.mul(si, t.coeff(j - i)));
    }
    t.set_coeff(j, F.neg(F.mul(s0inv, acc)));
  }
  return {t, M};
}

LaurentPoly divide_window(const LaurentPoly& b, const LaurentPoly& d, int lo, int hi) {
  const Fq& F = b.field();
  if (d.is_zero()) throw error("division by zero");
  if (b.is_zero() || lo >= hi) return LaurentPoly::zero(F);
  auto [k, s] = unit_factor(d);
  // degrees [lo, hi) of b/d correspond to degrees [lo+k, hi+k) of b*s^-1
  int prec = hi + k - b.valuation();
  if (prec <= 0) return LaurentPoly::zero(F);
  TruncatedSeries t = inverse_mod(s, prec);
  return (b * t.poly).shift(-k).window(lo, hi);
}

}  // namespace hecke
