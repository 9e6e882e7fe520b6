#include "fq.hpp"

#include <algorithm>

namespace hecke {

namespace {

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Polynomials over Z/p as coefficient vectors, constant term first,
// normalised (no trailing zeros).
using Poly = std::vector<unsigned>;

Poly trim(Poly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

Poly poly_mul(const Poly& a, const Poly& b, unsigned p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  return trim(r);
}

// Remainder of a by monic m.
Poly poly_mod(Poly a, const Poly& m, unsigned p) {
  a = trim(a);
  while (a.size() >= m.size()) {
    unsigned c = a.back();
    size_t shift = a.size() - m.size();
    for (size_t i = 0; i < m.size(); ++i) a[shift + i] = (a[shift + i] + p * p - c * m[i] % p) % p;
    a = trim(a);
  }
  return a;
}

bool irreducible(const Poly& m, unsigned p) {
  unsigned k = static_cast<unsigned>(m.size()) - 1;
  if (k == 0) return false;
  // trial division by all monic polynomials of degree 1..k/2
  for (unsigned d = 1; 2 * d <= k; ++d) {
    unsigned count = 1;
    for (unsigned i = 0; i < d; ++i) count *= p;  // p^d lower coefficient choices
    for (unsigned idx = 0; idx < count; ++idx) {
      Poly div(d + 1, 0);
      unsigned t = idx;
      for (unsigned i = 0; i < d; ++i) {
        div[i] = t % p;
        t /= p;
      }
      div[d] = 1;
      if (poly_mod(m, div, p).empty()) return false;
    }
  }
  return true;
}

std::vector<unsigned> default_modulus(unsigned p, unsigned k) {
  // constant term first, including the leading 1
  if (p == 2 && k == 2) return {1, 1, 1};        // t^2+t+1
  if (p == 2 && k == 3) return {1, 1, 0, 1};     // t^3+t+1
  if (p == 2 && k == 4) return {1, 1, 0, 0, 1};  // t^4+t+1
  if (p == 3 && k == 2) return {1, 0, 1};        // t^2+1
  if (p == 5 && k == 2) return {1, 1, 1};        // t^2+t+1
  throw error("no built-in modulus for p=" + std::to_string(p) + ", k=" + std::to_string(k) +
              "; supply one explicitly");
}

}  // namespace

Fq::Fq(unsigned p, unsigned k, std::vector<unsigned> modulus) : p_(p), k_(k) {
  if (!is_prime(p)) throw error("characteristic " + std::to_string(p) + " is not prime");
  if (k < 1) throw error("extension degree must be >= 1");
  q_ = 1;
  for (unsigned i = 0; i < k; ++i) {
    if (q_ > 100000 / p) throw error("field too large");
    q_ *= p;
  }
  if (k == 1) {
    if (!modulus.empty()) throw error("modulus only allowed for k > 1");
  } else {
    if (modulus.empty()) modulus = default_modulus(p, k);
    if (modulus.size() != k + 1) throw error("modulus must have k+1 coefficients, constant first");
    if (modulus.back() % p != 1) throw error("modulus must be monic");
    for (auto& c : modulus) c %= p;
    if (!irreducible(modulus, p)) throw error("modulus is reducible over F_p");
  }
  modulus_ = modulus;

  // element index <-> coefficient vector: digit i of the index (base p) is
  // the coefficient of t^i
  auto to_poly = [&](unsigned idx) {
    Poly a;
    for (unsigned i = 0; i < k_; ++i) {
      a.push_back(idx % p_);
      idx /= p_;
    }
    return trim(a);
  };
  auto to_idx = [&](const Poly& a) {
    unsigned idx = 0;
    unsigned pw = 1;
    for (size_t i = 0; i < a.size(); ++i) {
      idx += a[i] * pw;
      pw *= p_;
    }
    return idx;
  };

  add_.assign(size_t(q_) * q_, 0);
  mul_.assign(size_t(q_) * q_, 0);
  neg_.assign(q_, 0);
  inv_.assign(q_, 0);
  for (unsigned a = 0; a < q_; ++a) {
    Poly pa = to_poly(a);
    Poly na;
    for (unsigned c : pa) na.push_back((p_ - c) % p_);
    neg_[a] = to_idx(trim(na));
    for (unsigned b = 0; b < q_; ++b) {
      Poly pb = to_poly(b);
      Poly s(std::max(pa.size(), pb.size()), 0);
      for (size_t i = 0; i < s.size(); ++i)
        s[i] = ((i < pa.size() ? pa[i] : 0) + (i < pb.size() ? pb[i] : 0)) % p_;
      add_[size_t(a) * q_ + b] = to_idx(trim(s));
      Poly m = poly_mul(pa, pb, p_);
      if (k_ > 1) m = poly_mod(m, modulus_, p_);
      mul_[size_t(a) * q_ + b] = to_idx(m);
    }
  }
  for (unsigned a = 1; a < q_; ++a)
    for (unsigned b = 1; b < q_; ++b)
      if (mul_[size_t(a) * q_ + b] == 1) inv_[a] = b;
}

Fq Fq::from_order(unsigned q) { return from_order(q, {}); }

Fq Fq::from_order(unsigned q, const std::vector<unsigned>& modulus) {
  if (q < 2) throw error("q must be at least 2");
  unsigned p = 2;
  while (q % p != 0) {
    ++p;
    if (p > q) throw error("q is not a prime power");
  }
  unsigned k = 0, t = q;
  while (t % p == 0) {
    t /= p;
    ++k;
  }
  if (t != 1) throw error(std::to_string(q) + " is not a prime power");
  return Fq(p, k, modulus);
}

void Fq::check(FqElem a) const {
  if (a.v >= q_) throw error("element index out of range for F_" + std::to_string(q_));
}

FqElem Fq::element(unsigned idx) const {
  FqElem a{idx};
  check(a);
  return a;
}

FqElem Fq::add(FqElem a, FqElem b) const {
  check(a);
  check(b);
  return FqElem{add_[size_t(a.v) * q_ + b.v]};
}

FqElem Fq::neg(FqElem a) const {
  check(a);
  return FqElem{neg_[a.v]};
}

FqElem Fq::sub(FqElem a, FqElem b) const { return add(a, neg(b)); }

FqElem Fq::mul(FqElem a, FqElem b) const {
  check(a);
  check(b);
  return FqElem{mul_[size_t(a.v) * q_ + b.v]};
}

FqElem Fq::inv(FqElem a) const {
  check(a);
  if (a.v == 0) throw error("inversion of zero in F_" + std::to_string(q_));
  return FqElem{inv_[a.v]};
}

std::vector<unsigned> Fq::coeffs(FqElem a) const {
  check(a);
  std::vector<unsigned> c(k_);
  unsigned v = a.v;
  for (unsigned i = 0; i < k_; ++i) {
    c[i] = v % p_;
    v /= p_;
  }
  return c;
}

std::string Fq::str(FqElem a) const {
  check(a);
  return std::to_string(a.v);
}

FqElem Fq::parse(const std::string& s) const {
  size_t pos = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(s, &pos);
  } catch (const std::exception&) {
    throw error("bad field element '" + s + "'");
  }
  if (pos != s.size()) throw error("bad field element '" + s + "'");
  return element(static_cast<unsigned>(v));
}

std::vector<FqElem> Fq::elements() const {
  std::vector<FqElem> r;
  r.reserve(q_);
  for (unsigned i = 0; i < q_; ++i) r.push_back(FqElem{i});
  return r;
}

std::vector<ProjPoint> Fq::projective_line() const {
  std::vector<ProjPoint> r;
  r.reserve(q_ + 1);
  for (unsigned i = 0; i < q_; ++i) r.push_back(ProjPoint{false, FqElem{i}});
  r.push_back(ProjPoint{true, FqElem{0}});
  return r;
}

std::string Fq::str(const ProjPoint& w) const {
  return w.infinity ? std::string("inf") : str(w.b);
}

}  // namespace hecke
