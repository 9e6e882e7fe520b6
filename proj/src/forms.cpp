#include "forms.hpp"

#include <cmath>
#include <mutex>
#include <tuple>

namespace hecke {

std::vector<Rational> extend_along_cusp(const Rational& lambda, const Rational& f0,
                                        const Rational& f1, const Weight& q_x, int N) {
  std::vector<Rational> f{f0};
  if (N >= 1) f.push_back(f1);
  for (int i = 1; i < N; ++i) f.push_back(lambda * f[i] - Rational(q_x) * f[i - 1]);
  return f;
}

std::vector<std::complex<double>> extend_along_cusp(std::complex<double> lambda,
                                                    std::complex<double> f0,
                                                    std::complex<double> f1, double q_x, int N) {
  std::vector<std::complex<double>> f{f0};
  if (N >= 1) f.push_back(f1);
  for (int i = 1; i < N; ++i) f.push_back(lambda * f[i] - q_x * f[i - 1]);
  return f;
}

std::vector<std::vector<Rational>> nullspace(std::vector<std::vector<Rational>> rows,
                                             std::size_t ncols) {
  for (auto& r : rows)
    if (r.size() != ncols) throw error("ragged matrix");
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t col = 0; col < ncols && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    Rational inv = rows[rank][col];
    for (auto& x : rows[rank]) x /= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      Rational factor = rows[r][col];
      for (std::size_t c = 0; c < ncols; ++c) rows[r][c] -= factor * rows[rank][c];
    }
    pivot_col.push_back(col);
    ++rank;
  }
  std::vector<bool> is_pivot(ncols, false);
  for (auto c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(ncols, Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < rank; ++r) v[pivot_col[r]] = -rows[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<std::vector<Rational>> eigenfunction_on_graph(const HeckeGraph& g,
                                                          const Rational& lambda) {
  const int N = g.window();
  if (N < 2 * g.reach()) throw error("window too small for eigenfunction solve");
  std::vector<std::vector<Rational>> rows;
  for (int v = 0; v + g.reach() <= N; ++v) {
    std::vector<Rational> row(N + 1, Rational(0));
    for (auto& [w, m] : g.star(v)) {
      if (w > N) throw error("edge leaves the window");
      row[w] += Rational(m);
    }
    row[v] -= lambda;
    rows.push_back(std::move(row));
  }
  return nullspace(std::move(rows), N + 1);
}

std::complex<double> eisenstein_eigenvalue(std::complex<double> t, double q_x) {
  if (t == std::complex<double>(0.0, 0.0)) throw error("t must be nonzero");
  return std::sqrt(q_x) * (t + 1.0 / t);
}

namespace {

// Star of c_0 under the degree-d generator, memoised across solver calls:
// the enumeration is by far the dominant cost of the space solvers.
const std::map<int, Weight>& base_star(const Fq& F, int d) {
  using Key = std::tuple<unsigned, std::vector<unsigned>, int>;
  static std::mutex mtx;
  static std::map<Key, std::map<int, Weight>> cache;
  Key key{F.q(), F.modulus(), d};
  {
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  std::map<int, Weight> star = phi_neighbours(F, 0, d);
  std::lock_guard<std::mutex> lock(mtx);
  return cache.emplace(std::move(key), std::move(star)).first->second;
}

// Condition row for degree d evaluated at c_0, restricted to unknowns
// f(c_0..c_max_unknown); degree 0 is the identity operator.
std::vector<Rational> condition_row(const Fq& F, int d, int max_unknown) {
  std::vector<Rational> row(max_unknown + 1, Rational(0));
  if (d == 0) {
    row[0] = 1;
    return row;
  }
  for (auto& [w, m] : base_star(F, d))
    if (w <= max_unknown) row[w] += Rational(m);
  return row;
}

}  // namespace

SpaceResult cusp_space(const Fq& F, int max_degree, int window, int support_max) {
  if (max_degree < 0) throw error("max_degree must be non-negative");
  if (window < 2 * max_degree) throw error("insufficient window: need window >= 2*max_degree");
  std::vector<std::vector<Rational>> rows;
  for (int d = 0; d <= max_degree; ++d) rows.push_back(condition_row(F, d, support_max));
  SpaceResult r;
  r.basis = nullspace(std::move(rows), support_max + 1);
  r.dim = static_cast<int>(r.basis.size());
  return r;
}

SpaceResult toroidal_space_dim(const Fq& F, int max_degree, int window) {
  if (max_degree < 0) throw error("max_degree must be non-negative");
  if (window < 2 * max_degree) throw error("insufficient window: need window >= 2*max_degree");
  std::vector<std::vector<Rational>> rows;
  for (int d = 0; d <= max_degree; ++d) rows.push_back(condition_row(F, d, max_degree));
  SpaceResult r;
  r.basis = nullspace(std::move(rows), max_degree + 1);
  r.dim = static_cast<int>(r.basis.size());
  return r;
}

}  // namespace hecke
