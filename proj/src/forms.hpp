#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <vector>

#include "graph.hpp"

namespace hecke {

using Rational = boost::multiprecision::cpp_rational;

/// f_{i+1} = lambda f_i - q_x f_{i-1}, values f_0..f_N.
std::vector<Rational> extend_along_cusp(const Rational& lambda, const Rational& f0,
                                        const Rational& f1, const Weight& q_x, int N);
std::vector<std::complex<double>> extend_along_cusp(std::complex<double> lambda,
                                                    std::complex<double> f0,
                                                    std::complex<double> f1, double q_x, int N);

/// Basis of the nullspace of a rational matrix given as rows; vectors have
/// length ncols.  Exact Gauss-Jordan elimination.
std::vector<std::vector<Rational>> nullspace(std::vector<std::vector<Rational>> rows,
                                             std::size_t ncols);

/// All f on the window with sum_{edges from v} m f(terminus) = lambda f(v)
/// at every v whose neighbours lie in the window (v + reach <= window);
/// returned as a basis of the solution space.  Requires window >= 2*reach.
std::vector<std::vector<Rational>> eigenfunction_on_graph(const HeckeGraph& g,
                                                          const Rational& lambda);

/// lambda_x = sqrt(q_x) * (t + 1/t) for t = chi(pi_x).  Complex mode only;
/// throws on t = 0.
std::complex<double> eisenstein_eigenvalue(std::complex<double> t, double q_x);

struct SpaceResult {
  int dim = 0;
  std::vector<std::vector<Rational>> basis;  // vectors over the unknown set
};

/// delta bound for the support of cusp forms; 0 on the projective line.
inline constexpr int kCuspSupportBound = 0;  // m_X = max{2g - 2, 0} with g = 0

/// Dimension of functions supported on {c_n : n <= support_max} satisfying
/// the vanishing of Phi_d(f) at c_0 for all degrees 0 <= d <= max_degree.
/// The default support bound is the cusp-form bound.  Requires
/// window >= 2*max_degree.
SpaceResult cusp_space(const Fq& F, int max_degree, int window,
                       int support_max = kCuspSupportBound);
inline SpaceResult cusp_space_dim(const Fq& F, int max_degree, int window) {
  return cusp_space(F, max_degree, window);
}

/// Dimension of functions on {c_0..c_max_degree} satisfying the vanishing of
/// Phi_d(f) at c_0 for all degrees 0 <= d <= max_degree; the degree-d
/// condition pins f(c_d) in terms of lower vertices, so the space is trivial.
/// Requires window >= 2*max_degree.
SpaceResult toroidal_space_dim(const Fq& F, int max_degree, int window);

}  // namespace hecke
