#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fq.hpp"

namespace hecke {

using Weight = boost::multiprecision::cpp_int;

enum class OpKind { Phi, Identity, Zero, Composite };

struct Edge {
  int from;
  int to;
  Weight weight;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Weighted directed graph of a Hecke operator on the vertex set {c_n},
/// restricted to a window: every vertex n <= window() has its complete
/// outgoing edge set recorded.  Immutable once built.
class HeckeGraph {
 public:
  HeckeGraph(unsigned q, OpKind kind, int degree, int window, int reach,
             std::map<std::pair<int, int>, Weight> edges, std::optional<Weight> weight_sum);

  unsigned q() const { return q_; }
  OpKind kind() const { return kind_; }
  int degree() const { return degree_; }  // meaningful for Phi graphs
  int window() const { return window_; }
  int reach() const { return reach_; }
  const std::optional<Weight>& weight_sum() const { return weight_sum_; }

  const std::map<std::pair<int, int>, Weight>& edge_map() const { return edges_; }
  std::vector<Edge> edges() const;  // sorted by (from, to)

  /// Outgoing weighted star of a window vertex.
  std::map<int, Weight> star(int v) const;

  /// Copy restricted to origins <= new_window.
  HeckeGraph restrict_window(int new_window) const;

  /// Equality of edge sets on origins <= min(window, o.window).
  bool equal_on_shared_window(const HeckeGraph& o) const;

 private:
  unsigned q_;
  OpKind kind_;
  int degree_;
  int window_;
  int reach_;
  std::map<std::pair<int, int>, Weight> edges_;
  std::optional<Weight> weight_sum_;
};

/// Weighted multiset of standard vertices reached from c_n by the degree-d
/// generator: the q^d upper-triangular coset matrices plus diag(1, pi^d),
/// each reduced.  Total weight q^d + 1.
std::map<int, Weight> phi_neighbours(const Fq& F, int n, int d);

/// Graph of the degree-d generator on window [0, N].  Construction
/// parallelises over vertices; thread count is capped by the
/// HECKE_GRAPHS_THREADS environment variable.
HeckeGraph graph_phi(const Fq& F, int d, int N);

HeckeGraph graph_identity(unsigned q, int N);
HeckeGraph graph_zero(unsigned q, int N);

HeckeGraph graph_add(const HeckeGraph& g1, const HeckeGraph& g2);
HeckeGraph graph_scale(const Weight& r, const HeckeGraph& g);

/// Composition: weight of (v, v') sums m'*m'' over paths v -> v'' -> v'.
/// Requires window(g2) >= window(g1) + reach(g1) so every intermediate
/// vertex has complete data.
HeckeGraph graph_compose(const HeckeGraph& g1, const HeckeGraph& g2);

/// k-fold composition; k = 0 gives the identity.  The window shrinks by
/// reach at every step.
HeckeGraph graph_power(const HeckeGraph& g, int k);

// ---- verification -------------------------------------------------------

struct CheckResult {
  std::string name;
  bool pass;
  std::string detail;
};

/// Every edge whose terminus also lies in the window must have a reverse
/// edge; returns the violations.
std::vector<std::pair<int, int>> symmetry_violations(const HeckeGraph& g);

/// Tail formula: for d < n <= window - d the star of c_n must be exactly
/// {(c_{n-d}, q^d), (c_{n+d}, 1)}.  Returns offending vertices.
std::vector<int> tail_violations(const HeckeGraph& g, int d);

/// Number of connected components of the undirected window restriction.
int component_count(const HeckeGraph& g);

/// Determinant-parity label of a vertex.
inline int vertex_label(int n) { return n & 1; }

/// Max |terminus - origin| over edges; the report lists edges exceeding d.
std::vector<std::pair<int, int>> distance_violations(const HeckeGraph& g, int d);

/// Per-vertex outgoing weight sums against the expected total; returns
/// vertices whose sums differ.
std::vector<int> weight_sum_violations(const HeckeGraph& g, const Weight& expected);

/// Full report for a graph: weight sums, symmetry, tail, components,
/// distance bound, and (given the field) the composition relations
/// Phi_x^2 = Phi_deg2 + 2q and Phi_x^3 = Phi_deg3 + 3q Phi_x.
std::vector<CheckResult> verify_graph(const Fq& F, const HeckeGraph& g);

// ---- serialisation ------------------------------------------------------

std::string graph_to_json(const HeckeGraph& g);
HeckeGraph graph_from_json(const std::string& text);
std::string graph_to_dot(const HeckeGraph& g, bool paired_edges);
std::string graph_to_table(const HeckeGraph& g);

}  // namespace hecke
