#pragma once

#include <map>
#include <string>
#include <vector>

#include "graph.hpp"

namespace hecke {

/// Invertible 2x2 matrix over F_q acting on P^1(F_q) from the right.
struct GammaMat {
  FqElem a, b, c, d;  // (a b; c d)
};

bool is_invertible(const Fq& F, const GammaMat& g);

/// Right action on row vectors: [u:v] * gamma, renormalised to [1:b] or
/// [0:1].  Throws on singular gamma.
ProjPoint proj_action(const Fq& F, const ProjPoint& w, const GammaMat& gamma);

/// Vertex of the level-K' graph: the base class c'_0, or the pair
/// c'_{n,w} with n >= 1 and w indexing P^1(F_q) in canonical order
/// (affine points first, infinity last).
struct RamVertex {
  int n = 0;       // 0 means the base vertex
  int w_idx = -1;  // -1 for the base vertex
  friend bool operator==(const RamVertex&, const RamVertex&) = default;
  friend auto operator<=>(const RamVertex& a, const RamVertex& b) {
    return std::pair(a.n, a.w_idx) <=> std::pair(b.n, b.w_idx);
  }
};

struct RamEdge {
  RamVertex from, to;
  Weight weight;
};

/// Graph of the ramified operator Phi'_{y,gamma} on window [0, N]: the base
/// vertex has q+1 weight-1 edges up, and every pair vertex one weight-1 edge
/// up and one weight-q edge down, with w moved by gamma.
class RamGraph {
 public:
  RamGraph(const Fq& F, const GammaMat& gamma, int window);

  unsigned q() const { return q_; }
  int window() const { return window_; }
  const std::map<std::pair<RamVertex, RamVertex>, Weight>& edge_map() const { return edges_; }
  std::vector<RamEdge> edges() const;
  std::string vertex_name(const RamVertex& v) const;  // c'0 or c'<n>_<w>

  const std::vector<ProjPoint>& points() const { return points_; }

 private:
  unsigned q_;
  int window_;
  std::vector<ProjPoint> points_;
  std::vector<std::string> point_names_;
  std::map<std::pair<RamVertex, RamVertex>, Weight> edges_;
};

RamGraph graph_ramified(const Fq& F, const GammaMat& gamma, int N);

/// Projection to level K: base -> c_0, pair(n, w) -> c_n; coincident image
/// edges from one source fiber are merged by summing weights.  Throws if the
/// fibers do not project to a common star.
HeckeGraph project_to_unramified(const RamGraph& rg);

std::string ramgraph_to_json(const RamGraph& g);
std::string ramgraph_to_dot(const RamGraph& g);

}  // namespace hecke
