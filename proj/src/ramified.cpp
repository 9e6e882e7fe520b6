#include "ramified.hpp"

#include <cctype>
#include <sstream>

#include <json.hpp>

namespace hecke {

bool is_invertible(const Fq& F, const GammaMat& g) {
  return F.sub(F.mul(g.a, g.d), F.mul(g.b, g.c)) != F.zero();
}

ProjPoint proj_action(const Fq& F, const ProjPoint& w, const GammaMat& gamma) {
  if (!is_invertible(F, gamma)) throw error("gamma is singular");
  FqElem u = w.infinity ? F.zero() : F.one();
  FqElem v = w.infinity ? F.one() : w.b;
  FqElem x = F.add(F.mul(u, gamma.a), F.mul(v, gamma.c));
  FqElem y = F.add(F.mul(u, gamma.b), F.mul(v, gamma.d));
  if (x == F.zero()) return ProjPoint{true, F.zero()};
  return ProjPoint{false, F.mul(y, F.inv(x))};
}

RamGraph::RamGraph(const Fq& F, const GammaMat& gamma, int window)
    : q_(F.q()), window_(window), points_(F.projective_line()) {
  if (window < 0) throw error("window must be non-negative");
  if (!is_invertible(F, gamma)) throw error("gamma is singular");
  for (auto& w : points_) point_names_.push_back(F.str(w));
  // image index of each point under gamma
  std::vector<int> moved(points_.size());
  for (size_t i = 0; i < points_.size(); ++i) {
    ProjPoint img = proj_action(F, points_[i], gamma);
    int idx = -1;
    for (size_t j = 0; j < points_.size(); ++j)
      if (points_[j] == img) idx = static_cast<int>(j);
    moved[i] = idx;
  }
  RamVertex base{0, -1};
  for (size_t i = 0; i < points_.size(); ++i)
    edges_[{base, RamVertex{1, static_cast<int>(i)}}] = 1;
  for (int n = 1; n <= window; ++n) {
    for (size_t i = 0; i < points_.size(); ++i) {
      RamVertex v{n, static_cast<int>(i)};
      edges_[{v, RamVertex{n + 1, moved[i]}}] = 1;
      RamVertex down = (n == 1) ? base : RamVertex{n - 1, moved[i]};
      edges_[{v, down}] += Weight(q_);
    }
  }
}

std::vector<RamEdge> RamGraph::edges() const {
  std::vector<RamEdge> r;
  for (auto& [vw, m] : edges_) r.push_back(RamEdge{vw.first, vw.second, m});
  return r;
}

std::string RamGraph::vertex_name(const RamVertex& v) const {
  if (v.n == 0) return "c'0";
  return "c'" + std::to_string(v.n) + "_" + point_names_.at(v.w_idx);
}

RamGraph graph_ramified(const Fq& F, const GammaMat& gamma, int N) { return RamGraph(F, gamma, N); }

HeckeGraph project_to_unramified(const RamGraph& rg) {
  // projected star per source vertex, then fiber-wise consistency
  std::map<RamVertex, std::map<int, Weight>> stars;
  for (auto& [vw, m] : rg.edge_map()) stars[vw.first][vw.second.n] += m;
  std::map<int, std::map<int, Weight>> fiber_star;
  for (auto& [v, st] : stars) {
    auto it = fiber_star.find(v.n);
    if (it == fiber_star.end())
      fiber_star.emplace(v.n, st);
    else if (it->second != st)
      throw error("internal error: inconsistent fiber at c_" + std::to_string(v.n));
  }
  std::map<std::pair<int, int>, Weight> edges;
  for (auto& [n, st] : fiber_star)
    for (auto& [w, m] : st) edges[{n, w}] = m;
  return HeckeGraph(rg.q(), OpKind::Phi, 1, rg.window(), 1, std::move(edges), Weight(rg.q()) + 1);
}

std::string ramgraph_to_json(const RamGraph& g) {
  nlohmann::ordered_json j;
  j["q"] = g.q();
  j["operator"]["kind"] = "ramified";
  j["window"] = g.window();
  j["reach"] = 1;
  j["edges"] = nlohmann::ordered_json::array();
  for (auto& [vw, m] : g.edge_map()) {
    nlohmann::ordered_json e;
    e["from"] = g.vertex_name(vw.first);
    e["to"] = g.vertex_name(vw.second);
    e["weight"] = m.str();
    j["edges"].push_back(e);
  }
  return j.dump(2) + "\n";
}

std::string ramgraph_to_dot(const RamGraph& g) {
  std::ostringstream out;
  out << "digraph hecke_ramified {\n  rankdir=LR;\n";
  auto node_id = [&](const RamVertex& v) {
    std::string s = g.vertex_name(v);
    std::string id;
    for (char c : s)
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') id += c;
    return "v" + id;
  };
  std::map<RamVertex, bool> seen;
  for (auto& [vw, m] : g.edge_map()) {
    seen[vw.first] = true;
    seen[vw.second] = true;
  }
  for (auto& [v, _] : seen)
    out << "  " << node_id(v) << " [label=\"" << g.vertex_name(v) << "\"];\n";
  for (auto& [vw, m] : g.edge_map())
    out << "  " << node_id(vw.first) << " -> " << node_id(vw.second) << " [label=\"" << m.str()
        << "\"];\n";
  out << "}\n";
  return out.str();
}

}  // namespace hecke
