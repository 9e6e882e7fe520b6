#include "graph.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "reduction.hpp"

namespace hecke {

HeckeGraph::HeckeGraph(unsigned q, OpKind kind, int degree, int window, int reach,
                       std::map<std::pair<int, int>, Weight> edges,
                       std::optional<Weight> weight_sum)
    : q_(q), kind_(kind), degree_(degree), window_(window), reach_(reach),
      edges_(std::move(edges)), weight_sum_(std::move(weight_sum)) {
  if (window_ < 0) throw error("window must be non-negative");
  for (auto& [vw, m] : edges_) {
    if (vw.first < 0 || vw.first > window_) throw error("edge origin outside window");
    if (vw.second < 0) throw error("negative vertex");
    if (m == 0) throw error("zero-weight edge stored");
  }
}

std::vector<Edge> HeckeGraph::edges() const {
  std::vector<Edge> r;
  r.reserve(edges_.size());
  for (auto& [vw, m] : edges_) r.push_back(Edge{vw.first, vw.second, m});
  return r;
}

std::map<int, Weight> HeckeGraph::star(int v) const {
  std::map<int, Weight> r;
  for (auto it = edges_.lower_bound({v, 0}); it != edges_.end() && it->first.first == v; ++it)
    r[it->first.second] = it->second;
  return r;
}

HeckeGraph HeckeGraph::restrict_window(int new_window) const {
  if (new_window > window_) throw error("cannot grow a window");
  std::map<std::pair<int, int>, Weight> e;
  for (auto& [vw, m] : edges_)
    if (vw.first <= new_window) e.emplace(vw, m);
  return HeckeGraph(q_, kind_, degree_, new_window, reach_, std::move(e), weight_sum_);
}

bool HeckeGraph::equal_on_shared_window(const HeckeGraph& o) const {
  int N = std::min(window_, o.window_);
  auto upto = [N](const std::map<std::pair<int, int>, Weight>& es) {
    std::map<std::pair<int, int>, Weight> r;
    for (auto& [vw, m] : es)
      if (vw.first <= N) r.emplace(vw, m);
    return r;
  };
  return upto(edges_) == upto(o.edges_);
}

std::map<int, Weight> phi_neighbours(const Fq& F, int n, int d) {
  if (n < 0) throw error("vertex index must be non-negative");
  if (d < 1) throw error("degree must be at least 1");
  std::map<int, Weight> tally;
  // (pi^d, b_0 + ... + b_{d-1} pi^{d-1}; 0, 1) * p_n  =  (pi^{d-n}, b; 0, 1)
  std::vector<unsigned> digits(d, 0);
  const unsigned q = F.q();
  while (true) {
    LaurentPoly b(F);
    for (int i = 0; i < d; ++i) b.set_coeff(i, F.element(digits[i]));
    Mat2 m{LaurentPoly::monomial(F, d - n, F.one()), b, LaurentPoly::zero(F),
           LaurentPoly::one(F)};
    tally[reduce(m)] += 1;
    int i = 0;
    while (i < d && ++digits[i] == q) digits[i++] = 0;
    if (i == d) break;
  }
  // diag(1, pi^d) * p_n = diag(pi^{-n}, pi^d)
  Mat2 m{LaurentPoly::monomial(F, -n, F.one()), LaurentPoly::zero(F), LaurentPoly::zero(F),
         LaurentPoly::monomial(F, d, F.one())};
  tally[reduce(m)] += 1;
  return tally;
}

namespace {

int thread_budget(int jobs) {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  if (const char* env = std::getenv("HECKE_GRAPHS_THREADS")) {
    long cap = std::strtol(env, nullptr, 10);
    if (cap >= 1 && static_cast<unsigned long>(cap) < hw) hw = static_cast<unsigned>(cap);
  }
  return std::max(1, std::min<int>(static_cast<int>(hw), jobs));
}

Weight pow_weight(unsigned q, int d) {
  Weight r = 1;
  for (int i = 0; i < d; ++i) r *= q;
  return r;
}

}  // namespace

HeckeGraph graph_phi(const Fq& F, int d, int N) {
  if (d < 1) throw error("degree must be at least 1");
  if (N < 0) throw error("window must be non-negative");
  std::vector<std::map<int, Weight>> stars(N + 1);
  int nthreads = thread_budget(N + 1);
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errs(nthreads);
  for (int t = 0; t < nthreads; ++t) {
    pool.emplace_back([&, t] {
      try {
        for (int v = t; v <= N; v += nthreads) stars[v] = phi_neighbours(F, v, d);
      } catch (...) {
        errs[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errs)
    if (e) std::rethrow_exception(e);
  std::map<std::pair<int, int>, Weight> edges;
  for (int v = 0; v <= N; ++v)
    for (auto& [w, m] : stars[v]) edges[{v, w}] = m;
  return HeckeGraph(F.q(), OpKind::Phi, d, N, d, std::move(edges), pow_weight(F.q(), d) + 1);
}

HeckeGraph graph_identity(unsigned q, int N) {
  std::map<std::pair<int, int>, Weight> edges;
  for (int v = 0; v <= N; ++v) edges[{v, v}] = 1;
  return HeckeGraph(q, OpKind::Identity, 0, N, 0, std::move(edges), Weight(1));
}

HeckeGraph graph_zero(unsigned q, int N) {
  return HeckeGraph(q, OpKind::Zero, 0, N, 0, {}, Weight(0));
}

HeckeGraph graph_add(const HeckeGraph& g1, const HeckeGraph& g2) {
  if (g1.q() != g2.q()) throw error("graphs over different fields");
  int N = std::min(g1.window(), g2.window());
  std::map<std::pair<int, int>, Weight> edges;
  for (auto& [vw, m] : g1.edge_map())
    if (vw.first <= N) edges[vw] += m;
  for (auto& [vw, m] : g2.edge_map())
    if (vw.first <= N) edges[vw] += m;
  std::erase_if(edges, [](const auto& kv) { return kv.second == 0; });
  std::optional<Weight> ws;
  if (g1.weight_sum() && g2.weight_sum()) ws = *g1.weight_sum() + *g2.weight_sum();
  return HeckeGraph(g1.q(), OpKind::Composite, 0, N, std::max(g1.reach(), g2.reach()),
                    std::move(edges), ws);
}

HeckeGraph graph_scale(const Weight& r, const HeckeGraph& g) {
  std::map<std::pair<int, int>, Weight> edges;
  if (r != 0)
    for (auto& [vw, m] : g.edge_map()) edges[vw] = r * m;
  std::optional<Weight> ws;
  if (g.weight_sum()) ws = r * *g.weight_sum();
  return HeckeGraph(g.q(), r == 0 ? OpKind::Zero : OpKind::Composite, 0, g.window(),
                    r == 0 ? 0 : g.reach(), std::move(edges), ws);
}

HeckeGraph graph_compose(const HeckeGraph& g1, const HeckeGraph& g2) {
  if (g1.q() != g2.q()) throw error("graphs over different fields");
  if (g2.window() < g1.window() + g1.reach())
    throw error("insufficient window for composition: need window(g2) >= window(g1) + reach(g1)");
  std::map<std::pair<int, int>, Weight> edges;
  for (auto& [vw, m1] : g1.edge_map()) {
    auto& [v, mid] = vw;
    for (auto it = g2.edge_map().lower_bound({mid, 0});
         it != g2.edge_map().end() && it->first.first == mid; ++it)
      edges[{v, it->first.second}] += m1 * it->second;
  }
  std::erase_if(edges, [](const auto& kv) { return kv.second == 0; });
  std::optional<Weight> ws;
  if (g1.weight_sum() && g2.weight_sum()) ws = *g1.weight_sum() * *g2.weight_sum();
  return HeckeGraph(g1.q(), OpKind::Composite, 0, g1.window(), g1.reach() + g2.reach(),
                    std::move(edges), ws);
}

HeckeGraph graph_power(const HeckeGraph& g, int k) {
  if (k < 0) throw error("negative power");
  HeckeGraph acc = graph_identity(g.q(), g.window());
  for (int i = 0; i < k; ++i) {
    int allowed = g.window() - acc.reach();
    if (allowed < 0) throw error("insufficient window for power");
    acc = graph_compose(acc.restrict_window(std::min(acc.window(), allowed)), g);
  }
  return acc;
}

std::vector<std::pair<int, int>> symmetry_violations(const HeckeGraph& g) {
  std::vector<std::pair<int, int>> bad;
  for (auto& [vw, m] : g.edge_map()) {
    if (vw.second > g.window()) continue;  // terminus has no recorded data
    if (!g.edge_map().count({vw.second, vw.first})) bad.push_back(vw);
  }
  return bad;
}

std::vector<int> tail_violations(const HeckeGraph& g, int d) {
  std::vector<int> bad;
  Weight qd = pow_weight(g.q(), d);
  for (int n = d + 1; n <= g.window() - d; ++n) {
    auto st = g.star(n);
    std::map<int, Weight> want{{n - d, qd}, {n + d, 1}};
    if (st != want) bad.push_back(n);
  }
  return bad;
}

int component_count(const HeckeGraph& g) {
  int N = g.window();
  std::vector<int> parent(N + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto& [vw, m] : g.edge_map())
    if (vw.second <= N) parent[find(vw.first)] = find(vw.second);
  int count = 0;
  for (int v = 0; v <= N; ++v)
    if (find(v) == v) ++count;
  return count;
}

std::vector<std::pair<int, int>> distance_violations(const HeckeGraph& g, int d) {
  std::vector<std::pair<int, int>> bad;
  for (auto& [vw, m] : g.edge_map())
    if (std::abs(vw.second - vw.first) > d) bad.push_back(vw);
  return bad;
}

std::vector<int> weight_sum_violations(const HeckeGraph& g, const Weight& expected) {
  std::vector<int> bad;
  for (int v = 0; v <= g.window(); ++v) {
    Weight sum = 0;
    for (auto& [w, m] : g.star(v)) sum += m;
    if (sum != expected) bad.push_back(v);
  }
  return bad;
}

namespace {

std::string list_str(const std::vector<int>& v) {
  std::string s;
  for (int x : v) s += (s.empty() ? "" : ", ") + std::to_string(x);
  return s;
}

std::string pair_list_str(const std::vector<std::pair<int, int>>& v) {
  std::string s;
  for (auto& [a, b] : v)
    s += (s.empty() ? "" : ", ") + ("(" + std::to_string(a) + "," + std::to_string(b) + ")");
  return s;
}

}  // namespace

std::vector<CheckResult> verify_graph(const Fq& F, const HeckeGraph& g) {
  std::vector<CheckResult> checks;
  const int d = g.degree();
  const int N = g.window();

  if (g.weight_sum()) {
    auto bad = weight_sum_violations(g, *g.weight_sum());
    checks.push_back({"weight_sums", bad.empty(),
                      bad.empty() ? "all vertices sum to " + g.weight_sum()->str()
                                  : "violations at: " + list_str(bad)});
  } else {
    checks.push_back({"weight_sums", true, "skipped: unconstrained operator"});
  }

  auto sym = symmetry_violations(g);
  checks.push_back({"symmetry", sym.empty(),
                    sym.empty() ? "every edge has a reverse edge"
                                : "missing reverse edges: " + pair_list_str(sym)});

  if (g.kind() == OpKind::Phi) {
    auto tail = tail_violations(g, d);
    checks.push_back({"tail", tail.empty(),
                      tail.empty() ? "tail formula holds for all " + std::to_string(d) +
                                         " < n <= " + std::to_string(N - d)
                                   : "violations at: " + list_str(tail)});

    if (N >= 2 * d) {
      int comps = component_count(g);
      int want = (d % 2 == 1) ? 1 : 2;
      checks.push_back({"components", comps == want,
                        "found " + std::to_string(comps) + ", expected " + std::to_string(want)});
    } else {
      checks.push_back({"components", true, "skipped: window below 2*degree"});
    }

    auto dist = distance_violations(g, d);
    checks.push_back({"distance_bound", dist.empty(),
                      dist.empty() ? "all edges within distance " + std::to_string(d)
                                   : "violations: " + pair_list_str(dist)});

    // parity: odd-degree edges join different labels, even-degree equal
    bool parity_ok = true;
    for (auto& [vw, m] : g.edge_map())
      if (((vw.second - vw.first) & 1) != (d & 1)) parity_ok = false;
    checks.push_back({"parity_labels", parity_ok,
                      parity_ok ? "edge parities match operator degree" : "label parity violated"});
  }

  // composition relations of the degree-1 generator, checked whenever the
  // window leaves room for a cube
  if (N >= 8) {
    HeckeGraph g1 = graph_phi(F, 1, N);
    HeckeGraph sq = graph_power(g1, 2);
    HeckeGraph rel2 = graph_add(graph_phi(F, 2, sq.window()),
                                graph_scale(2 * Weight(F.q()), graph_identity(F.q(), sq.window())));
    bool ok2 = sq.equal_on_shared_window(rel2);
    HeckeGraph cube = graph_power(g1, 3);
    HeckeGraph rel3 = graph_add(graph_phi(F, 3, cube.window()),
                                graph_scale(3 * Weight(F.q()), g1.restrict_window(cube.window())));
    bool ok3 = cube.equal_on_shared_window(rel3);
    checks.push_back({"relation_square", ok2,
                      ok2 ? "Phi_x^2 = Phi_(deg 2) + 2q on shared window" : "relation violated"});
    checks.push_back({"relation_cube", ok3,
                      ok3 ? "Phi_x^3 = Phi_(deg 3) + 3q Phi_x on shared window" : "relation violated"});
  } else {
    checks.push_back({"relation_square", true, "skipped: window below 8"});
    checks.push_back({"relation_cube", true, "skipped: window below 8"});
  }
  return checks;
}

// ---- serialisation ------------------------------------------------------

namespace {

std::string kind_name(OpKind k) {
  switch (k) {
    case OpKind::Phi: return "phi";
    case OpKind::Identity: return "identity";
    case OpKind::Zero: return "zero";
    case OpKind::Composite: return "composite";
  }
  return "composite";
}

OpKind kind_from_name(const std::string& s) {
  if (s == "phi") return OpKind::Phi;
  if (s == "identity") return OpKind::Identity;
  if (s == "zero") return OpKind::Zero;
  if (s == "composite") return OpKind::Composite;
  throw error("unknown operator kind '" + s + "'");
}

}  // namespace

std::string graph_to_json(const HeckeGraph& g) {
  nlohmann::ordered_json j;
  j["q"] = g.q();
  j["operator"]["kind"] = kind_name(g.kind());
  if (g.kind() == OpKind::Phi) j["operator"]["degree"] = g.degree();
  j["window"] = g.window();
  j["reach"] = g.reach();
  j["edges"] = nlohmann::ordered_json::array();
  for (auto& [vw, m] : g.edge_map()) {
    nlohmann::ordered_json e;
    e["from"] = vw.first;
    e["to"] = vw.second;
    e["weight"] = m.str();
    j["edges"].push_back(e);
  }
  return j.dump(2) + "\n";
}

HeckeGraph graph_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  unsigned q = j.at("q").get<unsigned>();
  OpKind kind = kind_from_name(j.at("operator").at("kind").get<std::string>());
  int degree = j.at("operator").value("degree", 0);
  int window = j.at("window").get<int>();
  int reach = j.at("reach").get<int>();
  std::map<std::pair<int, int>, Weight> edges;
  for (auto& e : j.at("edges")) {
    Weight w(e.at("weight").get<std::string>());
    edges[{e.at("from").get<int>(), e.at("to").get<int>()}] = w;
  }
  std::optional<Weight> ws;
  if (kind == OpKind::Phi) ws = pow_weight(q, degree) + 1;
  if (kind == OpKind::Identity) ws = Weight(1);
  if (kind == OpKind::Zero) ws = Weight(0);
  return HeckeGraph(q, kind, degree, window, reach, std::move(edges), ws);
}

std::string graph_to_dot(const HeckeGraph& g, bool paired_edges) {
  std::ostringstream out;
  out << "digraph hecke {\n  rankdir=LR;\n";
  int maxv = g.window();
  for (auto& [vw, m] : g.edge_map()) maxv = std::max(maxv, vw.second);
  for (int v = 0; v <= maxv; ++v) out << "  c" << v << " [label=\"c" << v << "\"];\n";
  if (!paired_edges) {
    for (auto& [vw, m] : g.edge_map())
      out << "  c" << vw.first << " -> c" << vw.second << " [label=\"" << m.str() << "\"];\n";
  } else {
    for (auto& [vw, m] : g.edge_map()) {
      auto rev = g.edge_map().find({vw.second, vw.first});
      if (rev != g.edge_map().end() && vw.first != vw.second) {
        if (vw.first > vw.second) continue;  // drawn once, from the lower vertex
        out << "  c" << vw.first << " -> c" << vw.second << " [dir=both, taillabel=\"" << m.str()
            << "\", headlabel=\"" << rev->second.str() << "\"];\n";
      } else {
        out << "  c" << vw.first << " -> c" << vw.second << " [label=\"" << m.str() << "\"];\n";
      }
    }
  }
  out << "}\n";
  return out.str();
}

std::string graph_to_table(const HeckeGraph& g) {
  std::ostringstream out;
  out << "# q=" << g.q() << " kind=" << kind_name(g.kind());
  if (g.kind() == OpKind::Phi) out << " degree=" << g.degree();
  out << " window=" << g.window() << " reach=" << g.reach() << "\n";
  out << "from\tto\tweight\n";
  for (auto& [vw, m] : g.edge_map())
    out << vw.first << "\t" << vw.second << "\t" << m.str() << "\n";
  return out.str();
}

}  // namespace hecke
