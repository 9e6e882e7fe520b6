#include <doctest.h>

#include <random>
#include <set>

#include "ramified.hpp"

using namespace hecke;

namespace {

GammaMat random_invertible_gamma(const Fq& F, std::mt19937& rng) {
  std::uniform_int_distribution<unsigned> el(0, F.q() - 1);
  for (;;) {
    GammaMat g{F.element(el(rng)), F.element(el(rng)), F.element(el(rng)), F.element(el(rng))};
    if (is_invertible(F, g)) return g;
  }
}

}  // namespace

TEST_CASE("projective action is a bijection of P^1") {
  for (unsigned q : {2u, 3u, 4u}) {
    Fq F = Fq::from_order(q);
    std::mt19937 rng(q);
    for (int trial = 0; trial < 20; ++trial) {
      GammaMat g = random_invertible_gamma(F, rng);
      auto pts = F.projective_line();
      std::set<std::string> images;
      for (auto& w : pts) images.insert(F.str(proj_action(F, w, g)));
      CHECK(images.size() == q + 1);
    }
    GammaMat sing{F.one(), F.one(), F.one(), F.one()};
    CHECK_THROWS_AS(proj_action(F, ProjPoint{}, sing), error);
    CHECK_THROWS_AS(RamGraph(F, sing, 3), error);
  }
}

TEST_CASE("identity action fixture: the gamma = e graph on window 8") {
  // base c'_0 with q+1 outgoing weight-1 edges; each ladder c'_{n,w} with one
  // weight-1 edge up and one weight-q edge down the same ladder
  for (unsigned q : {2u, 3u}) {
    CAPTURE(q);
    Fq F = Fq::from_order(q);
    GammaMat e{F.one(), F.zero(), F.zero(), F.one()};
    RamGraph g(F, e, 8);
    std::map<std::pair<RamVertex, RamVertex>, Weight> expect;
    RamVertex base{0, -1};
    for (int w = 0; w < int(q) + 1; ++w) {
      expect[{base, RamVertex{1, w}}] = 1;
      expect[{RamVertex{1, w}, base}] = Weight(q);
      for (int n = 1; n <= 8; ++n) {
        expect[{RamVertex{n, w}, RamVertex{n + 1, w}}] = 1;
        if (n > 1) expect[{RamVertex{n, w}, RamVertex{n - 1, w}}] = Weight(q);
      }
    }
    CHECK(g.edge_map() == expect);
  }
}

TEST_CASE("projection to the unramified graph equals the degree-1 graph") {
  for (unsigned q : {2u, 3u}) {
    Fq F = Fq::from_order(q);
    std::mt19937 rng(77 + q);
    HeckeGraph reference = graph_phi(F, 1, 8);
    for (int trial = 0; trial < 10; ++trial) {
      GammaMat g = random_invertible_gamma(F, rng);
      HeckeGraph proj = project_to_unramified(RamGraph(F, g, 8));
      CHECK(proj.edge_map() == reference.edge_map());
      CHECK(proj.window() == reference.window());
    }
  }
}

TEST_CASE("unipotent gamma of order p produces asymmetric edges") {
  Fq F = Fq::from_order(3);
  GammaMat u{F.one(), F.one(), F.zero(), F.one()};  // order 3 in PGL_2(F_3)
  RamGraph g(F, u, 6);
  int asymmetric = 0;
  for (auto& [vw, m] : g.edge_map())
    if (!g.edge_map().count({vw.second, vw.first})) ++asymmetric;
  CHECK(asymmetric >= 1);
}

TEST_CASE("vertex names and serialisation") {
  Fq F = Fq::from_order(2);
  GammaMat e{F.one(), F.zero(), F.zero(), F.one()};
  RamGraph g(F, e, 2);
  CHECK(g.vertex_name(RamVertex{0, -1}) == "c'0");
  CHECK(g.vertex_name(RamVertex{1, 0}) == "c'1_0");
  CHECK(g.vertex_name(RamVertex{2, 2}) == "c'2_inf");
  std::string json = ramgraph_to_json(g);
  CHECK(json.find("\"kind\": \"ramified\"") != std::string::npos);
  CHECK(json == ramgraph_to_json(g));  // deterministic
  std::string dot = ramgraph_to_dot(g);
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("c'1_inf") != std::string::npos);
}
