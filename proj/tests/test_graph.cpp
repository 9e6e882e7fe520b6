#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "graph.hpp"
#include "reduction.hpp"

using namespace hecke;

namespace {

Weight qpow(unsigned q, int d) {
  Weight r = 1;
  for (int i = 0; i < d; ++i) r *= q;
  return r;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("degree-1 stars: q+1 neighbours splitting as 1 up / q down") {
  for (unsigned q : {2u, 3u, 4u, 5u}) {
    CAPTURE(q);
    Fq F = Fq::from_order(q);
    std::map<int, Weight> star0 = phi_neighbours(F, 0, 1);
    CHECK(star0 == std::map<int, Weight>{{1, Weight(q) + 1}});
    for (int n = 1; n <= 6; ++n) {
      std::map<int, Weight> st = phi_neighbours(F, n, 1);
      CHECK(st == std::map<int, Weight>{{n - 1, Weight(q)}, {n + 1, 1}});
    }
  }
}

TEST_CASE("degree-1 stars agree with the explicit coset-product recipe") {
  // independent recipe: reduce p_n * xi for xi in {(pi, c; 0, 1)} u {diag(1, pi)}
  for (unsigned q : {2u, 3u, 4u}) {
    Fq F = Fq::from_order(q);
    LaurentPoly z = LaurentPoly::zero(F), o = LaurentPoly::one(F);
    for (int n = 0; n <= 5; ++n) {
      std::map<int, Weight> tally;
      Mat2 pn = Mat2::standard_rep(F, n);
      for (auto c : F.elements()) {
        Mat2 xi{LaurentPoly::monomial(F, 1, F.one()), LaurentPoly::constant(F, c), z, o};
        tally[reduce(pn * xi)] += 1;
      }
      Mat2 lower{o, z, z, LaurentPoly::monomial(F, 1, F.one())};
      tally[reduce(pn * lower)] += 1;
      CHECK(tally == phi_neighbours(F, n, 1));
    }
  }
}

TEST_CASE("degree-2 and degree-3 fixtures") {
  // frozen from the composition oracle Phi^2 = Phi_2 + 2q, Phi^3 = Phi_3 + 3q Phi
  for (unsigned q : {2u, 3u, 4u, 5u}) {
    CAPTURE(q);
    Fq F = Fq::from_order(q);
    Weight Q(q);
    CHECK(phi_neighbours(F, 0, 2) == std::map<int, Weight>{{0, Q * Q - Q}, {2, Q + 1}});
    CHECK(phi_neighbours(F, 1, 2) == std::map<int, Weight>{{1, Q * Q}, {3, 1}});
    CHECK(phi_neighbours(F, 0, 3) == std::map<int, Weight>{{1, Q * Q * Q - Q}, {3, Q + 1}});
    // tail fixtures for n > d
    CHECK(phi_neighbours(F, 5, 2) == std::map<int, Weight>{{3, Q * Q}, {7, 1}});
    CHECK(phi_neighbours(F, 4, 3) == std::map<int, Weight>{{1, Q * Q * Q}, {7, 1}});
  }
}

TEST_CASE("phi graph structure on a window") {
  Fq F = Fq::from_order(2);
  HeckeGraph g = graph_phi(F, 1, 20);
  CHECK(g.window() == 20);
  CHECK(g.reach() == 1);
  CHECK(g.q() == 2);
  CHECK(g.kind() == OpKind::Phi);
  // exactly the Figure-3 edge set
  std::map<std::pair<int, int>, Weight> expect;
  expect[{0, 1}] = 3;
  for (int n = 1; n <= 20; ++n) {
    expect[{n, n + 1}] = 1;
    expect[{n, n - 1}] = 2;
  }
  CHECK(g.edge_map() == expect);
}

TEST_CASE("verification suite passes on generator graphs") {
  for (unsigned q : {2u, 3u}) {
    for (int d = 1; d <= 3; ++d) {
      CAPTURE(q);
      CAPTURE(d);
      Fq F = Fq::from_order(q);
      HeckeGraph g = graph_phi(F, d, 4 * d >= 8 ? 4 * d : 8);
      for (auto& c : verify_graph(F, g)) {
        CAPTURE(c.name);
        CAPTURE(c.detail);
        CHECK(c.pass);
      }
    }
  }
}

TEST_CASE("component counts: 1 for odd degree, 2 for even degree") {
  Fq F = Fq::from_order(2);
  CHECK(component_count(graph_phi(F, 1, 8)) == 1);
  CHECK(component_count(graph_phi(F, 2, 8)) == 2);
  CHECK(component_count(graph_phi(F, 3, 12)) == 1);
  CHECK(component_count(graph_phi(F, 4, 16)) == 2);
}

TEST_CASE("graph algebra laws") {
  Fq F = Fq::from_order(3);
  HeckeGraph g = graph_phi(F, 1, 10);
  HeckeGraph id = graph_identity(3, 10);
  HeckeGraph zero = graph_zero(3, 10);

  CHECK(graph_add(g, zero).edge_map() == g.edge_map());
  CHECK(graph_add(g, g).edge_map() == graph_scale(2, g).edge_map());
  CHECK(graph_scale(0, g).edge_map().empty());
  // identity acts as the unit of composition (up to window shrink)
  CHECK(graph_compose(id.restrict_window(9), g).equal_on_shared_window(g));
  CHECK(graph_compose(g.restrict_window(9), id).equal_on_shared_window(g));
  // zero annihilates
  CHECK(graph_compose(zero.restrict_window(9), g).edge_map().empty());
  CHECK(graph_compose(g.restrict_window(9), zero).edge_map().empty());
  // adding opposite weights drops edges
  CHECK(graph_add(g, graph_scale(-1, g)).edge_map().empty());
}

TEST_CASE("composition window bookkeeping") {
  Fq F = Fq::from_order(2);
  HeckeGraph g = graph_phi(F, 1, 12);
  HeckeGraph p2 = graph_power(g, 2);
  CHECK(p2.window() == 11);
  CHECK(p2.reach() == 2);
  CHECK_THROWS_AS(graph_compose(g, g), error);  // needs window(g2) >= 12+1
  CHECK_THROWS_AS(graph_power(graph_phi(F, 1, 1), 3), error);
}

TEST_CASE("square and cube relations") {
  for (unsigned q : {2u, 3u, 4u, 5u}) {
    CAPTURE(q);
    Fq F = Fq::from_order(q);
    HeckeGraph g = graph_phi(F, 1, 12);
    HeckeGraph sq = graph_power(g, 2);
    HeckeGraph rhs2 = graph_add(graph_phi(F, 2, sq.window()),
                                graph_scale(2 * Weight(q), graph_identity(q, sq.window())));
    CHECK(sq.edge_map() == rhs2.edge_map());

    HeckeGraph cube = graph_power(g, 3);
    HeckeGraph rhs3 = graph_add(graph_phi(F, 3, cube.window()),
                                graph_scale(3 * Weight(q), graph_phi(F, 1, cube.window())));
    CHECK(cube.edge_map() == rhs3.edge_map());
  }
}

TEST_CASE("weight sums equal q^d + 1 on the window") {
  for (unsigned q : {2u, 3u}) {
    for (int d = 1; d <= 4; ++d) {
      Fq F = Fq::from_order(q);
      HeckeGraph g = graph_phi(F, d, 2 * d + 2);
      CHECK(weight_sum_violations(g, qpow(q, d) + 1).empty());
    }
  }
}

TEST_CASE("JSON round trip is exact") {
  Fq F = Fq::from_order(4);
  HeckeGraph g = graph_phi(F, 2, 8);
  std::string text = graph_to_json(g);
  HeckeGraph back = graph_from_json(text);
  CHECK(back.q() == g.q());
  CHECK(back.kind() == g.kind());
  CHECK(back.degree() == g.degree());
  CHECK(back.window() == g.window());
  CHECK(back.reach() == g.reach());
  CHECK(back.edge_map() == g.edge_map());
  CHECK(graph_to_json(back) == text);
}

TEST_CASE("JSON export is byte-deterministic") {
  Fq F = Fq::from_order(3);
  CHECK(graph_to_json(graph_phi(F, 1, 9)) == graph_to_json(graph_phi(F, 1, 9)));
}

TEST_CASE("malformed JSON is rejected") {
  CHECK_THROWS(graph_from_json("{"));
  CHECK_THROWS(graph_from_json("{\"q\": 2}"));
  CHECK_THROWS(
      graph_from_json("{\"q\": 2, \"operator\": {\"kind\": \"phi\", \"degree\": 1}, \"window\": 2, "
                      "\"reach\": 1, \"edges\": [{\"from\": 0, \"to\": 1, \"weight\": \"x\"}]}"));
}

TEST_CASE("DOT golden file for the q=2 degree-1 graph") {
  Fq F = Fq::from_order(2);
  HeckeGraph g = graph_phi(F, 1, 10);
  CHECK(graph_to_dot(g, false) == read_file(std::string(TEST_GOLDEN_DIR) + "/fig3.dot"));
  CHECK(graph_to_dot(g, true) == read_file(std::string(TEST_GOLDEN_DIR) + "/fig3_paired.dot"));
}

TEST_CASE("table export lists every edge once") {
  Fq F = Fq::from_order(2);
  HeckeGraph g = graph_phi(F, 1, 3);
  std::string t = graph_to_table(g);
  size_t lines = 0;
  for (char c : t)
    if (c == '\n') ++lines;
  // header plus one line per edge
  CHECK(lines >= g.edge_map().size());
}
