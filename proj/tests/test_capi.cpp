#include <doctest.h>

#include <cstring>
#include <string>

#include "heckegraphs.h"

namespace {

struct Field {
  hg_field* f = nullptr;
  explicit Field(unsigned q) { REQUIRE(hg_field_create(q, nullptr, 0, &f) == HG_OK); }
  ~Field() { hg_field_destroy(f); }
};

std::string take(char* s) {
  std::string r = s ? s : "";
  hg_string_free(s);
  return r;
}

}  // namespace

TEST_CASE("field lifecycle and validation") {
  Field F(4);
  CHECK(hg_field_order(F.f) == 4);

  hg_field* bad = nullptr;
  CHECK(hg_field_create(6, nullptr, 0, &bad) != HG_OK);
  CHECK(std::strlen(hg_last_error()) > 0);
  unsigned reducible[] = {0, 0, 1};
  CHECK(hg_field_create(4, reducible, 3, &bad) != HG_OK);
  CHECK(hg_field_create(2, nullptr, 0, nullptr) == HG_ERR_INVALID_ARG);
}

TEST_CASE("graph build, inspect and export") {
  Field F(2);
  hg_graph* g = nullptr;
  REQUIRE(hg_graph_phi(F.f, 1, 6, &g) == HG_OK);
  CHECK(hg_graph_window(g) == 6);
  CHECK(hg_graph_reach(g) == 1);
  CHECK(hg_graph_edge_count(g) == 13);  // 1 + 2*6

  int from = -1, to = -1;
  char w[32];
  REQUIRE(hg_graph_edge(g, 0, &from, &to, w, sizeof w) == HG_OK);
  CHECK(from == 0);
  CHECK(to == 1);
  CHECK(std::string(w) == "3");
  CHECK(hg_graph_edge(g, 999, &from, &to, w, sizeof w) == HG_ERR_INVALID_ARG);

  char* json = nullptr;
  REQUIRE(hg_graph_export(g, HG_FORMAT_JSON, 0, &json) == HG_OK);
  std::string text = take(json);
  CHECK(text.find("\"q\": 2") != std::string::npos);

  hg_graph* back = nullptr;
  REQUIRE(hg_graph_import_json(text.c_str(), &back) == HG_OK);
  char* json2 = nullptr;
  REQUIRE(hg_graph_export(back, HG_FORMAT_JSON, 0, &json2) == HG_OK);
  CHECK(take(json2) == text);

  char* dot = nullptr;
  REQUIRE(hg_graph_export(g, HG_FORMAT_DOT, 1, &dot) == HG_OK);
  CHECK(take(dot).find("digraph") != std::string::npos);
  char* table = nullptr;
  REQUIRE(hg_graph_export(g, HG_FORMAT_TABLE, 0, &table) == HG_OK);
  CHECK(!take(table).empty());

  hg_graph_destroy(back);
  hg_graph_destroy(g);
}

TEST_CASE("error codes") {
  Field F(2);
  hg_graph* g = nullptr;
  CHECK(hg_graph_phi(F.f, 0, 6, &g) == HG_ERR_INVALID_ARG);
  CHECK(hg_graph_phi(F.f, 1, -1, &g) == HG_ERR_WINDOW);
  CHECK(hg_graph_import_json("{ not json", &g) == HG_ERR_PARSE);

  hg_graph* a = nullptr;
  REQUIRE(hg_graph_phi(F.f, 1, 4, &a) == HG_OK);
  hg_graph* c = nullptr;
  // composition auto-shrinks the left factor's window
  REQUIRE(hg_graph_compose(a, a, &c) == HG_OK);
  CHECK(hg_graph_window(c) == 3);
  CHECK(hg_graph_reach(c) == 2);
  hg_graph_destroy(c);
  // but fails when the reach exceeds the available window
  hg_graph* wide = nullptr;
  REQUIRE(hg_graph_phi(F.f, 3, 2, &wide) == HG_OK);
  CHECK(hg_graph_compose(wide, wide, &c) == HG_ERR_WINDOW);
  hg_graph_destroy(wide);

  unsigned singular[4] = {1, 1, 1, 1};
  hg_ramgraph* rg = nullptr;
  CHECK(hg_ramified_create(F.f, singular, 4, &rg) == HG_ERR_SINGULAR);

  hg_graph_destroy(a);
}

TEST_CASE("algebra through the C API") {
  Field F(3);
  hg_graph *g = nullptr, *sq = nullptr, *g2 = nullptr, *id = nullptr, *scaled = nullptr,
           *rhs = nullptr;
  REQUIRE(hg_graph_phi(F.f, 1, 12, &g) == HG_OK);
  REQUIRE(hg_graph_power(g, 2, &sq) == HG_OK);
  REQUIRE(hg_graph_phi(F.f, 2, hg_graph_window(sq), &g2) == HG_OK);
  REQUIRE(hg_graph_identity(F.f, hg_graph_window(sq), &id) == HG_OK);
  REQUIRE(hg_graph_scale(6, id, &scaled) == HG_OK);
  REQUIRE(hg_graph_add(g2, scaled, &rhs) == HG_OK);

  char *ja = nullptr, *jb = nullptr;
  REQUIRE(hg_graph_export(sq, HG_FORMAT_JSON, 0, &ja) == HG_OK);
  REQUIRE(hg_graph_export(rhs, HG_FORMAT_JSON, 0, &jb) == HG_OK);
  std::string sa = take(ja), sb = take(jb);
  // identical edge sets; metadata naturally differs in operator kind
  CHECK(sa.substr(sa.find("\"edges\"")) == sb.substr(sb.find("\"edges\"")));

  for (hg_graph* x : {g, sq, g2, id, scaled, rhs}) hg_graph_destroy(x);
}

TEST_CASE("verification through the C API") {
  Field F(5);
  hg_graph* g = nullptr;
  REQUIRE(hg_graph_phi(F.f, 3, 15, &g) == HG_OK);
  char* report = nullptr;
  int ok = 0;
  REQUIRE(hg_graph_verify(F.f, g, &report, &ok) == HG_OK);
  CHECK(ok == 1);
  CHECK(take(report).find("\"all_pass\": true") != std::string::npos);
  hg_graph_destroy(g);
}

TEST_CASE("ramified graphs through the C API") {
  Field F(3);
  unsigned gamma[4] = {1, 0, 0, 1};
  hg_ramgraph* rg = nullptr;
  REQUIRE(hg_ramified_create(F.f, gamma, 8, &rg) == HG_OK);
  char* json = nullptr;
  REQUIRE(hg_ramified_export(rg, HG_FORMAT_JSON, &json) == HG_OK);
  CHECK(take(json).find("ramified") != std::string::npos);
  CHECK(hg_ramified_export(rg, HG_FORMAT_TABLE, &json) != HG_OK);

  hg_graph* proj = nullptr;
  REQUIRE(hg_ramified_project(rg, &proj) == HG_OK);
  hg_graph* ref = nullptr;
  REQUIRE(hg_graph_phi(F.f, 1, 8, &ref) == HG_OK);
  char *ja = nullptr, *jb = nullptr;
  REQUIRE(hg_graph_export(proj, HG_FORMAT_JSON, 0, &ja) == HG_OK);
  REQUIRE(hg_graph_export(ref, HG_FORMAT_JSON, 0, &jb) == HG_OK);
  CHECK(take(ja) == take(jb));

  hg_graph_destroy(proj);
  hg_graph_destroy(ref);
  hg_ramgraph_destroy(rg);
}

TEST_CASE("forms through the C API") {
  Field F(2);
  char* json = nullptr;
  REQUIRE(hg_forms_extend(F.f, 1, "3", "1", "1", 6, &json) == HG_OK);
  std::string text = take(json);
  // lambda = q+1 extends the constant function
  CHECK(text.find("\"num\": \"1\"") != std::string::npos);
  CHECK(text.find("\"num\": \"2\"") == std::string::npos);

  CHECK(hg_forms_extend(F.f, 1, "1/0", "1", "1", 6, &json) != HG_OK);
  CHECK(hg_forms_extend(F.f, 0, "3", "1", "1", 6, &json) == HG_ERR_INVALID_ARG);

  hg_graph* g = nullptr;
  REQUIRE(hg_graph_phi(F.f, 1, 10, &g) == HG_OK);
  REQUIRE(hg_forms_eigen(g, "-3", &json) == HG_OK);
  CHECK(take(json).find("\"dim\": 1") != std::string::npos);
  hg_graph_destroy(g);

  int dim = -1;
  REQUIRE(hg_forms_cusp_dim(F.f, 5, 12, &dim, nullptr) == HG_OK);
  CHECK(dim == 0);
  REQUIRE(hg_forms_toroidal_dim(F.f, 5, 12, &dim, nullptr) == HG_OK);
  CHECK(dim == 0);
  CHECK(hg_forms_cusp_dim(F.f, 5, 5, &dim, nullptr) == HG_ERR_WINDOW);

  REQUIRE(hg_forms_extend_complex(F.f, 1, 3.0, 0, 1.0, 0, 1.0, 0, 4, &json) == HG_OK);
  CHECK(take(json).find("\"re\": 1.0") != std::string::npos);

  double re = 0, im = 0;
  REQUIRE(hg_forms_eisenstein(0.5, 0.0, 4.0, &re, &im) == HG_OK);
  CHECK(re == doctest::Approx(5.0).epsilon(1e-10));
  CHECK(im == doctest::Approx(0.0));
  CHECK(hg_forms_eisenstein(0.0, 0.0, 4.0, &re, &im) != HG_OK);
}
