#include "heckegraphs.h"

#include <cstring>
#include <string>

#include <json.hpp>

#include "forms.hpp"
#include "fq.hpp"
#include "graph.hpp"
#include "ramified.hpp"

using hecke::Fq;
using hecke::HeckeGraph;
using hecke::RamGraph;
using hecke::Rational;

struct hg_field {
  Fq fq;
};
struct hg_graph {
  HeckeGraph g;
};
struct hg_ramgraph {
  RamGraph g;
};

namespace {

thread_local std::string g_last_error;

hg_status fail(hg_status code, const std::string& msg) {
  g_last_error = msg;
  return code;
}

hg_status classify(const hecke::error& e) {
  std::string what = e.what();
  if (what.find("singular") != std::string::npos) return fail(HG_ERR_SINGULAR, what);
  if (what.find("window") != std::string::npos) return fail(HG_ERR_WINDOW, what);
  if (what.find("internal") != std::string::npos) return fail(HG_ERR_INTERNAL, what);
  return fail(HG_ERR_INVALID_ARG, what);
}

char* dup_string(const std::string& s) {
  char* r = new char[s.size() + 1];
  std::memcpy(r, s.c_str(), s.size() + 1);
  return r;
}

Rational parse_rational(const char* s) {
  if (!s) throw hecke::error("null rational");
  std::string t(s);
  auto slash = t.find('/');
  if (slash == std::string::npos) return Rational(hecke::Weight(t));
  hecke::Weight num(t.substr(0, slash)), den(t.substr(slash + 1));
  if (den == 0) throw hecke::error("zero denominator");
  return Rational(num, den);
}

nlohmann::ordered_json rational_json(const Rational& r) {
  nlohmann::ordered_json j;
  j["num"] = boost::multiprecision::numerator(r).str();
  j["den"] = boost::multiprecision::denominator(r).str();
  return j;
}

nlohmann::ordered_json basis_json(const std::vector<std::vector<Rational>>& basis) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (auto& vec : basis) {
    nlohmann::ordered_json v = nlohmann::ordered_json::array();
    for (auto& x : vec) v.push_back(rational_json(x));
    arr.push_back(v);
  }
  return arr;
}

template <typename Fn>
hg_status wrap(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return HG_OK;
  } catch (const hecke::error& e) {
    return classify(e);
  } catch (const nlohmann::json::exception& e) {
    return fail(HG_ERR_PARSE, e.what());
  } catch (const std::exception& e) {
    return fail(HG_ERR_INTERNAL, e.what());
  }
}

}  // namespace

extern "C" {

const char* hg_last_error(void) { return g_last_error.c_str(); }

hg_status hg_field_create(unsigned q, const unsigned* modulus, size_t modulus_len,
                          hg_field** out) {
  if (!out) return fail(HG_ERR_INVALID_ARG, "null output pointer");
  return wrap([&] {
    std::vector<unsigned> mod(modulus, modulus + (modulus ? modulus_len : 0));
    *out = new hg_field{Fq::from_order(q, mod)};
  });
}

void hg_field_destroy(hg_field* f) { delete f; }

unsigned hg_field_order(const hg_field* f) { return f ? f->fq.q() : 0; }

hg_status hg_graph_phi(const hg_field* f, int degree, int window, hg_graph** out) {
  if (!f || !out) return fail(HG_ERR_INVALID_ARG, "null argument");
  return wrap([&] { *out = new hg_graph{hecke::graph_phi(f->fq, degree, window)}; });
}

hg_status hg_graph_identity(const hg_field* f, int window, hg_graph** out) {
  if (!f || !out) return fail(HG_ERR_INVALID_ARG, "null argument");
  return wrap([&] { *out = new hg_graph{hecke::graph_identity(f->fq.q(), window)}; });
}

hg_status hg_graph_zero(const hg_field* f, int window, hg_graph** out) {
  if (!f || !out) return fail(HG_ERR_INVALID_ARG, "null argument");
  return wrap([&] { *out = new hg_graph{hecke::graph_zero(f->fq.q(), window)}; });
}

hg_status hg_graph_add(const hg_graph* a, const hg_graph* b, hg_graph** out) {
  if (!a || !b || !out) return fail(HG_ERR_INVALID_ARG, "null argument");
  return wrap([&] { *out = new hg_graph{hecke::graph_add(a->g, b->g)}; });
}

hg_status hg_graph_scale(long long r, const hg_graph* g, hg_graph** out) {
  if (!g || !out) return fail(HG_ERR_INVALID_ARG, "null argument");
  return wrap([&] { *out = new hg_graph{hecke::graph_scale(hecke::Weight(r), g->g)}; });
}

hg_status hg_graph_compose(const hg_graph* a, const hg_graph* b, hg_graph** out) {
  if (!a || !b || !out) return fail(HG_ERR_INVALID_ARG, "null argument");
  return wrap([&] {
    // shrink the left factor so the right factor's window covers every
    // intermediate vertex, mirroring what iterated powers do internally
    int allowed = b->g.window() - a->g.reach();
    if (allowed < 0) throw hecke::error("insufficient window for composition");
    const HeckeGraph& left =
        a->g.window() > allowed ? a->g.restrict_window(allowed) : a->g;
    *out = new hg_graph{hecke::graph_compose(left, b->g)};
  });
}

hg_status hg_graph_power(const hg_graph* g, int k, hg_graph** out) {
  if (!g || !out) return fail(HG_ERR_INVALID_ARG, "null argument");
  return wrap([&] { *out = new hg_graph{hecke::graph_power(g->g, k)}; });
}

void hg_graph_destroy(hg_graph* g) { delete g; }

int hg_graph_window(const hg_graph* g) { return g ? g->g.window() : -1; }

int hg_graph_reach(const hg_graph* g) { return g ? g->g.reach() : -1; }

size_t hg_graph_edge_count(const hg_graph* g) { return g ? g->g.edge_map().size() : 0; }

hg_status hg_graph_edge(const hg_graph* g, size_t i, int* from, int* to, char* weight_buf,
                        size_t weight_buf_len) {
  if (!g || !from || !to) return fail(HG_ERR_INVALID_ARG, "null argument");
  if (i >= g->g.edge_map().size()) return fail(HG_ERR_INVALID_ARG, "edge index out of range");
  auto it = g->g.edge_map().begin();
  std::advance(it, i);
  *from = it->first.first;
  *to = it->first.second;
  if (weight_buf && weight_buf_len > 0) {
    std::string w = it->second.str();
    std::strncpy(weight_buf, w.c_str(), weight_buf_len - 1);
    weight_buf[weight_buf_len - 1] = '\0';
  }
  return HG_OK;
}

hg_status hg_graph_export(const hg_graph* g, hg_format format, int paired_edges, char** out) {
  if (!g || !out) return fail(HG_ERR_INVALID_ARG, "null argument");
  return wrap([&] {
    switch (format) {
      case HG_FORMAT_JSON: *out = dup_string(hecke::graph_to_json(g->g)); break;
      case HG_FORMAT_DOT: *out = dup_string(hecke::graph_to_dot(g->g, paired_edges != 0)); break;
      case HG_FORMAT_TABLE: *out = dup_string(hecke::graph_to_table(g->g)); break;
      default: throw hecke::error("unknown format");
    }
  });
}

hg_status hg_graph_import_json(const char* json_text, hg_graph** out) {
  if (!json_text || !out) return fail(HG_ERR_INVALID_ARG, "null argument");
  return wrap([&] { *out = new hg_graph{hecke::graph_from_json(json_text)}; });
}

hg_status hg_graph_verify(const hg_field* f, const hg_graph* g, char** report, int* all_pass) {
  if (!f || !g || !report || !all_pass) return fail(HG_ERR_INVALID_ARG, "null argument");
  return wrap([&] {
    auto checks = hecke::verify_graph(f->fq, g->g);
    nlohmann::ordered_json j;
    j["checks"] = nlohmann::ordered_json::array();
    bool ok = true;
    for (auto& c : checks) {
      nlohmann::ordered_json e;
      e["name"] = c.name;
      e["pass"] = c.pass;
      e["detail"] = c.detail;
      j["checks"].push_back(e);
      ok = ok && c.pass;
    }
    j["all_pass"] = ok;
    *all_pass = ok ? 1 : 0;
    *report = dup_string(j.dump(2) + "\n");
  });
}

hg_status hg_ramified_create(const hg_field* f, const unsigned gamma[4], int window,
                             hg_ramgraph** out) {
  if (!f || !gamma || !out) return fail(HG_ERR_INVALID_ARG, "null argument");
  return wrap([&] {
    hecke::GammaMat gm{f->fq.element(gamma[0]), f->fq.element(gamma[1]), f->fq.element(gamma[2]),
                       f->fq.element(gamma[3])};
    *out = new hg_ramgraph{hecke::graph_ramified(f->fq, gm, window)};
  });
}

hg_status hg_ramified_export(const hg_ramgraph* g, hg_format format, char** out) {
  if (!g || !out) return fail(HG_ERR_INVALID_ARG, "null argument");
  return wrap([&] {
    switch (format) {
      case HG_FORMAT_JSON: *out = dup_string(hecke::ramgraph_to_json(g->g)); break;
      case HG_FORMAT_DOT: *out = dup_string(hecke::ramgraph_to_dot(g->g)); break;
      default: throw hecke::error("unsupported format for ramified graphs");
    }
  });
}

hg_status hg_ramified_project(const hg_ramgraph* g, hg_graph** out) {
  if (!g || !out) return fail(HG_ERR_INVALID_ARG, "null argument");
  return wrap([&] { *out = new hg_graph{hecke::project_to_unramified(g->g)}; });
}

void hg_ramgraph_destroy(hg_ramgraph* g) { delete g; }

hg_status hg_forms_extend(const hg_field* f, int degree, const char* lambda, const char* f0,
                          const char* f1, int window, char** out_json) {
  if (!f || !out_json) return fail(HG_ERR_INVALID_ARG, "null argument");
  return wrap([&] {
    if (degree < 1) throw hecke::error("degree must be at least 1");
    hecke::Weight qx = 1;
    for (int i = 0; i < degree; ++i) qx *= f->fq.q();
    auto values = hecke::extend_along_cusp(parse_rational(lambda), parse_rational(f0),
                                           parse_rational(f1), qx, window);
    nlohmann::ordered_json j;
    j["values"] = nlohmann::ordered_json::array();
    for (auto& v : values) j["values"].push_back(rational_json(v));
    *out_json = dup_string(j.dump(2) + "\n");
  });
}

hg_status hg_forms_extend_complex(const hg_field* f, int degree, double lambda_re,
                                  double lambda_im, double f0_re, double f0_im, double f1_re,
                                  double f1_im, int window, char** out_json) {
  if (!f || !out_json) return fail(HG_ERR_INVALID_ARG, "null argument");
  return wrap([&] {
    if (degree < 1) throw hecke::error("degree must be at least 1");
    double qx = 1.0;
    for (int i = 0; i < degree; ++i) qx *= f->fq.q();
    auto values =
        hecke::extend_along_cusp(std::complex<double>(lambda_re, lambda_im),
                                 std::complex<double>(f0_re, f0_im),
                                 std::complex<double>(f1_re, f1_im), qx, window);
    nlohmann::ordered_json j;
    j["values"] = nlohmann::ordered_json::array();
    for (auto& v : values) {
      nlohmann::ordered_json e;
      e["re"] = v.real();
      e["im"] = v.imag();
      j["values"].push_back(e);
    }
    *out_json = dup_string(j.dump(2) + "\n");
  });
}

hg_status hg_forms_eisenstein(double t_re, double t_im, double q_x, double* out_re,
                              double* out_im) {
  if (!out_re || !out_im) return fail(HG_ERR_INVALID_ARG, "null argument");
  return wrap([&] {
    std::complex<double> lam =
        hecke::eisenstein_eigenvalue(std::complex<double>(t_re, t_im), q_x);
    *out_re = lam.real();
    *out_im = lam.imag();
  });
}

hg_status hg_forms_eigen(const hg_graph* g, const char* lambda, char** out_json) {
  if (!g || !out_json) return fail(HG_ERR_INVALID_ARG, "null argument");
  return wrap([&] {
    auto basis = hecke::eigenfunction_on_graph(g->g, parse_rational(lambda));
    nlohmann::ordered_json j;
    j["dim"] = basis.size();
    j["basis"] = basis_json(basis);
    *out_json = dup_string(j.dump(2) + "\n");
  });
}

namespace {

hg_status space_result(const hg_field* f, int max_degree, int window, int* dim, char** out_json,
                       bool toroidal) {
  if (!f || !dim) return fail(HG_ERR_INVALID_ARG, "null argument");
  return wrap([&] {
    hecke::SpaceResult r = toroidal ? hecke::toroidal_space_dim(f->fq, max_degree, window)
                                    : hecke::cusp_space_dim(f->fq, max_degree, window);
    *dim = r.dim;
    if (out_json) {
      nlohmann::ordered_json j;
      j["dim"] = r.dim;
      j["basis"] = basis_json(r.basis);
      *out_json = dup_string(j.dump(2) + "\n");
    }
  });
}

}  // namespace

hg_status hg_forms_cusp_dim(const hg_field* f, int max_degree, int window, int* dim,
                            char** out_json) {
  return space_result(f, max_degree, window, dim, out_json, false);
}

hg_status hg_forms_toroidal_dim(const hg_field* f, int max_degree, int window, int* dim,
                                char** out_json) {
  return space_result(f, max_degree, window, dim, out_json, true);
}

void hg_string_free(char* s) { delete[] s; }

}  // extern "C"
