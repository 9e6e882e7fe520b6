// hecke-graphs: command-line front end for the heckegraphs shared library.
//
// Subcommands: graph, compose, power, verify, forms, ramified.  All output is
// byte-deterministic for a fixed invocation.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "heckegraphs.h"

namespace {

struct FieldDeleter {
  void operator()(hg_field* f) const { hg_field_destroy(f); }
};
struct GraphDeleter {
  void operator()(hg_graph* g) const { hg_graph_destroy(g); }
};
struct RamDeleter {
  void operator()(hg_ramgraph* g) const { hg_ramgraph_destroy(g); }
};
using FieldPtr = std::unique_ptr<hg_field, FieldDeleter>;
using GraphPtr = std::unique_ptr<hg_graph, GraphDeleter>;
using RamPtr = std::unique_ptr<hg_ramgraph, RamDeleter>;

std::string take_string(char* s) {
  std::string r = s ? s : "";
  hg_string_free(s);
  return r;
}

[[noreturn]] void die(const std::string& context) {
  std::cerr << "error: " << context;
  const char* msg = hg_last_error();
  if (msg && *msg) std::cerr << ": " << msg;
  std::cerr << "\n";
  std::exit(1);
}

void check(hg_status st, const std::string& context) {
  if (st != HG_OK) die(context);
}

FieldPtr make_field(unsigned q, const std::vector<unsigned>& modulus) {
  hg_field* f = nullptr;
  check(hg_field_create(q, modulus.empty() ? nullptr : modulus.data(), modulus.size(), &f),
        "invalid field");
  return FieldPtr(f);
}

hg_format parse_format(const std::string& s) {
  if (s == "json") return HG_FORMAT_JSON;
  if (s == "dot") return HG_FORMAT_DOT;
  if (s == "table") return HG_FORMAT_TABLE;
  std::cerr << "error: unknown format '" << s << "' (expected dot|json|table)\n";
  std::exit(1);
}

void emit(const std::string& text, const std::string& output_path) {
  if (output_path.empty() || output_path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(output_path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open output file '" << output_path << "'\n";
    std::exit(1);
  }
  out << text;
}

// Options shared by every graph-emitting subcommand.
struct CommonOpts {
  unsigned q = 2;
  std::vector<unsigned> modulus;
  int window = 10;
  std::string format = "json";
  std::string output;
  bool paired_edges = false;
};

void add_field_opts(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--q", o.q, "field order (prime power)")->required();
  cmd->add_option("--modulus", o.modulus,
                  "irreducible modulus coefficients over F_p, constant term first");
}

void add_output_opts(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--format", o.format, "output format: dot|json|table")
      ->check(CLI::IsMember({"dot", "json", "table"}));
  cmd->add_option("--output,-o", o.output, "output path (default: stdout)");
  cmd->add_flag("--paired-edges", o.paired_edges,
                "DOT only: draw edge pairs as one line with two weight labels");
}

void emit_graph(const hg_graph* g, const CommonOpts& o) {
  char* text = nullptr;
  check(hg_graph_export(g, parse_format(o.format), o.paired_edges ? 1 : 0, &text), "export failed");
  emit(take_string(text), o.output);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graphs of Hecke operators for PGL(2) over F_q(T)"};
  app.require_subcommand(1);

  // ---- graph -----------------------------------------------------------
  CommonOpts graph_o;
  int graph_degree = 1;
  auto* cmd_graph = app.add_subcommand("graph", "build the graph of a degree-d Hecke operator");
  add_field_opts(cmd_graph, graph_o);
  cmd_graph->add_option("--degree", graph_degree, "operator degree (>= 1)")->required();
  cmd_graph->add_option("--window", graph_o.window, "window bound N (>= 1)")->required();
  add_output_opts(cmd_graph, graph_o);

  // ---- compose ---------------------------------------------------------
  CommonOpts comp_o;
  std::vector<std::string> comp_degrees;
  auto* cmd_compose =
      app.add_subcommand("compose", "compose operator graphs left to right");
  add_field_opts(cmd_compose, comp_o);
  cmd_compose
      ->add_option("--degrees", comp_degrees,
                   "operator list: degrees >= 1, or the tokens 'id' / 'zero'")
      ->required();
  cmd_compose->add_option("--window", comp_o.window, "window bound N (>= 1)")->required();
  add_output_opts(cmd_compose, comp_o);

  // ---- power -----------------------------------------------------------
  CommonOpts pow_o;
  int pow_degree = 1;
  int pow_k = 1;
  auto* cmd_power = app.add_subcommand("power", "k-fold composition of one operator graph");
  add_field_opts(cmd_power, pow_o);
  cmd_power->add_option("--degree", pow_degree, "operator degree (>= 1)")->required();
  cmd_power->add_option("--k", pow_k, "exponent (>= 0)")->required();
  cmd_power->add_option("--window", pow_o.window, "window bound N (>= 1)")->required();
  add_output_opts(cmd_power, pow_o);

  // ---- verify ----------------------------------------------------------
  CommonOpts ver_o;
  int ver_degree = 1;
  std::string ver_input;
  auto* cmd_verify = app.add_subcommand("verify", "run the structural check suite on a graph");
  add_field_opts(cmd_verify, ver_o);
  cmd_verify->add_option("--degree", ver_degree, "operator degree (build mode)");
  cmd_verify->add_option("--window", ver_o.window, "window bound N (build mode)");
  cmd_verify->add_option("--input", ver_input, "JSON graph file to verify instead of building");
  cmd_verify->add_option("--output,-o", ver_o.output, "report path (default: stdout)");

  // ---- forms -----------------------------------------------------------
  auto* cmd_forms = app.add_subcommand("forms", "automorphic-form solvers");
  cmd_forms->require_subcommand(1);

  unsigned forms_q = 2;
  std::vector<unsigned> forms_modulus;
  cmd_forms->add_option("--q", forms_q, "field order (prime power)")->required();
  cmd_forms->add_option("--modulus", forms_modulus,
                        "irreducible modulus coefficients over F_p, constant term first");

  std::string ext_lambda = "0", ext_f0 = "1", ext_f1, ext_mode = "exact";
  int ext_degree = 1, ext_window = 10;
  double ext_tol = 1e-10;
  auto* cmd_extend = cmd_forms->add_subcommand("extend", "extend f along the cusp recursion");
  cmd_extend->add_option("--lambda", ext_lambda, "eigenvalue (rational n or n/d)")->required();
  cmd_extend->add_option("--f0", ext_f0, "value at c_0");
  cmd_extend->add_option("--f1", ext_f1, "value at c_1 (default: lambda*f0/(q_x+1))");
  cmd_extend->add_option("--degree", ext_degree, "place degree (q_x = q^degree)");
  cmd_extend->add_option("--window", ext_window, "last index N")->required();
  cmd_extend->add_option("--mode", ext_mode, "scalar mode: exact|complex")
      ->check(CLI::IsMember({"exact", "complex"}));
  cmd_extend->add_option("--tol", ext_tol, "tolerance (complex mode; > 0)");

  std::string eig_lambda = "0";
  int eig_degree = 1, eig_window = 10;
  auto* cmd_eigen = cmd_forms->add_subcommand("eigen", "lambda-eigenfunction basis on a window");
  cmd_eigen->add_option("--lambda", eig_lambda, "eigenvalue (rational n or n/d)")->required();
  cmd_eigen->add_option("--degree", eig_degree, "operator degree (>= 1)");
  cmd_eigen->add_option("--window", eig_window, "window bound N")->required();

  int cusp_maxdeg = 5, cusp_window = 12;
  auto* cmd_cusp = cmd_forms->add_subcommand("cusp-dim", "dimension of the cuspidal space");
  cmd_cusp->add_option("--max-degree", cusp_maxdeg, "largest operator degree imposed")->required();
  cmd_cusp->add_option("--window", cusp_window, "window bound N (>= 2*max-degree)")->required();

  int tor_maxdeg = 5, tor_window = 12;
  auto* cmd_tor = cmd_forms->add_subcommand("toroidal-dim", "dimension of the toroidal space");
  cmd_tor->add_option("--max-degree", tor_maxdeg, "largest operator degree imposed")->required();
  cmd_tor->add_option("--window", tor_window, "window bound N (>= 2*max-degree)")->required();

  std::string forms_output;
  cmd_forms->add_option("--output,-o", forms_output, "output path (default: stdout)");

  // ---- ramified --------------------------------------------------------
  CommonOpts ram_o;
  std::vector<unsigned> ram_gamma;
  bool ram_project = false;
  auto* cmd_ram = app.add_subcommand("ramified", "graph of a ramified operator Phi'_{y,gamma}");
  add_field_opts(cmd_ram, ram_o);
  cmd_ram
      ->add_option("--gamma", ram_gamma, "entries a b c d of an invertible matrix over F_q")
      ->expected(4)
      ->required();
  cmd_ram->add_option("--window", ram_o.window, "window bound N (>= 1)")->required();
  cmd_ram->add_flag("--project", ram_project, "emit the projection to the unramified graph");
  add_output_opts(cmd_ram, ram_o);

  CLI11_PARSE(app, argc, argv);

  if (cmd_graph->parsed()) {
    if (graph_degree < 1 || graph_o.window < 1) {
      std::cerr << "error: degree and window must be >= 1\n";
      return 1;
    }
    FieldPtr F = make_field(graph_o.q, graph_o.modulus);
    hg_graph* g = nullptr;
    check(hg_graph_phi(F.get(), graph_degree, graph_o.window, &g), "graph construction failed");
    GraphPtr G(g);
    emit_graph(G.get(), graph_o);
    return 0;
  }

  if (cmd_compose->parsed()) {
    if (comp_o.window < 1) {
      std::cerr << "error: window must be >= 1\n";
      return 1;
    }
    FieldPtr F = make_field(comp_o.q, comp_o.modulus);
    auto factor = [&](const std::string& tok) -> GraphPtr {
      hg_graph* g = nullptr;
      hg_status st;
      if (tok == "id" || tok == "identity")
        st = hg_graph_identity(F.get(), comp_o.window, &g);
      else if (tok == "zero")
        st = hg_graph_zero(F.get(), comp_o.window, &g);
      else {
        int d = 0;
        try {
          d = std::stoi(tok);
        } catch (...) {
          d = 0;
        }
        if (d < 1) {
          std::cerr << "error: bad operator token '" << tok << "' (degree >= 1, 'id' or 'zero')\n";
          std::exit(1);
        }
        st = hg_graph_phi(F.get(), d, comp_o.window, &g);
      }
      check(st, "graph construction failed");
      return GraphPtr(g);
    };
    GraphPtr acc = factor(comp_degrees.front());
    for (size_t i = 1; i < comp_degrees.size(); ++i) {
      GraphPtr next = factor(comp_degrees[i]);
      hg_graph* c = nullptr;
      check(hg_graph_compose(acc.get(), next.get(), &c), "composition failed");
      acc.reset(c);
    }
    emit_graph(acc.get(), comp_o);
    return 0;
  }

  if (cmd_power->parsed()) {
    if (pow_degree < 1 || pow_k < 0 || pow_o.window < 1) {
      std::cerr << "error: need degree >= 1, k >= 0, window >= 1\n";
      return 1;
    }
    FieldPtr F = make_field(pow_o.q, pow_o.modulus);
    hg_graph* g = nullptr;
    check(hg_graph_phi(F.get(), pow_degree, pow_o.window, &g), "graph construction failed");
    GraphPtr G(g);
    hg_graph* p = nullptr;
    check(hg_graph_power(G.get(), pow_k, &p), "power failed");
    GraphPtr P(p);
    emit_graph(P.get(), pow_o);
    return 0;
  }

  if (cmd_verify->parsed()) {
    FieldPtr F = make_field(ver_o.q, ver_o.modulus);
    GraphPtr G;
    if (!ver_input.empty()) {
      std::ifstream in(ver_input, std::ios::binary);
      if (!in) {
        std::cerr << "error: cannot open input file '" << ver_input << "'\n";
        return 1;
      }
      std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
      hg_graph* g = nullptr;
      check(hg_graph_import_json(text.c_str(), &g), "JSON import failed");
      G.reset(g);
    } else {
      if (ver_degree < 1 || ver_o.window < 1) {
        std::cerr << "error: degree and window must be >= 1\n";
        return 1;
      }
      hg_graph* g = nullptr;
      check(hg_graph_phi(F.get(), ver_degree, ver_o.window, &g), "graph construction failed");
      G.reset(g);
    }
    char* report = nullptr;
    int all_pass = 0;
    check(hg_graph_verify(F.get(), G.get(), &report, &all_pass), "verification failed");
    emit(take_string(report), ver_o.output);
    return all_pass ? 0 : 2;
  }

  if (cmd_forms->parsed()) {
    FieldPtr F = make_field(forms_q, forms_modulus);
    if (cmd_extend->parsed()) {
      if (ext_degree < 1 || ext_window < 1) {
        std::cerr << "error: degree and window must be >= 1\n";
        return 1;
      }
      char* json = nullptr;
      if (ext_mode == "complex") {
        if (ext_tol <= 0) {
          std::cerr << "error: tolerance must be > 0 in complex mode\n";
          return 1;
        }
        double lam = std::strtod(ext_lambda.c_str(), nullptr);
        double f0 = std::strtod(ext_f0.c_str(), nullptr);
        double qx = 1.0;
        for (int i = 0; i < ext_degree; ++i) qx *= forms_q;
        double f1 = ext_f1.empty() ? lam * f0 / (qx + 1.0) : std::strtod(ext_f1.c_str(), nullptr);
        check(hg_forms_extend_complex(F.get(), ext_degree, lam, 0.0, f0, 0.0, f1, 0.0, ext_window,
                                      &json),
              "extension failed");
      } else {
        if (ext_f1.empty()) {
          std::cerr << "error: --f1 is required in exact mode\n";
          return 1;
        }
        check(hg_forms_extend(F.get(), ext_degree, ext_lambda.c_str(), ext_f0.c_str(),
                              ext_f1.c_str(), ext_window, &json),
              "extension failed");
      }
      emit(take_string(json), forms_output);
      return 0;
    }
    if (cmd_eigen->parsed()) {
      if (eig_degree < 1 || eig_window < 1) {
        std::cerr << "error: degree and window must be >= 1\n";
        return 1;
      }
      hg_graph* g = nullptr;
      check(hg_graph_phi(F.get(), eig_degree, eig_window, &g), "graph construction failed");
      GraphPtr G(g);
      char* json = nullptr;
      check(hg_forms_eigen(G.get(), eig_lambda.c_str(), &json), "eigenfunction solve failed");
      emit(take_string(json), forms_output);
      return 0;
    }
    int dim = -1;
    char* json = nullptr;
    if (cmd_cusp->parsed()) {
      check(hg_forms_cusp_dim(F.get(), cusp_maxdeg, cusp_window, &dim, &json),
            "cusp-dim solve failed");
    } else {
      check(hg_forms_toroidal_dim(F.get(), tor_maxdeg, tor_window, &dim, &json),
            "toroidal-dim solve failed");
    }
    hg_string_free(json);
    emit(std::to_string(dim) + "\n", forms_output);
    return 0;
  }

  if (cmd_ram->parsed()) {
    if (ram_o.window < 1) {
      std::cerr << "error: window must be >= 1\n";
      return 1;
    }
    FieldPtr F = make_field(ram_o.q, ram_o.modulus);
    unsigned gamma[4] = {ram_gamma[0], ram_gamma[1], ram_gamma[2], ram_gamma[3]};
    hg_ramgraph* rg = nullptr;
    check(hg_ramified_create(F.get(), gamma, ram_o.window, &rg), "ramified graph failed");
    RamPtr RG(rg);
    if (ram_project) {
      hg_graph* g = nullptr;
      check(hg_ramified_project(RG.get(), &g), "projection failed");
      GraphPtr G(g);
      emit_graph(G.get(), ram_o);
      return 0;
    }
    char* text = nullptr;
    check(hg_ramified_export(RG.get(), parse_format(ram_o.format), &text), "export failed");
    emit(take_string(text), ram_o.output);
    return 0;
  }

  return 0;
}
