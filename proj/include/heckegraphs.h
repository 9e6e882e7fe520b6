/* heckegraphs.h - C API for the Hecke-operator graph library.
 *
 * All objects are opaque handles created and destroyed through this API.
 * Functions return HG_OK on success; on failure they return an error code
 * and leave a message retrievable with hg_last_error().  Output handles and
 * strings are owned by the caller and must be released with the matching
 * destroy/free function.
 */
#ifndef HECKEGRAPHS_H
#define HECKEGRAPHS_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hg_status {
  HG_OK = 0,
  HG_ERR_INVALID_ARG = 1,
  HG_ERR_WINDOW = 2,
  HG_ERR_SINGULAR = 3,
  HG_ERR_PARSE = 4,
  HG_ERR_INTERNAL = 5
} hg_status;

typedef struct hg_field hg_field;
typedef struct hg_graph hg_graph;
typedef struct hg_ramgraph hg_ramgraph;

typedef enum hg_format {
  HG_FORMAT_JSON = 0,
  HG_FORMAT_DOT = 1,
  HG_FORMAT_TABLE = 2
} hg_format;

/* Last error message of the current thread (empty string if none). */
const char* hg_last_error(void);

/* ---- fields ---------------------------------------------------------- */

/* q must be a prime power.  modulus may be NULL (built-in modulus for
 * extension fields up to q = 25); otherwise it lists the k+1 coefficients
 * of a monic irreducible polynomial over F_p, constant term first. */
hg_status hg_field_create(unsigned q, const unsigned* modulus, size_t modulus_len,
                          hg_field** out);
void hg_field_destroy(hg_field* f);
unsigned hg_field_order(const hg_field* f);

/* ---- graphs ---------------------------------------------------------- */

hg_status hg_graph_phi(const hg_field* f, int degree, int window, hg_graph** out);
hg_status hg_graph_identity(const hg_field* f, int window, hg_graph** out);
hg_status hg_graph_zero(const hg_field* f, int window, hg_graph** out);
hg_status hg_graph_add(const hg_graph* a, const hg_graph* b, hg_graph** out);
hg_status hg_graph_scale(long long r, const hg_graph* g, hg_graph** out);
/* Composition a then b; a's window is shrunk automatically so that b covers
 * every intermediate vertex.  Fails if no usable window remains. */
hg_status hg_graph_compose(const hg_graph* a, const hg_graph* b, hg_graph** out);
hg_status hg_graph_power(const hg_graph* g, int k, hg_graph** out);
void hg_graph_destroy(hg_graph* g);

int hg_graph_window(const hg_graph* g);
int hg_graph_reach(const hg_graph* g);
size_t hg_graph_edge_count(const hg_graph* g);
/* Edge i in (from, to) order; weight is written as a decimal string into
 * weight_buf (truncated if the buffer is too small). */
hg_status hg_graph_edge(const hg_graph* g, size_t i, int* from, int* to, char* weight_buf,
                        size_t weight_buf_len);

/* Serialised graph; paired_edges only affects HG_FORMAT_DOT.  The returned
 * string must be released with hg_string_free. */
hg_status hg_graph_export(const hg_graph* g, hg_format format, int paired_edges, char** out);
hg_status hg_graph_import_json(const char* json_text, hg_graph** out);

/* JSON report of the structural checks; *all_pass is 1 iff every check
 * passed.  The field supplies the arithmetic for the relation checks. */
hg_status hg_graph_verify(const hg_field* f, const hg_graph* g, char** report, int* all_pass);

/* ---- ramified graphs ------------------------------------------------- */

/* gamma: row-major entries (a b; c d) of an invertible matrix over F_q,
 * each the canonical index of a field element. */
hg_status hg_ramified_create(const hg_field* f, const unsigned gamma[4], int window,
                             hg_ramgraph** out);
hg_status hg_ramified_export(const hg_ramgraph* g, hg_format format, char** out);
hg_status hg_ramified_project(const hg_ramgraph* g, hg_graph** out);
void hg_ramgraph_destroy(hg_ramgraph* g);

/* ---- automorphic forms ------------------------------------------------ */

/* Rational scalars are strings "n" or "n/d".  Results are JSON. */

/* Values f_0..f_N of the cusp recursion with q_x = q^degree. */
hg_status hg_forms_extend(const hg_field* f, int degree, const char* lambda, const char* f0,
                          const char* f1, int window, char** out_json);

/* Basis of lambda-eigenfunctions of the graph on its window. */
hg_status hg_forms_eigen(const hg_graph* g, const char* lambda, char** out_json);

/* Complex scalar mode of the cusp recursion. */
hg_status hg_forms_extend_complex(const hg_field* f, int degree, double lambda_re,
                                  double lambda_im, double f0_re, double f0_im, double f1_re,
                                  double f1_im, int window, char** out_json);

/* Eisenstein eigenvalue sqrt(q_x) * (t + 1/t); complex mode only. */
hg_status hg_forms_eisenstein(double t_re, double t_im, double q_x, double* out_re,
                              double* out_im);

hg_status hg_forms_cusp_dim(const hg_field* f, int max_degree, int window, int* dim,
                            char** out_json);
hg_status hg_forms_toroidal_dim(const hg_field* f, int max_degree, int window, int* dim,
                                char** out_json);

void hg_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* HECKEGRAPHS_H */
