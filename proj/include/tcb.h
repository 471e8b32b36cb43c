/*
 * tcb - exact calculus of Hirzebruch-Jung chains, T-singularities and
 * T-conic-bundle fiber graphs.
 *
 * C API of the shared library. All objects are opaque handles; all results
 * are returned as malloc'd strings released with tcb_string_free. Functions
 * return tcb_status; on TCB_EINVAL and worse, *err (when non-NULL) receives
 * a message the caller must free.
 *
 * Serialized values: fractions "n/q", chains "b1,b2,...", graphs either in
 * the statement format ("v <id> <weight>" / "e <id> <id>" lines) or the
 * shorthands "chain:4,1,2,2,2" and "fork:p|arm|arm|...".
 */
#ifndef TCB_H
#define TCB_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tcb_status {
    TCB_OK = 0,       /* success / verdict true */
    TCB_FALSE = 1,    /* operation ran, verdict is false */
    TCB_EINVAL = 2,   /* invalid input or unsatisfied precondition */
    TCB_EINTERNAL = 3 /* internal inconsistency (a bug, not an input error) */
} tcb_status;

typedef struct tcb_graph tcb_graph;
typedef struct tcb_analysis tcb_analysis;

void tcb_string_free(char* s);

/* --- Hirzebruch-Jung fractions ------------------------------------------ */

tcb_status tcb_hj_expand(const char* fraction, char** out, char** err);
tcb_status tcb_hj_eval(const char* chain, char** out, char** err);
tcb_status tcb_hj_conjugate(const char* fraction, char** out, char** err);
tcb_status tcb_hj_invariants(const char* fraction, int as_json, char** out, char** err);
/* TCB_OK when the fraction is of type T, TCB_FALSE otherwise. */
tcb_status tcb_hj_is_t(const char* fraction, char** out, char** err);
/* TCB_OK when every weight is 2. */
tcb_status tcb_hj_du_val(const char* chain, char** out, char** err);

/* --- T-chains ------------------------------------------------------------- */

tcb_status tcb_tchain_check(const char* chain, int as_json, char** out, char** err);
tcb_status tcb_tchain_step(char step /* 'a' or 'b' */, const char* chain, char** out,
                           char** err);
tcb_status tcb_tchain_enum(int max_len, int as_json, char** out, char** err);
tcb_status tcb_tchain_alphas(const char* chain, int as_json, char** out, char** err);

/* --- weighted graphs ------------------------------------------------------ */

tcb_status tcb_graph_parse(const char* text, tcb_graph** out, char** err);
tcb_status tcb_graph_parse_file(const char* path, tcb_graph** out, char** err);
void tcb_graph_free(tcb_graph* g);
tcb_status tcb_graph_format(const tcb_graph* g, int as_json, char** out, char** err);
tcb_status tcb_graph_classify(const tcb_graph* g, int as_json, char** out, char** err);
tcb_status tcb_graph_matrix(const tcb_graph* g, int as_json, char** out, char** err);
tcb_status tcb_graph_canonical(const tcb_graph* g, char** out, char** err);
tcb_status tcb_graph_kernel(const tcb_graph* g, int as_json, char** out, char** err);
tcb_status tcb_graph_discrepancies(const tcb_graph* g, int as_json, char** out,
                                   char** err);
tcb_status tcb_graph_components(const tcb_graph* g, int as_json, char** out, char** err);
/* component is 1-based; pass 0 to use the unique white component. */
tcb_status tcb_graph_component_fraction(const tcb_graph* g, int component, char** out,
                                        char** err);
tcb_status tcb_graph_blow_up_vertex(const tcb_graph* g, const char* v, tcb_graph** out,
                                    char** err);
tcb_status tcb_graph_blow_up_edge(const tcb_graph* g, const char* v1, const char* v2,
                                  tcb_graph** out, char** err);
tcb_status tcb_graph_contract(const tcb_graph* g, const char* v, tcb_graph** out,
                              char** err);

/* --- fiber graph verification --------------------------------------------- */

tcb_status tcb_lcb_analyze(const tcb_graph* g, tcb_analysis** out, char** err);
void tcb_analysis_free(tcb_analysis* a);
/* 1 when the t-conic-bundle verdict holds. */
int tcb_analysis_valid(const tcb_analysis* a);
tcb_status tcb_analysis_report(const tcb_analysis* a, int as_json, char** out,
                               char** err);
tcb_status tcb_analysis_index(const tcb_analysis* a, char** out, char** err);
tcb_status tcb_analysis_family(const tcb_analysis* a, int as_json, char** out,
                               char** err);
tcb_status tcb_lcb_construct(const tcb_graph* g, const char* black_leaf,
                             const char* chain_end, tcb_graph** out_graph,
                             char** err);
/* TCB_OK when the path [left,1,right] is parabolic, TCB_FALSE otherwise. */
tcb_status tcb_lcb_parabolic_line(const char* left_chain, const char* right_chain,
                                  int as_json, char** out, char** err);

/* --- bounded classification ------------------------------------------------ */

tcb_status tcb_classify_run(int max_vertices, int max_weight, const char* index_filter,
                            int irreducible, int non_du_val, int as_json, char** out,
                            char** err);
tcb_status tcb_classify_index2(int max_vertices, int as_json, char** out, char** err);
tcb_status tcb_classify_multi(int max_vertices, int as_json, char** out, char** err);
tcb_status tcb_classify_realize(const char* chain, int max_steps, int as_json,
                                char** out, char** err);

#ifdef __cplusplus
}
#endif

#endif /* TCB_H */
