#pragma once

#include <cstddef>

namespace tcbcli {

// One row per leaf command; every row maps to exactly one library operation.
// The CLI builds its subcommand tree from this table, and the coverage test
// checks the mapping is a bijection onto the operation list below.
struct CommandRow {
    const char* path;  // space-separated subcommand path
    const char* op;    // library operation the leaf invokes
    const char* help;
};

inline constexpr CommandRow kCommands[] = {
    {"hj expand", "hj_expand", "continued fraction expansion of n/q"},
    {"hj eval", "hj_eval", "evaluate a chain to a fraction in lowest terms"},
    {"hj conjugate", "conjugate", "the fraction n/q' with q q' = 1 mod n"},
    {"hj invariants", "invariants", "the triple (iota, beta, gamma)"},
    {"hj is-t", "is_t_fraction", "test (q+1)^2 = 0 mod n, excluding Du Val"},
    {"hj du-val", "is_du_val_chain", "test whether every weight equals 2"},
    {"tchain check", "is_t_chain", "T-chain test with derivation certificate"},
    {"tchain enum", "enumerate_tchains", "all T-chains up to a length bound"},
    {"tchain step a", "t_step_a", "[b1,...,br] -> [2,b1,...,br+1]"},
    {"tchain step b", "t_step_b", "[b1,...,br] -> [b1+1,...,br,2]"},
    {"tchain alphas", "endpoint_alphas", "endpoint log discrepancies (a1, ar)"},
    {"graph classify", "classify_form", "signature class of the intersection form"},
    {"graph kernel", "kernel_vector", "primitive positive kernel generator"},
    {"graph matrix", "intersection_matrix", "print the intersection matrix"},
    {"graph canonical", "canonical_form", "canonical encoding of a weighted tree"},
    {"graph components", "white_components", "white components with fractions"},
    {"graph fraction", "component_fraction", "fraction of one white component"},
    {"graph discrepancies", "solve_codiscrepancy", "codiscrepancies of white vertices"},
    {"graph blowup-vertex", "blow_up_vertex", "blow up a vertex"},
    {"graph blowup-edge", "blow_up_edge", "blow up an edge"},
    {"graph contract", "contract_black", "contract a black vertex"},
    {"lcb verify", "analyze", "full fiber-graph verification report"},
    {"lcb index", "index", "lcm of the point indices"},
    {"lcb family", "family_match", "match against the six index-two families"},
    {"lcb construct", "construction_step", "blow up a black leaf and the far chain end"},
    {"lcb parabolic-line", "check_parabolic_line", "parabolicity of [left,1,right]"},
    {"classify run", "enumerate_fibers", "bounded exhaustive fiber-graph search"},
    {"classify index2", "classify_index2", "index-two classification within bounds"},
    {"classify multi", "scan_multi_singular", "group fibers by non-Du-Val point count"},
    {"classify realize", "realize_tchain", "fiber graph with one given singular point"},
};

inline constexpr const char* kAllOperations[] = {
    // hj-core
    "hj_expand", "hj_eval", "conjugate", "invariants", "is_t_fraction",
    "is_du_val_chain",
    // tchain
    "t_step_a", "t_step_b", "is_t_chain", "enumerate_tchains", "endpoint_alphas",
    // graphcalc
    "intersection_matrix", "classify_form", "kernel_vector", "blow_up_vertex",
    "blow_up_edge", "contract_black", "canonical_form",
    // discrepancy
    "white_components", "solve_codiscrepancy", "component_fraction",
    // lcb
    "analyze", "index", "family_match", "construction_step", "check_parabolic_line",
    // classify
    "enumerate_fibers", "classify_index2", "scan_multi_singular", "realize_tchain",
};

inline constexpr std::size_t kCommandCount = sizeof(kCommands) / sizeof(kCommands[0]);
inline constexpr std::size_t kOperationCount =
    sizeof(kAllOperations) / sizeof(kAllOperations[0]);

}  // namespace tcbcli
