// Command line front end. Links the C API only.

#include <CLI11.hpp>

#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "tcb.h"
#include "cli_commands.hpp"

namespace {

struct Options {
    bool json = false;
    std::string fraction, chain, chain2, graph, vertex, vertex2;
    std::string black, end, index_filter;
    int max_len = 1, max_vertices = 2, max_weight = 6, max_steps = 64, component = 0;
    bool irreducible = false, non_du_val = false;
};

int status_exit(tcb_status st) { return static_cast<int>(st); }

std::string take(char* s) {
    std::string out = s ? s : "";
    tcb_string_free(s);
    return out;
}

// stdout for results and verdict messages, stderr for errors
int finish(tcb_status st, char* out, char* errmsg) {
    std::string o = take(out), e = take(errmsg);
    if (!o.empty()) std::cout << o << "\n";
    if (!e.empty()) std::cerr << "error: " << e << "\n";
    return status_exit(st);
}

struct GraphHandle {
    tcb_graph* g = nullptr;
    ~GraphHandle() { tcb_graph_free(g); }
};

struct AnalysisHandle {
    tcb_analysis* a = nullptr;
    ~AnalysisHandle() { tcb_analysis_free(a); }
};

// FILE | "-" (stdin) | chain:... | fork:...
tcb_status load_graph(const std::string& spec, GraphHandle& h, char** err) {
    if (spec.rfind("chain:", 0) == 0 || spec.rfind("fork:", 0) == 0)
        return tcb_graph_parse(spec.c_str(), &h.g, err);
    if (spec == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return tcb_graph_parse(buf.str().c_str(), &h.g, err);
    }
    return tcb_graph_parse_file(spec.c_str(), &h.g, err);
}

int run_op(const std::string& op, const Options& o) {
    char* out = nullptr;
    char* err = nullptr;
    tcb_status st = TCB_OK;

    if (op == "hj_expand") {
        st = tcb_hj_expand(o.fraction.c_str(), &out, &err);
    } else if (op == "hj_eval") {
        st = tcb_hj_eval(o.chain.c_str(), &out, &err);
    } else if (op == "conjugate") {
        st = tcb_hj_conjugate(o.fraction.c_str(), &out, &err);
    } else if (op == "invariants") {
        st = tcb_hj_invariants(o.fraction.c_str(), o.json, &out, &err);
    } else if (op == "is_t_fraction") {
        st = tcb_hj_is_t(o.fraction.c_str(), &out, &err);
    } else if (op == "is_du_val_chain") {
        st = tcb_hj_du_val(o.chain.c_str(), &out, &err);
    } else if (op == "is_t_chain") {
        st = tcb_tchain_check(o.chain.c_str(), o.json, &out, &err);
    } else if (op == "enumerate_tchains") {
        st = tcb_tchain_enum(o.max_len, o.json, &out, &err);
    } else if (op == "t_step_a") {
        st = tcb_tchain_step('a', o.chain.c_str(), &out, &err);
    } else if (op == "t_step_b") {
        st = tcb_tchain_step('b', o.chain.c_str(), &out, &err);
    } else if (op == "endpoint_alphas") {
        st = tcb_tchain_alphas(o.chain.c_str(), o.json, &out, &err);
    } else if (op == "check_parabolic_line") {
        st = tcb_lcb_parabolic_line(o.chain.c_str(), o.chain2.c_str(), o.json, &out, &err);
    } else if (op == "enumerate_fibers") {
        st = tcb_classify_run(o.max_vertices, o.max_weight,
                              o.index_filter.empty() ? nullptr : o.index_filter.c_str(),
                              o.irreducible, o.non_du_val, o.json, &out, &err);
    } else if (op == "classify_index2") {
        st = tcb_classify_index2(o.max_vertices, o.json, &out, &err);
    } else if (op == "scan_multi_singular") {
        st = tcb_classify_multi(o.max_vertices, o.json, &out, &err);
    } else if (op == "realize_tchain") {
        st = tcb_classify_realize(o.chain.c_str(), o.max_steps, o.json, &out, &err);
    } else {
        // operations on a graph argument
        GraphHandle g;
        st = load_graph(o.graph, g, &err);
        if (st != TCB_OK) return finish(st, out, err);
        if (op == "classify_form") {
            st = tcb_graph_classify(g.g, o.json, &out, &err);
        } else if (op == "kernel_vector") {
            st = tcb_graph_kernel(g.g, o.json, &out, &err);
        } else if (op == "intersection_matrix") {
            st = tcb_graph_matrix(g.g, o.json, &out, &err);
        } else if (op == "canonical_form") {
            st = tcb_graph_canonical(g.g, &out, &err);
        } else if (op == "white_components") {
            st = tcb_graph_components(g.g, o.json, &out, &err);
        } else if (op == "component_fraction") {
            st = tcb_graph_component_fraction(g.g, o.component, &out, &err);
        } else if (op == "solve_codiscrepancy") {
            st = tcb_graph_discrepancies(g.g, o.json, &out, &err);
        } else if (op == "blow_up_vertex" || op == "blow_up_edge" || op == "contract_black" ||
                   op == "construction_step") {
            GraphHandle result;
            if (op == "blow_up_vertex")
                st = tcb_graph_blow_up_vertex(g.g, o.vertex.c_str(), &result.g, &err);
            else if (op == "blow_up_edge")
                st = tcb_graph_blow_up_edge(g.g, o.vertex.c_str(), o.vertex2.c_str(),
                                            &result.g, &err);
            else if (op == "contract_black")
                st = tcb_graph_contract(g.g, o.vertex.c_str(), &result.g, &err);
            else
                st = tcb_lcb_construct(g.g, o.black.c_str(), o.end.c_str(), &result.g, &err);
            if (st == TCB_OK) st = tcb_graph_format(result.g, o.json, &out, &err);
        } else if (op == "analyze" || op == "index" || op == "family_match") {
            AnalysisHandle a;
            st = tcb_lcb_analyze(g.g, &a.a, &err);
            if (st == TCB_OK) {
                if (op == "analyze")
                    st = tcb_analysis_report(a.a, o.json, &out, &err);
                else if (op == "index")
                    st = tcb_analysis_index(a.a, &out, &err);
                else
                    st = tcb_analysis_family(a.a, o.json, &out, &err);
            }
        } else {
            std::cerr << "error: unknown operation " << op << "\n";
            return 3;
        }
    }
    return finish(st, out, err);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact calculus of Hirzebruch-Jung chains, T-singularities and "
                 "T-conic-bundle fiber graphs"};
    app.require_subcommand(0);
    auto opts = std::make_shared<Options>();
    app.add_flag("--json", opts->json, "machine-readable JSON output");

    std::string selected_op;
    std::map<std::string, CLI::App*> groups;

    auto get_group = [&](CLI::App* parent, const std::string& name) {
        std::string key = std::string(parent->get_name()) + "/" + name;
        auto it = groups.find(key);
        if (it != groups.end()) return it->second;
        CLI::App* sub = parent->add_subcommand(name, "");
        sub->require_subcommand(1);
        groups[key] = sub;
        return sub;
    };

    for (const auto& row : tcbcli::kCommands) {
        std::vector<std::string> parts;
        std::istringstream ss(row.path);
        std::string part;
        while (ss >> part) parts.push_back(part);
        CLI::App* node = &app;
        for (std::size_t i = 0; i + 1 < parts.size(); ++i) node = get_group(node, parts[i]);
        CLI::App* leaf = node->add_subcommand(parts.back(), row.help);
        const std::string op = row.op;

        if (op == "hj_expand" || op == "conjugate" || op == "invariants" ||
            op == "is_t_fraction") {
            leaf->add_option("fraction", opts->fraction, "fraction as n/q")->required();
        } else if (op == "hj_eval" || op == "is_du_val_chain" || op == "is_t_chain" ||
                   op == "t_step_a" || op == "t_step_b" || op == "endpoint_alphas") {
            leaf->add_option("chain", opts->chain, "chain as b1,b2,...")->required();
        } else if (op == "enumerate_tchains") {
            leaf->add_option("--max-len", opts->max_len, "maximum chain length")
                ->required();
        } else if (op == "check_parabolic_line") {
            leaf->add_option("left", opts->chain, "left chain")->required();
            leaf->add_option("right", opts->chain2, "right chain")->required();
        } else if (op == "enumerate_fibers") {
            leaf->add_option("--max-vertices", opts->max_vertices, "vertex bound")
                ->required();
            leaf->add_option("--max-weight", opts->max_weight, "weight bound")->required();
            leaf->add_option("--index", opts->index_filter, "keep only this index");
            leaf->add_flag("--irreducible", opts->irreducible,
                           "exactly one black vertex");
            leaf->add_flag("--non-du-val", opts->non_du_val,
                           "at least one non-Du-Val point");
        } else if (op == "classify_index2" || op == "scan_multi_singular") {
            leaf->add_option("--max-vertices", opts->max_vertices, "vertex bound")
                ->required();
        } else if (op == "realize_tchain") {
            leaf->add_option("chain", opts->chain, "target T-chain")->required();
            leaf->add_option("--max-steps", opts->max_steps, "derivation step budget");
        } else {
            // graph-consuming commands
            if (op == "blow_up_vertex" || op == "contract_black")
                leaf->add_option("vertex", opts->vertex, "vertex id")->required();
            if (op == "blow_up_edge") {
                leaf->add_option("vertex", opts->vertex, "first endpoint")->required();
                leaf->add_option("vertex2", opts->vertex2, "second endpoint")->required();
            }
            if (op == "construction_step") {
                leaf->add_option("--black", opts->black, "black leaf id")->required();
                leaf->add_option("--end", opts->end, "opposite chain end id")->required();
            }
            if (op == "component_fraction")
                leaf->add_option("--component", opts->component,
                                 "1-based white component index");
            leaf->add_option("graph", opts->graph, "FILE, -, chain:..., or fork:...")
                ->required();
        }
        leaf->callback([&selected_op, op]() { selected_op = op; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }
    if (selected_op.empty()) {
        std::cout << app.help();
        return 0;
    }
    return run_op(selected_op, *opts);
}
