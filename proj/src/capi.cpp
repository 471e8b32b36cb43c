#include "tcb.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "classify.hpp"
#include "error.hpp"
#include "report.hpp"

struct tcb_graph {
    tcb::WeightedGraph g;
};

struct tcb_analysis {
    tcb::FiberAnalysis a;
};

namespace {

using tcb::ordered_json;

char* dup_string(const std::string& s) {
    char* p = static_cast<char*>(std::malloc(s.size() + 1));
    if (p) std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
}

void set_out(char** out, const std::string& s) {
    if (out) *out = dup_string(s);
}

tcb_status status_for(const tcb::error& e) {
    const std::string& k = e.kind();
    if (k == "Internal" || k == "SingularSystem" || k == "NonPositiveKernel" ||
        k == "DivisionByZero")
        return TCB_EINTERNAL;
    return TCB_EINVAL;
}

template <typename F>
tcb_status wrap(char** err, F&& f) {
    try {
        return f();
    } catch (const tcb::error& e) {
        if (err) *err = dup_string(e.kind() + ": " + e.what());
        return status_for(e);
    } catch (const std::exception& e) {
        if (err) *err = dup_string(std::string("Internal: ") + e.what());
        return TCB_EINTERNAL;
    }
}

std::string dump(const ordered_json& j) { return j.dump(); }

std::string t_fraction_reason(const tcb::Fraction& f) {
    if (f.q() == f.n() - 1) return "Du Val (q = n-1)";
    tcb::Int s = (f.q() + 1) * (f.q() + 1);
    std::string rel = (s % f.n() == 0) ? " ≡ 0 mod " : " ≢ 0 mod ";
    return "(q+1)^2 = " + s.str() + rel + f.n().str();
}

}  // namespace

extern "C" {

void tcb_string_free(char* s) { std::free(s); }

/* --- Hirzebruch-Jung fractions ------------------------------------------ */

tcb_status tcb_hj_expand(const char* fraction, char** out, char** err) {
    return wrap(err, [&]() {
        tcb::Fraction f = tcb::parse_fraction(fraction);
        set_out(out, tcb::format_chain(tcb::hj_expand(f)));
        return TCB_OK;
    });
}

tcb_status tcb_hj_eval(const char* chain, char** out, char** err) {
    return wrap(err, [&]() {
        tcb::Chain c = tcb::parse_chain(chain);
        set_out(out, tcb::format_fraction(tcb::hj_eval(c)));
        return TCB_OK;
    });
}

tcb_status tcb_hj_conjugate(const char* fraction, char** out, char** err) {
    return wrap(err, [&]() {
        tcb::Fraction f = tcb::parse_fraction(fraction);
        set_out(out, tcb::format_fraction(tcb::conjugate(f)));
        return TCB_OK;
    });
}

tcb_status tcb_hj_invariants(const char* fraction, int as_json, char** out, char** err) {
    return wrap(err, [&]() {
        tcb::Fraction f = tcb::parse_fraction(fraction);
        if (as_json) {
            set_out(out, dump(tcb::invariants_json(f)));
        } else {
            tcb::QuotInvariants inv = tcb::invariants(f);
            set_out(out, "iota=" + inv.iota.str() + " beta=" + inv.beta.str() +
                             " gamma=" + inv.gamma.str());
        }
        return TCB_OK;
    });
}

tcb_status tcb_hj_is_t(const char* fraction, char** out, char** err) {
    return wrap(err, [&]() {
        tcb::Fraction f = tcb::parse_fraction(fraction);
        bool t = tcb::is_t_fraction(f);
        set_out(out, (t ? "T-fraction: " : "not a T-fraction: ") + t_fraction_reason(f));
        return t ? TCB_OK : TCB_FALSE;
    });
}

tcb_status tcb_hj_du_val(const char* chain, char** out, char** err) {
    return wrap(err, [&]() {
        tcb::Chain c = tcb::parse_chain(chain);
        if (tcb::is_du_val_chain(c)) {
            set_out(out, "Du Val A" + std::to_string(c.length()));
            return TCB_OK;
        }
        for (std::size_t i = 0; i < c.length(); ++i)
            if (c.weights()[i] != 2) {
                set_out(out, "not Du Val: weight " + c.weights()[i].str() +
                                 " at position " + std::to_string(i + 1));
                break;
            }
        return TCB_FALSE;
    });
}

/* --- T-chains ------------------------------------------------------------- */

tcb_status tcb_tchain_check(const char* chain, int as_json, char** out, char** err) {
    return wrap(err, [&]() {
        tcb::Chain c = tcb::parse_chain(chain);
        tcb::Fraction f = tcb::hj_eval(c);
        auto cert = tcb::derive_certificate(c);
        bool t = cert.has_value();
        if (as_json) {
            ordered_json j;
            j["chain"] = tcb::format_chain(c);
            j["fraction"] = tcb::format_fraction(f);
            j["tChain"] = t;
            if (t) {
                j["seed"] = tcb::format_chain(cert->seed);
                j["word"] = cert->word;
            } else {
                j["reason"] = t_fraction_reason(f);
            }
            set_out(out, dump(j));
        } else if (t) {
            set_out(out, "T-chain: n/q = " + tcb::format_fraction(f) + ", seed [" +
                             tcb::format_chain(cert->seed) + "], word " +
                             (cert->word.empty() ? "(none)" : cert->word));
        } else {
            set_out(out, "not a T-chain: " + t_fraction_reason(f));
        }
        return t ? TCB_OK : TCB_FALSE;
    });
}

tcb_status tcb_tchain_step(char step, const char* chain, char** out, char** err) {
    return wrap(err, [&]() {
        tcb::check(step == 'a' || step == 'b', "ParseError",
                   "step must be 'a' or 'b'");
        tcb::Chain c = tcb::parse_chain(chain);
        tcb::Chain r = step == 'a' ? tcb::t_step_a(c) : tcb::t_step_b(c);
        set_out(out, tcb::format_chain(r));
        return TCB_OK;
    });
}

tcb_status tcb_tchain_enum(int max_len, int as_json, char** out, char** err) {
    return wrap(err, [&]() {
        auto chains = tcb::enumerate_tchains(max_len);
        if (as_json) {
            ordered_json arr = ordered_json::array();
            for (const auto& c : chains) arr.push_back(tcb::format_chain(c));
            set_out(out, dump({{"maxLen", max_len},
                               {"count", chains.size()},
                               {"chains", arr}}));
        } else {
            std::string text;
            for (std::size_t i = 0; i < chains.size(); ++i) {
                if (i) text += "\n";
                text += tcb::format_chain(chains[i]);
            }
            set_out(out, text);
        }
        return TCB_OK;
    });
}

tcb_status tcb_tchain_alphas(const char* chain, int as_json, char** out, char** err) {
    return wrap(err, [&]() {
        tcb::Chain c = tcb::parse_chain(chain);
        auto [a1, ar] = tcb::endpoint_alphas(c);
        if (as_json) {
            set_out(out, dump({{"chain", tcb::format_chain(c)},
                               {"alpha1", a1.str()},
                               {"alphaR", ar.str()},
                               {"sum", (a1 + ar).str()},
                               {"tChain", tcb::is_t_chain(c)}}));
        } else {
            set_out(out, a1.str() + " " + ar.str());
        }
        return TCB_OK;
    });
}

/* --- weighted graphs ------------------------------------------------------ */

tcb_status tcb_graph_parse(const char* text, tcb_graph** out, char** err) {
    return wrap(err, [&]() {
        *out = new tcb_graph{tcb::parse_graph(text)};
        return TCB_OK;
    });
}

tcb_status tcb_graph_parse_file(const char* path, tcb_graph** out, char** err) {
    return wrap(err, [&]() {
        *out = new tcb_graph{tcb::parse_graph_file(path)};
        return TCB_OK;
    });
}

void tcb_graph_free(tcb_graph* g) { delete g; }

tcb_status tcb_graph_format(const tcb_graph* g, int as_json, char** out, char** err) {
    return wrap(err, [&]() {
        set_out(out, as_json ? dump(tcb::graph_json(g->g)) : tcb::format_graph_text(g->g));
        return TCB_OK;
    });
}

tcb_status tcb_graph_classify(const tcb_graph* g, int as_json, char** out, char** err) {
    return wrap(err, [&]() {
        tcb::FormClass fc = tcb::classify_form(g->g);
        set_out(out, as_json ? dump(tcb::form_json(fc)) : tcb::form_text(fc));
        return TCB_OK;
    });
}

tcb_status tcb_graph_matrix(const tcb_graph* g, int as_json, char** out, char** err) {
    return wrap(err, [&]() {
        auto m = tcb::intersection_matrix(g->g);
        if (as_json) {
            ordered_json rows = ordered_json::array();
            for (auto& row : m) {
                ordered_json r = ordered_json::array();
                for (auto& x : row) r.push_back(x.str());
                rows.push_back(r);
            }
            set_out(out, dump(rows));
        } else {
            std::string text;
            for (std::size_t i = 0; i < m.size(); ++i) {
                if (i) text += "\n";
                for (std::size_t j = 0; j < m[i].size(); ++j) {
                    if (j) text += " ";
                    text += m[i][j].str();
                }
            }
            set_out(out, text);
        }
        return TCB_OK;
    });
}

tcb_status tcb_graph_canonical(const tcb_graph* g, char** out, char** err) {
    return wrap(err, [&]() {
        set_out(out, tcb::canonical_form(g->g));
        return TCB_OK;
    });
}

tcb_status tcb_graph_kernel(const tcb_graph* g, int as_json, char** out, char** err) {
    return wrap(err, [&]() {
        tcb::KernelVector k = tcb::kernel_vector(g->g);
        if (as_json) {
            ordered_json j = ordered_json::object();
            for (int v = 0; v < g->g.size(); ++v) j[g->g.id(v)] = k.entries[v].str();
            set_out(out, dump(j));
        } else {
            std::string text;
            for (int v = 0; v < g->g.size(); ++v) {
                if (v) text += " ";
                text += g->g.id(v) + "=" + k.entries[v].str();
            }
            set_out(out, text);
        }
        return TCB_OK;
    });
}

tcb_status tcb_graph_discrepancies(const tcb_graph* g, int as_json, char** out,
                                   char** err) {
    return wrap(err, [&]() {
        tcb::Codiscrepancies cod = tcb::solve_codiscrepancy(g->g);
        tcb::check(cod.complete, "SingularSystem",
                   "a white component has a singular system");
        if (as_json) {
            ordered_json j = ordered_json::object();
            for (int v = 0; v < g->g.size(); ++v)
                if (cod.d[v]) j[g->g.id(v)] = cod.d[v]->str();
            set_out(out, dump(j));
        } else {
            std::string text;
            for (int v = 0; v < g->g.size(); ++v)
                if (cod.d[v]) {
                    if (!text.empty()) text += " ";
                    text += g->g.id(v) + "=" + cod.d[v]->str();
                }
            set_out(out, text.empty() ? "(none)" : text);
        }
        return TCB_OK;
    });
}

tcb_status tcb_graph_components(const tcb_graph* g, int as_json, char** out, char** err) {
    return wrap(err, [&]() {
        tcb::FiberAnalysis a = tcb::analyze(g->g);
        set_out(out,
                as_json ? dump(tcb::components_json(a)) : tcb::components_text(a));
        return TCB_OK;
    });
}

tcb_status tcb_graph_component_fraction(const tcb_graph* g, int component, char** out,
                                        char** err) {
    return wrap(err, [&]() {
        auto comps = tcb::white_components(g->g);
        tcb::check(!comps.empty(), "NotApplicable", "the graph has no white components");
        int idx = component;
        if (idx == 0) {
            tcb::check(comps.size() == 1, "NotApplicable",
                       "the graph has " + std::to_string(comps.size()) +
                           " white components; pick one");
            idx = 1;
        }
        tcb::check(idx >= 1 && idx <= static_cast<int>(comps.size()), "NotApplicable",
                   "component index out of range");
        const auto& comp = comps[idx - 1];
        tcb::check(comp.is_chain, "NotApplicable", "component is not a chain");
        set_out(out, tcb::format_fraction(tcb::component_fraction(*comp.chain)));
        return TCB_OK;
    });
}

tcb_status tcb_graph_blow_up_vertex(const tcb_graph* g, const char* v, tcb_graph** out,
                                    char** err) {
    return wrap(err, [&]() {
        *out = new tcb_graph{g->g.blow_up_vertex(g->g.index_of(v))};
        return TCB_OK;
    });
}

tcb_status tcb_graph_blow_up_edge(const tcb_graph* g, const char* v1, const char* v2,
                                  tcb_graph** out, char** err) {
    return wrap(err, [&]() {
        *out = new tcb_graph{g->g.blow_up_edge(g->g.index_of(v1), g->g.index_of(v2))};
        return TCB_OK;
    });
}

tcb_status tcb_graph_contract(const tcb_graph* g, const char* v, tcb_graph** out,
                              char** err) {
    return wrap(err, [&]() {
        *out = new tcb_graph{g->g.contract_black(g->g.index_of(v))};
        return TCB_OK;
    });
}

/* --- fiber graph verification --------------------------------------------- */

tcb_status tcb_lcb_analyze(const tcb_graph* g, tcb_analysis** out, char** err) {
    return wrap(err, [&]() {
        *out = new tcb_analysis{tcb::analyze(g->g)};
        return TCB_OK;
    });
}

void tcb_analysis_free(tcb_analysis* a) { delete a; }

int tcb_analysis_valid(const tcb_analysis* a) { return a->a.t_conic_bundle ? 1 : 0; }

tcb_status tcb_analysis_report(const tcb_analysis* a, int as_json, char** out,
                               char** err) {
    return wrap(err, [&]() {
        std::optional<tcb::FamilyLabel> fam;
        if (a->a.t_conic_bundle) fam = tcb::family_match(a->a);
        set_out(out, as_json ? dump(tcb::analysis_json(a->a, fam))
                             : tcb::analysis_text(a->a, fam));
        return a->a.t_conic_bundle ? TCB_OK : TCB_FALSE;
    });
}

tcb_status tcb_analysis_index(const tcb_analysis* a, char** out, char** err) {
    return wrap(err, [&]() {
        set_out(out, tcb::fiber_index(a->a).str());
        return TCB_OK;
    });
}

tcb_status tcb_analysis_family(const tcb_analysis* a, int as_json, char** out,
                               char** err) {
    return wrap(err, [&]() {
        tcb::FamilyLabel fam = tcb::family_match(a->a);
        if (as_json) {
            set_out(out, dump({{"tag", tcb::family_tag_name(fam.tag)},
                               {"box", fam.box ? ordered_json(tcb::format_chain(*fam.box))
                                               : ordered_json(nullptr)}}));
        } else {
            set_out(out, tcb::family_text(fam));
        }
        return TCB_OK;
    });
}

tcb_status tcb_lcb_construct(const tcb_graph* g, const char* black_leaf,
                             const char* chain_end, tcb_graph** out_graph, char** err) {
    return wrap(err, [&]() {
        tcb::FiberAnalysis a = tcb::analyze(g->g);
        tcb::FiberAnalysis next = tcb::construction_step(a, black_leaf, chain_end);
        *out_graph = new tcb_graph{next.graph};
        return TCB_OK;
    });
}

tcb_status tcb_lcb_parabolic_line(const char* left_chain, const char* right_chain,
                                  int as_json, char** out, char** err) {
    return wrap(err, [&]() {
        tcb::Chain left = tcb::parse_chain(left_chain);
        tcb::Chain right = tcb::parse_chain(right_chain);
        auto [parabolic, condition] = tcb::check_parabolic_line(left, right);
        tcb::Int ls = 0, rs = 0;
        for (const tcb::Int& w : left.weights()) ls += w - 1;
        for (const tcb::Int& w : right.weights()) rs += w - 1;
        tcb::Int total = static_cast<long long>(left.length() + right.length() + 1);
        if (as_json) {
            set_out(out, dump({{"parabolic", parabolic},
                               {"conditionHolds", condition},
                               {"leftSum", ls.str()},
                               {"rightSum", rs.str()},
                               {"vertexCountMinus2", (total - 2).str()}}));
        } else {
            set_out(out, std::string("parabolic: ") + (parabolic ? "yes" : "no") +
                             "\ncondition: " + (condition ? "yes" : "no") + " (left=" +
                             ls.str() + " right=" + rs.str() + " total-2=" +
                             (total - 2).str() + ")");
        }
        return parabolic ? TCB_OK : TCB_FALSE;
    });
}

/* --- bounded classification ------------------------------------------------ */

tcb_status tcb_classify_run(int max_vertices, int max_weight, const char* index_filter,
                            int irreducible, int non_du_val, int as_json, char** out,
                            char** err) {
    return wrap(err, [&]() {
        tcb::SearchBounds b;
        b.max_vertices = max_vertices;
        b.max_weight = max_weight;
        if (index_filter && *index_filter) b.index_filter = tcb::Int(index_filter);
        b.require_irreducible_fiber = irreducible != 0;
        b.require_non_du_val = non_du_val != 0;
        auto hits = tcb::enumerate_fibers(b);
        set_out(out, as_json ? dump(tcb::classify_run_json(hits, b))
                             : tcb::classify_run_text(hits, b));
        return TCB_OK;
    });
}

tcb_status tcb_classify_index2(int max_vertices, int as_json, char** out, char** err) {
    return wrap(err, [&]() {
        tcb::ClassifyReport r = tcb::classify_index2(max_vertices);
        set_out(out, as_json ? dump(tcb::classify_report_json(r))
                             : tcb::classify_report_text(r));
        return TCB_OK;
    });
}

tcb_status tcb_classify_multi(int max_vertices, int as_json, char** out, char** err) {
    return wrap(err, [&]() {
        tcb::MultiScanReport r = tcb::scan_multi_singular(max_vertices);
        set_out(out,
                as_json ? dump(tcb::multi_scan_json(r)) : tcb::multi_scan_text(r));
        return TCB_OK;
    });
}

tcb_status tcb_classify_realize(const char* chain, int max_steps, int as_json,
                                char** out, char** err) {
    return wrap(err, [&]() {
        tcb::Chain target = tcb::parse_chain(chain);
        tcb::Realization r = tcb::realize_tchain(target, max_steps);
        set_out(out, as_json ? dump(tcb::realization_json(r)) : tcb::realization_text(r));
        return TCB_OK;
    });
}

}  // extern "C"
