#include "report.hpp"

#include <sstream>

namespace tcb {

namespace {

std::string yn(bool b) { return b ? "yes" : "no"; }

std::string chain_of(const WhiteComponent& comp) {
    return comp.is_chain ? format_chain(*comp.chain) : std::string();
}

std::string du_val_label(const Chain& c) {
    return "A" + std::to_string(c.length());
}

}  // namespace

ordered_json graph_json(const WeightedGraph& g) {
    ordered_json vertices = ordered_json::array();
    for (int v = 0; v < g.size(); ++v)
        vertices.push_back({{"id", g.id(v)}, {"weight", g.weight(v).str()}});
    ordered_json edges = ordered_json::array();
    for (auto& [a, b] : g.edges())
        edges.push_back(ordered_json::array({g.id(a), g.id(b)}));
    return {{"vertices", vertices}, {"edges", edges}};
}

ordered_json form_json(const FormClass& fc) {
    return {{"tag", form_tag_name(fc.tag)},
            {"negatives", fc.negatives},
            {"zeros", fc.zeros},
            {"positives", fc.positives}};
}

ordered_json invariants_json(const Fraction& f) {
    QuotInvariants inv = invariants(f);
    return {{"n", f.n().str()},
            {"q", f.q().str()},
            {"iota", inv.iota.str()},
            {"beta", inv.beta.str()},
            {"gamma", inv.gamma.str()}};
}

std::string form_text(const FormClass& fc) {
    std::ostringstream out;
    out << form_tag_name(fc.tag) << " (negatives=" << fc.negatives
        << ", zeros=" << fc.zeros << ", positives=" << fc.positives << ")";
    return out.str();
}

std::string family_text(const FamilyLabel& fam) {
    std::string out = family_tag_name(fam.tag);
    if (fam.box) out += " box=" + format_chain(*fam.box);
    return out;
}

std::string point_text(const SingularPoint& p, const WeightedGraph& g) {
    if (!p.component.is_chain) {
        std::string ids;
        for (int v : p.component.vertices) {
            if (!ids.empty()) ids += ",";
            ids += g.id(v);
        }
        return "not a chain (vertices " + ids + ")";
    }
    std::string out = format_fraction(*p.fraction) + " [" + chain_of(p.component) + "]";
    if (p.du_val)
        out += " (Du Val " + du_val_label(*p.component.chain) + ")";
    else if (is_t_chain(*p.component.chain))
        out += " (T, iota=" + p.iota.str() + ")";
    else
        out += " (not T, iota=" + p.iota.str() + ")";
    return out;
}

ordered_json components_json(const FiberAnalysis& a) {
    ordered_json points = ordered_json::array();
    for (const auto& p : a.points) {
        ordered_json j;
        ordered_json ids = ordered_json::array();
        for (int v : p.component.vertices) ids.push_back(a.graph.id(v));
        j["vertices"] = ids;
        if (p.component.is_chain) {
            j["chain"] = chain_of(p.component);
            j["fraction"] = format_fraction(*p.fraction);
            j["duVal"] = p.du_val;
            j["t"] = !p.du_val && is_t_chain(*p.component.chain);
            j["iota"] = p.iota.str();
        } else {
            j["chain"] = nullptr;
        }
        points.push_back(std::move(j));
    }
    return points;
}

std::string components_text(const FiberAnalysis& a) {
    std::ostringstream out;
    for (std::size_t i = 0; i < a.points.size(); ++i) {
        if (i) out << "\n";
        out << "component " << (i + 1) << ": " << point_text(a.points[i], a.graph);
    }
    if (a.points.empty()) out << "(no white components)";
    return out.str();
}

ordered_json analysis_json(const FiberAnalysis& a, const std::optional<FamilyLabel>& fam) {
    ordered_json j;
    j["graph"] = graph_json(a.graph);
    j["form"] = form_json(a.form);
    j["checks"] = {{"tree", a.checks.tree},
                   {"blackWeights", a.checks.black_weights},
                   {"parabolic", a.checks.parabolic},
                   {"positiveKernel", a.checks.positive_kernel},
                   {"whiteChains", a.checks.white_chains},
                   {"tOrDuVal", a.checks.t_or_du_val},
                   {"ampleness", a.checks.ampleness},
                   {"fiberIdentity", a.checks.fiber_identity}};
    j["tConicBundle"] = a.t_conic_bundle;
    if (a.multiplicities) {
        ordered_json mult = ordered_json::array();
        for (const Int& m : a.multiplicities->entries) mult.push_back(m.str());
        j["multiplicities"] = mult;
    } else {
        j["multiplicities"] = nullptr;
    }
    ordered_json cod = ordered_json::object();
    for (int v = 0; v < a.graph.size(); ++v)
        if (a.codisc.d[v]) cod[a.graph.id(v)] = a.codisc.d[v]->str();
    j["codiscrepancies"] = cod;
    ordered_json ddl = ordered_json::object();
    for (int v = 0; v < a.graph.size(); ++v)
        if (a.delta_dot_l[v]) ddl[a.graph.id(v)] = a.delta_dot_l[v]->str();
    j["deltaDotL"] = ddl;
    j["sumL"] = a.sum_l.str();
    j["singularPoints"] = components_json(a);
    j["nonDuValCount"] = a.non_du_val_count;
    j["index"] = a.index ? ordered_json(a.index->str()) : ordered_json(nullptr);
    if (fam)
        j["family"] = {{"tag", family_tag_name(fam->tag)},
                       {"box", fam->box ? ordered_json(format_chain(*fam->box))
                                        : ordered_json(nullptr)}};
    else
        j["family"] = nullptr;
    return j;
}

std::string analysis_text(const FiberAnalysis& a, const std::optional<FamilyLabel>& fam) {
    std::ostringstream out;
    out << "tree:            " << yn(a.checks.tree) << "\n";
    out << "black weights:   " << yn(a.checks.black_weights) << "\n";
    out << "form:            " << form_text(a.form) << "\n";
    out << "positive kernel: " << yn(a.checks.positive_kernel) << "\n";
    out << "white chains:    " << yn(a.checks.white_chains) << "\n";
    out << "T or Du Val:     " << yn(a.checks.t_or_du_val) << "\n";
    out << "ampleness:       " << yn(a.checks.ampleness) << "\n";
    out << "fiber identity:  " << yn(a.checks.fiber_identity);
    if (a.multiplicities)
        out << " (sum l_i = " << a.sum_l.str() << ")";
    out << "\n";
    out << "t-conic bundle:  " << yn(a.t_conic_bundle) << "\n";
    if (a.multiplicities) {
        out << "multiplicities: ";
        for (int v = 0; v < a.graph.size(); ++v)
            out << " " << a.graph.id(v) << "=" << a.multiplicities->entries[v].str();
        out << "\n";
    }
    out << "codiscrepancies:";
    bool any = false;
    for (int v = 0; v < a.graph.size(); ++v)
        if (a.codisc.d[v]) {
            out << " " << a.graph.id(v) << "=" << a.codisc.d[v]->str();
            any = true;
        }
    if (!any) out << " (none)";
    out << "\n";
    out << "Delta.L:        ";
    any = false;
    for (int v = 0; v < a.graph.size(); ++v)
        if (a.delta_dot_l[v]) {
            out << " " << a.graph.id(v) << "=" << a.delta_dot_l[v]->str();
            any = true;
        }
    if (!any) out << " (none)";
    out << "\n";
    out << "singular points: ";
    if (a.points.empty()) out << "(none)";
    for (std::size_t i = 0; i < a.points.size(); ++i) {
        if (i) out << "; ";
        out << point_text(a.points[i], a.graph);
    }
    out << "\n";
    out << "index:           " << (a.index ? a.index->str() : "n/a") << "\n";
    out << "family:          " << (fam ? family_text(*fam) : "n/a");
    return out.str();
}

ordered_json hit_json(const FiberHit& h) {
    ordered_json j;
    j["canon"] = h.canon;
    j["graph"] = graph_json(h.graph);
    j["checks"] = analysis_json(h.analysis, h.family)["checks"];
    j["index"] = h.analysis.index ? ordered_json(h.analysis.index->str())
                                  : ordered_json(nullptr);
    j["nonDuValCount"] = h.analysis.non_du_val_count;
    j["family"] = family_tag_name(h.family.tag);
    j["box"] = h.family.box ? ordered_json(format_chain(*h.family.box))
                            : ordered_json(nullptr);
    return j;
}

namespace {

std::string bounds_text(const SearchBounds& b) {
    std::ostringstream out;
    out << "max_vertices=" << b.max_vertices << " max_weight=" << b.max_weight;
    if (b.index_filter) out << " index=" << b.index_filter->str();
    if (b.require_irreducible_fiber) out << " irreducible";
    if (b.require_non_du_val) out << " non-du-val";
    return out.str();
}

ordered_json bounds_json(const SearchBounds& b) {
    return {{"maxVertices", b.max_vertices},
            {"maxWeight", b.max_weight},
            {"index", b.index_filter ? ordered_json(b.index_filter->str())
                                     : ordered_json(nullptr)},
            {"irreducible", b.require_irreducible_fiber},
            {"nonDuVal", b.require_non_du_val}};
}

}  // namespace

std::string classify_run_text(const std::vector<FiberHit>& hits, const SearchBounds& b) {
    std::ostringstream out;
    for (const auto& h : hits) {
        out << h.canon << "  index=" << (h.analysis.index ? h.analysis.index->str() : "n/a")
            << "  nonDuVal=" << h.analysis.non_du_val_count << "  family=";
        out << family_tag_name(h.family.tag);
        if (h.family.box) out << "[" << format_chain(*h.family.box) << "]";
        out << "\n";
    }
    out << "hits: " << hits.size() << "  (" << bounds_text(b) << ")";
    return out.str();
}

ordered_json classify_run_json(const std::vector<FiberHit>& hits, const SearchBounds& b) {
    ordered_json arr = ordered_json::array();
    for (const auto& h : hits) arr.push_back(hit_json(h));
    return {{"bounds", bounds_json(b)}, {"count", hits.size()}, {"hits", arr}};
}

std::string classify_report_text(const ClassifyReport& r) {
    std::ostringstream out;
    out << classify_run_text(r.hits, r.bounds) << "\n";
    out << "family counts:";
    if (r.family_counts.empty()) out << " (none)";
    out << "\n";
    for (auto& [label, count] : r.family_counts)
        out << "  " << label << ": " << count << "\n";
    std::string s = out.str();
    s.pop_back();
    return s;
}

ordered_json classify_report_json(const ClassifyReport& r) {
    ordered_json j = classify_run_json(r.hits, r.bounds);
    ordered_json counts = ordered_json::object();
    for (auto& [label, count] : r.family_counts) counts[label] = count;
    j["familyCounts"] = counts;
    return j;
}

std::string multi_scan_text(const MultiScanReport& r) {
    std::ostringstream out;
    for (auto& [count, idxs] : r.by_non_du_val) {
        out << "non-Du-Val points = " << count << ": " << idxs.size() << " graphs\n";
        for (std::size_t i : idxs) out << "  " << r.hits[i].canon << "\n";
    }
    out << "hits: " << r.hits.size() << "  (" << bounds_text(r.bounds) << ")";
    if (r.two_point_sample_within_bounds) out << "\ntwo-point sample found: yes";
    if (r.three_point_sample_within_bounds) out << "\nthree-point sample found: yes";
    return out.str();
}

ordered_json multi_scan_json(const MultiScanReport& r) {
    ordered_json groups = ordered_json::object();
    for (auto& [count, idxs] : r.by_non_du_val) {
        ordered_json arr = ordered_json::array();
        for (std::size_t i : idxs) arr.push_back(r.hits[i].canon);
        groups[std::to_string(count)] = arr;
    }
    ordered_json j = classify_run_json(r.hits, r.bounds);
    j["byNonDuVal"] = groups;
    j["twoPointSampleFound"] = r.two_point_sample_within_bounds;
    j["threePointSampleFound"] = r.three_point_sample_within_bounds;
    return j;
}

std::string realization_text(const Realization& r) {
    std::ostringstream out;
    out << "seed: " << format_chain(r.certificate.seed) << "\n";
    out << "word: " << (r.certificate.word.empty() ? "(none)" : r.certificate.word) << "\n";
    out << "graph:\n" << format_graph_text(r.analysis.graph) << "\n";
    out << "singular point: " << point_text(r.analysis.points.at(0), r.analysis.graph);
    return out.str();
}

ordered_json realization_json(const Realization& r) {
    return {{"target", format_chain(r.certificate.chain)},
            {"seed", format_chain(r.certificate.seed)},
            {"word", r.certificate.word},
            {"analysis", analysis_json(r.analysis, std::nullopt)}};
}

}  // namespace tcb
