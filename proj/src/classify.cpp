#include "classify.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "error.hpp"

namespace tcb {

int worker_count() {
    if (const char* env = std::getenv("TCB_WORKERS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? static_cast<int>(hc) : 1;
}

namespace {

void parallel_items(int count, const std::function<void(int)>& body) {
    int workers = std::min(worker_count(), count);
    if (workers <= 1) {
        for (int i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<int> next{0};
    std::exception_ptr err;
    std::mutex err_mu;
    std::vector<std::thread> pool;
    for (int t = 0; t < workers; ++t) {
        pool.emplace_back([&]() {
            try {
                while (true) {
                    int i = next.fetch_add(1);
                    if (i >= count) break;
                    body(i);
                }
            } catch (...) {
                std::lock_guard<std::mutex> lk(err_mu);
                if (!err) err = std::current_exception();
                next.store(count);
            }
        });
    }
    for (auto& t : pool) t.join();
    if (err) std::rethrow_exception(err);
}

// ---- tree shapes ---------------------------------------------------------

struct Shape {
    int n = 0;
    std::vector<int> parent;    // parent[0] = -1, parent[i] < i
    std::vector<int> sym_prev;  // previous sibling with an isomorphic subtree
};

// Subtree encodings of an unweighted rooted tree, used for symmetry breaking.
std::vector<std::string> rooted_subtree_codes(const std::vector<int>& parent) {
    int n = static_cast<int>(parent.size());
    std::vector<std::string> code(n);
    for (int v = n - 1; v >= 0; --v) {
        std::vector<std::string> kids;
        for (int u = v + 1; u < n; ++u)
            if (parent[u] == v) kids.push_back(code[u]);
        std::sort(kids.begin(), kids.end());
        code[v] = "(";
        for (auto& k : kids) code[v] += k;
        code[v] += ")";
    }
    return code;
}

WeightedGraph shape_graph(const std::vector<int>& parent, const std::vector<int>& w) {
    std::vector<std::pair<std::string, Int>> vs;
    std::vector<std::pair<std::string, std::string>> es;
    for (std::size_t i = 0; i < parent.size(); ++i) {
        vs.push_back({"v" + std::to_string(i + 1), w[i]});
        if (parent[i] >= 0) es.push_back({vs[parent[i]].first, vs[i].first});
    }
    return WeightedGraph(std::move(vs), std::move(es));
}

// All free trees on n vertices: generate rooted level sequences
// (Beyer-Hedetniemi successor rule), then deduplicate up to isomorphism.
std::vector<Shape> free_trees(int n) {
    std::vector<Shape> shapes;
    std::set<std::string> seen;
    auto emit = [&](const std::vector<int>& level) {
        std::vector<int> parent(n, -1);
        for (int i = 1; i < n; ++i)
            for (int j = i - 1; j >= 0; --j)
                if (level[j] == level[i] - 1) {
                    parent[i] = j;
                    break;
                }
        std::vector<int> ones(n, 1);
        std::string canon = canonical_form(shape_graph(parent, ones));
        if (!seen.insert(canon).second) return;
        Shape s;
        s.n = n;
        s.parent = parent;
        s.sym_prev.assign(n, -1);
        auto codes = rooted_subtree_codes(parent);
        for (int v = 0; v < n; ++v)
            for (int u = v - 1; u >= 1; --u)
                if (parent[u] == parent[v] && codes[u] == codes[v]) {
                    s.sym_prev[v] = u;
                    break;
                }
        shapes.push_back(std::move(s));
    };
    if (n == 1) {
        emit({1});
        return shapes;
    }
    std::vector<int> level(n);
    for (int i = 0; i < n; ++i) level[i] = i + 1;
    while (true) {
        emit(level);
        int p = -1;
        for (int i = n - 1; i >= 0; --i)
            if (level[i] > 2) {
                p = i;
                break;
            }
        if (p < 0) break;
        int q = -1;
        for (int i = p - 1; i >= 0; --i)
            if (level[i] == level[p] - 1) {
                q = i;
                break;
            }
        for (int i = p; i < n; ++i) level[i] = level[i - (p - q)];
    }
    return shapes;
}

const std::vector<Shape>& shapes_for(int n) {
    static std::mutex mu;
    static std::map<int, std::vector<Shape>> cache;
    std::lock_guard<std::mutex> lk(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, free_trees(n)).first;
    return it->second;
}

// ---- allowed white components --------------------------------------------

struct AllowedComponents {
    // key: weight sequence (canonical orientation) as raw bytes
    std::unordered_set<std::string> exact;
    std::unordered_map<std::string, int> min_ext;  // shortest completion distance
};

std::string seq_key(const std::vector<unsigned char>& s) {
    std::string fwd(s.begin(), s.end());
    std::string rev(s.rbegin(), s.rend());
    return std::min(fwd, rev);
}

AllowedComponents build_allowed(int max_len, int max_weight) {
    AllowedComponents out;
    std::vector<std::vector<unsigned char>> comps;
    for (int len = 1; len <= max_len; ++len)
        comps.push_back(std::vector<unsigned char>(len, 2));
    for (const Chain& c : enumerate_tchains(max_len)) {
        bool ok = true;
        std::vector<unsigned char> w;
        for (const Int& x : c.weights()) {
            if (x > max_weight) {
                ok = false;
                break;
            }
            w.push_back(static_cast<unsigned char>(x.convert_to<int>()));
        }
        if (ok) comps.push_back(std::move(w));
    }
    for (const auto& comp : comps) {
        int len = static_cast<int>(comp.size());
        out.exact.insert(seq_key(comp));
        for (int i = 0; i < len; ++i) {
            std::vector<unsigned char> sub;
            for (int j = i; j < len; ++j) {
                sub.push_back(comp[j]);
                std::string key = seq_key(sub);
                int ext = len - (j - i + 1);
                auto it = out.min_ext.find(key);
                if (it == out.min_ext.end() || it->second > ext) out.min_ext[key] = ext;
            }
        }
    }
    return out;
}

// ---- pruned weight assignment over one shape -------------------------------

struct ShapeSearch {
    const Shape& shape;
    const SearchBounds& bounds;
    const AllowedComponents& allowed;
    std::atomic<unsigned long long>& nodes;
    std::map<std::string, WeightedGraph>& hits;  // canon -> canonical graph

    std::vector<int> w;           // 0 = unassigned
    std::vector<std::vector<int>> children;
    std::vector<Rat> diag;
    std::vector<int> zero_kids;

    ShapeSearch(const Shape& s, const SearchBounds& b, const AllowedComponents& a,
                std::atomic<unsigned long long>& n, std::map<std::string, WeightedGraph>& h)
        : shape(s), bounds(b), allowed(a), nodes(n), hits(h) {
        w.assign(s.n, 0);
        children.assign(s.n, {});
        for (int v = 1; v < s.n; ++v) children[s.parent[v]].push_back(v);
        diag.resize(s.n);
        zero_kids.resize(s.n);
    }

    // Signature of the prefix tree on vertices 0..k by leaf-to-root
    // elimination with the zero-pivot pair rule. Returns false when the
    // prefix can no longer complete to a parabolic graph.
    bool signature_admissible(int k) {
        int neg = 0, zero = 0, pos = 0;
        for (int v = 0; v <= k; ++v) {
            diag[v] = Rat(-w[v]);
            zero_kids[v] = 0;
        }
        for (int v = k; v >= 1; --v) {
            if (zero_kids[v] > 0) {
                zero += zero_kids[v] - 1;
                ++pos;
                ++neg;
                continue;
            }
            if (diag[v].is_zero()) {
                ++zero_kids[shape.parent[v]];
                continue;
            }
            if (diag[v].sign() < 0)
                ++neg;
            else
                ++pos;
            diag[shape.parent[v]] -= Rat(1) / diag[v];
        }
        if (zero_kids[0] > 0) {
            zero += zero_kids[0] - 1;
            ++pos;
            ++neg;
        } else if (diag[0].is_zero()) {
            ++zero;
        } else if (diag[0].sign() < 0) {
            ++neg;
        } else {
            ++pos;
        }
        int remaining = shape.n - 1 - k;
        if (pos > 0) return false;
        if (zero > 1 + remaining) return false;
        if (remaining == 0 && zero != 1) return false;
        return true;
    }

    // The maximal white path through k in the prefix; false if it is not a
    // path or cannot extend to an admissible component.
    bool white_run_admissible(int k) {
        int p = shape.parent[k];
        if (p >= 0 && w[p] >= 2) {
            int white_deg = 0;
            for (int c : children[p])
                if (w[c] >= 2) ++white_deg;
            if (shape.parent[p] >= 0 && w[shape.parent[p]] >= 2) ++white_deg;
            if (white_deg > 2) return false;  // white vertex of degree three
        }
        // Build the path by BFS over assigned white vertices.
        std::vector<int> comp{k};
        std::vector<int> stack{k};
        std::vector<char> mark(shape.n, 0);
        mark[k] = 1;
        auto visit = [&](int u) {
            if (u >= 0 && w[u] >= 2 && !mark[u]) {
                mark[u] = 1;
                comp.push_back(u);
                stack.push_back(u);
            }
        };
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            visit(shape.parent[v]);
            for (int c : children[v])
                if (c <= /*assigned up to*/ k) visit(c);
        }
        // degree check within the component
        int ends = 0;
        for (int v : comp) {
            int d = 0;
            if (shape.parent[v] >= 0 && mark[shape.parent[v]]) ++d;
            for (int c : children[v])
                if (c <= k && mark[c]) ++d;
            if (d > 2) return false;
            if (d <= 1) ++ends;
        }
        if (static_cast<int>(comp.size()) > 1 && ends != 2) return false;
        // order the path
        std::vector<unsigned char> seq;
        if (comp.size() == 1) {
            seq.push_back(static_cast<unsigned char>(w[k]));
        } else {
            int start = -1;
            for (int v : comp) {
                int d = 0;
                if (shape.parent[v] >= 0 && mark[shape.parent[v]]) ++d;
                for (int c : children[v])
                    if (c <= k && mark[c]) ++d;
                if (d == 1) {
                    start = v;
                    break;
                }
            }
            int pv = -1, cv = start;
            while (cv >= 0) {
                seq.push_back(static_cast<unsigned char>(w[cv]));
                int nx = -1;
                if (shape.parent[cv] >= 0 && mark[shape.parent[cv]] && shape.parent[cv] != pv)
                    nx = shape.parent[cv];
                for (int c : children[cv])
                    if (c <= k && mark[c] && c != pv) nx = c;
                pv = cv;
                cv = nx;
            }
            if (seq.size() != comp.size()) return false;
        }
        auto it = allowed.min_ext.find(seq_key(seq));
        if (it == allowed.min_ext.end()) return false;
        return it->second <= shape.n - 1 - k;
    }

    bool runs_exact() {
        // at a leaf: every white component must be a complete allowed chain
        std::vector<char> mark(shape.n, 0);
        for (int v = 0; v < shape.n; ++v) {
            if (w[v] < 2 || mark[v]) continue;
            std::vector<int> comp{v}, stack{v};
            mark[v] = 1;
            while (!stack.empty()) {
                int x = stack.back();
                stack.pop_back();
                auto visit = [&](int u) {
                    if (u >= 0 && w[u] >= 2 && !mark[u]) {
                        mark[u] = 1;
                        comp.push_back(u);
                        stack.push_back(u);
                    }
                };
                visit(shape.parent[x]);
                for (int c : children[x]) visit(c);
            }
            // must be a path; find an end and order it
            std::vector<char> inc(shape.n, 0);
            for (int x : comp) inc[x] = 1;
            auto wdeg = [&](int x) {
                int d = 0;
                if (shape.parent[x] >= 0 && inc[shape.parent[x]]) ++d;
                for (int c : children[x])
                    if (inc[c]) ++d;
                return d;
            };
            int start = comp[0];
            for (int x : comp)
                if (wdeg(x) <= 1) {
                    start = x;
                    break;
                }
            std::vector<unsigned char> seq;
            int pv = -1, cv = start;
            while (cv >= 0) {
                seq.push_back(static_cast<unsigned char>(w[cv]));
                int nx = -1;
                if (shape.parent[cv] >= 0 && inc[shape.parent[cv]] && shape.parent[cv] != pv)
                    nx = shape.parent[cv];
                for (int c : children[cv])
                    if (inc[c] && c != pv) nx = c;
                pv = cv;
                cv = nx;
            }
            if (seq.size() != comp.size()) return false;  // not a path
            if (!allowed.exact.count(seq_key(seq))) return false;
        }
        return true;
    }

    void leaf() {
        int blacks = 0;
        for (int v = 0; v < shape.n; ++v)
            if (w[v] == 1) ++blacks;
        if (blacks < 1) return;
        if (bounds.require_irreducible_fiber && blacks != 1) return;
        if (!runs_exact()) return;
        WeightedGraph g = shape_graph(shape.parent, w);
        FiberAnalysis a = analyze(g);
        if (!a.t_conic_bundle) return;
        if (bounds.require_non_du_val && a.non_du_val_count < 1) return;
        if (bounds.index_filter && (!a.index || *a.index != *bounds.index_filter)) return;
        WeightedGraph cg = canonicalized(g);
        hits.emplace(canonical_form(cg), std::move(cg));
    }

    void assign(int k) {
        if (nodes.fetch_add(1, std::memory_order_relaxed) >= bounds.node_budget)
            fail("BoundsTooLarge",
                 "search exceeded the partial-tree budget of " +
                     std::to_string(bounds.node_budget) + "; lower the bounds");
        for (int cand = 1; cand <= bounds.max_weight; ++cand) {
            if (shape.sym_prev[k] >= 0 && cand < w[shape.sym_prev[k]]) continue;
            w[k] = cand;
            bool ok = true;
            if (cand >= 2) ok = white_run_admissible(k);
            if (ok) ok = signature_admissible(k);
            if (ok) {
                if (k + 1 == shape.n)
                    leaf();
                else
                    assign(k + 1);
            }
        }
        w[k] = 0;
    }
};

struct WorkItem {
    int size;
    int shape_index;
};

}  // namespace

std::vector<std::vector<int>> free_tree_parents(int n) {
    check(n >= 1, "InvalidBounds", "n must be positive");
    std::vector<std::vector<int>> out;
    for (const Shape& s : shapes_for(n)) out.push_back(s.parent);
    return out;
}

std::vector<FiberHit> enumerate_fibers(const SearchBounds& b) {
    check(b.max_vertices >= 2 && b.max_weight >= 2, "InvalidBounds",
          "bounds require max_vertices >= 2 and max_weight >= 2");
    check(b.max_weight <= 255, "InvalidBounds", "max_weight above 255 is not supported");

    AllowedComponents allowed = build_allowed(b.max_vertices, b.max_weight);
    std::vector<WorkItem> items;
    for (int n = 2; n <= b.max_vertices; ++n) {
        const auto& shapes = shapes_for(n);
        for (int i = 0; i < static_cast<int>(shapes.size()); ++i) items.push_back({n, i});
    }

    std::atomic<unsigned long long> nodes{0};
    std::vector<std::map<std::string, WeightedGraph>> partial(items.size());
    parallel_items(static_cast<int>(items.size()), [&](int i) {
        const Shape& s = shapes_for(items[i].size)[items[i].shape_index];
        ShapeSearch search(s, b, allowed, nodes, partial[i]);
        search.assign(0);
    });

    std::map<std::string, WeightedGraph> merged;
    for (auto& part : partial)
        for (auto& [canon, g] : part) merged.emplace(canon, std::move(g));

    std::vector<FiberHit> hits;
    hits.reserve(merged.size());
    for (auto& [canon, g] : merged) {
        FiberAnalysis a = analyze(g);
        FamilyLabel fam = family_match(a);
        hits.push_back({canon, g, std::move(a), fam});
    }
    return hits;
}

std::vector<std::string> enumerate_fibers_naive(const SearchBounds& b) {
    check(b.max_vertices >= 2 && b.max_weight >= 2, "InvalidBounds",
          "bounds require max_vertices >= 2 and max_weight >= 2");

    // Distinct tree shapes from Pruefer sequences (independent of the level
    // sequence generator used by the pruned search).
    std::vector<std::vector<std::pair<int, int>>> edge_sets;
    for (int n = 2; n <= b.max_vertices; ++n) {
        std::set<std::string> seen;
        long long total = 1;
        for (int i = 0; i < n - 2; ++i) total *= n;
        for (long long code = 0; code < total; ++code) {
            std::vector<int> pruefer;
            long long c = code;
            for (int i = 0; i < n - 2; ++i) {
                pruefer.push_back(static_cast<int>(c % n));
                c /= n;
            }
            std::vector<int> deg(n, 1);
            for (int x : pruefer) ++deg[x];
            std::vector<std::pair<int, int>> edges;
            std::set<int> leaves;
            for (int v = 0; v < n; ++v)
                if (deg[v] == 1) leaves.insert(v);
            std::vector<int> seq = pruefer;
            for (int x : seq) {
                int leaf = *leaves.begin();
                leaves.erase(leaves.begin());
                edges.push_back({leaf, x});
                if (--deg[x] == 1) leaves.insert(x);
            }
            int u = *leaves.begin();
            int v = *std::next(leaves.begin());
            edges.push_back({u, v});

            std::vector<std::pair<std::string, Int>> vs;
            std::vector<std::pair<std::string, std::string>> es;
            for (int x = 0; x < n; ++x) vs.push_back({"v" + std::to_string(x + 1), 1});
            for (auto& [a2, b2] : edges)
                es.push_back({"v" + std::to_string(a2 + 1), "v" + std::to_string(b2 + 1)});
            WeightedGraph g(std::move(vs), std::move(es));
            if (seen.insert(canonical_form(g)).second) edge_sets.push_back(edges);
        }
    }

    std::mutex mu;
    std::map<std::string, WeightedGraph> unique;
    parallel_items(static_cast<int>(edge_sets.size()), [&](int i) {
        const auto& edges = edge_sets[i];
        int n = static_cast<int>(edges.size()) + 1;
        std::vector<int> w(n, 1);
        std::map<std::string, WeightedGraph> local;
        while (true) {
            std::vector<std::pair<std::string, Int>> vs;
            std::vector<std::pair<std::string, std::string>> es;
            for (int x = 0; x < n; ++x) vs.push_back({"v" + std::to_string(x + 1), w[x]});
            for (auto& [a2, b2] : edges)
                es.push_back({"v" + std::to_string(a2 + 1), "v" + std::to_string(b2 + 1)});
            WeightedGraph g(std::move(vs), std::move(es));
            local.emplace(canonical_form(g), std::move(g));
            int k = n - 1;
            while (k >= 0 && w[k] == b.max_weight) w[k--] = 1;
            if (k < 0) break;
            ++w[k];
        }
        std::lock_guard<std::mutex> lk(mu);
        for (auto& [canon, g] : local) unique.emplace(canon, std::move(g));
    });

    std::vector<std::string> accepted;
    for (auto& [canon, g] : unique) {
        FiberAnalysis a = analyze(g);
        if (!a.t_conic_bundle) continue;
        if (b.require_irreducible_fiber && g.black_count() != 1) continue;
        if (b.require_non_du_val && a.non_du_val_count < 1) continue;
        if (b.index_filter && (!a.index || *a.index != *b.index_filter)) continue;
        accepted.push_back(canon);
    }
    return accepted;
}

ClassifyReport classify_index2(int max_vertices) {
    SearchBounds b;
    b.max_vertices = max_vertices;
    b.max_weight = 6;
    b.index_filter = Int(2);
    b.require_non_du_val = true;
    ClassifyReport report;
    report.bounds = b;
    report.hits = enumerate_fibers(b);
    for (auto& hit : report.hits) {
        if (hit.family.tag == FamilyTag::Unclassified)
            fail("ClassificationGap",
                 "index-two fiber graph with no family label, witness: " + hit.canon);
        std::string key = family_tag_name(hit.family.tag);
        if (hit.family.box) key += " box=" + format_chain(*hit.family.box);
        ++report.family_counts[key];
    }
    return report;
}

MultiScanReport scan_multi_singular(int max_vertices) {
    SearchBounds b;
    b.max_vertices = max_vertices;
    b.max_weight = 6;
    MultiScanReport report;
    report.bounds = b;
    report.hits = enumerate_fibers(b);
    for (std::size_t i = 0; i < report.hits.size(); ++i)
        report.by_non_du_val[report.hits[i].analysis.non_du_val_count].push_back(i);

    auto contains = [&](const WeightedGraph& g) {
        std::string canon = canonical_form(g);
        for (auto& hit : report.hits)
            if (hit.canon == canon) return true;
        return false;
    };
    WeightedGraph two = sample_fiber_two_points();
    WeightedGraph three = sample_fiber_three_points();
    if (two.size() <= max_vertices) {
        report.two_point_sample_within_bounds = true;
        require_internal(contains(two), "the two-point sample fiber appears in the scan");
    }
    if (three.size() <= max_vertices) {
        report.three_point_sample_within_bounds = true;
        require_internal(contains(three), "the three-point sample fiber appears in the scan");
    }
    return report;
}

Realization realize_tchain(const Chain& target, int max_steps) {
    check(max_steps >= 0, "NotFound", "max_steps must be nonnegative");
    auto cert = derive_certificate(target);
    check(cert.has_value(), "NotATChain",
          "[" + format_chain(target) + "] is not a T-chain");
    check(static_cast<int>(cert->word.size()) <= max_steps, "NotFound",
          "derivation needs " + std::to_string(cert->word.size()) + " steps, only " +
              std::to_string(max_steps) + " allowed");

    WeightedGraph g = make_family_graph(FamilyTag::IStar, cert->seed);
    std::string first = "c1";
    std::string last = "c" + std::to_string(cert->seed.length());
    FiberAnalysis a = analyze(g);
    require_internal(a.t_conic_bundle, "the seed fiber graph verifies");

    for (char step : cert->word) {
        const std::string& endv = (step == 'A') ? first : last;
        const std::string& oppv = (step == 'A') ? last : first;
        int ev = a.graph.index_of(endv);
        std::string leaf;
        for (int u : a.graph.neighbors(ev))
            if (a.graph.is_black(u) && a.graph.degree(u) == 1) {
                leaf = a.graph.id(u);
                break;
            }
        require_internal(!leaf.empty(), "a black leaf is available at the chain end");
        a = construction_step(a, leaf, oppv);
        if (step == 'A')
            first = leaf;
        else
            last = leaf;
    }

    require_internal(a.points.size() == 1, "the realization has a unique singular point");
    const auto& comp = a.points[0].component;
    require_internal(comp.is_chain, "the unique singular point is a chain");
    std::vector<Int> seq;
    for (int v : comp.vertices) seq.push_back(a.graph.weight(v));
    if (!comp.vertices.empty() && a.graph.id(comp.vertices.front()) != first)
        std::reverse(seq.begin(), seq.end());
    require_internal(seq == target.weights() ||
                         std::vector<Int>(seq.rbegin(), seq.rend()) == target.weights(),
                     "the realized chain equals the target");
    return Realization{std::move(*cert), std::move(a)};
}

}  // namespace tcb
