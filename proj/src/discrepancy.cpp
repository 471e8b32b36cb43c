#include "discrepancy.hpp"

#include <algorithm>

#include "error.hpp"

namespace tcb {

std::vector<WhiteComponent> white_components(const WeightedGraph& g) {
    int n = g.size();
    std::vector<char> seen(n, 0);
    std::vector<WhiteComponent> comps;
    for (int start = 0; start < n; ++start) {
        if (seen[start] || !g.is_white(start)) continue;
        WhiteComponent comp;
        std::vector<int> stack{start};
        seen[start] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.vertices.push_back(v);
            for (int u : g.neighbors(v))
                if (g.is_white(u) && !seen[u]) {
                    seen[u] = 1;
                    stack.push_back(u);
                }
        }
        std::sort(comp.vertices.begin(), comp.vertices.end());
        // Path test: within the component every vertex has at most two white
        // neighbors and there is no cycle (induced subgraphs of trees are
        // forests, but the graph may not be a tree).
        int edges = 0;
        bool deg_ok = true;
        for (int v : comp.vertices) {
            int d = 0;
            for (int u : g.neighbors(v))
                if (g.is_white(u)) ++d;
            edges += d;
            if (d > 2) deg_ok = false;
        }
        edges /= 2;
        comp.is_chain = deg_ok && edges + 1 == static_cast<int>(comp.vertices.size());
        if (comp.is_chain) {
            // Walk from the end with the smallest vertex index.
            int end = -1;
            for (int v : comp.vertices) {
                int d = 0;
                for (int u : g.neighbors(v))
                    if (g.is_white(u)) ++d;
                if (d <= 1) {
                    end = v;
                    break;
                }
            }
            std::vector<int> order;
            int prev = -1, cur = end;
            while (cur >= 0) {
                order.push_back(cur);
                int next = -1;
                for (int u : g.neighbors(cur))
                    if (g.is_white(u) && u != prev) next = u;
                prev = cur;
                cur = next;
            }
            require_internal(order.size() == comp.vertices.size(), "path walk covers component");
            std::vector<Int> w;
            for (int v : order) w.push_back(g.weight(v));
            comp.vertices = std::move(order);
            comp.chain = Chain(std::move(w));
        }
        comps.push_back(std::move(comp));
    }
    return comps;
}

namespace {

// Solve M d = rhs on one induced white component (a tree) by leaf-to-root
// elimination. Returns false if a pivot vanishes.
bool solve_component(const WeightedGraph& g, const std::vector<int>& verts,
                     std::vector<std::optional<Rat>>& out) {
    int k = static_cast<int>(verts.size());
    std::vector<int> pos(g.size(), -1);
    for (int i = 0; i < k; ++i) pos[verts[i]] = i;

    // BFS order from verts[0] within the component.
    std::vector<int> order, parent(k, -1);
    std::vector<char> seen(k, 0);
    order.push_back(0);
    seen[0] = 1;
    for (std::size_t h = 0; h < order.size(); ++h) {
        int i = order[h];
        for (int u : g.neighbors(verts[i])) {
            int j = pos[u];
            if (j >= 0 && !seen[j]) {
                seen[j] = 1;
                parent[j] = i;
                order.push_back(j);
            }
        }
    }
    if (static_cast<int>(order.size()) != k) return false;  // cycle guard

    std::vector<Rat> diag(k), rhs(k);
    for (int i = 0; i < k; ++i) {
        diag[i] = -Rat(g.weight(verts[i]));
        rhs[i] = Rat(2) - Rat(g.weight(verts[i]));
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int i = *it;
        if (parent[i] < 0) continue;
        if (diag[i].is_zero()) return false;
        diag[parent[i]] -= Rat(1) / diag[i];
        rhs[parent[i]] -= rhs[i] / diag[i];
    }
    int root = order.front();
    if (diag[root].is_zero()) return false;
    std::vector<Rat> d(k);
    d[root] = rhs[root] / diag[root];
    for (std::size_t h = 1; h < order.size(); ++h) {
        int i = order[h];
        d[i] = (rhs[i] - d[parent[i]]) / diag[i];
    }
    for (int i = 0; i < k; ++i) out[verts[i]] = d[i];
    return true;
}

}  // namespace

Codiscrepancies solve_codiscrepancy(const WeightedGraph& g) {
    Codiscrepancies result;
    result.d.resize(g.size());
    for (const auto& comp : white_components(g)) {
        bool ok = solve_component(g, comp.vertices, result.d);
        if (!ok) {
            result.complete = false;
            continue;
        }
        if (comp.is_chain) {
            // Log terminality: 0 <= d < 1 on chains of weights >= 2.
            for (int v : comp.vertices) {
                const Rat& dv = *result.d[v];
                require_internal(dv.sign() >= 0 && dv < Rat(1),
                                 "chain codiscrepancies lie in [0,1)");
            }
        }
    }
    return result;
}

std::vector<Rat> solve_chain_codiscrepancy(const std::vector<Int>& weights) {
    int k = static_cast<int>(weights.size());
    check(k > 0, "InvalidChain", "empty chain");
    std::vector<Rat> diag(k), rhs(k), d(k);
    for (int i = 0; i < k; ++i) {
        check(weights[i] >= 2, "InvalidChain", "chain weights must be >= 2");
        diag[i] = -Rat(weights[i]);
        rhs[i] = Rat(2) - Rat(weights[i]);
    }
    for (int i = k - 1; i >= 1; --i) {
        require_internal(!diag[i].is_zero(), "chain solve pivots are nonzero");
        diag[i - 1] -= Rat(1) / diag[i];
        rhs[i - 1] -= rhs[i] / diag[i];
    }
    require_internal(!diag[0].is_zero(), "chain solve pivots are nonzero");
    d[0] = rhs[0] / diag[0];
    for (int i = 1; i < k; ++i) d[i] = (rhs[i] - d[i - 1]) / diag[i];
    return d;
}

Fraction component_fraction(const Chain& c) { return hj_eval(c); }

}  // namespace tcb
