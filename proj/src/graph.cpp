#include "graph.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "error.hpp"

namespace tcb {

WeightedGraph::WeightedGraph(std::vector<std::pair<std::string, Int>> vertices,
                             std::vector<std::pair<std::string, std::string>> edges) {
    check(!vertices.empty(), "ParseError", "graph must have at least one vertex");
    std::map<std::string, int> index;
    for (auto& [id, w] : vertices) {
        check(!id.empty(), "ParseError", "vertex id must be nonempty");
        check(id.find_first_of(" \t,|") == std::string::npos, "ParseError",
              "vertex id \"" + id + "\" contains a reserved character");
        check(index.emplace(id, static_cast<int>(ids_.size())).second, "ParseError",
              "duplicate vertex id \"" + id + "\"");
        check(w >= 1, "ParseError",
              "vertex \"" + id + "\" must have weight >= 1, got " + w.str());
        ids_.push_back(id);
        weights_.push_back(w);
    }
    adj_.resize(ids_.size());
    std::set<std::pair<int, int>> seen;
    for (auto& [a, b] : edges) {
        auto ia = index.find(a), ib = index.find(b);
        check(ia != index.end(), "ParseError", "edge endpoint \"" + a + "\" is not a vertex");
        check(ib != index.end(), "ParseError", "edge endpoint \"" + b + "\" is not a vertex");
        int u = ia->second, v = ib->second;
        check(u != v, "ParseError", "self-loop at \"" + a + "\"");
        auto key = std::minmax(u, v);
        check(seen.insert({key.first, key.second}).second, "ParseError",
              "duplicate edge {" + a + "," + b + "}");
        adj_[u].push_back(v);
        adj_[v].push_back(u);
        edges_.push_back({key.first, key.second});
    }
    // connectivity
    std::vector<char> visited(ids_.size(), 0);
    std::vector<int> stack{0};
    visited[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : adj_[v]) {
            if (!visited[u]) {
                visited[u] = 1;
                ++reached;
                stack.push_back(u);
            }
        }
    }
    check(reached == ids_.size(), "ParseError", "graph is not connected");
}

bool WeightedGraph::has_edge(int u, int v) const {
    for (int x : adj_[u])
        if (x == v) return true;
    return false;
}

int WeightedGraph::black_count() const {
    int k = 0;
    for (int v = 0; v < size(); ++v)
        if (is_black(v)) ++k;
    return k;
}

int WeightedGraph::index_of(const std::string& id) const {
    for (int v = 0; v < size(); ++v)
        if (ids_[v] == id) return v;
    fail("UnknownVertex", "no vertex with id \"" + id + "\"");
}

std::string WeightedGraph::fresh_id() const {
    std::set<std::string> used(ids_.begin(), ids_.end());
    for (int k = 1;; ++k) {
        std::string cand = "x" + std::to_string(k);
        if (!used.count(cand)) return cand;
    }
}

WeightedGraph WeightedGraph::blow_up_vertex(int v) const {
    check(v >= 0 && v < size(), "UnknownVertex", "vertex index out of range");
    std::vector<std::pair<std::string, Int>> vs;
    std::vector<std::pair<std::string, std::string>> es;
    for (int i = 0; i < size(); ++i)
        vs.push_back({ids_[i], i == v ? weights_[i] + 1 : weights_[i]});
    std::string nb = fresh_id();
    vs.push_back({nb, 1});
    for (auto& [a, b] : edges_) es.push_back({ids_[a], ids_[b]});
    es.push_back({ids_[v], nb});
    return WeightedGraph(std::move(vs), std::move(es));
}

WeightedGraph WeightedGraph::blow_up_edge(int u, int v) const {
    check(u >= 0 && u < size() && v >= 0 && v < size(), "UnknownVertex",
          "vertex index out of range");
    check(has_edge(u, v), "UnknownEdge",
          "no edge {" + ids_[u] + "," + ids_[v] + "}");
    std::vector<std::pair<std::string, Int>> vs;
    std::vector<std::pair<std::string, std::string>> es;
    for (int i = 0; i < size(); ++i)
        vs.push_back({ids_[i], (i == u || i == v) ? weights_[i] + 1 : weights_[i]});
    std::string nb = fresh_id();
    vs.push_back({nb, 1});
    for (auto& [a, b] : edges_) {
        if ((a == u && b == v) || (a == v && b == u)) continue;
        es.push_back({ids_[a], ids_[b]});
    }
    es.push_back({ids_[u], nb});
    es.push_back({ids_[v], nb});
    return WeightedGraph(std::move(vs), std::move(es));
}

WeightedGraph WeightedGraph::contract_black(int v) const {
    check(v >= 0 && v < size(), "UnknownVertex", "vertex index out of range");
    check(weights_[v] == 1, "NotBlack",
          "vertex \"" + ids_[v] + "\" has weight " + weights_[v].str() + ", not 1");
    int deg = degree(v);
    check(deg >= 1 && deg <= 2, "NotContractible",
          "vertex \"" + ids_[v] + "\" has degree " + std::to_string(deg));
    for (int u : adj_[v])
        check(weights_[u] >= 2, "NotContractible",
              "contracting \"" + ids_[v] + "\" would drop the weight of \"" + ids_[u] +
                  "\" below 1");
    if (deg == 2) {
        int a = adj_[v][0], b = adj_[v][1];
        check(!has_edge(a, b), "NotContractible",
              "contracting \"" + ids_[v] + "\" would create a multi-edge");
    }
    std::vector<std::pair<std::string, Int>> vs;
    std::vector<std::pair<std::string, std::string>> es;
    for (int i = 0; i < size(); ++i) {
        if (i == v) continue;
        bool adjacent = has_edge(v, i);
        vs.push_back({ids_[i], adjacent ? weights_[i] - 1 : weights_[i]});
    }
    for (auto& [a, b] : edges_) {
        if (a == v || b == v) continue;
        es.push_back({ids_[a], ids_[b]});
    }
    if (deg == 2) es.push_back({ids_[adj_[v][0]], ids_[adj_[v][1]]});
    return WeightedGraph(std::move(vs), std::move(es));
}

namespace {

// Centroids of a tree: one or two adjacent vertices minimizing the largest
// component left after removal.
std::vector<int> tree_centroids(const WeightedGraph& g) {
    int n = g.size();
    if (n == 1) return {0};
    std::vector<int> sub(n, 1), order, parent(n, -1);
    order.reserve(n);
    std::vector<int> stack{0};
    std::vector<char> seen(n, 0);
    seen[0] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        order.push_back(v);
        for (int u : g.neighbors(v)) {
            if (!seen[u]) {
                seen[u] = 1;
                parent[u] = v;
                stack.push_back(u);
            }
        }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it)
        if (parent[*it] >= 0) sub[parent[*it]] += sub[*it];
    int best = n + 1;
    std::vector<int> cs;
    for (int v = 0; v < n; ++v) {
        int worst = n - sub[v];
        for (int u : g.neighbors(v))
            if (parent[u] == v) worst = std::max(worst, sub[u]);
        if (worst < best) {
            best = worst;
            cs = {v};
        } else if (worst == best) {
            cs.push_back(v);
        }
    }
    require_internal(cs.size() <= 2, "a tree has one or two centroids");
    return cs;
}

std::string encode_subtree(const WeightedGraph& g, int v, int parent) {
    std::vector<std::string> kids;
    for (int u : g.neighbors(v))
        if (u != parent) kids.push_back(encode_subtree(g, u, v));
    std::sort(kids.begin(), kids.end());
    std::string out = "(" + g.weight(v).str();
    for (auto& k : kids) out += k;
    out += ")";
    return out;
}

}  // namespace

std::string canonical_form(const WeightedGraph& g) {
    check(g.is_tree(), "NotATree", "canonical form is defined for trees only");
    auto cs = tree_centroids(g);
    if (cs.size() == 1) return encode_subtree(g, cs[0], -1);
    std::string a = encode_subtree(g, cs[0], cs[1]);
    std::string b = encode_subtree(g, cs[1], cs[0]);
    if (b < a) std::swap(a, b);
    return a + "|" + b;
}

WeightedGraph canonicalized(const WeightedGraph& g) {
    check(g.is_tree(), "NotATree", "canonical form is defined for trees only");
    std::vector<std::pair<std::string, Int>> vs;
    std::vector<std::pair<std::string, std::string>> es;
    std::vector<std::string> label(g.size());
    int next = 0;
    // Preorder over the canonical rooting, children in sorted encoding order.
    std::function<void(int, int, const std::string&)> emit =
        [&](int v, int avoid, const std::string& parent_label) {
            label[v] = "v" + std::to_string(++next);
            vs.push_back({label[v], g.weight(v)});
            if (!parent_label.empty()) es.push_back({parent_label, label[v]});
            std::vector<std::pair<std::string, int>> kids;
            for (int u : g.neighbors(v))
                if (u != avoid) kids.push_back({encode_subtree(g, u, v), u});
            std::sort(kids.begin(), kids.end());
            for (auto& [enc, u] : kids) emit(u, v, label[v]);
        };
    auto cs = tree_centroids(g);
    if (cs.size() == 1) {
        emit(cs[0], -1, "");
    } else {
        std::string a = encode_subtree(g, cs[0], cs[1]);
        std::string b = encode_subtree(g, cs[1], cs[0]);
        int first = a <= b ? cs[0] : cs[1];
        int second = a <= b ? cs[1] : cs[0];
        emit(first, second, "");
        emit(second, first, label[first]);
    }
    return WeightedGraph(std::move(vs), std::move(es));
}

WeightedGraph make_chain_graph(const std::vector<Int>& weights) {
    check(!weights.empty(), "ParseError", "chain shorthand needs at least one weight");
    std::vector<std::pair<std::string, Int>> vs;
    std::vector<std::pair<std::string, std::string>> es;
    for (std::size_t i = 0; i < weights.size(); ++i)
        vs.push_back({"v" + std::to_string(i + 1), weights[i]});
    for (std::size_t i = 0; i + 1 < weights.size(); ++i)
        es.push_back({vs[i].first, vs[i + 1].first});
    return WeightedGraph(std::move(vs), std::move(es));
}

WeightedGraph make_fork_graph(const Int& center,
                              const std::vector<std::vector<Int>>& arms) {
    std::vector<std::pair<std::string, Int>> vs{{"p", center}};
    std::vector<std::pair<std::string, std::string>> es;
    check(!arms.empty(), "ParseError", "fork shorthand needs at least one arm");
    const char* names = "abcdefgh";
    for (std::size_t a = 0; a < arms.size(); ++a) {
        check(a < 8, "ParseError", "fork shorthand supports at most 8 arms");
        check(!arms[a].empty(), "ParseError", "fork arm must be nonempty");
        std::string prev = "p";
        for (std::size_t i = 0; i < arms[a].size(); ++i) {
            std::string id = std::string(1, names[a]) + std::to_string(i + 1);
            vs.push_back({id, arms[a][i]});
            es.push_back({prev, id});
            prev = id;
        }
    }
    return WeightedGraph(std::move(vs), std::move(es));
}

namespace {

std::vector<Int> parse_weight_list(const std::string& text, const std::string& what) {
    std::vector<Int> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto comma = text.find(',', pos);
        std::string part =
            comma == std::string::npos ? text.substr(pos) : text.substr(pos, comma - pos);
        check(!part.empty(), "ParseError", what + ": empty entry in \"" + text + "\"");
        for (char ch : part)
            check(ch >= '0' && ch <= '9', "ParseError",
                  what + ": invalid character '" + std::string(1, ch) + "'");
        out.push_back(Int(part));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

WeightedGraph parse_statements(const std::string& text) {
    std::vector<std::pair<std::string, Int>> vs;
    std::vector<std::pair<std::string, std::string>> es;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    auto where = [&](std::size_t col) {
        return " at line " + std::to_string(lineno) + ", column " + std::to_string(col + 1);
    };
    while (std::getline(in, line)) {
        ++lineno;
        std::vector<std::pair<std::string, std::size_t>> tok;
        std::size_t i = 0;
        while (i < line.size()) {
            if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
                ++i;
                continue;
            }
            if (line[i] == '#') break;
            std::size_t j = i;
            while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
            tok.push_back({line.substr(i, j - i), i});
            i = j;
        }
        if (tok.empty()) continue;
        if (tok[0].first == "v") {
            check(tok.size() == 3, "ParseError",
                  "vertex statement needs \"v <id> <weight>\"" + where(tok[0].second));
            const std::string& w = tok[2].first;
            for (char ch : w)
                check(ch >= '0' && ch <= '9', "ParseError",
                      "weight must be a positive integer" + where(tok[2].second));
            vs.push_back({tok[1].first, Int(w)});
        } else if (tok[0].first == "e") {
            check(tok.size() == 3, "ParseError",
                  "edge statement needs \"e <id> <id>\"" + where(tok[0].second));
            es.push_back({tok[1].first, tok[2].first});
        } else {
            fail("ParseError",
                 "unknown statement \"" + tok[0].first + "\"" + where(tok[0].second));
        }
    }
    check(!vs.empty(), "ParseError", "graph has no vertices");
    WeightedGraph g(std::move(vs), std::move(es));
    check(g.is_tree(), "ParseError", "graph is not a tree (" +
                                         std::to_string(g.size()) + " vertices, " +
                                         std::to_string(g.edges().size()) + " edges)");
    return g;
}

}  // namespace

WeightedGraph parse_graph(const std::string& text) {
    if (text.rfind("chain:", 0) == 0)
        return make_chain_graph(parse_weight_list(text.substr(6), "chain shorthand"));
    if (text.rfind("fork:", 0) == 0) {
        std::string body = text.substr(5);
        std::vector<std::string> parts;
        std::size_t pos = 0;
        while (true) {
            auto bar = body.find('|', pos);
            parts.push_back(bar == std::string::npos ? body.substr(pos)
                                                     : body.substr(pos, bar - pos));
            if (bar == std::string::npos) break;
            pos = bar + 1;
        }
        check(parts.size() >= 2, "ParseError",
              "fork shorthand needs \"fork:p|arm|arm|...\"");
        auto center = parse_weight_list(parts[0], "fork center");
        check(center.size() == 1, "ParseError", "fork center must be a single weight");
        std::vector<std::vector<Int>> arms;
        for (std::size_t i = 1; i < parts.size(); ++i)
            arms.push_back(parse_weight_list(parts[i], "fork arm"));
        return make_fork_graph(center[0], arms);
    }
    return parse_statements(text);
}

WeightedGraph parse_graph_file(const std::string& path) {
    std::ifstream in(path);
    check(static_cast<bool>(in), "ParseError", "cannot open graph file \"" + path + "\"");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_statements(buf.str());
}

std::string format_graph_text(const WeightedGraph& g) {
    std::string out;
    for (int v = 0; v < g.size(); ++v)
        out += "v " + g.id(v) + " " + g.weight(v).str() + "\n";
    for (auto& [a, b] : g.edges())
        out += "e " + g.id(a) + " " + g.id(b) + "\n";
    if (!out.empty()) out.pop_back();
    return out;
}

}  // namespace tcb
