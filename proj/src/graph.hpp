#pragma once

#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace tcb {

/// Finite connected graph with positive integer vertex weights. Weight-1
/// vertices are "black" (fiber components), weight >= 2 "white" (exceptional
/// curves). Simple graphs only: no loops, no multi-edges. Values are
/// immutable; transformations return new graphs.
class WeightedGraph {
public:
    WeightedGraph(std::vector<std::pair<std::string, Int>> vertices,
                  std::vector<std::pair<std::string, std::string>> edges);

    int size() const { return static_cast<int>(ids_.size()); }
    const std::string& id(int v) const { return ids_[v]; }
    const Int& weight(int v) const { return weights_[v]; }
    bool is_black(int v) const { return weights_[v] == 1; }
    bool is_white(int v) const { return weights_[v] >= 2; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    bool has_edge(int u, int v) const;
    int black_count() const;

    /// Index of the vertex with the given id; throws UnknownVertex.
    int index_of(const std::string& id) const;

    bool is_tree() const { return edges_.size() + 1 == ids_.size(); }

    /// Weight of v goes up by one and a fresh black leaf is attached to v.
    WeightedGraph blow_up_vertex(int v) const;

    /// Both endpoint weights go up by one, the edge is removed, and a fresh
    /// black vertex is attached to both endpoints.
    WeightedGraph blow_up_edge(int u, int v) const;

    /// Inverse of the blow-ups at a black vertex of degree <= 2.
    WeightedGraph contract_black(int v) const;

private:
    std::vector<std::string> ids_;
    std::vector<Int> weights_;
    std::vector<std::vector<int>> adj_;
    std::vector<std::pair<int, int>> edges_;

    std::string fresh_id() const;
};

/// Weight-aware canonical encoding: equal strings iff the weighted trees are
/// isomorphic. Throws NotATree on graphs with cycles.
std::string canonical_form(const WeightedGraph& g);

/// Isomorphic copy relabeled v1..vn in canonical traversal order, so equal
/// canonical forms produce byte-identical serializations.
WeightedGraph canonicalized(const WeightedGraph& g);

WeightedGraph make_chain_graph(const std::vector<Int>& weights);
WeightedGraph make_fork_graph(const Int& center,
                              const std::vector<std::vector<Int>>& arms);

/// Text format, one statement per line: "v <id> <weight>" or "e <id> <id>".
/// Shorthands: "chain:4,1,2,2,2" and "fork:p|a1,a2|b1|c1,c2". Rejects
/// anything that is not a tree.
WeightedGraph parse_graph(const std::string& text);
WeightedGraph parse_graph_file(const std::string& path);

std::string format_graph_text(const WeightedGraph& g);

}  // namespace tcb
