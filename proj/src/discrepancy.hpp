#pragma once

#include <optional>
#include <vector>

#include "fraction.hpp"
#include "graph.hpp"
#include "rational.hpp"

namespace tcb {

/// A connected component of the subgraph induced on white vertices.
/// Chain components carry their weights read end to end; the reverse
/// orientation describes the same singularity via the conjugate fraction.
struct WhiteComponent {
    std::vector<int> vertices;  // path order when is_chain, DFS order otherwise
    bool is_chain = false;
    std::optional<Chain> chain;

    bool du_val() const { return is_chain && is_du_val_chain(*chain); }
};

std::vector<WhiteComponent> white_components(const WeightedGraph& g);

/// Codiscrepancy entries d_i in vertex order (blacks get no entry). Solves
/// sum_j d_j (E_j . E_i) = 2 - b_i per white component by leaf-to-root
/// elimination in exact rationals. Components whose system is singular are
/// left unsolved; that cannot happen on negative definite components.
struct Codiscrepancies {
    std::vector<std::optional<Rat>> d;  // size = graph vertices
    bool complete = true;               // false if some component was singular
};

Codiscrepancies solve_codiscrepancy(const WeightedGraph& g);

/// Exact solution on a single chain of weights >= 2 (always solvable).
std::vector<Rat> solve_chain_codiscrepancy(const std::vector<Int>& weights);

/// Fraction of a chain component read in its stored orientation.
Fraction component_fraction(const Chain& c);

}  // namespace tcb
