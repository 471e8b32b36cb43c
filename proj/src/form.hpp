#pragma once

#include <vector>

#include "graph.hpp"
#include "rational.hpp"

namespace tcb {

/// Signature class of the intersection form of a weighted graph.
/// Elliptic = negative definite, signature (0, r).
/// Parabolic = negative semidefinite with one-dimensional kernel, (0, r-1).
struct FormClass {
    enum class Tag { Elliptic, Parabolic, Other };
    Tag tag = Tag::Other;
    int negatives = 0;
    int zeros = 0;
    int positives = 0;
};

const char* form_tag_name(FormClass::Tag t);

/// M_ii = -weight(v_i); M_ij = 1 if {v_i, v_j} is an edge, else 0.
std::vector<std::vector<Int>> intersection_matrix(const WeightedGraph& g);

/// Exact signature by symmetric congruence elimination with rational pivots.
FormClass classify_form(const WeightedGraph& g);

/// Same computation on an explicit symmetric matrix (used for cross-checks).
FormClass classify_matrix(std::vector<std::vector<Rat>> m);

/// Signature of a weighted tree given as parent links (parent[0] = -1,
/// parent[i] < i) by leaf-to-root elimination. Exact and O(n); equals
/// classify_matrix on the corresponding intersection matrix.
FormClass tree_signature(const std::vector<int>& parent, const std::vector<int>& weight);

/// Primitive all-positive integer generator of the kernel of a parabolic
/// intersection form. Entries follow the graph's vertex order.
struct KernelVector {
    std::vector<Int> entries;
};

KernelVector kernel_vector(const WeightedGraph& g);

}  // namespace tcb
