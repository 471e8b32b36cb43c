#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lcb.hpp"

namespace tcb {

struct SearchBounds {
    int max_vertices = 2;
    int max_weight = 2;
    std::optional<Int> index_filter;
    bool require_irreducible_fiber = false;  // exactly one black vertex
    bool require_non_du_val = false;
    unsigned long long node_budget = 1000000000ULL;  // partial trees explored
};

struct FiberHit {
    std::string canon;
    WeightedGraph graph;  // canonical labeling v1..vn
    FiberAnalysis analysis;
    FamilyLabel family;
};

/// All isomorphism classes of weighted trees within bounds whose analysis
/// verdict holds and which pass the optional filters, sorted by canonical
/// encoding. Deterministic regardless of worker count. Throws BoundsTooLarge
/// when the explored partial-tree count exceeds the budget.
std::vector<FiberHit> enumerate_fibers(const SearchBounds& b);

/// Independent generate-then-filter enumeration over labeled trees from
/// Pruefer sequences. Returns sorted canonical encodings; used as the
/// equivalence oracle for the pruned search.
std::vector<std::string> enumerate_fibers_naive(const SearchBounds& b);

struct ClassifyReport {
    SearchBounds bounds;
    std::vector<FiberHit> hits;
    std::map<std::string, int> family_counts;  // "I* box=3,3" -> count
};

/// Index-two classification within bounds (max weight 6, at least one
/// non-Du-Val point). Throws ClassificationGap if any hit fails to match
/// one of the six families, with the witness encoding in the message.
ClassifyReport classify_index2(int max_vertices);

struct MultiScanReport {
    SearchBounds bounds;
    std::vector<FiberHit> hits;
    std::map<int, std::vector<std::size_t>> by_non_du_val;  // count -> hit indices
    bool two_point_sample_within_bounds = false;
    bool three_point_sample_within_bounds = false;
};

/// Enumerates valid fiber graphs grouped by the number of non-Du-Val points
/// and checks that the two reference multi-point fibers appear once the
/// bounds admit them.
MultiScanReport scan_multi_singular(int max_vertices);

struct Realization {
    TChainCertificate certificate;
    FiberAnalysis analysis;
};

/// Builds a fiber graph with a unique singular point of the given type by
/// replaying the chain's derivation word on the four-black-leaves graph of
/// its seed. Throws NotATChain / NotFound.
Realization realize_tchain(const Chain& target, int max_steps);

/// Worker count: TCB_WORKERS environment variable, else hardware
/// concurrency. Never affects results, only wall time.
int worker_count();

/// Parent arrays (parent[0] = -1, parent[i] < i) of every free tree on n
/// vertices, one per isomorphism class.
std::vector<std::vector<int>> free_tree_parents(int n);

}  // namespace tcb
