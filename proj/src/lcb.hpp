#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "discrepancy.hpp"
#include "form.hpp"
#include "fraction.hpp"
#include "graph.hpp"
#include "tchain.hpp"

namespace tcb {

struct FiberChecks {
    bool tree = false;
    bool black_weights = false;   // the fiber part is nonempty
    bool parabolic = false;
    bool positive_kernel = false;
    bool white_chains = false;
    bool t_or_du_val = false;
    bool ampleness = false;       // Delta . L_i < 1 for every black i
    bool fiber_identity = false;  // sum l_i = L . Delta + 2
};

struct SingularPoint {
    WhiteComponent component;
    std::optional<Fraction> fraction;  // set for chain components
    bool du_val = false;
    Int iota = 0;  // index of the point; 1 for Du Val, 0 for non-chains
};

/// Full verification record for a candidate fiber graph. analyze() never
/// throws on valid graphs: failed conditions are verdicts, not errors.
struct FiberAnalysis {
    WeightedGraph graph;
    FormClass form;
    FiberChecks checks;
    bool t_conic_bundle = false;
    std::optional<KernelVector> multiplicities;  // when parabolic
    Codiscrepancies codisc;
    std::vector<std::optional<Rat>> delta_dot_l;  // per black vertex
    Int sum_l = 0;
    std::vector<SingularPoint> points;
    int non_du_val_count = 0;
    std::optional<Int> index;  // lcm of point indices, when white_chains holds
};

FiberAnalysis analyze(const WeightedGraph& g);

/// lcm of the point indices; throws NotApplicable when white_chains fails.
Int fiber_index(const FiberAnalysis& a);

enum class FamilyTag {
    IStar,
    IStarStar,
    IStarStarStar,
    IIStar,
    IIIStar,
    IIIStarStar,
    Unclassified,
};

const char* family_tag_name(FamilyTag t);

struct FamilyLabel {
    FamilyTag tag = FamilyTag::Unclassified;
    std::optional<Chain> box;  // the index-two T-chain of the I-families
};

/// Exact structural match against the six index-two fiber shapes.
/// Throws NotApplicable unless the analysis verdict holds.
FamilyLabel family_match(const FiberAnalysis& a);

/// Template fiber graph for a family. The I-families take an index-two
/// T-chain box ([4] or [3,2,...,2,3]); the other three are fixed graphs.
WeightedGraph make_family_graph(FamilyTag tag, const std::optional<Chain>& box);

/// Blow up a black leaf next to one end of a white chain and the opposite
/// end vertex. The chain [b1,...,br] becomes [2,b1,...,br+1] read from the
/// blown black; the result is re-verified and must keep the verdict and the
/// number of singular points.
FiberAnalysis construction_step(const FiberAnalysis& a, const std::string& black_leaf,
                                const std::string& chain_end);

/// Classify the path [left, 1, right] and evaluate the balance condition
/// sum(left_i - 1) = sum(right_j - 1) = total vertices - 2.
/// Returns (is_parabolic, condition_holds).
std::pair<bool, bool> check_parabolic_line(const Chain& left, const Chain& right);

// Fixed fiber graphs exercised throughout the test corpus.
WeightedGraph sample_fiber_50_19();        // unique singular point 50/19
WeightedGraph sample_fiber_two_points();   // points 4/1 and 27/17
WeightedGraph sample_fiber_three_points(); // points 9/2, 25/9, 4/1

}  // namespace tcb
