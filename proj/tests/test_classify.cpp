#include <doctest.h>

#include <cstdlib>
#include <set>

#include "classify.hpp"

using namespace tcb;

namespace {

Chain ch(std::initializer_list<int> w) {
    std::vector<Int> v;
    for (int x : w) v.push_back(x);
    return Chain(std::move(v));
}

std::set<std::string> canons(const std::vector<FiberHit>& hits) {
    std::set<std::string> out;
    for (auto& h : hits) out.insert(h.canon);
    return out;
}

}  // namespace

TEST_CASE("free tree counts") {
    CHECK(free_tree_parents(1).size() == 1);
    CHECK(free_tree_parents(4).size() == 2);
    CHECK(free_tree_parents(7).size() == 11);
    CHECK(free_tree_parents(10).size() == 106);
}

TEST_CASE("smallest fibers") {
    SearchBounds b;
    b.max_vertices = 2;
    b.max_weight = 2;
    auto hits = enumerate_fibers(b);
    REQUIRE(hits.size() == 1);
    CHECK(hits[0].canon == canonical_form(make_chain_graph({1, 1})));
    CHECK(hits[0].analysis.non_du_val_count == 0);
    CHECK(*hits[0].analysis.index == 1);
}

TEST_CASE("five-vertex index-two fibers") {
    SearchBounds b;
    b.max_vertices = 5;
    b.max_weight = 4;
    b.index_filter = Int(2);
    b.require_non_du_val = true;
    auto hits = enumerate_fibers(b);
    std::set<std::string> expect = {
        canonical_form(make_family_graph(FamilyTag::IStar, ch({4}))),
        canonical_form(make_family_graph(FamilyTag::IStarStar, ch({4}))),
        canonical_form(make_family_graph(FamilyTag::IStarStarStar, ch({4}))),
        canonical_form(make_family_graph(FamilyTag::IIIStar, std::nullopt)),
    };
    CHECK(canons(hits) == expect);
    for (auto& h : hits) CHECK(h.family.tag != FamilyTag::Unclassified);
}

TEST_CASE("pruned search equals the naive oracle at small bounds") {
    SearchBounds b;
    b.max_vertices = 5;
    b.max_weight = 4;
    auto pruned = enumerate_fibers(b);
    auto naive = enumerate_fibers_naive(b);
    std::set<std::string> lhs = canons(pruned);
    std::set<std::string> rhs(naive.begin(), naive.end());
    CHECK(lhs == rhs);
}

TEST_CASE("enumerated graphs pass every verdict") {
    SearchBounds b;
    b.max_vertices = 6;
    b.max_weight = 5;
    for (auto& hit : enumerate_fibers(b)) {
        CHECK(hit.analysis.t_conic_bundle);
        CHECK(hit.analysis.checks.fiber_identity);
        CHECK(hit.analysis.checks.ampleness);
        CHECK(canonical_form(hit.graph) == hit.canon);
    }
}

TEST_CASE("node budget trips") {
    SearchBounds b;
    b.max_vertices = 8;
    b.max_weight = 6;
    b.node_budget = 50;
    CHECK_THROWS_WITH_AS(enumerate_fibers(b), doctest::Contains("budget"), error);
}

TEST_CASE("classification within seven vertices") {
    ClassifyReport r = classify_index2(7);
    for (auto& h : r.hits) CHECK(h.family.tag != FamilyTag::Unclassified);
    CHECK(r.family_counts.count("I* box=4") == 1);
    CHECK(r.family_counts.count("III*") == 1);
    CHECK(r.family_counts.count("II*") == 1);     // six vertices
    CHECK(r.family_counts.count("III**") == 1);   // six vertices
    CHECK(r.family_counts.count("I* box=3,3") == 1);
    CHECK(r.family_counts.count("I* box=3,2,3") == 1);
}

TEST_CASE("multi-point scan groups by non-Du-Val count") {
    MultiScanReport r = scan_multi_singular(6);
    CHECK(!r.hits.empty());
    CHECK(r.by_non_du_val.count(0) == 1);  // all-A_n fibers such as [2,1,2]
    bool found = false;
    std::string want = canonical_form(make_chain_graph({2, 1, 2}));
    for (auto& h : r.hits)
        if (h.canon == want) found = true;
    CHECK(found);
    // the reference samples are out of bounds here
    CHECK(!r.two_point_sample_within_bounds);
    CHECK(!r.three_point_sample_within_bounds);
}

TEST_CASE("realizations of small T-chains") {
    Realization r = realize_tchain(ch({2, 5}), 8);
    CHECK(r.certificate.seed == ch({4}));
    CHECK(r.certificate.word == "A");
    CHECK(r.analysis.points.size() == 1);

    r = realize_tchain(ch({3, 2, 2, 3}), 8);
    CHECK(r.certificate.word.empty());
    CHECK(canonical_form(r.analysis.graph) ==
          canonical_form(make_family_graph(FamilyTag::IStar, ch({3, 2, 2, 3}))));

    r = realize_tchain(ch({2, 2, 6}), 8);
    CHECK(r.certificate.word == "AA");
    CHECK(*r.analysis.points[0].fraction == Fraction(16, 11));

    CHECK_THROWS_WITH_AS(realize_tchain(ch({2, 5, 2}), 8),
                         doctest::Contains("not a T-chain"), error);
    CHECK_THROWS_WITH_AS(realize_tchain(ch({2, 2, 6}), 1), doctest::Contains("steps"),
                         error);
}

TEST_CASE("worker count does not change results") {
    SearchBounds b;
    b.max_vertices = 5;
    b.max_weight = 4;
    setenv("TCB_WORKERS", "1", 1);
    auto one = enumerate_fibers(b);
    setenv("TCB_WORKERS", "3", 1);
    auto three = enumerate_fibers(b);
    unsetenv("TCB_WORKERS");
    REQUIRE(one.size() == three.size());
    for (std::size_t i = 0; i < one.size(); ++i) CHECK(one[i].canon == three[i].canon);
}
