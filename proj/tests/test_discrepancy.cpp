#include <doctest.h>

#include <functional>

#include "discrepancy.hpp"
#include "lcb.hpp"
#include "tchain.hpp"

using namespace tcb;

namespace {

WeightedGraph chain_g(std::initializer_list<int> w) {
    std::vector<Int> v;
    for (int x : w) v.push_back(x);
    return make_chain_graph(v);
}

std::vector<Int> weights_of(const WhiteComponent& c) { return c.chain->weights(); }

}  // namespace

TEST_CASE("white components") {
    auto comps = white_components(chain_g({4, 1, 2, 2, 2}));
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].is_chain);
    CHECK(weights_of(comps[0]) == std::vector<Int>{4});
    CHECK(weights_of(comps[1]) == std::vector<Int>{2, 2, 2});
    CHECK(comps[1].du_val());

    auto star = white_components(make_family_graph(FamilyTag::IStar, Chain{{Int(4)}}));
    REQUIRE(star.size() == 1);
    CHECK(weights_of(star[0]) == std::vector<Int>{4});

    auto fork = white_components(make_fork_graph(2, {{Int(2)}, {Int(2)}, {Int(2)}}));
    REQUIRE(fork.size() == 1);
    CHECK(!fork[0].is_chain);
}

TEST_CASE("codiscrepancy solving") {
    auto du_val = solve_codiscrepancy(chain_g({2, 2, 2}));
    for (auto& d : du_val.d) {
        REQUIRE(d.has_value());
        CHECK(d->is_zero());
    }

    auto d = solve_chain_codiscrepancy({4, 3, 2});
    CHECK(d == std::vector<Rat>{Rat(2, 3), Rat(2, 3), Rat(1, 3)});

    d = solve_chain_codiscrepancy({3, 3, 4, 2});
    // log discrepancies alpha = 1 - d = (2/5, 1/5, 1/5, 3/5)
    CHECK(Rat(1) - d[0] == Rat(2, 5));
    CHECK(Rat(1) - d[1] == Rat(1, 5));
    CHECK(Rat(1) - d[2] == Rat(1, 5));
    CHECK(Rat(1) - d[3] == Rat(3, 5));

    // blacks never get entries
    auto mixed = solve_codiscrepancy(chain_g({4, 1, 2, 2, 2}));
    CHECK(mixed.d[0].has_value());
    CHECK(!mixed.d[1].has_value());
    CHECK(*mixed.d[0] == Rat(1, 2));
}

TEST_CASE("component fractions") {
    CHECK(component_fraction(Chain{{Int(2), Int(5)}}) == Fraction(9, 5));
    CHECK(component_fraction(Chain{{Int(3), Int(2), Int(2), Int(3)}}) == Fraction(16, 7));
    CHECK(component_fraction(Chain{{Int(2)}}) == Fraction(2, 1));
}

TEST_CASE("solver endpoints match the closed formulas at small scale") {
    std::vector<Int> w;
    std::function<void()> rec = [&]() {
        if (!w.empty()) {
            auto d = solve_chain_codiscrepancy(w);
            auto [a1, ar] = endpoint_alphas(Chain{std::vector<Int>(w)});
            CHECK(Rat(1) - d.front() == a1);
            CHECK(Rat(1) - d.back() == ar);
            for (auto& di : d) CHECK((di.sign() >= 0 && di < Rat(1)));
        }
        if (w.size() == 5) return;
        for (int x = 2; x <= 7; ++x) {
            w.push_back(x);
            rec();
            w.pop_back();
        }
    };
    rec();
}
