#include <doctest.h>

#include <numeric>

#include "fraction.hpp"

using namespace tcb;

namespace {

Chain ch(std::initializer_list<int> w) {
    std::vector<Int> v;
    for (int x : w) v.push_back(x);
    return Chain(std::move(v));
}

}  // namespace

TEST_CASE("continued fraction expansion") {
    CHECK(hj_expand(Fraction(4, 1)) == ch({4}));
    CHECK(hj_expand(Fraction(2, 1)) == ch({2}));
    CHECK(hj_expand(Fraction(9, 5)) == ch({2, 5}));
    CHECK(hj_expand(Fraction(50, 19)) == ch({3, 3, 4, 2}));
}

TEST_CASE("chain evaluation") {
    CHECK(hj_eval(ch({4})) == Fraction(4, 1));
    CHECK(hj_eval(ch({2, 2, 2})) == Fraction(4, 3));
    CHECK(hj_eval(ch({3, 2, 2, 3})) == Fraction(16, 7));
}

TEST_CASE("conjugate fractions") {
    CHECK(conjugate(Fraction(9, 5)) == Fraction(9, 2));
    CHECK(conjugate(Fraction(16, 7)) == Fraction(16, 7));
    CHECK(conjugate(Fraction(2, 1)) == Fraction(2, 1));
    CHECK(conjugate(Fraction(7, 1)) == Fraction(7, 1));
}

TEST_CASE("invariant triples") {
    auto inv = invariants(Fraction(4, 1));
    CHECK(inv.iota == 2);
    CHECK(inv.beta == Rat(1));
    CHECK(inv.gamma == 1);
    inv = invariants(Fraction(16, 7));
    CHECK(inv.iota == 2);
    CHECK(inv.beta == Rat(4));
    CHECK(inv.gamma == 1);
    inv = invariants(Fraction(9, 5));
    CHECK(inv.iota == 3);
    CHECK(inv.beta == Rat(1));
    CHECK(inv.gamma == 2);
}

TEST_CASE("type T test") {
    CHECK(is_t_fraction(Fraction(9, 5)));
    CHECK(!is_t_fraction(Fraction(4, 3)));
    CHECK(is_t_fraction(Fraction(27, 17)));
    CHECK(!is_t_fraction(Fraction(2, 1)));  // Du Val A1
}

TEST_CASE("Du Val chains") {
    CHECK(is_du_val_chain(ch({2, 2, 2})));
    CHECK(!is_du_val_chain(ch({4})));
    CHECK(!is_du_val_chain(ch({2, 5})));
}

TEST_CASE("action normalization is representation independent") {
    Fraction f = Fraction::from_action(9, 2, 1);  // q = 2^{-1} mod 9 = 5
    CHECK(f == Fraction(9, 5));
    CHECK(is_t_fraction(f));
    CHECK(Fraction::from_action(4, 3, 3) == Fraction(4, 1));
    // 1/n(a,b) and 1/n(b,a) give conjugate normal forms
    Fraction g = Fraction::from_action(9, 1, 2);
    CHECK(g == Fraction(9, 2));
    CHECK(is_t_fraction(g) == is_t_fraction(f));
}

TEST_CASE("constructor rejects degenerate input") {
    CHECK_THROWS_WITH_AS(Fraction(1, 1), doctest::Contains("at least 2"), error);
    CHECK_THROWS_AS(Fraction(4, 2), error);
    CHECK_THROWS_AS(Fraction(5, 0), error);
    CHECK_THROWS_AS(Fraction(5, 5), error);
    CHECK_THROWS_AS(Fraction(5, 7), error);
    CHECK_THROWS_AS(Chain(std::vector<Int>{}), error);
    CHECK_THROWS_AS(ch({2, 1, 2}), error);
    CHECK_THROWS_AS(Fraction::from_action(6, 2, 1), error);
}

TEST_CASE("serialized forms") {
    CHECK(format_fraction(parse_fraction("9/5")) == "9/5");
    CHECK(format_chain(parse_chain("2,5")) == "2,5");
    CHECK_THROWS_AS(parse_fraction("9"), error);
    CHECK_THROWS_AS(parse_fraction("9/x"), error);
    CHECK_THROWS_AS(parse_chain("2,,5"), error);
    CHECK_THROWS_AS(parse_chain(""), error);
}

TEST_CASE("round trip, duality and the q+q' relation up to n = 200") {
    for (long long n = 2; n <= 200; ++n) {
        for (long long q = 1; q < n; ++q) {
            if (std::gcd(n, q) != 1) continue;
            Fraction f(n, q);
            Chain c = hj_expand(f);
            CHECK(hj_eval(c) == f);

            Fraction fc = conjugate(f);
            // duality: the conjugate expands to the reversed chain
            CHECK(hj_expand(fc) == c.reversed());
            CHECK(hj_eval(c.reversed()) == fc);

            // beta and iota do not depend on the representative
            auto i1 = invariants(f), i2 = invariants(fc);
            CHECK(i1.iota == i2.iota);
            CHECK(i1.beta == i2.beta);

            // T-fraction iff q + q' = n - 2 iff gamma + gamma' = iota
            bool t = is_t_fraction(f);
            CHECK(t == (f.q() + fc.q() == f.n() - 2));
            CHECK(t == (i1.gamma + i2.gamma == i1.iota));

            // reconstruction whenever beta is integral
            if (i1.beta.is_integer()) {
                Int beta = i1.beta.numerator();
                CHECK(beta * i1.iota * i1.iota == f.n());
                CHECK(beta * i1.iota * i1.gamma - 1 == f.q());
            }
        }
    }
}
