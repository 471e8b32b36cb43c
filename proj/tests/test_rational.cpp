#include <doctest.h>

#include <random>

#include "rational.hpp"

using tcb::BigRat;
using tcb::Int;
using tcb::Rat;

TEST_CASE("rational basics") {
    Rat half = Rat(1) / Rat(2);
    CHECK(half.str() == "1/2");
    CHECK((half + half).str() == "1");
    CHECK((half - Rat(1)).str() == "-1/2");
    CHECK((Rat(6) / Rat(4)) == (Rat(3) / Rat(2)));
    CHECK(Rat(0).is_zero());
    CHECK(Rat(-3).sign() == -1);
    CHECK(Rat(2) < Rat(3));
    CHECK(Rat(-1) / Rat(2) < Rat(1) / Rat(3));
    CHECK_THROWS_AS(Rat(1) / Rat(0), tcb::error);
}

TEST_CASE("rational promotes past 64 bits and stays exact") {
    Rat big(1);
    for (int i = 0; i < 40; ++i) big *= Rat(1000003);
    CHECK(big.is_big());
    Rat inv = Rat(1) / big;
    CHECK((big * inv) == Rat(1));
    // demotion back to the small representation
    Rat one = big / big;
    CHECK(!one.is_big());
    CHECK(one == Rat(1));
}

TEST_CASE("rational agrees with the reference implementation on random ops") {
    std::mt19937_64 rng(20240817);
    std::uniform_int_distribution<long long> num(-1000000, 1000000);
    std::uniform_int_distribution<long long> den(1, 1000000);
    std::uniform_int_distribution<int> which(0, 3);
    Rat a = Rat(num(rng)) / Rat(den(rng));
    BigRat ra = a.big();
    for (int i = 0; i < 20000; ++i) {
        Rat b = Rat(num(rng)) / Rat(den(rng));
        BigRat rb = b.big();
        switch (which(rng)) {
            case 0: a = a + b; ra = ra + rb; break;
            case 1: a = a - b; ra = ra - rb; break;
            case 2: a = a * b; ra = ra * rb; break;
            default:
                if (!b.is_zero()) {
                    a = a / b;
                    ra = ra / rb;
                }
        }
        if ((i & 1023) == 0) REQUIRE(a.big() == ra);
    }
    CHECK(a.big() == ra);
}

TEST_CASE("rational numerator and denominator are reduced") {
    Rat r(Int(360), Int(-84));
    CHECK(r.numerator() == -30);
    CHECK(r.denominator() == 7);
    CHECK(r.str() == "-30/7");
}
