#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "parsym/func1d.hpp"

#include <random>

using namespace parsym;

TEST_CASE("rational arithmetic is canonical and exact") {
    Rat a(6, 4);
    CHECK(numerator(a) == 3);
    CHECK(denominator(a) == 2);
    CHECK(rat_str(a) == "3/2");
    CHECK(rat_str(Rat(-7)) == "-7");
    CHECK(parse_rat("22/7") == Rat(22, 7));
    CHECK(parse_rat("-3") == Rat(-3));
    CHECK_THROWS_AS(parse_rat("3/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rat(""), std::invalid_argument);
    CHECK(rat_pow(Rat(2, 3), -2) == Rat(9, 4));
    CHECK(rat_pow(Rat(5), 0) == 1);
    CHECK(rat_height(Rat(-3, 7)) == 7);
}

static FactoredFunction1D ff(Rat c, std::vector<std::pair<Rat, long long>> fs) {
    return FactoredFunction1D(std::move(c), std::move(fs));
}

TEST_CASE("order_at reads exponents and degrees") {
    // f = x^2 (x-3)^{-1}
    auto f = ff(Rat(1), {{Rat(0), 2}, {Rat(3), -1}});
    CHECK(order_at(f, P1Point::finite(Rat(0))) == 2);
    CHECK(order_at(f, P1Point::finite(Rat(3))) == -1);
    CHECK(order_at(f, P1Point::finite(Rat(5))) == 0);
    CHECK(order_at(f, P1Point::infinity()) == -1);
    auto c5 = ff(Rat(5), {});
    CHECK(order_at(c5, P1Point::finite(Rat(2))) == 0);
    CHECK(order_at(c5, P1Point::infinity()) == 0);
}

TEST_CASE("unit_part_at strips the local coordinate") {
    // f = x (x-1)^{-1}
    auto f = ff(Rat(1), {{Rat(0), 1}, {Rat(1), -1}});
    CHECK(unit_part_at(f, P1Point::finite(Rat(0))) == Rat(-1));
    CHECK(unit_part_at(f, P1Point::infinity()) == Rat(1));
    CHECK(unit_part_at(ff(Rat(7), {}), P1Point::finite(Rat(2))) == Rat(7));
}

TEST_CASE("unit part against direct Laurent-style evaluation") {
    // f = (x-P)^{ord} h with h regular nonzero at P: check at P + t.
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long long> root_d(-5, 5), exp_d(-3, 3);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<std::pair<Rat, long long>> fs;
        for (long long r : {-2LL, 0LL, 3LL}) {
            long long e = exp_d(rng);
            if (e) fs.emplace_back(Rat(r), e);
        }
        long long cnum = root_d(rng);
        auto f = ff(cnum == 0 ? Rat(1) : Rat(cnum), fs);
        P1Point P = P1Point::finite(Rat(0));
        long long ord = order_at(f, P);
        Rat t(1, 97);  // small offset off every root
        Rat direct = f.eval(P.value + t);
        // h(P + t) from the factored pieces
        Rat h = f.constant;
        for (auto& [root, e] : f.factors)
            if (root != P.value) h *= rat_pow(P.value + t - root, e);
        CHECK(direct == rat_pow(t, ord) * h);
        if (ord == 0) CHECK(unit_part_at(f, P) == f.eval(P.value));
    }
}

TEST_CASE("divisor support is sorted with infinity last") {
    auto x = ff(Rat(1), {{Rat(0), 1}});
    auto xm1 = ff(Rat(1), {{Rat(1), 1}});
    auto sup = divisor_support({x, xm1});
    REQUIRE(sup.size() == 3);
    CHECK(sup[0] == P1Point::finite(Rat(0)));
    CHECK(sup[1] == P1Point::finite(Rat(1)));
    CHECK(sup[2] == P1Point::infinity());

    auto deg0 = ff(Rat(1), {{Rat(0), 1}, {Rat(1), -1}});
    auto sup2 = divisor_support({deg0});
    REQUIRE(sup2.size() == 2);
    CHECK_FALSE(sup2[1].infinite);

    CHECK(divisor_support({ff(Rat(5), {})}).empty());
}

TEST_CASE("principal divisors have degree zero") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long long> root_d(-9, 9), exp_d(-4, 4);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<std::pair<Rat, long long>> fs;
        for (int i = 0; i < 4; ++i) {
            long long e = exp_d(rng);
            if (e) fs.emplace_back(Rat(root_d(rng)), e);
        }
        auto f = ff(Rat(3), fs);
        long long total = 0;
        for (const auto& P : divisor_support({f})) total += order_at(f, P);
        CHECK(total == 0);
    }
}

TEST_CASE("orders add and unit parts multiply") {
    auto f = ff(Rat(2), {{Rat(0), 2}, {Rat(1), -1}});
    auto g = ff(Rat(3, 2), {{Rat(0), -2}, {Rat(4), 3}});
    auto fg = multiply(f, g);
    for (const auto& P :
         {P1Point::finite(Rat(0)), P1Point::finite(Rat(1)), P1Point::finite(Rat(4)),
          P1Point::finite(Rat(6)), P1Point::infinity()}) {
        CHECK(order_at(fg, P) == order_at(f, P) + order_at(g, P));
        CHECK(unit_part_at(fg, P) == unit_part_at(f, P) * unit_part_at(g, P));
    }
    // merged roots with zero exponent disappear
    CHECK(fg.exponent_of(Rat(0)) == 0);
}
