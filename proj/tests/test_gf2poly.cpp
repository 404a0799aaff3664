#include "doctest.h"

#include "support.hpp"
#include "tvcc/error.hpp"
#include "tvcc/gf2poly.hpp"

using tvcc::Poly;
using testing::P;

TEST_CASE("textual form is little-endian by degree") {
    CHECK(P("11") == Poly::from_exponents({0, 1}));
    CHECK(P("101") == Poly::from_exponents({0, 2}));
    CHECK(P("0").is_zero());
    CHECK(P("0000").is_zero());
    CHECK(P("0100").to_string() == "01");
    CHECK(Poly().to_string() == "0");
    CHECK_FALSE(Poly().degree().has_value());
    CHECK(P("0001").degree() == 3);
    CHECK_THROWS_AS(P(""), tvcc::InvalidArgument);
    CHECK_THROWS_AS(P("12"), tvcc::InvalidArgument);
    CHECK_THROWS_AS(P("1 1"), tvcc::InvalidArgument);
}

TEST_CASE("octal display follows the integer value") {
    CHECK(P("111").to_octal() == "7");
    CHECK(P("101").to_octal() == "5");
    CHECK(P("11").to_octal() == "3");
    // 1+D+D^3+D^4+D^6 -> binary 1011011 -> octal 133
    CHECK(Poly::from_exponents({0, 1, 3, 4, 6}).to_octal() == "133");
}

TEST_CASE("add") {
    CHECK((P("11") + P("11")).is_zero());
    CHECK(P("11") + P("101") == P("011"));
    CHECK(Poly() + P("101") == P("101"));
}

TEST_CASE("mul") {
    CHECK(P("11") * P("11") == P("101"));
    // oracle: schoolbook convolution on plain bit vectors
    const auto expected = testing::naive_mul({1, 1}, {1, 1, 1});
    CHECK(expected == testing::Bits{1, 0, 0, 1});
    CHECK(P("11") * P("111") == testing::to_poly(expected));
    CHECK((P("1011") * Poly()).is_zero());
    CHECK((Poly() * P("1")).is_zero());
}

TEST_CASE("multiplication across word boundaries") {
    const Poly a = Poly::monomial(63) + Poly::one();
    const Poly b = Poly::monomial(70) + Poly::monomial(1);
    CHECK(testing::to_bits(a * b) == testing::naive_mul(testing::to_bits(a), testing::to_bits(b)));
    CHECK((a * b).degree() == 133);
    CHECK(Poly::monomial(5).shifted(100) == Poly::monomial(105));
}

TEST_CASE("divmod") {
    auto [q1, r1] = tvcc::divmod(P("101"), P("11"));
    CHECK(q1 == P("11"));
    CHECK(r1.is_zero());

    auto [q2, r2] = tvcc::divmod(P("1001"), P("101"));
    CHECK(q2 == P("01"));
    CHECK(r2 == P("11"));
    CHECK(q2 * P("101") + r2 == P("1001"));

    auto [q3, r3] = tvcc::divmod(P("1"), P("11"));
    CHECK(q3.is_zero());
    CHECK(r3 == P("1"));

    CHECK_THROWS_AS(tvcc::divmod(P("11"), Poly()), tvcc::DivisionByZero);
}

TEST_CASE("gcd") {
    // trial-division oracle: 1+D^2 = (1+D)^2
    CHECK(testing::trial_division_gcd({1, 1}, {1, 0, 1}) == testing::Bits{1, 1});
    CHECK(tvcc::gcd(P("11"), P("101")) == P("11"));
    CHECK(tvcc::gcd(P("1101"), Poly()) == P("1101"));
    CHECK(tvcc::gcd(Poly(), P("1101")) == P("1101"));
    CHECK(tvcc::gcd(P("1"), P("110101")) == P("1"));
    CHECK_THROWS_AS(tvcc::gcd(Poly(), Poly()), tvcc::InvalidArgument);
}

TEST_CASE("gcd_many") {
    const std::vector<Poly> a{P("11"), P("101"), Poly()};
    CHECK(tvcc::gcd_many(a) == P("11"));
    const std::vector<Poly> b{P("1"), P("1111"), P("0101")};
    CHECK(tvcc::gcd_many(b) == P("1"));
    // trial division: D | D, D^2, D+D^2 and D^2 does not divide D
    const std::vector<Poly> c{P("01"), P("001"), P("011")};
    CHECK(tvcc::gcd_many(c) == P("01"));
    const std::vector<Poly> zeros{Poly(), Poly()};
    CHECK_THROWS_AS(tvcc::gcd_many(zeros), tvcc::InvalidArgument);
}

TEST_CASE("inflate") {
    CHECK(tvcc::inflate(P("11"), 2) == P("101"));
    CHECK(tvcc::inflate(P("1011"), 1) == P("1011"));
    CHECK(tvcc::inflate(P("111"), 3) == P("1001001"));
    CHECK(tvcc::inflate(Poly(), 4).is_zero());
    CHECK_THROWS_AS(tvcc::inflate(P("1"), 0), tvcc::InvalidArgument);
}

TEST_CASE("split_delay") {
    auto a = tvcc::split_delay(P("0011"));
    CHECK(a.delay == 2);
    CHECK(a.rest == P("11"));
    auto b = tvcc::split_delay(P("11"));
    CHECK(b.delay == 0);
    CHECK(b.rest == P("11"));
    auto c = tvcc::split_delay(Poly::monomial(5));
    CHECK(c.delay == 5);
    CHECK(c.rest == P("1"));
    CHECK_THROWS_AS(tvcc::split_delay(Poly()), tvcc::InvalidArgument);
}

TEST_CASE("ring properties on random polynomials") {
    std::mt19937_64 rng(20261016);
    for (int trial = 0; trial < 500; ++trial) {
        const Poly a = testing::random_poly(rng, 40);
        const Poly b = testing::random_poly(rng, 40);
        const Poly c = testing::random_poly(rng, 40);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a + a).is_zero());
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(testing::to_bits(a * b) == testing::naive_mul(testing::to_bits(a), testing::to_bits(b)));

        if (!b.is_zero()) {
            auto [q, r] = tvcc::divmod(a, b);
            CHECK(q * b + r == a);
            CHECK((r.is_zero() || *r.degree() < *b.degree()));
        }
        if (!a.is_zero() || !b.is_zero()) {
            const Poly g = tvcc::gcd(a, b);
            CHECK(g == tvcc::gcd(b, a));
            CHECK(tvcc::divmod(a, g).second.is_zero());
            CHECK(tvcc::divmod(b, g).second.is_zero());
        }
        for (std::size_t p = 1; p <= 4; ++p) {
            CHECK(tvcc::inflate(a * b, p) == tvcc::inflate(a, p) * tvcc::inflate(b, p));
            CHECK(tvcc::inflate(a + b, p) == tvcc::inflate(a, p) + tvcc::inflate(b, p));
        }
        if (!a.is_zero()) {
            auto [l, g] = tvcc::split_delay(a);
            CHECK(g.shifted(l) == a);
            CHECK(g.constant_term());
        }
    }
}

TEST_CASE("gcd agrees with trial division on small degrees") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const Poly a = testing::random_poly(rng, 7);
        const Poly b = testing::random_poly(rng, 7);
        if (a.is_zero() || b.is_zero()) continue;
        CHECK(testing::to_bits(tvcc::gcd(a, b)) == testing::trial_division_gcd(testing::to_bits(a), testing::to_bits(b)));
    }
}

TEST_CASE("operation counters are scoped") {
    tvcc::ops::Scope outer;
    const Poly x = P("11") * P("111");  // (1+1)(2+1) = 6 coefficient ops
    {
        tvcc::ops::Scope inner;
        CHECK(inner.counters().multiplications == 0);
        (void)tvcc::divmod(P("1001"), P("101"));  // one reduction step against degree 2
        CHECK(inner.counters().division_steps == 1);
        CHECK(inner.counters().coefficient_ops == 3);
    }
    CHECK(outer.counters().multiplications == 1);
    CHECK(outer.counters().coefficient_ops == 9);
    CHECK(x == P("1001"));
}
