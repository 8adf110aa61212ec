#include "doctest.h"
#include "qhowe/laurent.hpp"
#include "qhowe/rational_fn.hpp"

#include <random>

using namespace qhowe;

namespace {

LaurentPoly v(int k = 1) { return LaurentPoly::monomial(k); }

LaurentPoly random_poly(std::mt19937& rng) {
    std::uniform_int_distribution<int> ex(-4, 4), co(-3, 3), len(0, 4);
    LaurentPoly p;
    for (int t = len(rng); t > 0; --t) p.add_term(ex(rng), mpq_class(co(rng), 1 + (co(rng) + 3) % 2));
    return p;
}

}  // namespace

TEST_CASE("quantum integers") {
    CHECK(qint(0).is_zero());
    CHECK(qint(2) == v() + v(-1));
    CHECK(qint(3) == v(2) + LaurentPoly(1) + v(-2));
    for (int a = 1; a <= 8; ++a) CHECK(qint(a) * (v() - v(-1)) == v(a) - v(-a));
    CHECK(qfactorial(3) == qint(2) * qint(3));
    CHECK_THROWS_AS(qint(-1), std::invalid_argument);
}

TEST_CASE("bracket integers and signed powers") {
    CHECK(qbracket(2, false) == v(2) + LaurentPoly(1));
    CHECK(qbracket(2, true) == v(-2) + LaurentPoly(1));
    CHECK(qbracket(3, false) == v(2) * qint(3));
    for (int a = 1; a <= 6; ++a) {
        CHECK(qbracket(a, false) == signed_pow(false, a - 1) * qint(a));
        // qint is bar-invariant, so the parity substitution leaves it unchanged
        CHECK(qbracket(a, true) == signed_pow(true, a - 1) * qint(a).bar());
    }
    CHECK(signed_pow(false, 2) == v(2));
    CHECK(signed_pow(true, 2) == v(-2));
    CHECK(signed_pow(true, 0) == LaurentPoly(1));
}

TEST_CASE("exact division") {
    CHECK(divide_exact(v(2) - v(-2), v() - v(-1)) == v() + v(-1));
    LaurentPoly p = LaurentPoly::parse("3*v^2 - 1/2*v^-1");
    CHECK(divide_exact(p, LaurentPoly(1)) == p);
    CHECK_THROWS_AS(divide_exact(v() - v(-1), v() + v(-1)), NotDivisible);
    std::mt19937 rng(5);
    for (int t = 0; t < 200; ++t) {
        LaurentPoly a = random_poly(rng), b = random_poly(rng);
        if (b.is_zero()) continue;
        CHECK(divide_exact(a * b, b) == a);
    }
}

TEST_CASE("ring axioms on random elements") {
    std::mt19937 rng(11);
    for (int t = 0; t < 200; ++t) {
        LaurentPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("canonical text form round-trips") {
    CHECK(LaurentPoly().str() == "0");
    CHECK(LaurentPoly(1).str() == "1");
    CHECK(v().str() == "v");
    CHECK(v(-1).str() == "v^-1");
    CHECK((v(2) - LaurentPoly(1) + v(-2)).str() == "v^2 - 1 + v^-2");
    CHECK((LaurentPoly::monomial(3, mpq_class(-1, 2))).str() == "-1/2*v^3");
    std::mt19937 rng(3);
    for (int t = 0; t < 100; ++t) {
        LaurentPoly a = random_poly(rng);
        CHECK(LaurentPoly::parse(a.str()) == a);
    }
    CHECK_THROWS_AS(LaurentPoly::parse("v^^2"), std::invalid_argument);
}

TEST_CASE("rational functions normalize") {
    RationalFn x(v(2) - LaurentPoly(1), v() - LaurentPoly(1));
    CHECK(x.is_laurent());
    CHECK(x.to_laurent() == v() + LaurentPoly(1));
    RationalFn y(LaurentPoly(1), v() + LaurentPoly(1));
    CHECK_FALSE(y.is_laurent());
    CHECK_THROWS_AS(y.to_laurent(), NotDivisible);
    CHECK(y * RationalFn(v() + LaurentPoly(1)) == RationalFn(1));
    CHECK((y - y).is_zero());
    CHECK(y.inverse() == RationalFn(v() + LaurentPoly(1)));
    RationalFn z = y + RationalFn(v(-1));
    CHECK(z * RationalFn(v() * (v() + LaurentPoly(1))) == RationalFn(v() + v() + LaurentPoly(1)));
}
