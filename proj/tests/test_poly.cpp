#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "homni/poly.hpp"

#include <random>

using namespace homni;

namespace {

Poly x(int vars, int i) { return Poly::variable(vars, i); }
Poly cst(int vars, long n, long d = 1) { return Poly::constant(vars, Rational(n, d)); }

Poly random_poly(int vars, int max_deg, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coef(-3, 3);
    std::uniform_int_distribution<int> deg(0, max_deg);
    Poly p(vars);
    for (int t = 0; t < 4; ++t) {
        Poly::Exponents e(static_cast<std::size_t>(vars), 0u);
        int budget = deg(rng);
        std::uniform_int_distribution<int> pick(0, vars - 1);
        for (int k = 0; k < budget; ++k) e[static_cast<std::size_t>(pick(rng))] += 1;
        p.add_term(e, coef(rng));
    }
    return p;
}

}  // namespace

TEST_CASE("difference of squares") {
    Poly one = cst(1, 1);
    CHECK((x(1, 1) + one) * (x(1, 1) - one) == x(1, 1) * x(1, 1) - one);
}

TEST_CASE("additive identity") {
    Poly p = x(2, 1) * x(2, 2) + cst(2, 5);
    CHECK(p + Poly(2) == p);
}

TEST_CASE("rational coefficient product") {
    // (1/2 x)(2/3 x) = 1/3 x^2
    Poly lhs = (x(1, 1) * Rational(1, 2)) * (x(1, 1) * Rational(2, 3));
    CHECK(lhs == x(1, 1) * x(1, 1) * Rational(1, 3));
}

TEST_CASE("mismatched chart dimension") {
    CHECK_THROWS_AS(Poly(1) + Poly(2), DimensionError);
}

TEST_CASE("partial derivatives") {
    CHECK((x(1, 1) * x(1, 1)).derivative(1) == x(1, 1) * Rational(2));
    CHECK((x(2, 2) * x(2, 2) * x(2, 2)).derivative(1).is_zero());
    Poly p = x(2, 1) * x(2, 2) + x(2, 1);
    CHECK(p.derivative(1) == x(2, 2) + cst(2, 1));
    CHECK_THROWS_AS(p.derivative(3), IndexError);
}

TEST_CASE("evaluation") {
    Poly p = x(1, 1) * x(1, 1) + cst(1, 1);
    CHECK(p.evaluate({Rational(2)}) == Rational(5));
    CHECK(Poly(2).evaluate({Rational(7), Rational(-1)}) == 0);
    CHECK((x(2, 1) * x(2, 2)).evaluate({Rational(1, 2), Rational(4)}) == Rational(2));
    CHECK_THROWS_AS(p.evaluate({}), DimensionError);
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 50; ++trial) {
        Poly a = random_poly(2, 3, rng);
        Poly b = random_poly(2, 3, rng);
        Poly c = random_poly(2, 3, rng);
        CHECK((a - a).terms().empty());
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("derivation and evaluation are compatible with the ring structure") {
    std::mt19937_64 rng(7);
    std::vector<Rational> pt{Rational(1, 2), Rational(-3)};
    for (int trial = 0; trial < 50; ++trial) {
        Poly p = random_poly(2, 3, rng);
        Poly q = random_poly(2, 3, rng);
        CHECK((p * q).derivative(1) == p.derivative(1) * q + p * q.derivative(1));
        CHECK((p * q).evaluate(pt) == p.evaluate(pt) * q.evaluate(pt));
        CHECK((p + q).evaluate(pt) == p.evaluate(pt) + q.evaluate(pt));
    }
}

TEST_CASE("canonical form drops zero coefficients") {
    Poly p(1);
    p.add_term({1}, Rational(2));
    p.add_term({1}, Rational(-2));
    CHECK(p.is_zero());
    CHECK(p == Poly(1));
}
