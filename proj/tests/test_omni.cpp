#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "homni/omni.hpp"
#include "homni/randomgen.hpp"

using namespace homni;

namespace {

const ChartConfig chart11{1, 1};
const ChartConfig chart22{2, 2};

EForm dx_e(ChartConfig c, int i, int alpha) {
    EForm a(c, 1);
    a.add_component({i}, alpha, Poly::constant(c.m, 1));
    return a;
}

// e = (d/dx, 0) + (x dx (x) e, 0) on the line, n = 1
OmniSection running_example() {
    Derivation ddx = Derivation::coordinate(chart11, 1);
    JForm mu(dx_e(chart11, 1, 1) * Poly::variable(1, 1), EForm::zero(chart11, 0));
    return {ddx, mu};
}

}  // namespace

TEST_CASE("anchor") {
    Rng rng(1);
    OmniSection e1 = random_omni(chart22, 2, 2, rng);
    OmniSection e2 = random_omni(chart22, 2, 2, rng);
    CHECK(anchor(e1) == e1.dpart());
    CHECK(anchor(OmniSection(Derivation(chart22), e1.jpart())).is_zero());
    // anchor is a bracket morphism
    CHECK(anchor(dorfman(e1, e2)) == commutator(anchor(e1), anchor(e2)));
}

TEST_CASE("dorfman on pure derivations reduces to the commutator") {
    Derivation ddx = Derivation::coordinate(chart11, 1);
    Derivation xddx = ddx * Poly::variable(1, 1);
    OmniSection a(ddx, JForm(chart11, 1));
    OmniSection b(xddx, JForm(chart11, 1));
    OmniSection out = dorfman(a, b);
    CHECK(out.dpart() == ddx);
    CHECK(out.jpart().is_zero());
}

TEST_CASE("dorfman of pure jet forms vanishes") {
    Rng rng(2);
    OmniSection a(Derivation(chart22), random_jform(chart22, 2, 2, rng));
    OmniSection b(Derivation(chart22), random_jform(chart22, 2, 2, rng));
    CHECK(dorfman(a, b).is_zero());
}

TEST_CASE("dorfman squared on the running example") {
    OmniSection e = running_example();
    OmniSection out = dorfman(e, e);
    CHECK(out.dpart().is_zero());
    CHECK(out.jpart().mu0().is_zero());
    CHECK(out.jpart().mu1() == EForm::section(chart11, Poly::variable(1, 1), 1));
    // oracle: d of the squared pairing, per the derived-bracket identity
    CHECK(out.jpart() == jd(plus_pairing(e, e)));
}

TEST_CASE("plus_pairing") {
    OmniSection e = running_example();
    JForm p = plus_pairing(e, e);
    CHECK(p.degree() == 0);
    CHECK(p.mu0() == EForm::section(chart11, Poly::variable(1, 1), 1));

    Rng rng(3);
    OmniSection e1 = random_omni(chart22, 2, 2, rng);
    OmniSection e2 = random_omni(chart22, 2, 2, rng);
    CHECK(plus_pairing(e1, e2) == plus_pairing(e2, e1));
    OmniSection d1(e1.dpart(), JForm(chart22, 2));
    OmniSection d2(e2.dpart(), JForm(chart22, 2));
    CHECK(plus_pairing(d1, d2).is_zero());
}

TEST_CASE("degree mismatch is rejected") {
    Rng rng(4);
    OmniSection e1 = random_omni(chart22, 1, 1, rng);
    OmniSection e2 = random_omni(chart22, 2, 1, rng);
    CHECK_THROWS_AS(dorfman(e1, e2), DegreeError);
    CHECK_THROWS_AS(plus_pairing(e1, e2), DegreeError);
    CHECK_THROWS_AS(twisted_dorfman(random_jform(chart22, 2, 1, rng), e1, e1), DegreeError);
}

TEST_CASE("Leibniz-algebra clauses") {
    Rng rng(5);
    for (int n = 1; n <= 2; ++n) {
        OmniSection e1 = random_omni(chart22, n, 1, rng);
        OmniSection e2 = random_omni(chart22, n, 1, rng);
        OmniSection e3 = random_omni(chart22, n, 1, rng);
        // (i) left Leibniz identity
        CHECK(jacobiator(e1, e2, e3).is_zero());
        // (iii) module structure in the second slot
        Poly f = random_poly(2, 1, rng);
        OmniSection lhs = dorfman(e1, e2.scale(f));
        OmniSection rhs = dorfman(e1, e2) .scale(f) + e2.scale(anchor(e1).apply_symbol(f));
        CHECK(lhs == rhs);
        // (iv) anchor acts as a derivation of the pairing
        JForm l4 = jlie(anchor(e1), plus_pairing(e2, e3));
        JForm r4 = plus_pairing(dorfman(e1, e2), e3) + plus_pairing(e2, dorfman(e1, e3));
        CHECK(l4 == r4);
        // (v) squared bracket is exact
        CHECK(dorfman(e1, e1).dpart().is_zero());
        CHECK(dorfman(e1, e1).jpart() == jd(plus_pairing(e1, e1)));
    }
}

TEST_CASE("both displayed forms of the bracket agree") {
    Rng rng(6);
    for (int n = 1; n <= 3; ++n) {
        OmniSection e1 = random_omni(chart22, n, 1, rng);
        OmniSection e2 = random_omni(chart22, n, 1, rng);
        CHECK(dorfman(e1, e2) == dorfman_first_form(e1, e2));
    }
}

TEST_CASE("twisted bracket") {
    // need m >= n + 2 so that non-closed twists exist
    const ChartConfig c31{3, 1};
    Rng rng(7);
    const int n = 1;
    OmniSection e1 = random_omni(c31, n, 1, rng);
    OmniSection e2 = random_omni(c31, n, 1, rng);
    OmniSection e3 = random_omni(c31, n, 1, rng);

    JForm zero(c31, n + 2);
    CHECK(twisted_dorfman(zero, e1, e2) == dorfman(e1, e2));
    CHECK(anchor(twisted_dorfman(random_jform(c31, n + 2, 1, rng), e1, e2)) ==
          anchor(dorfman(e1, e2)));

    // Jacobiator of the twisted bracket = triple contraction of d omega
    JForm omega = random_jform(c31, n + 2, 1, rng);
    OmniSection jac = jacobiator_twisted(omega, e1, e2, e3);
    JForm expected =
        jiota(anchor(e3), jiota(anchor(e2), jiota(anchor(e1), jd(omega))));
    CHECK(jac.dpart().is_zero());
    CHECK(jac.jpart() == expected);

    // closed twist => Leibniz
    JForm closed = jd(random_jform(c31, n + 1, 1, rng));
    CHECK(jacobiator_twisted(closed, e1, e2, e3).is_zero());

    // non-closed twist breaks Leibniz on some triple
    EForm vol(c31, 3);
    vol.add_component({1, 2, 3}, 1, Poly::variable(3, 2));
    JForm bad(vol, EForm::zero(c31, 2));
    CHECK_FALSE(jd(bad).is_zero());
    OmniSection c1(Derivation::coordinate(c31, 1), JForm(c31, n));
    OmniSection c2(Derivation::coordinate(c31, 2), JForm(c31, n));
    OmniSection c3(Derivation::coordinate(c31, 3), JForm(c31, n));
    bool nonzero = !jacobiator_twisted(bad, c1, c2, c3).is_zero() ||
                   !jacobiator_twisted(bad, e1, e2, e3).is_zero();
    CHECK(nonzero);
}

TEST_CASE("speculative pairing axiom predicate is callable") {
    Rng rng(8);
    OmniSection e = random_omni(chart22, 2, 1, rng);
    OmniSection ep = random_omni(chart22, 2, 1, rng);
    (void)squared_bracket_pairing_axiom(e, ep);  // not asserted by design
}

TEST_CASE("trivial line: zero forms reduce to vector-field calculus") {
    const ChartConfig c21{2, 1};
    Rng rng(9);
    std::vector<Poly> X{random_poly(2, 1, rng), random_poly(2, 1, rng)};
    std::vector<Poly> Y{random_poly(2, 1, rng), random_poly(2, 1, rng)};
    Poly zero = Poly::constant(2, 0);
    LineSection a{X, zero, ScalarForm::zero(2, 1), ScalarForm::zero(2, 0)};
    LineSection b{Y, zero, ScalarForm::zero(2, 1), ScalarForm::zero(2, 0)};
    LineSection out = trivial_line_dorfman(a, b);
    CHECK(out.f == zero);
    CHECK(out.mu0t.is_zero());
    CHECK(out.mu1t.is_zero());
    OmniSection viaEngine = dorfman(line_to_omni(c21, a), line_to_omni(c21, b));
    CHECK(line_to_omni(c21, out) == viaEngine);

    // X = Y = 0, forms zero, plain functions: everything vanishes
    Poly f = random_poly(2, 1, rng);
    Poly g = random_poly(2, 1, rng);
    std::vector<Poly> Z{zero, zero};
    LineSection af{Z, f, ScalarForm::zero(2, 1), ScalarForm::zero(2, 0)};
    LineSection bg{Z, g, ScalarForm::zero(2, 1), ScalarForm::zero(2, 0)};
    LineSection out2 = trivial_line_dorfman(af, bg);
    CHECK(out2.f == zero);
    CHECK(out2.mu0t.is_zero());
    CHECK(out2.mu1t.is_zero());
}

TEST_CASE("trivial line agrees with the general engine") {
    const ChartConfig c21{2, 1};
    Rng rng(10);
    for (int n = 1; n <= 2; ++n) {
        LineSection a{{random_poly(2, 1, rng), random_poly(2, 1, rng)},
                      random_poly(2, 1, rng),
                      random_scalar_form(2, n, 1, rng),
                      random_scalar_form(2, n - 1, 1, rng)};
        LineSection b{{random_poly(2, 1, rng), random_poly(2, 1, rng)},
                      random_poly(2, 1, rng),
                      random_scalar_form(2, n, 1, rng),
                      random_scalar_form(2, n - 1, 1, rng)};
        LineSection out = trivial_line_dorfman(a, b);
        CHECK(line_to_omni(c21, out) == dorfman(line_to_omni(c21, a), line_to_omni(c21, b)));

        auto [p0, p1] = trivial_line_pairing(a, b);
        JForm viaEngine = plus_pairing(line_to_omni(c21, a), line_to_omni(c21, b));
        auto [s0, s1] = n >= 2 ? to_split(viaEngine)
                               : std::pair<EForm, EForm>{viaEngine.mu0(),
                                                         EForm::zero(c21, 0)};
        EForm p0e(c21, n - 1);
        for (const auto& [I, p] : p0.components()) p0e.add_component(I, 1, p);
        CHECK(p0e == s0);
        if (n >= 2) {
            EForm p1e(c21, n - 2);
            for (const auto& [I, p] : p1.components()) p1e.add_component(I, 1, p);
            CHECK(p1e == s1);
        } else {
            CHECK(p1.is_zero());
        }
    }
}
