#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "homni/jet.hpp"
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

}  // namespace

TEST_CASE("jwedge unit and degree-0 factor") {
    Rng rng(1);
    JForm mu = random_jform(chart22, 2, 2, rng);
    ScalarForm one = ScalarForm::function(2, Poly::constant(2, 1));
    CHECK(jwedge(one, mu) == mu);

    // f ^ (mu0, mu1) = (f mu0 - df ^ mu1, f mu1)
    Poly f = random_poly(2, 2, rng);
    ScalarForm ff = ScalarForm::function(2, f);
    JForm lhs = jwedge(ff, mu);
    CHECK(lhs.mu0() == mu.mu0() * f - wedge(d_form(ff), mu.mu1()));
    CHECK(lhs.mu1() == mu.mu1() * f);
}

TEST_CASE("jwedge with dx on a jet of a section") {
    // dx ^ (0, e) = (0, -dx (x) e)
    ScalarForm dx(1, 1);
    dx.add_component({1}, Poly::constant(1, 1));
    JForm mu(EForm::zero(chart11, 1), EForm::section(chart11, Poly::constant(1, 1), 1));
    JForm out = jwedge(dx, mu);
    CHECK(out.mu0().is_zero());
    CHECK(out.mu1() == -dx_e(chart11, 1, 1));
}

TEST_CASE("jd") {
    Rng rng(2);
    JForm mu = random_jform(chart22, 1, 2, rng);
    CHECK(jd(jd(mu)).is_zero());
    // jd((dx (x) e, 0)) = (0, dx (x) e)
    JForm a(dx_e(chart11, 1, 1), EForm::zero(chart11, 0));
    JForm da = jd(a);
    CHECK(da.mu0().is_zero());
    CHECK(da.mu1() == dx_e(chart11, 1, 1));
    // first jet of a section
    EForm u = random_eform(chart22, 0, 2, rng);
    JForm ju = jd(JForm(u));
    CHECK(ju.degree() == 1);
    CHECK(ju.mu0().is_zero());
    CHECK(ju.mu1() == u);
}

TEST_CASE("jiota") {
    // jiota((0, Id), (mu0, mu1)) = (mu1, 0)
    Rng rng(3);
    JForm mu = random_jform(chart22, 2, 2, rng);
    JForm out = jiota(Derivation::identity_endo(chart22), mu);
    CHECK(out.mu0() == mu.mu1());
    CHECK(out.mu1().is_zero());

    // jiota((d/dx, 0), (x dx (x) e, 0)) = the section x e
    Derivation ddx = Derivation::coordinate(chart11, 1);
    JForm a(dx_e(chart11, 1, 1) * Poly::variable(1, 1), EForm::zero(chart11, 0));
    JForm c = jiota(ddx, a);
    CHECK(c.degree() == 0);
    CHECK(c.mu0() == EForm::section(chart11, Poly::variable(1, 1), 1));

    CHECK_THROWS_AS(jiota(ddx, c), DegreeError);

    // iota iota = 0, checked through the generic embedding
    JForm mu2 = random_jform(chart22, 2, 2, rng);
    Derivation d = random_derivation(chart22, 2, rng);
    CHECK(jiota(d, jiota(d, mu2)).is_zero());
    CHECK(gen_iota(d, gen_iota(d, embed_generic(mu2))).is_zero());
}

TEST_CASE("jlie") {
    Rng rng(4);
    JForm mu = random_jform(chart22, 2, 2, rng);
    CHECK(jlie(Derivation(chart22), mu).is_zero());
    CHECK(jlie(Derivation::identity_endo(chart22), mu) == mu);
    Derivation d = random_derivation(chart22, 2, rng);
    CHECK(jlie(d, jd(mu)) == jd(jlie(d, mu)));
}

TEST_CASE("split conversion") {
    Rng rng(5);
    JForm mu = random_jform(chart22, 2, 2, rng);
    auto [t0, t1] = to_split(mu);
    CHECK(t0 == mu.mu0() + d_form(mu.mu1()));
    CHECK(from_split(t0, t1) == mu);
    // frame sections are flat: to_split((0, e)) = (0, e)
    JForm je(EForm::zero(chart22, 1), EForm::section(chart22, Poly::constant(2, 1), 1));
    auto [s0, s1] = to_split(je);
    CHECK(s0.is_zero());
    CHECK(s1 == je.mu1());
}

TEST_CASE("embedding and membership") {
    Rng rng(6);
    for (int n = 0; n <= 3; ++n) {
        JForm mu = random_jform(chart22, n, 2, rng);
        GenForm g = embed_generic(mu);
        CHECK(membership_check(g).ok);
        CHECK(project_from_generic(g) == mu);
    }
    // j*nu for an E-valued form: membership holds with lambda = 0 and the
    // projection returns (nu, 0)
    EForm nu = random_eform(chart22, 2, 2, rng);
    GenForm g = pullback_to_generic(nu);
    auto res = membership_check(g);
    CHECK(res.ok);
    CHECK(res.lambda.is_zero());
    JForm back = project_from_generic(g);
    CHECK(back.mu0() == nu);
    CHECK(back.mu1().is_zero());
}

TEST_CASE("membership rejects a bare gl-component") {
    // single component dual to eps^1_1 ^ d/dx1, r >= 2
    GenForm g(chart22, 2);
    Index bad{1, chart22.m + 1};  // D1 ^ (first endo frame element)
    g.add_component(bad, 1, Poly::constant(2, 1));
    auto res = membership_check(g);
    CHECK_FALSE(res.ok);
    CHECK_FALSE(res.witness.empty());
    CHECK_THROWS_AS(project_from_generic(g), NotAJetFormError);
}

TEST_CASE("lambda slot of the pair equals lambda of the embedding") {
    Rng rng(7);
    JForm mu = random_jform(chart22, 2, 2, rng);
    auto res = membership_check(embed_generic(mu));
    CHECK(res.ok);
    CHECK(res.lambda == mu.mu1());
}

TEST_CASE("Cartan identities in the pair representation") {
    Rng rng(8);
    for (int n = 1; n <= 3; ++n) {
        JForm mu = random_jform(chart22, n, 2, rng);
        Derivation d1 = random_derivation(chart22, 2, rng);
        Derivation d2 = random_derivation(chart22, 2, rng);
        // [iota, d] = lie
        JForm lhs = jiota(d1, jd(mu)) + jd(jiota(d1, mu));
        CHECK(lhs == jlie(d1, mu));
        // [lie, d] = 0
        CHECK(jlie(d1, jd(mu)) == jd(jlie(d1, mu)));
        // [iota_1, lie_2] = iota_[1,2]
        JForm lhs2 = jiota(d1, jlie(d2, mu)) - jlie(d2, jiota(d1, mu));
        CHECK(lhs2 == jiota(commutator(d1, d2), mu));
    }
}

TEST_CASE("contracting homotopy on jet forms") {
    Rng rng(9);
    Derivation id = Derivation::identity_endo(chart22);
    for (int n = 0; n <= 3; ++n) {
        JForm mu = random_jform(chart22, n, 2, rng);
        JForm h = jd(n > 0 ? jiota(id, mu) : JForm(chart22, 0));
        h = n > 0 ? jiota(id, jd(mu)) + jd(jiota(id, mu)) : jiota(id, jd(mu));
        CHECK(h == mu);
    }
}

TEST_CASE("oracle agreement: embedding intertwines the calculus") {
    Rng rng(10);
    for (int n = 1; n <= 2; ++n) {
        JForm mu = random_jform(chart22, n, 2, rng);
        Derivation d = random_derivation(chart22, 2, rng);
        CHECK(embed_generic(jd(mu)) == ce_differential(embed_generic(mu)));
        CHECK(embed_generic(jiota(d, mu)) == gen_iota(d, embed_generic(mu)));
        CHECK(embed_generic(jlie(d, mu)) == gen_lie(d, embed_generic(mu)));
    }
}
