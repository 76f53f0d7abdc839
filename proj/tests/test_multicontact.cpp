#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "homni/multicontact.hpp"
#include "homni/randomgen.hpp"

#include <algorithm>

using namespace homni;

namespace {

const ChartConfig r3{3, 1};

// dz - y dx on R^3 (x1, x2, x3) = (x, y, z)
EForm contact_form() {
    EForm nu(r3, 1);
    nu.add_component({3}, 1, Poly::constant(3, 1));
    nu.add_component({1}, 1, -Poly::variable(3, 2));
    return nu;
}

bool same_span(std::vector<std::vector<Rational>> a, std::vector<std::vector<Rational>> b,
               int m) {
    const int ra = rank(a);
    const int rb = rank(b);
    Matrix all = a;
    all.insert(all.end(), b.begin(), b.end());
    for (auto& row : all) row.resize(static_cast<std::size_t>(m), Rational(0));
    return ra == rb && rank(all) == ra;
}

}  // namespace

TEST_CASE("exact rational elimination") {
    Matrix a{{Rational(1), Rational(2)}, {Rational(2), Rational(4)}};
    CHECK(rank(a) == 1);
    CHECK(nullspace_dim(a, 2) == 1);
    auto ns = nullspace(a, 2);
    REQUIRE(ns.size() == 1);
    CHECK(ns[0][0] * 1 + ns[0][1] * 2 == 0);
    CHECK(determinant(a) == 0);
    Matrix b{{Rational(1, 2), Rational(1)}, {Rational(0), Rational(3)}};
    CHECK(determinant(b) == Rational(3, 2));
    Matrix inv = inverse(b);
    CHECK(inv[0][0] == 2);
    CHECK(inv[0][1] == Rational(-2, 3));
    CHECK_THROWS_AS(inverse(a), DegeneracyError);
}

TEST_CASE("kernel of the contact form") {
    auto ker = kernel_at_point(contact_form(), {Rational(0), Rational(0), Rational(0)});
    REQUIRE(ker.size() == 2);
    // at the origin the kernel is the (x, y)-plane
    Matrix expected{{Rational(1), Rational(0), Rational(0)},
                    {Rational(0), Rational(1), Rational(0)}};
    CHECK(same_span(ker, expected, 3));
    CHECK(is_multicontact_at(contact_form(), {Rational(0), Rational(0), Rational(0)}));

    Rng rng(1);
    for (int t = 0; t < 10; ++t)
        CHECK(is_multicontact_at(contact_form(), random_point(3, rng)));
}

TEST_CASE("volume and degenerate cases") {
    // dx ^ dy on R^2 is multicontact of degree 2 with zero kernel
    const ChartConfig r2{2, 1};
    EForm vol2(r2, 2);
    vol2.add_component({1, 2}, 1, Poly::constant(2, 1));
    CHECK(kernel_at_point(vol2, {Rational(1), Rational(2)}).empty());
    CHECK(is_multicontact_at(vol2, {Rational(1), Rational(2)}));

    // dx ^ dy on R^3 has kernel d_z
    EForm vol23(r3, 2);
    vol23.add_component({1, 2}, 1, Poly::constant(3, 1));
    auto ker = kernel_at_point(vol23, {Rational(0), Rational(0), Rational(0)});
    REQUIRE(ker.size() == 1);
    CHECK(ker[0] == std::vector<Rational>{Rational(0), Rational(0), Rational(1)});
    CHECK(is_multicontact_at(vol23, {Rational(0), Rational(0), Rational(0)}));

    // the zero form has full kernel, hence corank 0
    EForm zero(r3, 1);
    CHECK(kernel_at_point(zero, {Rational(0), Rational(0), Rational(0)}).size() == 3);
    CHECK_FALSE(is_multicontact_at(zero, {Rational(0), Rational(0), Rational(0)}));

    EForm wrong_rank({3, 2}, 1);
    CHECK_THROWS_AS(kernel_at_point(wrong_rank, {Rational(0), Rational(0), Rational(0)}),
                    RankError);
    CHECK_THROWS_AS(kernel_at_point(zero, {Rational(0)}), DimensionError);
}

TEST_CASE("form of a distribution") {
    // D = span{d_x, d_y} in R^3 gives the projection dz
    DistributionFrame d{3,
                        {{Poly::constant(3, 1), Poly::constant(3, 0), Poly::constant(3, 0)},
                         {Poly::constant(3, 0), Poly::constant(3, 1), Poly::constant(3, 0)}}};
    std::vector<Rational> origin{Rational(0), Rational(0), Rational(0)};
    ScalarForm nu = nu_from_distribution(d, origin);
    CHECK(nu.degree() == 1);
    CHECK(nu.component({3}) == Poly::constant(3, 1));
    CHECK(nu.component({1}).is_zero());
    auto ker = kernel_at_point(nu, origin);
    CHECK(same_span(ker, {{Rational(1), Rational(0), Rational(0)},
                          {Rational(0), Rational(1), Rational(0)}},
                    3));

    // the zero distribution in R^2 gives the coordinate volume form
    DistributionFrame empty{2, {}};
    ScalarForm vol = nu_from_distribution(empty, {Rational(0), Rational(0)});
    CHECK(vol.degree() == 2);
    CHECK(vol.component({1, 2}) == Poly::constant(2, 1));

    DistributionFrame dependent{
        3,
        {{Poly::constant(3, 1), Poly::constant(3, 0), Poly::constant(3, 0)},
         {Poly::constant(3, 2), Poly::constant(3, 0), Poly::constant(3, 0)}}};
    CHECK_THROWS_AS(nu_from_distribution(dependent, origin), DegeneracyError);
}

TEST_CASE("pointwise roundtrip for random polynomial distributions") {
    Rng rng(7);
    int done = 0;
    while (done < 5) {
        const int k = rng.uniform(1, 2);
        DistributionFrame d{3, {}};
        for (int j = 0; j < k; ++j) {
            std::vector<Poly> gen;
            for (int i = 0; i < 3; ++i) gen.push_back(random_poly(3, 1, rng));
            d.generators.push_back(std::move(gen));
        }
        int points_ok = 0;
        for (int t = 0; t < 10; ++t) {
            auto p = random_point(3, rng);
            Matrix at_p;
            for (const auto& gen : d.generators) {
                std::vector<Rational> row;
                for (const auto& c : gen) row.push_back(c.evaluate(p));
                at_p.push_back(std::move(row));
            }
            if (rank(at_p) != k) continue;  // degenerate point, skip
            ScalarForm nu = nu_from_distribution(d, p);
            auto ker = kernel_at_point(nu, p);
            CHECK(static_cast<int>(ker.size()) == k);
            CHECK(same_span(ker, at_p, 3));
            ++points_ok;
        }
        if (points_ok > 0) ++done;
    }
}
