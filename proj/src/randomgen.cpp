#include "homni/randomgen.hpp"

namespace homni {

Poly random_poly(int vars, int max_deg, Rng& rng) {
    Poly p(vars);
    int terms = rng.uniform(1, 3);
    for (int t = 0; t < terms; ++t) {
        Poly::Exponents e(static_cast<std::size_t>(vars), 0u);
        int budget = rng.uniform(0, max_deg);
        for (int k = 0; k < budget; ++k)
            e[static_cast<std::size_t>(rng.uniform(0, vars - 1))] += 1;
        p.add_term(e, Rational(rng.uniform(-3, 3)));
    }
    return p;
}

ScalarForm random_scalar_form(int m, int degree, int max_deg, Rng& rng) {
    ScalarForm a(m, degree);
    for (const Index& I : all_indices(m, degree)) a.add_component(I, random_poly(m, max_deg, rng));
    return a;
}

EForm random_eform(ChartConfig chart, int degree, int max_deg, Rng& rng) {
    EForm a(chart, degree);
    for (const Index& I : all_indices(chart.m, degree))
        for (int alpha = 1; alpha <= chart.r; ++alpha)
            a.add_component(I, alpha, random_poly(chart.m, max_deg, rng));
    return a;
}

Derivation random_derivation(ChartConfig chart, int max_deg, Rng& rng) {
    Derivation d(chart);
    for (int i = 1; i <= chart.m; ++i) d.X(i) = random_poly(chart.m, max_deg, rng);
    for (int g = 1; g <= chart.r; ++g)
        for (int b = 1; b <= chart.r; ++b) d.Phi(g, b) = random_poly(chart.m, max_deg, rng);
    return d;
}

JForm random_jform(ChartConfig chart, int n, int max_deg, Rng& rng) {
    if (n == 0) return JForm(random_eform(chart, 0, max_deg, rng));
    return JForm(random_eform(chart, n, max_deg, rng),
                 random_eform(chart, n - 1, max_deg, rng));
}

GenForm random_genform(ChartConfig chart, int degree, int max_deg, Rng& rng) {
    GenForm g(chart, degree);
    for (const Index& I : all_indices(frame_size(chart), degree))
        for (int alpha = 1; alpha <= chart.r; ++alpha)
            g.add_component(I, alpha, random_poly(chart.m, max_deg, rng));
    return g;
}

OmniSection random_omni(ChartConfig chart, int n, int max_deg, Rng& rng) {
    return {random_derivation(chart, max_deg, rng), random_jform(chart, n, max_deg, rng)};
}

std::vector<Rational> random_point(int m, Rng& rng) {
    std::vector<Rational> pt;
    pt.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        int num = rng.uniform(-4, 4);
        int den = rng.uniform(1, 3);
        pt.emplace_back(num, den);
    }
    return pt;
}

}  // namespace homni
