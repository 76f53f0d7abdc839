#include "homni/multicontact.hpp"

#include "homni/index.hpp"

namespace homni {

namespace {

void check_point(int m, const std::vector<Rational>& p) {
    if (static_cast<int>(p.size()) != m)
        throw DimensionError("point of length " + std::to_string(p.size()) +
                             " on a chart of dimension " + std::to_string(m));
}

}  // namespace

std::vector<std::vector<Rational>> kernel_at_point(const ScalarForm& nu,
                                                   const std::vector<Rational>& p) {
    const int m = nu.m();
    check_point(m, p);
    if (nu.degree() < 1) throw DegreeError("kernel needs a form of degree >= 1");

    // rows: contraction slots J of length degree-1; columns: basis vectors
    Matrix rows;
    for (const Index& J : all_indices(m, nu.degree() - 1)) {
        std::vector<Rational> row(static_cast<std::size_t>(m), Rational(0));
        bool nonzero = false;
        for (int i = 1; i <= m; ++i) {
            auto ins = index_insert(J, i);
            if (!ins) continue;  // repeated index contracts to zero
            Rational v = nu.component(ins->first).evaluate(p) * ins->second;
            if (v != 0) nonzero = true;
            row[static_cast<std::size_t>(i - 1)] = v;
        }
        if (nonzero) rows.push_back(std::move(row));
    }
    return nullspace(std::move(rows), m);
}

std::vector<std::vector<Rational>> kernel_at_point(const EForm& nu,
                                                   const std::vector<Rational>& p) {
    if (nu.chart().r != 1) throw RankError("pointwise kernels need a rank-1 bundle");
    ScalarForm s(nu.chart().m, nu.degree());
    for (const auto& [key, poly] : nu.components()) s.add_component(key.first, poly);
    return kernel_at_point(s, p);
}

bool is_multicontact_at(const EForm& nu, const std::vector<Rational>& p) {
    const int m = nu.chart().m;
    const int corank = m - static_cast<int>(kernel_at_point(nu, p).size());
    return corank == nu.degree();
}

std::vector<bool> is_multicontact_at(const EForm& nu,
                                     const std::vector<std::vector<Rational>>& points) {
    std::vector<bool> out;
    out.reserve(points.size());
    for (const auto& p : points) out.push_back(is_multicontact_at(nu, p));
    return out;
}

ScalarForm nu_from_distribution(const DistributionFrame& d, const std::vector<Rational>& p) {
    const int m = d.m;
    check_point(m, p);
    const int k = static_cast<int>(d.generators.size());
    if (k > m) throw DimensionError("more generators than chart dimensions");
    const int n = m - k;

    // columns of the induced basis: generator values, then the greedy
    // coordinate completion
    Matrix basis(static_cast<std::size_t>(m));
    for (auto& row : basis) row.assign(static_cast<std::size_t>(m), Rational(0));
    auto col_rank = [&](int cols) {
        Matrix sub(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i)
            sub[static_cast<std::size_t>(i)].assign(
                basis[static_cast<std::size_t>(i)].begin(),
                basis[static_cast<std::size_t>(i)].begin() + cols);
        return rank(std::move(sub));
    };
    for (int j = 0; j < k; ++j) {
        const auto& gen = d.generators[static_cast<std::size_t>(j)];
        if (static_cast<int>(gen.size()) != m)
            throw DimensionError("generator of wrong length");
        for (int i = 0; i < m; ++i)
            basis[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                gen[static_cast<std::size_t>(i)].evaluate(p);
    }
    if (col_rank(k) != k)
        throw DegeneracyError("distribution generators are dependent at the point");
    int filled = k;
    for (int i = 1; i <= m && filled < m; ++i) {
        for (int row = 0; row < m; ++row)
            basis[static_cast<std::size_t>(row)][static_cast<std::size_t>(filled)] =
                Rational(row == i - 1 ? 1 : 0);
        if (col_rank(filled + 1) == filled + 1) ++filled;
    }

    // quotient coordinates of v are the last n entries of basis^{-1} v
    Matrix inv = inverse(basis);
    ScalarForm out(m, n);
    for (const Index& I : all_indices(m, n)) {
        Matrix q(static_cast<std::size_t>(n));
        for (int a = 0; a < n; ++a) {
            q[static_cast<std::size_t>(a)].reserve(static_cast<std::size_t>(n));
            for (int b = 0; b < n; ++b)
                q[static_cast<std::size_t>(a)].push_back(
                    inv[static_cast<std::size_t>(k + a)]
                       [static_cast<std::size_t>(I[static_cast<std::size_t>(b)] - 1)]);
        }
        const Rational c = determinant(std::move(q));
        if (c != 0) out.add_component(I, Poly::constant(m, c));
    }
    return out;
}

}  // namespace homni
