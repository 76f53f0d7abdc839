#include "homni/dirac.hpp"

#include "homni/errors.hpp"

#include <sstream>

namespace homni {

namespace {

std::string index_str(const Index& I) {
    std::ostringstream os;
    os << '{';
    for (std::size_t t = 0; t < I.size(); ++t) os << (t ? "," : "") << I[t];
    os << '}';
    return os.str();
}

ScalarForm coordinate_volume(int m) {
    ScalarForm vol(m, m);
    Index full(static_cast<std::size_t>(m));
    for (int i = 1; i <= m; ++i) full[static_cast<std::size_t>(i - 1)] = i;
    vol.add_component(full, Poly::constant(m, 1));
    return vol;
}

std::vector<Poly> unit_vector(int m, int i) {
    std::vector<Poly> X(static_cast<std::size_t>(m), Poly::constant(m, 0));
    X[static_cast<std::size_t>(i - 1)] = Poly::constant(m, 1);
    return X;
}

// vol_I = iota_{d_{i1}} ... iota_{d_{ik}} vol, contractions applied
// right-to-left so the leftmost index acts last
ScalarForm contracted_volume(int m, const Index& I) {
    ScalarForm out = coordinate_volume(m);
    for (auto it = I.rbegin(); it != I.rend(); ++it) out = iota_vec(unit_vector(m, *it), out);
    return out;
}

EForm tensor_section(const ScalarForm& w, int alpha, const ChartConfig& chart) {
    EForm out(chart, w.degree());
    for (const auto& [I, p] : w.components()) out.add_component(I, alpha, p);
    return out;
}

/// All exponent tuples in m variables of total degree <= d.
std::vector<Poly::Exponents> monomials_up_to(int m, int d) {
    std::vector<Poly::Exponents> out;
    Poly::Exponents cur(static_cast<std::size_t>(m), 0u);
    auto rec = [&](auto&& self, int var, int left) -> void {
        if (var == m) {
            out.push_back(cur);
            return;
        }
        for (int e = 0; e <= left; ++e) {
            cur[static_cast<std::size_t>(var)] = static_cast<unsigned>(e);
            self(self, var + 1, left - e);
        }
        cur[static_cast<std::size_t>(var)] = 0u;
    };
    rec(rec, 0, d);
    return out;
}

}  // namespace

BMapD::BMapD(ChartConfig chart, int n) : chart_(chart), n_(n) {
    if (n < 1) throw DegreeError("graph map needs target degree >= 1");
    values_.assign(static_cast<std::size_t>(frame_size(chart)), JForm(chart, n));
}

const JForm& BMapD::value(int a) const {
    if (a < 1 || a > frame_size(chart_))
        throw IndexError("frame index out of range: " + std::to_string(a));
    return values_[static_cast<std::size_t>(a - 1)];
}

void BMapD::set_value(int a, JForm v) {
    if (a < 1 || a > frame_size(chart_))
        throw IndexError("frame index out of range: " + std::to_string(a));
    if (v.degree() != n_) throw DegreeError("graph map value of wrong degree");
    values_[static_cast<std::size_t>(a - 1)] = std::move(v);
}

JForm BMapD::apply(const Derivation& d) const {
    require_same_chart(chart_, d.chart());
    JForm out(chart_, n_);
    for (int a = 1; a <= frame_size(chart_); ++a) {
        const Poly coef = frame_coefficient(d, a);
        if (coef.is_zero()) continue;
        out = out + jwedge(ScalarForm::function(chart_.m, coef), value(a));
    }
    return out;
}

BMapD bmap_from_form(const JForm& mu) {
    if (mu.degree() < 2) throw DegreeError("flat map needs a jet form of degree >= 2");
    BMapD b(mu.chart(), mu.degree() - 1);
    for (int a = 1; a <= frame_size(mu.chart()); ++a)
        b.set_value(a, jiota(frame_derivation(mu.chart(), a), mu));
    return b;
}

CheckResult isotropy_check_D(const BMapD& b) {
    const ChartConfig chart = b.chart();
    for (int a1 = 1; a1 <= frame_size(chart); ++a1) {
        for (int a2 = a1; a2 <= frame_size(chart); ++a2) {
            JForm s = jiota(frame_derivation(chart, a1), b.value(a2)) +
                      jiota(frame_derivation(chart, a2), b.value(a1));
            if (!s.is_zero())
                return {false, "iota_{D" + std::to_string(a1) + "} B(D" + std::to_string(a2) +
                                   ") + iota_{D" + std::to_string(a2) + "} B(D" +
                                   std::to_string(a1) + ") != 0"};
        }
    }
    return {true, ""};
}

JForm reconstruct_form(const BMapD& b) {
    const ChartConfig chart = b.chart();
    const int n = b.n();
    EForm mu1(chart, n);
    for (int beta = 1; beta <= chart.r; ++beta) {
        const int a = chart.m + (beta - 1) * chart.r + beta;
        mu1 = mu1 + b.value(a).mu0();
    }
    EForm mu0(chart, n + 1);
    if (n + 1 <= chart.m) {
        // iota_{d_i} mu0 = B(d_i).mu0 - L_{d_i} mu1, read off component by
        // component from the smallest index of each multi-index
        std::vector<EForm> slices;
        slices.reserve(static_cast<std::size_t>(chart.m));
        for (int i = 1; i <= chart.m; ++i)
            slices.push_back(b.value(i).mu0() -
                             lie_deriv_eform(Derivation::coordinate(chart, i), mu1));
        for (const Index& I : all_indices(chart.m, n + 1)) {
            Index rest(I.begin() + 1, I.end());
            for (int alpha = 1; alpha <= chart.r; ++alpha) {
                Poly p = slices[static_cast<std::size_t>(I[0] - 1)].component(rest, alpha);
                if (!p.is_zero()) mu0.add_component(I, alpha, p);
            }
        }
    }
    return {std::move(mu0), std::move(mu1)};
}

CheckResult involutivity_check_D(const BMapD& b) {
    CheckResult iso = isotropy_check_D(b);
    if (!iso.ok) throw DegeneracyError("graph is not isotropic: " + iso.witness);
    JForm mu = reconstruct_form(b);
    if (mu.mu0().is_zero()) return {true, ""};
    const auto& [key, p] = *mu.mu0().components().begin();
    return {false, "d mu has component " + index_str(key.first) + " @ e" +
                       std::to_string(key.second) + " = " + p.str()};
}

CheckResult involutivity_direct_D(const BMapD& b) {
    const ChartConfig chart = b.chart();
    for (int a1 = 1; a1 <= frame_size(chart); ++a1) {
        for (int a2 = 1; a2 <= frame_size(chart); ++a2) {
            OmniSection e1(frame_derivation(chart, a1), b.value(a1));
            OmniSection e2(frame_derivation(chart, a2), b.value(a2));
            OmniSection out = dorfman(e1, e2);
            if (out.jpart() != b.apply(out.dpart()))
                return {false, "bracket of graph sections over (D" + std::to_string(a1) +
                                   ", D" + std::to_string(a2) + ") leaves the graph"};
        }
    }
    return {true, ""};
}

BMapD dirac_from_eform(const EForm& nu) {
    if (nu.degree() < 1) throw DegreeError("need a form of degree >= 1");
    JForm pulled(nu, EForm::zero(nu.chart(), nu.degree() - 1));
    return bmap_from_form(jd(pulled));
}

GeneratorSet generator_set(ChartConfig chart, int n) {
    if (n < 1 || n > chart.m + 1)
        throw RangeError("generator set needs 1 <= n <= m + 1");
    GeneratorSet out;
    if (n <= chart.m) {
        for (const Index& I : all_indices(chart.m, chart.m - n)) {
            ScalarForm volI = contracted_volume(chart.m, I);
            for (int alpha = 1; alpha <= chart.r; ++alpha) {
                out.forms.emplace_back(tensor_section(volI, alpha, chart),
                                       EForm::zero(chart, n - 1));
                out.labels.push_back("mu" + index_str(I) + ",e" + std::to_string(alpha));
            }
        }
    }
    for (const Index& J : all_indices(chart.m, chart.m - n + 1)) {
        ScalarForm volJ = contracted_volume(chart.m, J);
        for (int alpha = 1; alpha <= chart.r; ++alpha) {
            JForm eps(EForm::section(chart, Poly::constant(chart.m, 1), alpha));
            out.forms.push_back(jwedge(volJ, jd(eps)));
            out.labels.push_back("nu" + index_str(J) + ",e" + std::to_string(alpha));
        }
    }
    return out;
}

CheckResult maximality_against_generators(const BMapD& b) {
    const ChartConfig chart = b.chart();
    GeneratorSet gens = generator_set(chart, b.n());
    for (std::size_t s = 0; s < gens.forms.size(); ++s) {
        const JForm& g = gens.forms[s];
        if (g.is_zero()) continue;
        bool orthogonal = true;
        for (int a = 1; a <= frame_size(chart) && orthogonal; ++a)
            orthogonal = jiota(frame_derivation(chart, a), g).is_zero();
        if (orthogonal)
            return {false, "nonzero generator " + gens.labels[s] +
                               " is orthogonal to the whole graph"};
    }
    return {true, ""};
}

int rigidity_solve(ChartConfig chart, int n, int coeff_deg) {
    if (n <= 1 || n >= chart.m + 1)
        throw RangeError("rigidity needs 1 < n < m + 1");
    if (coeff_deg < 0) throw RangeError("negative coefficient degree");

    GeneratorSet gens = generator_set(chart, n);
    const int G = static_cast<int>(gens.forms.size());
    const int N = frame_size(chart);
    const std::vector<Poly::Exponents> mons = monomials_up_to(chart.m, coeff_deg);
    const int M = static_cast<int>(mons.size());
    const int unknowns = G * N * M;

    // contraction of each generator with each frame derivation, reused in
    // every isotropy equation
    std::vector<std::vector<JForm>> contrib;
    contrib.reserve(static_cast<std::size_t>(G));
    for (const JForm& g : gens.forms) {
        std::vector<JForm> row;
        row.reserve(static_cast<std::size_t>(N));
        for (int a = 1; a <= N; ++a) row.push_back(jiota(frame_derivation(chart, a), g));
        contrib.push_back(std::move(row));
    }
    std::vector<ScalarForm> mon_forms;
    mon_forms.reserve(static_cast<std::size_t>(M));
    for (const auto& e : mons) {
        Poly p(chart.m);
        p.add_term(e, Rational(1));
        mon_forms.push_back(ScalarForm::function(chart.m, p));
    }
    auto column = [&](int s, int a, int k) {
        return (s * N + (a - 1)) * M + k;
    };

    Matrix rows;
    using RowKey = std::tuple<int, Index, int, Poly::Exponents>;  // slot, I, alpha, monomial
    for (int s = 0; s < G; ++s) {
        for (int t = s; t < G; ++t) {
            std::map<RowKey, std::vector<Rational>> eq;
            auto accumulate = [&](int src, int other, int col_gen) {
                for (int a = 1; a <= N; ++a) {
                    for (int k = 0; k < M; ++k) {
                        JForm term = jwedge(mon_forms[static_cast<std::size_t>(k)],
                                            contrib[static_cast<std::size_t>(other)]
                                                   [static_cast<std::size_t>(a - 1)]);
                        const int col = column(col_gen, a, k);
                        auto add_comp = [&](int slot, const EForm& f) {
                            for (const auto& [key, p] : f.components())
                                for (const auto& [exp, coef] : p.terms()) {
                                    auto& row = eq[{slot, key.first, key.second, exp}];
                                    if (row.empty())
                                        row.assign(static_cast<std::size_t>(unknowns),
                                                   Rational(0));
                                    row[static_cast<std::size_t>(col)] += coef;
                                }
                        };
                        add_comp(0, term.mu0());
                        if (term.degree() > 0) add_comp(1, term.mu1());
                    }
                }
                (void)src;
            };
            // iota_{B(g_s)} g_t + iota_{B(g_t)} g_s = 0
            accumulate(s, t, s);
            accumulate(t, s, t);
            for (auto& [key, row] : eq) rows.push_back(std::move(row));
        }
    }
    return nullspace_dim(std::move(rows), unknowns);
}

ZStructure::ZStructure(ChartConfig chart)
    : chart_(chart), top_(Poly::constant(chart.m, 0)) {
    const std::size_t pairs = static_cast<std::size_t>(chart.r * (chart.r - 1) / 2);
    c_.assign(static_cast<std::size_t>(chart.r),
              std::vector<Poly>(pairs, Poly::constant(chart.m, 0)));
}

void ZStructure::set_top(const Poly& p) {
    if (p.vars() != chart_.m) throw DimensionError("top coefficient on the wrong chart");
    top_ = p;
}

namespace {
int pair_slot(int r, int alpha, int beta) {
    // lexicographic position of (alpha, beta), alpha < beta
    return (alpha - 1) * r - alpha * (alpha - 1) / 2 + (beta - alpha - 1);
}
}  // namespace

Poly ZStructure::c(int gamma, int alpha, int beta) const {
    if (gamma < 1 || gamma > chart_.r || alpha < 1 || alpha > chart_.r || beta < 1 ||
        beta > chart_.r)
        throw IndexError("frame index out of range in structure functions");
    if (alpha == beta) return Poly::constant(chart_.m, 0);
    if (alpha < beta)
        return c_[static_cast<std::size_t>(gamma - 1)]
                 [static_cast<std::size_t>(pair_slot(chart_.r, alpha, beta))];
    return -c_[static_cast<std::size_t>(gamma - 1)]
              [static_cast<std::size_t>(pair_slot(chart_.r, beta, alpha))];
}

void ZStructure::set_c(int gamma, int alpha, int beta, const Poly& p) {
    if (gamma < 1 || gamma > chart_.r || alpha < 1 || alpha > chart_.r || beta < 1 ||
        beta > chart_.r)
        throw IndexError("frame index out of range in structure functions");
    if (alpha == beta) throw IndexError("structure functions are antisymmetric");
    if (p.vars() != chart_.m) throw DimensionError("structure function on the wrong chart");
    if (alpha < beta)
        c_[static_cast<std::size_t>(gamma - 1)]
          [static_cast<std::size_t>(pair_slot(chart_.r, alpha, beta))] = p;
    else
        c_[static_cast<std::size_t>(gamma - 1)]
          [static_cast<std::size_t>(pair_slot(chart_.r, beta, alpha))] = -p;
}

Poly ZStructure::b(int gamma, int alpha, int beta) const {
    return top_ * c(gamma, alpha, beta);
}

CheckResult jacobi_check(const ZStructure& z) {
    const int r = z.chart().r;
    const int m = z.chart().m;
    for (int a = 1; a <= r; ++a)
        for (int bi = 1; bi <= r; ++bi)
            for (int g = 1; g <= r; ++g) {
                for (int delta = 1; delta <= r; ++delta) {
                    Poly jac = Poly::constant(m, 0);
                    for (int lam = 1; lam <= r; ++lam)
                        jac = jac + z.b(lam, bi, g) * z.b(delta, a, lam) +
                              z.b(lam, g, a) * z.b(delta, bi, lam) +
                              z.b(lam, a, bi) * z.b(delta, g, lam);
                    if (!jac.is_zero())
                        return {false, "Jacobiator(e" + std::to_string(a) + ",e" +
                                           std::to_string(bi) + ",e" + std::to_string(g) +
                                           ") has e" + std::to_string(delta) +
                                           "-component " + jac.str()};
                }
            }
    return {true, ""};
}

CheckResult involutivity_check_J(const ZStructure& z, int n) {
    const ChartConfig chart = z.chart();
    if (n != chart.m + 1)
        throw RangeError("graph over the jet side needs n = m + 1");

    Index full(static_cast<std::size_t>(chart.m));
    for (int i = 1; i <= chart.m; ++i) full[static_cast<std::size_t>(i - 1)] = i;
    const int sign = chart.m % 2 == 0 ? 1 : -1;

    // b(eps_alpha, -) as endomorphism-valued derivations
    std::vector<Derivation> phi;
    phi.reserve(static_cast<std::size_t>(chart.r));
    for (int alpha = 1; alpha <= chart.r; ++alpha) {
        Derivation d(chart);
        for (int gamma = 1; gamma <= chart.r; ++gamma)
            for (int beta = 1; beta <= chart.r; ++beta) d.Phi(gamma, beta) = z.b(gamma, alpha, beta);
        phi.push_back(std::move(d));
    }
    // generators j(vol (x) eps_alpha) = (-1)^m vol ^ d eps_alpha
    ScalarForm vol = coordinate_volume(chart.m);
    std::vector<JForm> gen;
    gen.reserve(static_cast<std::size_t>(chart.r));
    for (int alpha = 1; alpha <= chart.r; ++alpha) {
        JForm eps(EForm::section(chart, Poly::constant(chart.m, 1), alpha));
        gen.push_back(jwedge(vol, jd(eps)));
    }
    auto b_apply = [&](const JForm& g) {
        Derivation out(chart);
        for (int alpha = 1; alpha <= chart.r; ++alpha) {
            Poly h = g.mu1().component(full, alpha) * Poly::constant(chart.m, sign);
            if (!h.is_zero()) out = out + phi[static_cast<std::size_t>(alpha - 1)] * h;
        }
        return out;
    };

    for (int a1 = 1; a1 <= chart.r; ++a1)
        for (int a2 = 1; a2 <= chart.r; ++a2) {
            const JForm& g1 = gen[static_cast<std::size_t>(a1 - 1)];
            const JForm& g2 = gen[static_cast<std::size_t>(a2 - 1)];
            Derivation lhs = b_apply(jlie(b_apply(g1), g2));
            Derivation rhs = commutator(b_apply(g1), b_apply(g2));
            if (lhs != rhs)
                return {false, "bracket closure fails on generators (e" + std::to_string(a1) +
                                   ", e" + std::to_string(a2) + ")"};
        }
    return {true, ""};
}

}  // namespace homni
