#include "homni/jet.hpp"

#include <sstream>

namespace homni {

namespace {

bool index_pure_tm(const Index& I, int m) {
    for (int i : I)
        if (i > m) return false;
    return true;
}

std::string describe_key(const Index& I, int alpha) {
    std::ostringstream os;
    os << "(";
    for (std::size_t t = 0; t < I.size(); ++t) os << (t ? "^" : "") << "D" << I[t];
    os << " | e" << alpha << ")";
    return os.str();
}

// Pure-coordinate part of a generic form read back as an E-valued form.
EForm pure_part(const GenForm& g) {
    EForm out(g.chart(), g.degree());
    for (const auto& [key, p] : g.components())
        if (index_pure_tm(key.first, g.chart().m)) out.add_component(key.first, key.second, p);
    return out;
}

}  // namespace

JForm::JForm(ChartConfig chart, int n)
    : chart_(chart), n_(n), mu0_(chart, n), mu1_(chart, n > 0 ? n - 1 : 0) {
    if (n < 0) throw DegreeError("negative jet-form degree");
}

JForm::JForm(EForm mu0, EForm mu1)
    : chart_(mu0.chart()), n_(mu0.degree()), mu0_(std::move(mu0)), mu1_(std::move(mu1)) {
    require_same_chart(mu0_.chart(), mu1_.chart());
    if (n_ < 1) throw DegreeError("pair constructor needs degree >= 1");
    if (mu1_.degree() != n_ - 1) throw DegreeError("mu1 must have degree n-1");
}

JForm::JForm(EForm section)
    : chart_(section.chart()), n_(0), mu0_(std::move(section)), mu1_(chart_, 0) {
    if (mu0_.degree() != 0) throw DegreeError("degree-0 jet form needs a section");
}

JForm JForm::operator-() const {
    JForm out(chart_, n_);
    out.mu0_ = -mu0_;
    if (n_ > 0) out.mu1_ = -mu1_;
    return out;
}

JForm JForm::operator+(const JForm& o) const {
    if (n_ != o.n_) throw DegreeError("jet forms of different degree");
    JForm out(chart_, n_);
    out.mu0_ = mu0_ + o.mu0_;
    if (n_ > 0) out.mu1_ = mu1_ + o.mu1_;
    return out;
}

JForm JForm::operator-(const JForm& o) const { return *this + (-o); }

JForm jwedge(const ScalarForm& w, const JForm& mu) {
    const Rational sign = w.degree() % 2 == 0 ? 1 : -1;
    const int out_degree = w.degree() + mu.degree();
    EForm t0 = wedge(w, mu.mu0());
    if (mu.degree() == 0) {
        if (out_degree == 0) return JForm(t0);
        return JForm(t0, EForm::zero(mu.chart(), out_degree - 1));
    }
    const Poly s = Poly::constant(mu.chart().m, sign);
    t0 = t0 - wedge(d_form(w), mu.mu1()) * s;
    return JForm(t0, wedge(w, mu.mu1()) * s);
}

JForm jd(const JForm& mu) {
    return JForm(EForm::zero(mu.chart(), mu.degree() + 1), mu.mu0());
}

JForm jiota(const Derivation& d, const JForm& mu) {
    require_same_chart(d.chart(), mu.chart());
    if (mu.degree() == 0) throw DegreeError("contraction of a degree-0 jet form");
    EForm t0 = iota_vec(d.X(), mu.mu0()) + lie_deriv_eform(d, mu.mu1());
    if (mu.degree() == 1) return JForm(t0);
    EForm t1 = -iota_vec(d.X(), mu.mu1());
    return JForm(t0, t1);
}

JForm jlie(const Derivation& d, const JForm& mu) {
    require_same_chart(d.chart(), mu.chart());
    EForm t0 = lie_deriv_eform(d, mu.mu0());
    if (mu.degree() == 0) return JForm(t0);
    return JForm(t0, lie_deriv_eform(d, mu.mu1()));
}

std::pair<EForm, EForm> to_split(const JForm& mu) {
    if (mu.degree() == 0) return {mu.mu0(), EForm::zero(mu.chart(), 0)};
    return {mu.mu0() + d_form(mu.mu1()), mu.mu1()};
}

JForm from_split(const EForm& t0, const EForm& t1) {
    if (t0.degree() == 0) return JForm(t0);
    if (t1.degree() != t0.degree() - 1) throw DegreeError("split pair degrees mismatch");
    return JForm(t0 - d_form(t1), t1);
}

GenForm pullback_to_generic(const EForm& nu) {
    GenForm g(nu.chart(), nu.degree());
    for (const auto& [key, p] : nu.components()) g.add_component(key.first, key.second, p);
    return g;
}

GenForm embed_generic(const JForm& mu) {
    GenForm g = pullback_to_generic(mu.mu0());
    if (mu.degree() > 0) g = g + ce_differential(pullback_to_generic(mu.mu1()));
    return g;
}

MembershipResult membership_check(const GenForm& g) {
    const ChartConfig& c = g.chart();
    const int k = g.degree();
    MembershipResult res{true, {}, EForm(c, k > 0 ? k - 1 : 0)};
    if (k == 0) return res;  // J_0 E = E: every degree-0 form is a section

    GenForm rho = gen_iota(Derivation::identity_endo(c), g);
    // iota_Id g must vanish on every tuple containing a gl-frame element.
    for (const auto& [key, p] : rho.components()) {
        if (!index_pure_tm(key.first, c.m)) {
            res.ok = false;
            res.witness.push_back("iota_Id has nonzero gl-component at " +
                                  describe_key(key.first, key.second));
        }
    }
    EForm lambda = pure_part(rho);
    res.lambda = lambda;

    // iota_{eps^beta_gamma} g = eps^beta_gamma o j*lambda, componentwise.
    for (int beta = 1; beta <= c.r; ++beta) {
        for (int gamma = 1; gamma <= c.r; ++gamma) {
            GenForm lhs = gen_iota(Derivation::endo_unit(c, beta, gamma), g);
            GenForm rhs(c, k - 1);
            for (const auto& [key, p] : lambda.components())
                if (key.second == beta) rhs.add_component(key.first, gamma, p);
            if (lhs != rhs) {
                res.ok = false;
                GenForm diff = lhs - rhs;
                const auto& [key, p] = *diff.components().begin();
                std::ostringstream os;
                os << "iota_{eps^" << beta << "_" << gamma
                   << "} mismatch at " << describe_key(key.first, key.second)
                   << ": residual " << p.str();
                res.witness.push_back(os.str());
            }
        }
    }
    return res;
}

JForm project_from_generic(const GenForm& g) {
    MembershipResult inner = membership_check(g);
    if (!inner.ok) throw NotAJetFormError(inner.witness.front());
    if (g.degree() == 0) return JForm(pure_part(g));
    MembershipResult outer = membership_check(ce_differential(g));
    if (!outer.ok) throw NotAJetFormError(outer.witness.front());
    // (mu0, mu1) = (lambda_{dg}, lambda_g).
    return JForm(outer.lambda, inner.lambda);
}

}  // namespace homni
