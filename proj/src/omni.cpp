#include "homni/omni.hpp"

#include "homni/errors.hpp"

namespace homni {

namespace {

void require_compatible(const OmniSection& a, const OmniSection& b) {
    require_same_chart(a.chart(), b.chart());
    if (a.n() != b.n())
        throw DegreeError("omni sections of different degree: " + std::to_string(a.n()) +
                          " vs " + std::to_string(b.n()));
}

EForm scalar_to_e(const ChartConfig& chart, const ScalarForm& a) {
    EForm out(chart, a.degree());
    for (const auto& [I, p] : a.components()) out.add_component(I, 1, p);
    return out;
}

}  // namespace

OmniSection::OmniSection(Derivation dpart, JForm jpart)
    : dpart_(std::move(dpart)), jpart_(std::move(jpart)) {
    require_same_chart(dpart_.chart(), jpart_.chart());
    if (jpart_.degree() < 1)
        throw DegreeError("omni section needs jet-form degree >= 1");
}

OmniSection::OmniSection(ChartConfig chart, int n)
    : dpart_(chart), jpart_(chart, n) {
    if (n < 1) throw DegreeError("omni section needs jet-form degree >= 1");
}

OmniSection OmniSection::operator+(const OmniSection& o) const {
    require_compatible(*this, o);
    return {dpart_ + o.dpart_, jpart_ + o.jpart_};
}

OmniSection OmniSection::scale(const Poly& f) const {
    return {dpart_ * f, jwedge(ScalarForm::function(chart().m, f), jpart_)};
}

OmniSection dorfman(const OmniSection& e1, const OmniSection& e2) {
    require_compatible(e1, e2);
    JForm j = jlie(e1.dpart(), e2.jpart()) - jiota(e2.dpart(), jd(e1.jpart()));
    return {commutator(e1.dpart(), e2.dpart()), std::move(j)};
}

OmniSection dorfman_first_form(const OmniSection& e1, const OmniSection& e2) {
    require_compatible(e1, e2);
    JForm j = jlie(e1.dpart(), e2.jpart()) - jlie(e2.dpart(), e1.jpart()) +
              jd(jiota(e2.dpart(), e1.jpart()));
    return {commutator(e1.dpart(), e2.dpart()), std::move(j)};
}

JForm plus_pairing(const OmniSection& e1, const OmniSection& e2) {
    require_compatible(e1, e2);
    JForm sum = jiota(e1.dpart(), e2.jpart()) + jiota(e2.dpart(), e1.jpart());
    const Poly half = Poly::constant(e1.chart().m, Rational(1, 2));
    if (sum.degree() == 0) return JForm(sum.mu0() * half);
    return {sum.mu0() * half, sum.mu1() * half};
}

OmniSection twisted_dorfman(const JForm& omega, const OmniSection& e1, const OmniSection& e2) {
    require_compatible(e1, e2);
    if (omega.degree() != e1.n() + 2)
        throw DegreeError("twist needs a jet form of degree n + 2");
    OmniSection out = dorfman(e1, e2);
    JForm extra = jiota(e2.dpart(), jiota(e1.dpart(), omega));
    return {out.dpart(), out.jpart() + extra};
}

OmniSection jacobiator(const OmniSection& e1, const OmniSection& e2, const OmniSection& e3) {
    return dorfman(e1, dorfman(e2, e3)) - dorfman(dorfman(e1, e2), e3) -
           dorfman(e2, dorfman(e1, e3));
}

OmniSection jacobiator_twisted(const JForm& omega, const OmniSection& e1,
                               const OmniSection& e2, const OmniSection& e3) {
    return twisted_dorfman(omega, e1, twisted_dorfman(omega, e2, e3)) -
           twisted_dorfman(omega, twisted_dorfman(omega, e1, e2), e3) -
           twisted_dorfman(omega, e2, twisted_dorfman(omega, e1, e3));
}

bool squared_bracket_pairing_axiom(const OmniSection& e, const OmniSection& ep) {
    JForm lhs = plus_pairing(dorfman(e, e), ep);
    JForm rhs = jiota(ep.dpart(), jd(plus_pairing(e, e)));
    return lhs == rhs;
}

LineSection trivial_line_dorfman(const LineSection& e1, const LineSection& e2) {
    const int m = e1.mu0t.m();
    const auto& [X, f, mu0, mu1] = e1;
    const auto& [Y, g, nu0, nu1] = e2;
    const ScalarForm df = d_form(ScalarForm::function(m, f));
    const ScalarForm split = mu0 - d_form(mu1);

    std::vector<Poly> XY;
    XY.reserve(X.size());
    for (std::size_t i = 0; i < X.size(); ++i) {
        Poly bracket = Poly::constant(m, 0);
        for (std::size_t j = 0; j < X.size(); ++j)
            bracket = bracket + X[j] * Y[i].derivative(static_cast<int>(j) + 1) -
                      Y[j] * X[i].derivative(static_cast<int>(j) + 1);
        XY.push_back(bracket);
    }
    Poly Xg = Poly::constant(m, 0);
    Poly Yf = Poly::constant(m, 0);
    for (std::size_t j = 0; j < X.size(); ++j) {
        Xg = Xg + X[j] * g.derivative(static_cast<int>(j) + 1);
        Yf = Yf + Y[j] * f.derivative(static_cast<int>(j) + 1);
    }
    return LineSection{
        std::move(XY), Xg - Yf,
        lie_vec(X, nu0) + nu0 * f + wedge(df, nu1) - iota_vec(Y, d_form(mu0)) - split * g,
        lie_vec(X, nu1) + nu1 * f + iota_vec(Y, split)};
}

std::pair<ScalarForm, ScalarForm> trivial_line_pairing(const LineSection& e1,
                                                       const LineSection& e2) {
    const int m = e1.mu0t.m();
    ScalarForm first = iota_vec(e1.X, e2.mu0t) + e2.mu1t * e1.f +
                       iota_vec(e2.X, e1.mu0t) + e1.mu1t * e2.f;
    ScalarForm second = -(iota_vec(e1.X, e2.mu1t) + iota_vec(e2.X, e1.mu1t));
    const Poly half = Poly::constant(m, Rational(1, 2));
    return {first * half, second * half};
}

OmniSection line_to_omni(const ChartConfig& chart, const LineSection& e) {
    if (chart.r != 1) throw RankError("trivial-line calculus needs rank 1");
    Derivation d(chart);
    for (int i = 1; i <= chart.m; ++i) d.X(i) = e.X[static_cast<std::size_t>(i - 1)];
    d.Phi(1, 1) = e.f;
    JForm j = from_split(scalar_to_e(chart, e.mu0t), scalar_to_e(chart, e.mu1t));
    return {std::move(d), std::move(j)};
}

}  // namespace homni
