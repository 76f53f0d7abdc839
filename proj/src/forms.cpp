#include "homni/forms.hpp"

namespace homni {

namespace {

void check_index(const Index& I, int degree, int cap) {
    if (static_cast<int>(I.size()) != degree)
        throw DegreeError("multi-index length does not match form degree");
    int prev = 0;
    for (int i : I) {
        if (i <= prev) throw IndexError("multi-index not strictly increasing");
        if (i > cap) throw IndexError("multi-index entry out of range");
        prev = i;
    }
}

}  // namespace

// --- ScalarForm ---

ScalarForm::ScalarForm(int m, int degree) : m_(m), degree_(degree) {
    if (m < 1) throw DimensionError("chart dimension must be >= 1");
    if (degree < 0) throw DegreeError("negative form degree");
}

ScalarForm ScalarForm::function(int m, const Poly& f) {
    ScalarForm a(m, 0);
    a.add_component({}, f);
    return a;
}

Poly ScalarForm::component(const Index& I) const {
    auto it = comps_.find(I);
    return it == comps_.end() ? Poly(m_) : it->second;
}

void ScalarForm::add_component(const Index& I, const Poly& p) {
    check_index(I, degree_, m_);
    if (p.vars() != m_) throw DimensionError("component over wrong chart dimension");
    if (p.is_zero()) return;
    auto it = comps_.find(I);
    if (it == comps_.end()) {
        comps_.emplace(I, p);
    } else {
        it->second += p;
        if (it->second.is_zero()) comps_.erase(it);
    }
}

void ScalarForm::check_compatible(const ScalarForm& o) const {
    if (m_ != o.m_) throw DimensionError("scalar forms over different charts");
    if (degree_ != o.degree_) throw DegreeError("scalar forms of different degree");
}

ScalarForm ScalarForm::operator-() const {
    ScalarForm a(m_, degree_);
    for (const auto& [I, p] : comps_) a.comps_.emplace(I, -p);
    return a;
}

ScalarForm ScalarForm::operator+(const ScalarForm& o) const {
    check_compatible(o);
    ScalarForm a = *this;
    for (const auto& [I, p] : o.comps_) a.add_component(I, p);
    return a;
}

ScalarForm ScalarForm::operator-(const ScalarForm& o) const {
    check_compatible(o);
    ScalarForm a = *this;
    for (const auto& [I, p] : o.comps_) a.add_component(I, -p);
    return a;
}

ScalarForm ScalarForm::operator*(const Poly& f) const {
    ScalarForm a(m_, degree_);
    for (const auto& [I, p] : comps_) a.add_component(I, p * f);
    return a;
}

// --- EForm ---

EForm::EForm(ChartConfig chart, int degree) : chart_(chart), degree_(degree) {
    if (degree < 0) throw DegreeError("negative form degree");
}

EForm EForm::section(ChartConfig chart, const Poly& p, int alpha) {
    EForm u(chart, 0);
    u.add_component({}, alpha, p);
    return u;
}

Poly EForm::component(const Index& I, int alpha) const {
    auto it = comps_.find({I, alpha});
    return it == comps_.end() ? Poly(chart_.m) : it->second;
}

void EForm::add_component(const Index& I, int alpha, const Poly& p) {
    check_index(I, degree_, chart_.m);
    if (alpha < 1 || alpha > chart_.r) throw IndexError("frame index out of range");
    if (p.vars() != chart_.m) throw DimensionError("component over wrong chart dimension");
    if (p.is_zero()) return;
    Key key{I, alpha};
    auto it = comps_.find(key);
    if (it == comps_.end()) {
        comps_.emplace(key, p);
    } else {
        it->second += p;
        if (it->second.is_zero()) comps_.erase(it);
    }
}

void EForm::check_compatible(const EForm& o) const {
    require_same_chart(chart_, o.chart_);
    if (degree_ != o.degree_) throw DegreeError("E-valued forms of different degree");
}

EForm EForm::operator-() const {
    EForm a(chart_, degree_);
    for (const auto& [key, p] : comps_) a.comps_.emplace(key, -p);
    return a;
}

EForm EForm::operator+(const EForm& o) const {
    check_compatible(o);
    EForm a = *this;
    for (const auto& [key, p] : o.comps_) a.add_component(key.first, key.second, p);
    return a;
}

EForm EForm::operator-(const EForm& o) const {
    check_compatible(o);
    EForm a = *this;
    for (const auto& [key, p] : o.comps_) a.add_component(key.first, key.second, -p);
    return a;
}

EForm EForm::operator*(const Poly& f) const {
    EForm a(chart_, degree_);
    for (const auto& [key, p] : comps_) a.add_component(key.first, key.second, p * f);
    return a;
}

// --- Derivation ---

Derivation::Derivation(ChartConfig chart)
    : chart_(chart),
      X_(static_cast<std::size_t>(chart.m), Poly(chart.m)),
      Phi_(static_cast<std::size_t>(chart.r),
           std::vector<Poly>(static_cast<std::size_t>(chart.r), Poly(chart.m))) {}

Derivation Derivation::coordinate(ChartConfig chart, int i) {
    Derivation d(chart);
    d.X(i) = Poly::constant(chart.m, 1);
    return d;
}

Derivation Derivation::endo_unit(ChartConfig chart, int beta, int gamma) {
    if (beta < 1 || beta > chart.r || gamma < 1 || gamma > chart.r)
        throw IndexError("endomorphism frame index out of range");
    Derivation d(chart);
    d.Phi(gamma, beta) = Poly::constant(chart.m, 1);
    return d;
}

Derivation Derivation::identity_endo(ChartConfig chart) {
    Derivation d(chart);
    for (int a = 1; a <= chart.r; ++a) d.Phi(a, a) = Poly::constant(chart.m, 1);
    return d;
}

bool Derivation::is_zero() const {
    for (const auto& p : X_)
        if (!p.is_zero()) return false;
    for (const auto& row : Phi_)
        for (const auto& p : row)
            if (!p.is_zero()) return false;
    return true;
}

Poly Derivation::apply_symbol(const Poly& f) const {
    Poly out(chart_.m);
    for (int i = 1; i <= chart_.m; ++i) out += X(i) * f.derivative(i);
    return out;
}

Derivation Derivation::operator-() const {
    Derivation d(chart_);
    for (int i = 1; i <= chart_.m; ++i) d.X(i) = -X(i);
    for (int g = 1; g <= chart_.r; ++g)
        for (int b = 1; b <= chart_.r; ++b) d.Phi(g, b) = -Phi(g, b);
    return d;
}

Derivation Derivation::operator+(const Derivation& o) const {
    require_same_chart(chart_, o.chart_);
    Derivation d(chart_);
    for (int i = 1; i <= chart_.m; ++i) d.X(i) = X(i) + o.X(i);
    for (int g = 1; g <= chart_.r; ++g)
        for (int b = 1; b <= chart_.r; ++b) d.Phi(g, b) = Phi(g, b) + o.Phi(g, b);
    return d;
}

Derivation Derivation::operator-(const Derivation& o) const { return *this + (-o); }

Derivation Derivation::operator*(const Poly& f) const {
    Derivation d(chart_);
    for (int i = 1; i <= chart_.m; ++i) d.X(i) = X(i) * f;
    for (int g = 1; g <= chart_.r; ++g)
        for (int b = 1; b <= chart_.r; ++b) d.Phi(g, b) = Phi(g, b) * f;
    return d;
}

// --- Cartan calculus ---

ScalarForm wedge(const ScalarForm& a, const ScalarForm& b) {
    if (a.m() != b.m()) throw DimensionError("wedge over different charts");
    ScalarForm out(a.m(), a.degree() + b.degree());
    for (const auto& [J, p] : a.components()) {
        for (const auto& [K, q] : b.components()) {
            auto sign = merge_sign(J, K);
            if (!sign) continue;
            out.add_component(index_merge(J, K), p * q * Rational(*sign));
        }
    }
    return out;
}

EForm wedge(const ScalarForm& a, const EForm& b) {
    if (a.m() != b.chart().m) throw DimensionError("wedge over different charts");
    EForm out(b.chart(), a.degree() + b.degree());
    for (const auto& [J, p] : a.components()) {
        for (const auto& [key, q] : b.components()) {
            auto sign = merge_sign(J, key.first);
            if (!sign) continue;
            out.add_component(index_merge(J, key.first), key.second, p * q * Rational(*sign));
        }
    }
    return out;
}

ScalarForm d_form(const ScalarForm& a) {
    ScalarForm out(a.m(), a.degree() + 1);
    for (const auto& [I, p] : a.components()) {
        for (int j = 1; j <= a.m(); ++j) {
            Poly dp = p.derivative(j);
            if (dp.is_zero()) continue;
            auto ins = index_insert(I, j);
            if (!ins) continue;
            out.add_component(ins->first, dp * Rational(ins->second));
        }
    }
    return out;
}

EForm d_form(const EForm& a) {
    EForm out(a.chart(), a.degree() + 1);
    for (const auto& [key, p] : a.components()) {
        for (int j = 1; j <= a.chart().m; ++j) {
            Poly dp = p.derivative(j);
            if (dp.is_zero()) continue;
            auto ins = index_insert(key.first, j);
            if (!ins) continue;
            out.add_component(ins->first, key.second, dp * Rational(ins->second));
        }
    }
    return out;
}

ScalarForm iota_vec(const std::vector<Poly>& X, const ScalarForm& a) {
    if (a.degree() == 0) return ScalarForm(a.m(), 0);
    ScalarForm out(a.m(), a.degree() - 1);
    for (const auto& [I, p] : a.components()) {
        for (std::size_t t = 0; t < I.size(); ++t) {
            const Poly& Xj = X[static_cast<std::size_t>(I[t] - 1)];
            if (Xj.is_zero()) continue;
            auto [J, sign] = index_remove_at(I, t);
            out.add_component(J, p * Xj * Rational(sign));
        }
    }
    return out;
}

EForm iota_vec(const std::vector<Poly>& X, const EForm& a) {
    if (a.degree() == 0) return EForm(a.chart(), 0);
    EForm out(a.chart(), a.degree() - 1);
    for (const auto& [key, p] : a.components()) {
        const Index& I = key.first;
        for (std::size_t t = 0; t < I.size(); ++t) {
            const Poly& Xj = X[static_cast<std::size_t>(I[t] - 1)];
            if (Xj.is_zero()) continue;
            auto [J, sign] = index_remove_at(I, t);
            out.add_component(J, key.second, p * Xj * Rational(sign));
        }
    }
    return out;
}

ScalarForm lie_vec(const std::vector<Poly>& X, const ScalarForm& a) {
    ScalarForm out = iota_vec(X, d_form(a));
    if (a.degree() > 0) out = out + d_form(iota_vec(X, a));
    return out;
}

Derivation commutator(const Derivation& a, const Derivation& b) {
    require_same_chart(a.chart(), b.chart());
    const ChartConfig& c = a.chart();
    Derivation out(c);
    for (int i = 1; i <= c.m; ++i) out.X(i) = a.apply_symbol(b.X(i)) - b.apply_symbol(a.X(i));
    for (int g = 1; g <= c.r; ++g) {
        for (int bcol = 1; bcol <= c.r; ++bcol) {
            Poly entry = a.apply_symbol(b.Phi(g, bcol)) - b.apply_symbol(a.Phi(g, bcol));
            for (int k = 1; k <= c.r; ++k)
                entry += a.Phi(g, k) * b.Phi(k, bcol) - b.Phi(g, k) * a.Phi(k, bcol);
            out.Phi(g, bcol) = entry;
        }
    }
    return out;
}

EForm apply_derivation(const Derivation& d, const EForm& u) {
    require_same_chart(d.chart(), u.chart());
    if (u.degree() != 0) throw DegreeError("apply_derivation needs a degree-0 section");
    return lie_deriv_eform(d, u);
}

EForm apply_endo(const Derivation& d, const EForm& nu) {
    require_same_chart(d.chart(), nu.chart());
    EForm out(nu.chart(), nu.degree());
    for (const auto& [key, p] : nu.components()) {
        for (int g = 1; g <= nu.chart().r; ++g) {
            const Poly& phi = d.Phi(g, key.second);
            if (phi.is_zero()) continue;
            out.add_component(key.first, g, phi * p);
        }
    }
    return out;
}

EForm lie_deriv_eform(const Derivation& d, const EForm& nu) {
    require_same_chart(d.chart(), nu.chart());
    // Componentwise L_X on the frame components, plus the endomorphism action.
    EForm out = apply_endo(d, nu);
    for (int alpha = 1; alpha <= nu.chart().r; ++alpha) {
        ScalarForm comp(nu.chart().m, nu.degree());
        for (const auto& [key, p] : nu.components())
            if (key.second == alpha) comp.add_component(key.first, p);
        ScalarForm lx = lie_vec(d.X(), comp);
        for (const auto& [I, p] : lx.components()) out.add_component(I, alpha, p);
    }
    return out;
}

}  // namespace homni
