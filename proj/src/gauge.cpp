#include "homni/gauge.hpp"

namespace homni {

namespace {

void check_frame_index(const ChartConfig& c, int a) {
    if (a < 1 || a > frame_size(c)) throw IndexError("frame index out of range");
}

// Action of the frame derivation D_a on a section value (r polys).
std::vector<Poly> frame_action(const ChartConfig& c, int a, const std::vector<Poly>& v) {
    std::vector<Poly> out(static_cast<std::size_t>(c.r), Poly(c.m));
    if (a <= c.m) {
        for (int alpha = 0; alpha < c.r; ++alpha)
            out[static_cast<std::size_t>(alpha)] =
                v[static_cast<std::size_t>(alpha)].derivative(a);
    } else {
        auto [beta, gamma] = endo_frame_indices(c, a);
        out[static_cast<std::size_t>(gamma - 1)] = v[static_cast<std::size_t>(beta - 1)];
    }
    return out;
}

// Frame bracket [D_a, D_b] as sparse constant coefficients over the frame.
std::vector<std::pair<int, Rational>> frame_bracket(const ChartConfig& c, int a, int b) {
    std::vector<std::pair<int, Rational>> out;
    if (a <= c.m || b <= c.m) return out;  // coordinate derivations commute with everything
    Derivation bracket = commutator(frame_derivation(c, a), frame_derivation(c, b));
    for (int e = c.m + 1; e <= frame_size(c); ++e) {
        Poly coef = frame_coefficient(bracket, e);
        if (coef.is_zero()) continue;
        out.emplace_back(e, coef.terms().begin()->second);
    }
    return out;
}

}  // namespace

Derivation frame_derivation(const ChartConfig& c, int a) {
    check_frame_index(c, a);
    if (a <= c.m) return Derivation::coordinate(c, a);
    auto [beta, gamma] = endo_frame_indices(c, a);
    return Derivation::endo_unit(c, beta, gamma);
}

std::pair<int, int> endo_frame_indices(const ChartConfig& c, int a) {
    check_frame_index(c, a);
    if (a <= c.m) throw IndexError("frame index is a coordinate derivation");
    int idx = a - c.m - 1;
    return {idx / c.r + 1, idx % c.r + 1};
}

Poly frame_coefficient(const Derivation& d, int a) {
    const ChartConfig& c = d.chart();
    check_frame_index(c, a);
    if (a <= c.m) return d.X(a);
    auto [beta, gamma] = endo_frame_indices(c, a);
    return d.Phi(gamma, beta);
}

// --- GenForm ---

GenForm::GenForm(ChartConfig chart, int degree) : chart_(chart), degree_(degree) {
    if (degree < 0) throw DegreeError("negative form degree");
}

Poly GenForm::component(const Index& I, int alpha) const {
    auto it = comps_.find({I, alpha});
    return it == comps_.end() ? Poly(chart_.m) : it->second;
}

std::vector<Poly> GenForm::value(const Index& I) const {
    std::vector<Poly> v(static_cast<std::size_t>(chart_.r), Poly(chart_.m));
    for (int alpha = 1; alpha <= chart_.r; ++alpha)
        v[static_cast<std::size_t>(alpha - 1)] = component(I, alpha);
    return v;
}

void GenForm::add_component(const Index& I, int alpha, const Poly& p) {
    if (static_cast<int>(I.size()) != degree_)
        throw DegreeError("frame subset length does not match form degree");
    int prev = 0;
    for (int i : I) {
        if (i <= prev) throw IndexError("frame subset not strictly increasing");
        if (i > frame_size(chart_)) throw IndexError("frame index out of range");
        prev = i;
    }
    if (alpha < 1 || alpha > chart_.r) throw IndexError("E-frame index out of range");
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

void GenForm::add_value(const Index& I, const std::vector<Poly>& v) {
    for (int alpha = 1; alpha <= chart_.r; ++alpha)
        add_component(I, alpha, v[static_cast<std::size_t>(alpha - 1)]);
}

GenForm GenForm::operator-() const {
    GenForm g(chart_, degree_);
    for (const auto& [key, p] : comps_) g.comps_.emplace(key, -p);
    return g;
}

GenForm GenForm::operator+(const GenForm& o) const {
    require_same_chart(chart_, o.chart_);
    if (degree_ != o.degree_) throw DegreeError("generic forms of different degree");
    GenForm g = *this;
    for (const auto& [key, p] : o.comps_) g.add_component(key.first, key.second, p);
    return g;
}

GenForm GenForm::operator-(const GenForm& o) const { return *this + (-o); }

GenForm GenForm::operator*(const Poly& f) const {
    GenForm g(chart_, degree_);
    for (const auto& [key, p] : comps_) g.add_component(key.first, key.second, p * f);
    return g;
}

GenForm ce_differential(const GenForm& g) {
    const ChartConfig& c = g.chart();
    const int k = g.degree();
    GenForm out(c, k + 1);
    for (const Index& S : all_indices(frame_size(c), k + 1)) {
        std::vector<Poly> acc(static_cast<std::size_t>(c.r), Poly(c.m));
        bool any = false;
        // First sum: (-1)^t D_{a_t}(mu(S \ a_t)).
        for (std::size_t t = 0; t < S.size(); ++t) {
            auto [rest, sign] = index_remove_at(S, t);
            std::vector<Poly> v = frame_action(c, S[t], g.value(rest));
            for (std::size_t al = 0; al < v.size(); ++al) {
                if (v[al].is_zero()) continue;
                acc[al] += sign > 0 ? v[al] : -v[al];
                any = true;
            }
        }
        // Second sum: (-1)^{t+u} mu([D_{a_t}, D_{a_u}], S \ {a_t, a_u}).
        for (std::size_t t = 0; t + 1 < S.size(); ++t) {
            for (std::size_t u = t + 1; u < S.size(); ++u) {
                auto br = frame_bracket(c, S[t], S[u]);
                if (br.empty()) continue;
                Index rest;
                for (std::size_t w = 0; w < S.size(); ++w)
                    if (w != t && w != u) rest.push_back(S[w]);
                int sign = (t + u) % 2 == 0 ? 1 : -1;
                for (const auto& [e, coef] : br) {
                    auto ins = index_insert(rest, e);
                    if (!ins) continue;
                    Rational factor = coef * Rational(sign * ins->second);
                    std::vector<Poly> v = g.value(ins->first);
                    for (std::size_t al = 0; al < v.size(); ++al) {
                        if (v[al].is_zero()) continue;
                        acc[al] += v[al] * factor;
                        any = true;
                    }
                }
            }
        }
        if (any) out.add_value(S, acc);
    }
    return out;
}

GenForm gen_iota(const Derivation& d, const GenForm& g) {
    require_same_chart(d.chart(), g.chart());
    if (g.degree() == 0) throw DegreeError("contraction of a degree-0 generic form");
    const ChartConfig& c = g.chart();
    GenForm out(c, g.degree() - 1);
    for (const auto& [key, p] : g.components()) {
        const Index& I = key.first;
        for (std::size_t t = 0; t < I.size(); ++t) {
            Poly coef = frame_coefficient(d, I[t]);
            if (coef.is_zero()) continue;
            auto [J, sign] = index_remove_at(I, t);
            out.add_component(J, key.second, p * coef * Rational(sign));
        }
    }
    return out;
}

GenForm gen_lie(const Derivation& d, const GenForm& g) {
    GenForm out = gen_iota(d, ce_differential(g));
    if (g.degree() > 0) out = out + ce_differential(gen_iota(d, g));
    return out;
}

bool homotopy_check(const GenForm& g) {
    Derivation id = Derivation::identity_endo(g.chart());
    GenForm lhs = gen_iota(id, ce_differential(g));
    if (g.degree() > 0) lhs = lhs + ce_differential(gen_iota(id, g));
    return lhs == g;
}

}  // namespace homni
