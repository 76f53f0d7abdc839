#pragma once

#include "homni/chart.hpp"
#include "homni/index.hpp"
#include "homni/poly.hpp"

#include <map>
#include <vector>

namespace homni {

/// Differential k-form on the chart with Poly components over strictly
/// increasing multi-indices. Absent component means zero.
class ScalarForm {
public:
    ScalarForm(int m, int degree);

    static ScalarForm function(int m, const Poly& f);  // degree 0
    static ScalarForm zero(int m, int degree) { return ScalarForm(m, degree); }

    int m() const { return m_; }
    int degree() const { return degree_; }
    bool is_zero() const { return comps_.empty(); }
    const std::map<Index, Poly>& components() const { return comps_; }

    Poly component(const Index& I) const;
    void add_component(const Index& I, const Poly& p);

    ScalarForm operator-() const;
    ScalarForm operator+(const ScalarForm& o) const;
    ScalarForm operator-(const ScalarForm& o) const;
    ScalarForm operator*(const Poly& f) const;

    bool operator==(const ScalarForm& o) const {
        return m_ == o.m_ && degree_ == o.degree_ && comps_ == o.comps_;
    }
    bool operator!=(const ScalarForm& o) const { return !(*this == o); }

private:
    void check_compatible(const ScalarForm& o) const;
    int m_;
    int degree_;
    std::map<Index, Poly> comps_;
};

/// E-valued k-form: components indexed by (increasing multi-index, frame
/// index alpha in 1..r).
class EForm {
public:
    using Key = std::pair<Index, int>;

    EForm(ChartConfig chart, int degree);

    static EForm zero(ChartConfig chart, int degree) { return EForm(chart, degree); }
    /// Degree-0 section p * eps_alpha.
    static EForm section(ChartConfig chart, const Poly& p, int alpha);

    const ChartConfig& chart() const { return chart_; }
    int degree() const { return degree_; }
    bool is_zero() const { return comps_.empty(); }
    const std::map<Key, Poly>& components() const { return comps_; }

    Poly component(const Index& I, int alpha) const;
    void add_component(const Index& I, int alpha, const Poly& p);

    EForm operator-() const;
    EForm operator+(const EForm& o) const;
    EForm operator-(const EForm& o) const;
    EForm operator*(const Poly& f) const;

    bool operator==(const EForm& o) const {
        return chart_ == o.chart_ && degree_ == o.degree_ && comps_ == o.comps_;
    }
    bool operator!=(const EForm& o) const { return !(*this == o); }

private:
    void check_compatible(const EForm& o) const;
    ChartConfig chart_;
    int degree_;
    std::map<Key, Poly> comps_;
};

/// Section of the gauge algebroid in the split frame representation:
/// vector-field part X^i and endomorphism part Phi (Phi[gamma][beta] is
/// the coefficient of eps_gamma in the image of eps_beta, 0-based storage).
class Derivation {
public:
    explicit Derivation(ChartConfig chart);

    static Derivation coordinate(ChartConfig chart, int i);     // partial_i
    static Derivation endo_unit(ChartConfig chart, int beta, int gamma);  // eps^beta_gamma
    static Derivation identity_endo(ChartConfig chart);         // Id_E

    const ChartConfig& chart() const { return chart_; }
    const std::vector<Poly>& X() const { return X_; }
    const std::vector<std::vector<Poly>>& Phi() const { return Phi_; }
    Poly& X(int i) { return X_[static_cast<std::size_t>(i - 1)]; }
    const Poly& X(int i) const { return X_[static_cast<std::size_t>(i - 1)]; }
    Poly& Phi(int gamma, int beta) {
        return Phi_[static_cast<std::size_t>(gamma - 1)][static_cast<std::size_t>(beta - 1)];
    }
    const Poly& Phi(int gamma, int beta) const {
        return Phi_[static_cast<std::size_t>(gamma - 1)][static_cast<std::size_t>(beta - 1)];
    }
    bool is_zero() const;

    /// Directional derivative of a function along the symbol part.
    Poly apply_symbol(const Poly& f) const;

    Derivation operator-() const;
    Derivation operator+(const Derivation& o) const;
    Derivation operator-(const Derivation& o) const;
    Derivation operator*(const Poly& f) const;

    bool operator==(const Derivation& o) const {
        return chart_ == o.chart_ && X_ == o.X_ && Phi_ == o.Phi_;
    }
    bool operator!=(const Derivation& o) const { return !(*this == o); }

private:
    ChartConfig chart_;
    std::vector<Poly> X_;
    std::vector<std::vector<Poly>> Phi_;
};

// --- Cartan calculus on chart forms (flat frame connection) ---

ScalarForm wedge(const ScalarForm& a, const ScalarForm& b);
EForm wedge(const ScalarForm& a, const EForm& b);

ScalarForm d_form(const ScalarForm& a);
EForm d_form(const EForm& a);  // componentwise d (flat connection, R = 0)

ScalarForm iota_vec(const std::vector<Poly>& X, const ScalarForm& a);
EForm iota_vec(const std::vector<Poly>& X, const EForm& a);

/// Classical Lie derivative along a vector field, via [iota_X, d].
ScalarForm lie_vec(const std::vector<Poly>& X, const ScalarForm& a);

/// Commutator of derivations: ([X1,X2], X1(Phi2) - X2(Phi1) + Phi1 Phi2 - Phi2 Phi1).
Derivation commutator(const Derivation& a, const Derivation& b);

/// Action of a derivation on a section (degree-0 EForm).
EForm apply_derivation(const Derivation& d, const EForm& u);

/// Lie derivative of an E-valued form along a derivation: componentwise
/// Lie derivative along the symbol plus Phi applied to the values.
EForm lie_deriv_eform(const Derivation& d, const EForm& nu);

/// Phi (of d) applied to the values of nu, no vector-field part.
EForm apply_endo(const Derivation& d, const EForm& nu);

}  // namespace homni
