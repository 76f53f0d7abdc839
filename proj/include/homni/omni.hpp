#pragma once

#include "homni/jet.hpp"

namespace homni {

/// Section d + mu of the higher omni-Lie algebroid D E (+) J_n E.
class OmniSection {
public:
    OmniSection(Derivation dpart, JForm jpart);
    OmniSection(ChartConfig chart, int n);  // zero section

    const ChartConfig& chart() const { return dpart_.chart(); }
    int n() const { return jpart_.degree(); }
    const Derivation& dpart() const { return dpart_; }
    const JForm& jpart() const { return jpart_; }
    bool is_zero() const { return dpart_.is_zero() && jpart_.is_zero(); }

    OmniSection operator-() const { return {-dpart_, -jpart_}; }
    OmniSection operator+(const OmniSection& o) const;
    OmniSection operator-(const OmniSection& o) const { return *this + (-o); }
    /// Module scaling by a function: f d on the derivation, f ^ mu on the
    /// jet part.
    OmniSection scale(const Poly& f) const;

    bool operator==(const OmniSection& o) const {
        return dpart_ == o.dpart_ && jpart_ == o.jpart_;
    }
    bool operator!=(const OmniSection& o) const { return !(*this == o); }

private:
    Derivation dpart_;
    JForm jpart_;
};

/// Projection onto the gauge-algebroid summand.
inline const Derivation& anchor(const OmniSection& e) { return e.dpart(); }

/// Higher Dorfman bracket {d + mu, r + nu} = [d, r] + L_d nu - iota_r d mu.
OmniSection dorfman(const OmniSection& e1, const OmniSection& e2);

/// Same bracket computed from the first displayed form
/// [d, r] + L_d nu - L_r mu + d<mu, r>; kept as a test oracle.
OmniSection dorfman_first_form(const OmniSection& e1, const OmniSection& e2);

/// Symmetric pairing (e1, e2)_+ = 1/2 (iota_d nu + iota_r mu), degree n-1.
JForm plus_pairing(const OmniSection& e1, const OmniSection& e2);

/// Bracket deformed by a degree-(n+2) jet form:
/// {e1, e2}_omega = {e1, e2} + iota_{rho(e2)} iota_{rho(e1)} omega.
OmniSection twisted_dorfman(const JForm& omega, const OmniSection& e1, const OmniSection& e2);

/// {e1,{e2,e3}} - {{e1,e2},e3} - {e2,{e1,e3}} for the plain bracket.
OmniSection jacobiator(const OmniSection& e1, const OmniSection& e2, const OmniSection& e3);

/// Same for the bracket twisted by omega.
OmniSection jacobiator_twisted(const JForm& omega, const OmniSection& e1,
                               const OmniSection& e2, const OmniSection& e3);

/// Predicate for the tentative axiom ({e,e}, e')_+ = iota_{rho(e')} d (e,e)_+.
/// Exposed for experiments only; nothing asserts it by default.
bool squared_bracket_pairing_axiom(const OmniSection& e, const OmniSection& ep);

// --- Trivial line bundle (r = 1), connection-split representation ---

/// Section of the higher extended generalized tangent bundle: a pair
/// (X, f) plus a pair of ordinary forms (mu0~, mu1~) of degrees n, n-1.
struct LineSection {
    std::vector<Poly> X;
    Poly f;
    ScalarForm mu0t;
    ScalarForm mu1t;
};

/// The two closing display formulas of the trivial-line calculus,
/// evaluated verbatim in the split representation.
LineSection trivial_line_dorfman(const LineSection& e1, const LineSection& e2);
std::pair<ScalarForm, ScalarForm> trivial_line_pairing(const LineSection& e1,
                                                       const LineSection& e2);

/// Conversion to the connection-free engine (rank-1 chart).
OmniSection line_to_omni(const ChartConfig& chart, const LineSection& e);

}  // namespace homni
