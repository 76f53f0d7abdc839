#pragma once

#include "homni/gauge.hpp"

#include <string>
#include <vector>

namespace homni {

/// Degree-n jet-valued form in the connection-free pair representation
/// (mu0, mu1): an E-valued n-form and an E-valued (n-1)-form. For n = 0
/// the mu1 slot is identically absent and the form is a section of E.
class JForm {
public:
    JForm(ChartConfig chart, int n);
    JForm(EForm mu0, EForm mu1);
    explicit JForm(EForm section);  // degree 0

    const ChartConfig& chart() const { return chart_; }
    int degree() const { return n_; }
    const EForm& mu0() const { return mu0_; }
    const EForm& mu1() const { return mu1_; }
    bool is_zero() const { return mu0_.is_zero() && mu1_.is_zero(); }

    JForm operator-() const;
    JForm operator+(const JForm& o) const;
    JForm operator-(const JForm& o) const;

    bool operator==(const JForm& o) const {
        return n_ == o.n_ && mu0_ == o.mu0_ && mu1_ == o.mu1_;
    }
    bool operator!=(const JForm& o) const { return !(*this == o); }

private:
    ChartConfig chart_;
    int n_;
    EForm mu0_;
    EForm mu1_;
};

/// Module product omega ^ mu = (omega ^ mu0 - (-1)^|omega| d omega ^ mu1,
/// (-1)^|omega| omega ^ mu1).
JForm jwedge(const ScalarForm& w, const JForm& mu);

/// Differential: (mu0, mu1) -> (0, mu0).
JForm jd(const JForm& mu);

/// Contraction: (iota_X mu0 + L_d mu1, -iota_X mu1). Degree error at n = 0.
JForm jiota(const Derivation& d, const JForm& mu);

/// Lie derivative, componentwise on the pair.
JForm jlie(const Derivation& d, const JForm& mu);

/// Connection-split view (mu0 + d mu1, mu1) and its exact inverse.
std::pair<EForm, EForm> to_split(const JForm& mu);
JForm from_split(const EForm& t0, const EForm& t1);

/// Pullback of an E-valued form on M to a generic form on the gauge
/// algebroid (components on pure-coordinate frame subsets only).
GenForm pullback_to_generic(const EForm& nu);

/// mu = j*mu0 + d j*mu1 as a generic form.
GenForm embed_generic(const JForm& mu);

struct MembershipResult {
    bool ok = false;
    std::vector<std::string> witness;  // failing component equations
    // Candidate lambda read off the pure-coordinate part of iota_Id g;
    // meaningful only when ok.
    EForm lambda;
};

/// Decides whether a generic form lies in the jet-form subbundle, with the
/// candidate lambda and the first violated component equations as witness.
MembershipResult membership_check(const GenForm& g);

/// Inverse of embed_generic on its image; throws NotAJetFormError otherwise.
JForm project_from_generic(const GenForm& g);

}  // namespace homni
