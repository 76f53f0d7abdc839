#pragma once

#include "homni/linalg.hpp"
#include "homni/omni.hpp"

#include <string>
#include <vector>

namespace homni {

struct CheckResult {
    bool ok = false;
    std::string witness;  // first failing equation, empty when ok
};

/// Linear map D E -> J_n E given by its values on the m + r^2 frame
/// derivations and extended to arbitrary derivations by module linearity
/// (function coefficients act through the jet-form module product).
class BMapD {
public:
    BMapD(ChartConfig chart, int n);  // zero map

    const ChartConfig& chart() const { return chart_; }
    int n() const { return n_; }
    const JForm& value(int a) const;
    void set_value(int a, JForm v);

    JForm apply(const Derivation& d) const;

    bool operator==(const BMapD& o) const {
        return chart_ == o.chart_ && n_ == o.n_ && values_ == o.values_;
    }
    bool operator!=(const BMapD& o) const { return !(*this == o); }

private:
    ChartConfig chart_;
    int n_;
    std::vector<JForm> values_;
};

/// The flat map of a jet form: d |-> iota_d mu.
BMapD bmap_from_form(const JForm& mu);  // mu of degree n + 1

/// Graph isotropy: iota_{d1} B(d2) + iota_{d2} B(d1) = 0 on frame pairs
/// (sufficient by bilinearity over functions).
CheckResult isotropy_check_D(const BMapD& b);

/// The unique jet form with iota_{D_a} mu = B(D_a); valid for isotropic B.
JForm reconstruct_form(const BMapD& b);

/// Involutivity of the graph of an isotropic B: closedness of the
/// reconstructed form. Throws DegeneracyError on non-isotropic input.
CheckResult involutivity_check_D(const BMapD& b);

/// Direct route for cross-checks: Dorfman brackets of frame graph
/// sections land back in the graph.
CheckResult involutivity_direct_D(const BMapD& b);

/// Higher Dirac-Jacobi structure attached to an ordinary E-valued form.
BMapD dirac_from_eform(const EForm& nu);

/// Spanning jet forms of degree n over functions: vol_I (x) eps_alpha with
/// |I| = m - n and vol_J ^ d eps_alpha with |J| = m - n + 1.
struct GeneratorSet {
    std::vector<JForm> forms;
    std::vector<std::string> labels;
};

GeneratorSet generator_set(ChartConfig chart, int n);

/// Operational maximality probe: no nonzero generator is orthogonal to the
/// whole graph of B under the symmetric pairing.
CheckResult maximality_against_generators(const BMapD& b);

/// Dimension of the space of linear maps J_n E -> D E with polynomial
/// coefficients of total degree <= coeff_deg whose graph is isotropic.
/// Requires 1 < n <= m. The dimension is 0 for n < m and for n = m with
/// rank >= 2. For rank-1 bundles at n = m there is a genuine family
/// B = f * (Id, d_1, ..., d_m) on the generators (vol (x) eps,
/// vol_j ^ d eps): the contraction with Id picks up a sign moving past the
/// one-form vol_j that exactly cancels the coordinate contraction, so the
/// solver returns the number of coefficient monomials.
int rigidity_solve(ChartConfig chart, int n, int coeff_deg);

/// Top-polyvector with values in antisymmetric brackets: Z = top *
/// (d_1 ^ ... ^ d_m) (x) c, with structure functions c^gamma_{alpha beta}
/// stored for alpha < beta.
class ZStructure {
public:
    explicit ZStructure(ChartConfig chart);

    const ChartConfig& chart() const { return chart_; }
    const Poly& top() const { return top_; }
    void set_top(const Poly& p);

    Poly c(int gamma, int alpha, int beta) const;  // antisymmetric in (alpha, beta)
    void set_c(int gamma, int alpha, int beta, const Poly& p);

    /// Component of b = <vol, Z>: coefficient of eps_gamma in b(eps_alpha, eps_beta).
    Poly b(int gamma, int alpha, int beta) const;

private:
    ChartConfig chart_;
    Poly top_;
    // canonical storage [gamma-1][pair index for alpha < beta]
    std::vector<std::vector<Poly>> c_;
};

/// Fiberwise Jacobi identity of b on all frame triples.
CheckResult jacobi_check(const ZStructure& z);

/// Bracket-closure of the graph of B_Z over J_{m+1} E, checked on the
/// frame generators vol ^ d eps_alpha. Requires n = m + 1.
CheckResult involutivity_check_J(const ZStructure& z, int n);

}  // namespace homni
