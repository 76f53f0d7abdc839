#pragma once

#include "homni/forms.hpp"

namespace homni {

/// Number of frame derivations of the gauge algebroid: the m coordinate
/// derivations followed by the r^2 frame endomorphisms.
inline int frame_size(const ChartConfig& c) { return c.m + c.r * c.r; }

/// Frame ordering: D_a = partial_a for a <= m, then eps^beta_gamma at
/// a = m + (beta-1)*r + gamma (row-major in (beta, gamma)).
Derivation frame_derivation(const ChartConfig& c, int a);

/// Inverse of the endomorphism part of the ordering; requires a > m.
std::pair<int, int> endo_frame_indices(const ChartConfig& c, int a);

/// Coefficient of D_a in the frame expansion of a derivation.
Poly frame_coefficient(const Derivation& d, int a);

/// Generic E-valued k-form on the gauge algebroid, stored over strictly
/// increasing k-subsets of the frame. The slow, trusted oracle layer.
class GenForm {
public:
    using Key = std::pair<Index, int>;

    GenForm(ChartConfig chart, int degree);

    const ChartConfig& chart() const { return chart_; }
    int degree() const { return degree_; }
    bool is_zero() const { return comps_.empty(); }
    const std::map<Key, Poly>& components() const { return comps_; }

    Poly component(const Index& I, int alpha) const;
    /// Value vector (r entries) at a frame subset.
    std::vector<Poly> value(const Index& I) const;
    void add_component(const Index& I, int alpha, const Poly& p);
    void add_value(const Index& I, const std::vector<Poly>& v);

    GenForm operator-() const;
    GenForm operator+(const GenForm& o) const;
    GenForm operator-(const GenForm& o) const;
    GenForm operator*(const Poly& f) const;

    bool operator==(const GenForm& o) const {
        return chart_ == o.chart_ && degree_ == o.degree_ && comps_ == o.comps_;
    }
    bool operator!=(const GenForm& o) const { return !(*this == o); }

private:
    ChartConfig chart_;
    int degree_;
    std::map<Key, Poly> comps_;
};

/// Chevalley-Eilenberg differential of the gauge complex, evaluated on
/// frame tuples with the frame structure constants.
GenForm ce_differential(const GenForm& g);

/// Contraction with a derivation via its frame expansion.
GenForm gen_iota(const Derivation& d, const GenForm& g);

/// Lie derivative as the graded commutator [gen_iota_d, ce_differential].
GenForm gen_lie(const Derivation& d, const GenForm& g);

/// Contracting homotopy identity [d, iota_Id] = id, checked exactly.
bool homotopy_check(const GenForm& g);

}  // namespace homni
