#pragma once

#include "homni/forms.hpp"
#include "homni/linalg.hpp"

#include <vector>

namespace homni {

/// Distribution on the chart spanned by polynomial vector fields.
struct DistributionFrame {
    int m = 0;
    std::vector<std::vector<Poly>> generators;  // each of length m
};

/// Exact basis of {v in T_pM : iota_v nu|_p = 0}.
std::vector<std::vector<Rational>> kernel_at_point(const ScalarForm& nu,
                                                   const std::vector<Rational>& p);
/// Same for a rank-1 bundle-valued form; throws RankError otherwise.
std::vector<std::vector<Rational>> kernel_at_point(const EForm& nu,
                                                   const std::vector<Rational>& p);

/// Multicontact condition at a point: the kernel has corank exactly the
/// form degree.
bool is_multicontact_at(const EForm& nu, const std::vector<Rational>& p);
std::vector<bool> is_multicontact_at(const EForm& nu,
                                     const std::vector<std::vector<Rational>>& points);

/// The quotient-valued form v_1 ^ ... ^ v_n |-> (v_1 + D) ^ ... ^ (v_n + D)
/// at a point, written in the induced basis of a deterministic completion
/// of the distribution frame (coordinate vectors in index order, skipping
/// dependents). Coefficients are constants on the chart.
ScalarForm nu_from_distribution(const DistributionFrame& d, const std::vector<Rational>& p);

}  // namespace homni
