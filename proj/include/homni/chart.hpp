#pragma once

#include "homni/errors.hpp"

namespace homni {

/// Chart dimension m and bundle rank r, fixed for one computation.
struct ChartConfig {
    int m;
    int r;

    ChartConfig(int m_, int r_) : m(m_), r(r_) {
        if (m < 1) throw DimensionError("chart dimension must be >= 1");
        if (r < 1) throw RankError("bundle rank must be >= 1");
    }

    bool operator==(const ChartConfig& o) const { return m == o.m && r == o.r; }
    bool operator!=(const ChartConfig& o) const { return !(*this == o); }
};

inline void require_same_chart(const ChartConfig& a, const ChartConfig& b) {
    if (a != b) throw DimensionError("operands built over different charts");
}

}  // namespace homni
