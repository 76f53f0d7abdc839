#pragma once

#include <algorithm>
#include <optional>
#include <vector>

namespace homni {

// Strictly increasing multi-index of 1-based positions.
using Index = std::vector<int>;

/// Inserts j into the sorted index I. Returns the sign (-1)^pos of moving
/// j to the front past the smaller entries, or nullopt when j already
/// occurs (the wedge collapses).
inline std::optional<std::pair<Index, int>> index_insert(const Index& I, int j) {
    Index out;
    out.reserve(I.size() + 1);
    int pos = 0;
    bool placed = false;
    for (int i : I) {
        if (i == j) return std::nullopt;
        if (!placed && i > j) {
            out.push_back(j);
            placed = true;
        }
        if (!placed) ++pos;
        out.push_back(i);
    }
    if (!placed) out.push_back(j);
    return std::make_pair(out, pos % 2 == 0 ? 1 : -1);
}

/// Removes the entry at position t (0-based); sign is (-1)^t.
inline std::pair<Index, int> index_remove_at(const Index& I, std::size_t t) {
    Index out;
    out.reserve(I.size() - 1);
    for (std::size_t k = 0; k < I.size(); ++k)
        if (k != t) out.push_back(I[k]);
    return {out, t % 2 == 0 ? 1 : -1};
}

/// Merge sign of the shuffle (J, K) -> sorted, or nullopt if they overlap.
inline std::optional<int> merge_sign(const Index& J, const Index& K) {
    // Count inversions between the concatenation J|K and the sorted merge.
    int inv = 0;
    for (std::size_t a = 0; a < J.size(); ++a) {
        for (std::size_t b = 0; b < K.size(); ++b) {
            if (J[a] == K[b]) return std::nullopt;
            if (J[a] > K[b]) ++inv;
        }
    }
    return inv % 2 == 0 ? 1 : -1;
}

inline Index index_merge(const Index& J, const Index& K) {
    Index out;
    out.reserve(J.size() + K.size());
    std::merge(J.begin(), J.end(), K.begin(), K.end(), std::back_inserter(out));
    return out;
}

/// All strictly increasing k-subsets of {1..n}.
inline std::vector<Index> all_indices(int n, int k) {
    std::vector<Index> out;
    if (k < 0 || k > n) return out;
    Index cur(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) cur[static_cast<std::size_t>(i)] = i + 1;
    while (true) {
        out.push_back(cur);
        int t = k - 1;
        while (t >= 0 && cur[static_cast<std::size_t>(t)] == n - (k - 1 - t)) --t;
        if (t < 0) break;
        ++cur[static_cast<std::size_t>(t)];
        for (int s = t + 1; s < k; ++s)
            cur[static_cast<std::size_t>(s)] = cur[static_cast<std::size_t>(s - 1)] + 1;
    }
    return out;
}

}  // namespace homni
