#pragma once

#include "homni/dirac.hpp"
#include "homni/multicontact.hpp"
#include "homni/omni.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace homni {

/// One exactly-checked property, aggregated over its random trials.
struct CheckLine {
    std::string name;
    bool pass = false;
    std::string detail;  // trial counts, dimensions, witnesses
};

struct SuiteResult {
    std::string name;
    std::vector<CheckLine> checks;
    bool passed() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

/// Shared options of the verification sweeps. The default sweep covers
/// every chart with m, r in {1, 2} and every degree n in 1..m+1.
struct VerifyOptions {
    std::uint64_t seed = 42;
    int trials = 50;
    int max_deg = 2;
    std::vector<ChartConfig> charts{{1, 1}, {1, 2}, {2, 1}, {2, 2}};
    std::vector<int> ns;  // empty: 1..m+1 per chart

    std::vector<int> degrees_for(const ChartConfig& c) const;
};

SuiteResult suite_cartan(const VerifyOptions& opt);
SuiteResult suite_leibniz(const VerifyOptions& opt);
SuiteResult suite_homotopy(const VerifyOptions& opt);
SuiteResult suite_oracles(const VerifyOptions& opt);
SuiteResult suite_graph(const VerifyOptions& opt);
SuiteResult suite_twist(const VerifyOptions& opt);
SuiteResult suite_rigidity(const VerifyOptions& opt);
SuiteResult suite_volume_lie(const VerifyOptions& opt);
SuiteResult suite_membership(const VerifyOptions& opt);
SuiteResult suite_multicontact(const VerifyOptions& opt);
SuiteResult suite_trivial_line(const VerifyOptions& opt);

/// All suites in a fixed order; deterministic for a fixed seed.
std::vector<SuiteResult> run_verify(const VerifyOptions& opt);

}  // namespace homni
