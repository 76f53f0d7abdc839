#pragma once

#include "homni/forms.hpp"
#include "homni/gauge.hpp"
#include "homni/jet.hpp"
#include "homni/omni.hpp"

#include <cstdint>
#include <random>

namespace homni {

/// Seeded generator for the verification sweeps. The PRNG is the standard
/// 64-bit Mersenne Twister (std::mt19937_64); identical seeds reproduce
/// identical objects.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    int uniform(int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(engine_);
    }
    std::mt19937_64& engine() { return engine_; }

private:
    std::mt19937_64 engine_;
};

/// Random polynomial with integer coefficients in [-3, 3] and total
/// degree <= max_deg.
Poly random_poly(int vars, int max_deg, Rng& rng);

ScalarForm random_scalar_form(int m, int degree, int max_deg, Rng& rng);
EForm random_eform(ChartConfig chart, int degree, int max_deg, Rng& rng);
Derivation random_derivation(ChartConfig chart, int max_deg, Rng& rng);
JForm random_jform(ChartConfig chart, int n, int max_deg, Rng& rng);
GenForm random_genform(ChartConfig chart, int degree, int max_deg, Rng& rng);
OmniSection random_omni(ChartConfig chart, int n, int max_deg, Rng& rng);

std::vector<Rational> random_point(int m, Rng& rng);

}  // namespace homni
