#pragma once

#include <cstdint>
#include <random>

#include "lvhp/ec_analysis.hpp"
#include "lvhp/lv_model.hpp"
#include "lvhp/types.hpp"

namespace lvhp {

inline constexpr std::uint64_t kDefaultSeed = 42;

/// Seeded source of random states, SL(2,R) elements and energy-Casimir values.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed = kDefaultSeed) : rng_(seed) {}

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

    /// Uniform in [-half_width, half_width]^3.
    State state(double half_width) {
        const double x = uniform(-half_width, half_width);
        const double y = uniform(-half_width, half_width);
        const double z = uniform(-half_width, half_width);
        return {x, y, z};
    }

    /// a, b, c uniform in [-3, 3] with |a| >= 0.1, d = (1 + bc) / a.
    SL2Params sl2() {
        double a = 0.0;
        do {
            a = uniform(-3.0, 3.0);
        } while (std::abs(a) < 0.1);
        const double b = uniform(-3.0, 3.0);
        const double c = uniform(-3.0, 3.0);
        return {a, b, c, (1.0 + b * c) / a};
    }

    ECValue ec_value(double half_width) {
        const double h = uniform(-half_width, half_width);
        const double c = uniform(-half_width, half_width);
        return {h, c};
    }

private:
    std::mt19937_64 rng_;
};

}  // namespace lvhp
