#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <random>

namespace igk {

// Seedable generator with portable output. All randomness in the library
// flows through this class: raw bits come from std::mt19937_64 (whose output
// sequence is pinned by the standard), doubles take the top 53 bits, and
// normals use Box-Muller. No std::*_distribution is used anywhere, so
// corruption results are bit-identical across platforms and library versions.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t bits() { return eng_(); }

    // Uniform in [0, 1).
    double uniform01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    // Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // Standard normal via Box-Muller; consumes exactly two uniforms.
    double normal() {
        double u1 = uniform01();
        while (u1 <= 0.0) u1 = uniform01();
        const double u2 = uniform01();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
    }

    // Uniformly distributed unit direction in R^3.
    std::array<double, 3> unit_vector3() {
        while (true) {
            const double x = normal(), y = normal(), z = normal();
            const double n = std::sqrt(x * x + y * y + z * z);
            if (n > 1e-12) return {x / n, y / n, z / n};
        }
    }

    // Uniform integer in [0, n).
    std::uint64_t below(std::uint64_t n) {
        // Rejection to avoid modulo bias.
        const std::uint64_t limit = std::uint64_t(-1) - std::uint64_t(-1) % n;
        std::uint64_t v = eng_();
        while (v >= limit) v = eng_();
        return v % n;
    }

private:
    static constexpr double kPi = 3.14159265358979323846;
    std::mt19937_64 eng_;
};

} // namespace igk
