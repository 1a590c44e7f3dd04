#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "paac/errors.hpp"

namespace paac {

// Seeded random source with hand-rolled transforms. std::mt19937_64 output
// is pinned by the standard; the std:: distributions are not, so we build
// our own on top to keep every sampled value reproducible across platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform on [0, 1), 53-bit resolution.
    double uniform01() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    // Uniform on (0, 1), safe for log().
    double uniform_open() {
        double u;
        do {
            u = uniform01();
        } while (u <= 0.0);
        return u;
    }

    // Standard normal via the polar method.
    double normal() {
        for (;;) {
            const double u = 2.0 * uniform01() - 1.0;
            const double v = 2.0 * uniform01() - 1.0;
            const double s = u * u + v * v;
            if (s > 0.0 && s < 1.0)
                return u * std::sqrt(-2.0 * std::log(s) / s);
        }
    }

    // Gamma(shape, 1) by Marsaglia-Tsang, boosted for shape < 1.
    double gamma(double shape) {
        if (shape <= 0.0) throw InvalidArgument("gamma shape must be > 0");
        if (shape < 1.0) {
            const double g = gamma(shape + 1.0);
            return g * std::pow(uniform_open(), 1.0 / shape);
        }
        const double d = shape - 1.0 / 3.0;
        const double c = 1.0 / std::sqrt(9.0 * d);
        for (;;) {
            double x, v;
            do {
                x = normal();
                v = 1.0 + c * x;
            } while (v <= 0.0);
            v = v * v * v;
            const double u = uniform_open();
            if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
            if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v)))
                return d * v;
        }
    }

    // Laplace(0, scale) by inverse CDF.
    double laplace(double scale) {
        const double u = uniform_open();
        return (u < 0.5) ? scale * std::log(2.0 * u)
                         : -scale * std::log(2.0 * (1.0 - u));
    }

private:
    std::mt19937_64 engine_;
};

} // namespace paac
