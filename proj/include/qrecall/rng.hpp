#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <utility>

namespace qrecall {

// Master seed for an experiment. Per-sample seeds are derived from it so that
// serial and parallel execution see the identical sample set.
struct Seed {
    std::uint64_t value = 0;

    bool operator==(const Seed&) const = default;
};

// SplitMix64 finalizer.
inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Seed for sample `index`: output index of the SplitMix64 stream whose state
// starts at the master seed. Fixed contract; golden tests pin the stream.
inline std::uint64_t derive_seed(Seed master, std::uint64_t index) {
    return mix64(master.value + (index + 1) * 0x9e3779b97f4a7c15ULL);
}

// mt19937_64 with bit-stable double output. The standard pins the raw integer
// stream; the conversions below avoid std::*_distribution, whose output varies
// between standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t bits() { return engine_(); }

    // Uniform on [0, 1), 53-bit resolution.
    double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    // Uniform on (0, 1]; safe under log().
    double unit_open() { return 1.0 - unit(); }

    // Standard normal via Box-Muller, cosine branch. Consumes exactly two
    // engine draws per value.
    double gaussian() {
        const double u1 = unit_open();
        const double u2 = unit();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }

private:
    std::mt19937_64 engine_;
};

} // namespace qrecall
