#pragma once

#include "qrecall/rng.hpp"
#include "qrecall/state_vector.hpp"

#include <array>
#include <cstddef>
#include <optional>

namespace qrecall {

// Families of random initial vectors.
//
//   UniformPositive    entries uniform on [0, 1), then normalized. Positive
//                      entries force a large component sum, so the variance
//                      ratio stays low.
//   UniformSigned      entries uniform on [-1, 1), then normalized. The sum
//                      concentrates near zero, so the ratio sits near 1 - 1/n.
//   PerturbedUniform   the ideal uniform state plus i.i.d. Gaussian noise of
//                      standard deviation `epsilon` per entry, then normalized.
//   ControlledVariance exact target variance ratio by construction:
//                      v = sqrt(1-r)*u + sqrt(r)*w with u the uniform state and
//                      w a random zero-sum unit vector. With `ratio` set, every
//                      sample hits that r; with it empty, each sample draws r
//                      from the grid {0, 1/(levels-1), ..., 1}, which spreads
//                      samples evenly over the whole variance axis.
enum class EnsembleKind {
    UniformPositive,
    UniformSigned,
    PerturbedUniform,
    ControlledVariance,
};

struct EnsembleSpec {
    EnsembleKind kind = EnsembleKind::UniformPositive;
    std::size_t n = 0;
    double epsilon = 0.0;               // PerturbedUniform noise level
    std::optional<double> ratio;        // ControlledVariance fixed target
    int ratio_levels = 20;              // ControlledVariance grid size when ratio is empty

    static EnsembleSpec uniform_positive(std::size_t n);
    static EnsembleSpec uniform_signed(std::size_t n);
    static EnsembleSpec perturbed_uniform(std::size_t n, double epsilon);
    static EnsembleSpec controlled_variance(std::size_t n, double ratio);
    static EnsembleSpec controlled_variance_grid(std::size_t n, int levels = 20);

    bool operator==(const EnsembleSpec&) const = default;
};

// Throws ConfigError / DimensionTooSmall on out-of-range fields.
void validate(const EnsembleSpec& spec);

// Draws one normalized vector. Pure function of (spec, seed): the same pair
// always yields the bit-identical vector. Throws DegenerateDraw if 100
// consecutive raw draws have norm below 1e-12.
StateVector sample(const EnsembleSpec& spec, Seed seed);

// Distribution of the variance ratio over m samples seeded from `seed`.
struct VarianceProfile {
    std::size_t samples = 0;
    double min = 0.0;
    double max = 0.0;
    double mean = 0.0;
    std::array<double, 9> deciles{}; // 10th .. 90th percentile, nearest rank
};

VarianceProfile variance_profile(const EnsembleSpec& spec, Seed seed, std::size_t m);

} // namespace qrecall
