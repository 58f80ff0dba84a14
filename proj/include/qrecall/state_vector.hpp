#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace qrecall {

// Norm budget accepted by constructors and preconditions. Separates malformed
// input from accumulated floating-point drift, which stays orders of
// magnitude below this.
inline constexpr double kNormTolerance = 1e-9;

// Budget for dual-route agreement checks (variance definition vs closed form,
// fast diffusion vs explicit matrix).
inline constexpr double kCrossCheckTolerance = 1e-12;

// Real amplitude vector of a search register. Immutable value type.
//
// Invariants: dimension >= 2, all entries finite, sum of squared amplitudes
// within kNormTolerance of 1.
class StateVector {
public:
    // Validates the invariants; throws DimensionTooSmall / NotNormalized.
    explicit StateVector(std::vector<double> amps);

    std::size_t dim() const { return amps_.size(); }
    double operator[](std::size_t i) const { return amps_[i]; }
    std::span<const double> amps() const { return amps_; }

    // Recomputed Euclidean norm (compensated summation).
    double norm() const;

    bool operator==(const StateVector&) const = default;

private:
    std::vector<double> amps_;
};

// Scales `raw` by 1/sqrt(sum of squares). Throws ZeroVector if every entry is
// zero (or the squared norm underflows to zero), DimensionTooSmall for fewer
// than two entries.
StateVector normalize(std::vector<double> raw);

// The ideal start state: every amplitude 1/sqrt(n).
StateVector uniform_state(std::size_t n);

// Spread statistics of the amplitudes.
//   variance      sample variance of the amplitudes, (1/n) * sum (a_i - mean)^2
//   max_variance  1/n, the supremum over normalized real vectors
//   ratio         variance / max_variance, clamped to [0, 1]
struct VarianceReport {
    double variance = 0.0;
    double max_variance = 0.0;
    double ratio = 0.0;
};

// Computes the variance twice: from the definition and from the closed form
// 1/n - (sum a_i)^2 / n^2, which is equivalent for unit-norm vectors. The two
// routes must agree within kCrossCheckTolerance and the result must not
// exceed 1/n + kCrossCheckTolerance, else NumericalFailure.
VarianceReport amplitude_variance(const StateVector& sv);

// 1/n. Throws DimensionTooSmall for n < 2.
double max_variance(std::size_t n);

// Markov bound on the fraction of components with squared amplitude at least
// 1/n + eps, namely (1/n) / (1/n + eps). Throws InvalidEpsilon unless eps > 0.
double markov_bound(std::size_t n, double eps);

// Fraction of components with squared amplitude >= 1/n + eps. For any
// normalized vector this never exceeds markov_bound(n, eps).
double empirical_exceedance(const StateVector& sv, double eps);

} // namespace qrecall
