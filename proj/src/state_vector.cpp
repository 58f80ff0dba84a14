#include "qrecall/state_vector.hpp"

#include "qrecall/compensated.hpp"
#include "qrecall/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace qrecall {

StateVector::StateVector(std::vector<double> amps) : amps_(std::move(amps)) {
    if (amps_.size() < 2) {
        throw DimensionTooSmall("state vector needs at least 2 amplitudes, got " +
                                std::to_string(amps_.size()));
    }
    for (double a : amps_) {
        if (!std::isfinite(a)) {
            throw NotNormalized("state vector has a non-finite amplitude");
        }
    }
    const double n = norm();
    if (std::abs(n - 1.0) > kNormTolerance) {
        throw NotNormalized("state vector norm is " + std::to_string(n) +
                            ", expected 1 within " + std::to_string(kNormTolerance));
    }
}

double StateVector::norm() const {
    return std::sqrt(compensated_sum_squares(amps_));
}

StateVector normalize(std::vector<double> raw) {
    if (raw.size() < 2) {
        throw DimensionTooSmall("need at least 2 entries to normalize, got " +
                                std::to_string(raw.size()));
    }
    for (double x : raw) {
        if (!std::isfinite(x)) {
            throw NotNormalized("cannot normalize a non-finite entry");
        }
    }
    const double norm_sq = compensated_sum_squares(raw);
    if (norm_sq == 0.0) {
        throw ZeroVector("cannot normalize the zero vector");
    }
    const double scale = 1.0 / std::sqrt(norm_sq);
    if (!std::isfinite(scale)) {
        throw ZeroVector("norm underflowed while normalizing");
    }
    for (double& x : raw) x *= scale;
    return StateVector(std::move(raw));
}

StateVector uniform_state(std::size_t n) {
    if (n < 2) {
        throw DimensionTooSmall("uniform state needs dimension >= 2, got " +
                                std::to_string(n));
    }
    return StateVector(std::vector<double>(n, 1.0 / std::sqrt(static_cast<double>(n))));
}

VarianceReport amplitude_variance(const StateVector& sv) {
    const auto amps = sv.amps();
    const double n = static_cast<double>(sv.dim());

    const double total = compensated_total(amps);
    const double mean = total / n;

    CompensatedSum dev_sq;
    for (double a : amps) {
        const double d = a - mean;
        dev_sq.add(d * d);
    }
    const double by_definition = dev_sq.value() / n;
    const double by_closed_form = 1.0 / n - (total * total) / (n * n);

    if (std::abs(by_definition - by_closed_form) > kCrossCheckTolerance) {
        throw NumericalFailure("variance routes disagree: definition " +
                               std::to_string(by_definition) + " vs closed form " +
                               std::to_string(by_closed_form));
    }
    const double limit = 1.0 / n;
    if (by_definition > limit + kCrossCheckTolerance) {
        throw NumericalFailure("variance " + std::to_string(by_definition) +
                               " exceeds the 1/n bound " + std::to_string(limit));
    }
    const double ratio = std::clamp(by_definition / limit, 0.0, 1.0);
    return {by_definition, limit, ratio};
}

double max_variance(std::size_t n) {
    if (n < 2) {
        throw DimensionTooSmall("max_variance needs dimension >= 2, got " +
                                std::to_string(n));
    }
    return 1.0 / static_cast<double>(n);
}

double markov_bound(std::size_t n, double eps) {
    if (n < 2) {
        throw DimensionTooSmall("markov_bound needs dimension >= 2, got " +
                                std::to_string(n));
    }
    if (!(eps > 0.0)) {
        throw InvalidEpsilon("markov_bound requires eps > 0");
    }
    const double mean_sq = 1.0 / static_cast<double>(n);
    return mean_sq / (mean_sq + eps);
}

double empirical_exceedance(const StateVector& sv, double eps) {
    if (!(eps > 0.0)) {
        throw InvalidEpsilon("empirical_exceedance requires eps > 0");
    }
    const double threshold = 1.0 / static_cast<double>(sv.dim()) + eps;
    std::size_t count = 0;
    for (double a : sv.amps()) {
        if (a * a >= threshold) ++count;
    }
    return static_cast<double>(count) / static_cast<double>(sv.dim());
}

} // namespace qrecall
