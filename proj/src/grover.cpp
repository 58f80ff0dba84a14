#include "qrecall/grover.hpp"

#include "qrecall/compensated.hpp"
#include "qrecall/errors.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <utility>

namespace qrecall {

IterationSchedule IterationSchedule::fixed(int k) {
    if (k < 0) {
        throw ConfigError("fixed iteration count must be >= 0, got " + std::to_string(k));
    }
    return {ScheduleKind::Fixed, k};
}

int iteration_count(std::size_t n, const IterationSchedule& schedule) {
    if (n < 2) {
        throw DimensionTooSmall("iteration_count needs dimension >= 2, got " +
                                std::to_string(n));
    }
    const double root = std::sqrt(static_cast<double>(n));
    switch (schedule.kind) {
    case ScheduleKind::SqrtRounded:
        // round-half-up, so sqrt(8) = 2.82 -> 3 on every platform
        return static_cast<int>(std::floor(root + 0.5));
    case ScheduleKind::FloorPiOver4:
        return std::max(1, static_cast<int>(std::floor(std::numbers::pi / 4.0 * root)));
    case ScheduleKind::Fixed:
        return schedule.fixed_iterations;
    }
    throw ConfigError("unknown schedule kind");
}

SquareMatrix build_diffusion_matrix(std::size_t n) {
    if (n < 2) {
        throw DimensionTooSmall("diffusion matrix needs dimension >= 2, got " +
                                std::to_string(n));
    }
    const double off_diagonal = 2.0 / static_cast<double>(n);
    const double diagonal = -1.0 + off_diagonal;
    SquareMatrix m{n, std::vector<double>(n * n, off_diagonal)};
    for (std::size_t i = 0; i < n; ++i) {
        m.data[i * n + i] = diagonal;
    }
    return m;
}

std::vector<double> apply_matrix(const SquareMatrix& m, std::span<const double> v) {
    if (v.size() != m.n) {
        throw ConfigError("matrix/vector dimension mismatch: " + std::to_string(m.n) +
                          " vs " + std::to_string(v.size()));
    }
    std::vector<double> out(m.n, 0.0);
    for (std::size_t i = 0; i < m.n; ++i) {
        double acc = 0.0;
        const double* row = m.data.data() + i * m.n;
        for (std::size_t j = 0; j < m.n; ++j) {
            acc += row[j] * v[j];
        }
        out[i] = acc;
    }
    return out;
}

StateVector apply_oracle(const StateVector& sv, std::size_t marked) {
    if (marked >= sv.dim()) {
        throw IndexOutOfRange("marked index " + std::to_string(marked) +
                              " out of range for dimension " + std::to_string(sv.dim()));
    }
    std::vector<double> out(sv.amps().begin(), sv.amps().end());
    out[marked] = -out[marked];
    return StateVector(std::move(out));
}

StateVector apply_diffusion(const StateVector& sv) {
    const auto amps = sv.amps();
    const double mean = compensated_total(amps) / static_cast<double>(sv.dim());
    const double twice_mean = 2.0 * mean;
    std::vector<double> out(sv.dim());
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = twice_mean - amps[i];
    }
    return StateVector(std::move(out));
}

StateVector grover_iterate(const StateVector& sv, std::size_t marked) {
    return apply_diffusion(apply_oracle(sv, marked));
}

RunResult run_grover(const GroverConfig& config, const StateVector& initial) {
    if (config.n < 2) {
        throw DimensionTooSmall("run_grover needs dimension >= 2, got " +
                                std::to_string(config.n));
    }
    if (initial.dim() != config.n) {
        throw ConfigError("initial state has dimension " + std::to_string(initial.dim()) +
                          ", config says " + std::to_string(config.n));
    }
    if (config.marked >= config.n) {
        throw IndexOutOfRange("marked index " + std::to_string(config.marked) +
                              " out of range for dimension " + std::to_string(config.n));
    }
    const int iterations = iteration_count(config.n, config.schedule);

    StateVector state = initial;
    std::vector<double> trace;
    trace.reserve(static_cast<std::size_t>(iterations) + 1);
    trace.push_back(state[config.marked]);
    for (int i = 0; i < iterations; ++i) {
        state = grover_iterate(state, config.marked);
        trace.push_back(state[config.marked]);
    }

    const double drift = std::abs(state.norm() - 1.0);
    if (drift > kNormTolerance) {
        throw NumericalDrift("norm drifted by " + std::to_string(drift) + " after " +
                             std::to_string(iterations) + " iterations");
    }
    const double amplitude = std::abs(state[config.marked]);
    return {std::move(state), std::move(trace), amplitude, amplitude * amplitude, iterations};
}

SuccessEstimate closed_form_success(std::size_t n, int k) {
    if (n < 2) {
        throw DimensionTooSmall("closed_form_success needs dimension >= 2, got " +
                                std::to_string(n));
    }
    if (k < 0) {
        throw ConfigError("iteration count must be >= 0, got " + std::to_string(k));
    }
    const double theta = std::asin(1.0 / std::sqrt(static_cast<double>(n)));
    const double amplitude = std::abs(std::sin((2.0 * k + 1.0) * theta));
    return {amplitude, amplitude * amplitude};
}

} // namespace qrecall
