#pragma once

#include "qrecall/state_vector.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace qrecall {

// Rule mapping the database size to the number of iterations before readout.
enum class ScheduleKind {
    SqrtRounded,  // round-half-up(sqrt(n))
    FloorPiOver4, // max(1, floor(pi/4 * sqrt(n))); the optimal count
    Fixed,        // exactly fixed_iterations, 0 allowed (identity run)
};

struct IterationSchedule {
    ScheduleKind kind = ScheduleKind::FloorPiOver4;
    int fixed_iterations = 0;

    static IterationSchedule sqrt_rounded() { return {ScheduleKind::SqrtRounded, 0}; }
    static IterationSchedule floor_pi_over_4() { return {ScheduleKind::FloorPiOver4, 0}; }
    static IterationSchedule fixed(int k); // ConfigError if k < 0

    bool operator==(const IterationSchedule&) const = default;
};

int iteration_count(std::size_t n, const IterationSchedule& schedule);

struct GroverConfig {
    std::size_t n = 0;
    std::size_t marked = 1; // index of the item the oracle recognizes
    IterationSchedule schedule;
};

struct SquareMatrix {
    std::size_t n = 0;
    std::vector<double> data; // row-major, n*n entries

    double at(std::size_t row, std::size_t col) const { return data[row * n + col]; }
};

// Mean-reflection operator as an explicit matrix: 2/n off the diagonal,
// -1 + 2/n on it. Quadratic memory; meant for dumps and verification.
SquareMatrix build_diffusion_matrix(std::size_t n);

std::vector<double> apply_matrix(const SquareMatrix& m, std::span<const double> v);

// Flips the sign of the marked amplitude. Involution, norm preserved exactly.
StateVector apply_oracle(const StateVector& sv, std::size_t marked);

// Reflects every amplitude about the mean: a_i -> 2*mean - a_i. O(n), equal to
// the explicit matrix product within kCrossCheckTolerance. Involution.
StateVector apply_diffusion(const StateVector& sv);

// One search iteration: oracle, then diffusion.
StateVector grover_iterate(const StateVector& sv, std::size_t marked);

struct RunResult {
    StateVector final_state;
    std::vector<double> marked_trace; // marked amplitude before the first and after every iteration
    double success_amplitude = 0.0;   // |final marked amplitude|
    double success_probability = 0.0; // its square
    int iterations = 0;
};

// Runs the schedule's number of iterations and reads off the success metrics.
// Throws NumericalDrift if the final norm is off by more than kNormTolerance,
// ConfigError on a dimension mismatch.
RunResult run_grover(const GroverConfig& config, const StateVector& initial);

struct SuccessEstimate {
    double amplitude = 0.0;
    double probability = 0.0;
};

// Rotation-angle prediction for a uniform start: |sin((2k+1) * asin(1/sqrt(n)))|.
// Independent oracle for run_grover on uniform inputs.
SuccessEstimate closed_form_success(std::size_t n, int k);

} // namespace qrecall
