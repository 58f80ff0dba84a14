#pragma once

#include "qrecall/ensembles.hpp"
#include "qrecall/grover.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace qrecall {

enum class SuccessMetric { Probability, Amplitude };

struct SweepConfig {
    GroverConfig grover;
    EnsembleSpec ensemble; // ensemble.n must equal grover.n
    std::size_t num_samples = 1;
    Seed seed{};
    std::size_t num_bins = 20; // over variance ratio, partitioning [0, 1]
    SuccessMetric metric = SuccessMetric::Probability;
    unsigned threads = 1; // implementation detail; results are thread-count independent
};

// One (initial vector, search run) trial.
struct SampleRecord {
    std::size_t sample_index = 0;
    double variance = 0.0;
    double variance_ratio = 0.0;
    double success_probability = 0.0;
    double success_amplitude = 0.0;

    double success(SuccessMetric m) const {
        return m == SuccessMetric::Probability ? success_probability : success_amplitude;
    }
};

struct RegressionFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
};

// Ordinary least squares. Throws DegenerateFit if there are fewer than two
// points or all x coincide. r_squared is 1 when the points are collinear,
// including the all-y-equal case.
RegressionFit linear_fit(std::span<const std::pair<double, double>> points);

struct SweepSummary {
    std::vector<SampleRecord> records;
    std::vector<double> bin_centers;
    std::vector<double> bin_means;      // 0 for empty bins (count says which)
    std::vector<std::size_t> bin_counts;
    std::vector<double> bin_std_errors; // standard error of each bin mean; 0 below 2 samples
    std::optional<RegressionFit> fit_on_records; // empty when all ratios coincide
    std::optional<RegressionFit> fit_on_bins;    // empty with fewer than 2 occupied bins
    double min_success = 0.0;
    double mean_success_top_decile_variance = 0.0; // mean success of the 10% highest-ratio samples
};

// Monte-Carlo sweep: sample an initial vector per index, run the search,
// aggregate success against variance ratio. Deterministic given (config.seed,
// config except threads); the thread count never changes the output.
SweepSummary run_sweep(const SweepConfig& config);

struct BaselineRow {
    std::size_t n = 0;
    int iterations = 0;
    double amplitude_pct = 0.0;   // success amplitude * 100
    double probability_pct = 0.0; // success probability * 100
};

// Uniform start, marked index 1, one row per database size.
std::vector<BaselineRow> run_baseline(std::span<const std::size_t> sizes,
                                      const IterationSchedule& schedule);

struct MarkovRow {
    double eps = 0.0;
    double mean_exceedance = 0.0;
    double bound = 0.0;
};

// Mean empirical exceedance over m samples next to the Markov bound, one row
// per eps. The per-sample inequality exceedance <= bound holds for every
// normalized vector, so mean <= bound always.
std::vector<MarkovRow> markov_experiment(const EnsembleSpec& spec,
                                         std::span<const double> eps_values,
                                         std::size_t num_samples, Seed seed);

} // namespace qrecall
