#include "qrecall/experiments.hpp"

#include "qrecall/compensated.hpp"
#include "qrecall/errors.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <mutex>
#include <numeric>
#include <string>
#include <thread>

namespace qrecall {

namespace {

// Runs body(i) for i in [0, count), optionally on several threads with strided
// indices. body(i) must only touch state owned by index i.
template <typename Body>
void for_each_index(std::size_t count, unsigned threads, Body&& body) {
    if (threads <= 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::mutex error_mutex;
    std::exception_ptr first_error;
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned w = 0; w < threads; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (std::size_t i = w; i < count; i += threads) body(i);
            } catch (...) {
                const std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

std::size_t bin_index(double ratio, std::size_t bins) {
    const auto b = static_cast<std::size_t>(ratio * static_cast<double>(bins));
    return std::min(b, bins - 1);
}

} // namespace

RegressionFit linear_fit(std::span<const std::pair<double, double>> points) {
    if (points.size() < 2) {
        throw DegenerateFit("linear fit needs at least 2 points, got " +
                            std::to_string(points.size()));
    }
    const double count = static_cast<double>(points.size());
    CompensatedSum sx, sy;
    for (const auto& [x, y] : points) {
        sx.add(x);
        sy.add(y);
    }
    const double mean_x = sx.value() / count;
    const double mean_y = sy.value() / count;

    CompensatedSum sxx, sxy;
    for (const auto& [x, y] : points) {
        sxx.add((x - mean_x) * (x - mean_x));
        sxy.add((x - mean_x) * (y - mean_y));
    }
    if (sxx.value() <= 0.0) {
        throw DegenerateFit("all x values coincide; no line is determined");
    }
    const double slope = sxy.value() / sxx.value();
    const double intercept = mean_y - slope * mean_x;

    CompensatedSum ss_res, ss_tot;
    for (const auto& [x, y] : points) {
        const double r = y - (intercept + slope * x);
        ss_res.add(r * r);
        ss_tot.add((y - mean_y) * (y - mean_y));
    }
    const double r_squared =
        ss_tot.value() == 0.0 ? 1.0 : std::max(0.0, 1.0 - ss_res.value() / ss_tot.value());
    return {slope, intercept, r_squared};
}

SweepSummary run_sweep(const SweepConfig& config) {
    if (config.num_samples < 1) {
        throw ConfigError("sweep needs at least 1 sample");
    }
    if (config.num_bins < 2) {
        throw ConfigError("sweep needs at least 2 bins");
    }
    validate(config.ensemble);
    if (config.ensemble.n != config.grover.n) {
        throw ConfigError("ensemble dimension " + std::to_string(config.ensemble.n) +
                          " does not match search dimension " + std::to_string(config.grover.n));
    }
    if (config.grover.marked >= config.grover.n) {
        throw IndexOutOfRange("marked index " + std::to_string(config.grover.marked) +
                              " out of range for dimension " + std::to_string(config.grover.n));
    }
    iteration_count(config.grover.n, config.grover.schedule); // fail fast on a bad schedule

    SweepSummary summary;
    summary.records.resize(config.num_samples);
    for_each_index(config.num_samples, config.threads, [&](std::size_t i) {
        const StateVector initial = sample(config.ensemble, Seed{derive_seed(config.seed, i)});
        const VarianceReport spread = amplitude_variance(initial);
        const RunResult result = run_grover(config.grover, initial);
        summary.records[i] = {i, spread.variance, spread.ratio, result.success_probability,
                              result.success_amplitude};
    });

    // Aggregation runs serially in index order, so any thread count above
    // produces the identical summary.
    const std::size_t bins = config.num_bins;
    summary.bin_centers.resize(bins);
    summary.bin_means.assign(bins, 0.0);
    summary.bin_counts.assign(bins, 0);
    summary.bin_std_errors.assign(bins, 0.0);
    for (std::size_t b = 0; b < bins; ++b) {
        summary.bin_centers[b] = (static_cast<double>(b) + 0.5) / static_cast<double>(bins);
    }

    std::vector<CompensatedSum> bin_sum(bins), bin_sum_sq(bins);
    for (const SampleRecord& rec : summary.records) {
        const double y = rec.success(config.metric);
        const std::size_t b = bin_index(rec.variance_ratio, bins);
        ++summary.bin_counts[b];
        bin_sum[b].add(y);
        bin_sum_sq[b].add(y * y);
    }
    for (std::size_t b = 0; b < bins; ++b) {
        const auto count = static_cast<double>(summary.bin_counts[b]);
        if (summary.bin_counts[b] == 0) continue;
        const double mean = bin_sum[b].value() / count;
        summary.bin_means[b] = mean;
        if (summary.bin_counts[b] >= 2) {
            const double var =
                std::max(0.0, (bin_sum_sq[b].value() - count * mean * mean) / (count - 1.0));
            summary.bin_std_errors[b] = std::sqrt(var / count);
        }
    }

    std::vector<std::pair<double, double>> record_points;
    record_points.reserve(summary.records.size());
    for (const SampleRecord& rec : summary.records) {
        record_points.emplace_back(rec.variance_ratio, rec.success(config.metric));
    }
    const auto [min_x, max_x] =
        std::minmax_element(record_points.begin(), record_points.end(),
                            [](const auto& a, const auto& b) { return a.first < b.first; });
    if (record_points.size() >= 2 && min_x->first < max_x->first) {
        summary.fit_on_records = linear_fit(record_points);
    }

    std::vector<std::pair<double, double>> bin_points;
    for (std::size_t b = 0; b < bins; ++b) {
        if (summary.bin_counts[b] > 0) {
            bin_points.emplace_back(summary.bin_centers[b], summary.bin_means[b]);
        }
    }
    if (bin_points.size() >= 2) {
        summary.fit_on_bins = linear_fit(bin_points);
    }

    summary.min_success = summary.records.front().success(config.metric);
    for (const SampleRecord& rec : summary.records) {
        summary.min_success = std::min(summary.min_success, rec.success(config.metric));
    }

    std::vector<std::size_t> order(summary.records.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const double ra = summary.records[a].variance_ratio;
        const double rb = summary.records[b].variance_ratio;
        if (ra != rb) return ra > rb;
        return a < b;
    });
    const std::size_t top = std::max<std::size_t>(1, summary.records.size() / 10);
    CompensatedSum top_sum;
    for (std::size_t i = 0; i < top; ++i) {
        top_sum.add(summary.records[order[i]].success(config.metric));
    }
    summary.mean_success_top_decile_variance = top_sum.value() / static_cast<double>(top);

    return summary;
}

std::vector<BaselineRow> run_baseline(std::span<const std::size_t> sizes,
                                      const IterationSchedule& schedule) {
    std::vector<BaselineRow> rows;
    rows.reserve(sizes.size());
    for (const std::size_t n : sizes) {
        const GroverConfig config{n, 1, schedule};
        const RunResult result = run_grover(config, uniform_state(n));
        rows.push_back({n, result.iterations, 100.0 * result.success_amplitude,
                        100.0 * result.success_probability});
    }
    return rows;
}

std::vector<MarkovRow> markov_experiment(const EnsembleSpec& spec,
                                         std::span<const double> eps_values,
                                         std::size_t num_samples, Seed seed) {
    if (num_samples < 1) {
        throw ConfigError("markov_experiment needs at least 1 sample");
    }
    validate(spec);
    for (const double eps : eps_values) {
        if (!(eps > 0.0)) {
            throw InvalidEpsilon("markov_experiment requires every eps > 0");
        }
    }

    std::vector<CompensatedSum> sums(eps_values.size());
    for (std::size_t i = 0; i < num_samples; ++i) {
        const StateVector sv = sample(spec, Seed{derive_seed(seed, i)});
        for (std::size_t j = 0; j < eps_values.size(); ++j) {
            sums[j].add(empirical_exceedance(sv, eps_values[j]));
        }
    }

    std::vector<MarkovRow> rows;
    rows.reserve(eps_values.size());
    for (std::size_t j = 0; j < eps_values.size(); ++j) {
        rows.push_back({eps_values[j], sums[j].value() / static_cast<double>(num_samples),
                        markov_bound(spec.n, eps_values[j])});
    }
    return rows;
}

} // namespace qrecall
