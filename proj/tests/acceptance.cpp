// Acceptance suite: every release criterion with its tolerance pinned in
// code, one PASS/FAIL line each. Exits nonzero if any criterion fails.

#include "qrecall/ensembles.hpp"
#include "qrecall/experiments.hpp"
#include "qrecall/grover.hpp"
#include "qrecall/report.hpp"
#include "qrecall/state_vector.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace qrecall;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool condition, const std::string& message) {
        if (!condition) {
            pass = false;
            if (!detail.empty()) detail += "; ";
            detail += message;
        }
    }
};

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

StateVector random_signed(Rng& rng, std::size_t n) {
    std::vector<double> raw(n);
    for (double& x : raw) x = 2.0 * rng.unit() - 1.0;
    return normalize(std::move(raw));
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// ---- 1: baseline success table ---------------------------------------------

Outcome baseline_table() {
    Outcome outcome;
    const auto start = std::chrono::steady_clock::now();

    const std::vector<std::size_t> sizes = {4, 8, 16, 32};
    const std::vector<double> expected_pct = {100.0, 97.22, 98.02, 99.95};

    // Independent closed-form route first: the table values are amplitudes
    // under k = floor(pi/4 * sqrt(n)), not probabilities under round(sqrt(n)).
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        const int k = iteration_count(sizes[i], IterationSchedule::floor_pi_over_4());
        const double amp_pct = 100.0 * closed_form_success(sizes[i], k).amplitude;
        outcome.require(std::abs(amp_pct - expected_pct[i]) <= 0.05,
                        "closed form n=" + std::to_string(sizes[i]) + " gives " + fmt(amp_pct));
    }

    const auto rows = run_baseline(sizes, IterationSchedule::floor_pi_over_4());
    std::string table = "amplitude_pct =";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        outcome.require(std::abs(rows[i].amplitude_pct - expected_pct[i]) <= 0.05,
                        "run n=" + std::to_string(rows[i].n) + " gives " +
                            fmt(rows[i].amplitude_pct));
        const double closed = 100.0 * closed_form_success(rows[i].n, rows[i].iterations).amplitude;
        outcome.require(std::abs(rows[i].amplitude_pct - closed) <= 1e-9,
                        "run and closed form disagree at n=" + std::to_string(rows[i].n));
        table += " " + fmt(rows[i].amplitude_pct);
    }

    // Contrast: the rounded-sqrt rule at n=8 lands far from the table.
    const auto sqrt_row = run_baseline(std::vector<std::size_t>{8}, IterationSchedule::sqrt_rounded());
    table += "; sqrt-rule n=8 gives amplitude_pct " + fmt(sqrt_row[0].amplitude_pct) +
             " with k=" + std::to_string(sqrt_row[0].iterations);

    const double elapsed = seconds_since(start);
    outcome.require(elapsed < 1.0, "took " + fmt(elapsed) + " s, budget 1 s");
    outcome.detail = table + " (" + fmt(elapsed) + " s)" +
                     (outcome.detail.empty() ? "" : "; " + outcome.detail);
    return outcome;
}

// ---- 2: explicit diffusion matrix ------------------------------------------

Outcome diffusion_matrix_exact() {
    Outcome outcome;
    const SquareMatrix m = build_diffusion_matrix(8);
    for (std::size_t i = 0; i < 8; ++i) {
        for (std::size_t j = 0; j < 8; ++j) {
            const double expected = i == j ? -0.75 : 0.25;
            outcome.require(m.at(i, j) == expected,
                            "entry (" + std::to_string(i) + "," + std::to_string(j) + ") is " +
                                fmt(m.at(i, j)));
        }
    }
    outcome.detail = "diagonal -0.75, off-diagonal 0.25, exact";
    return outcome;
}

// ---- 3: operator properties ------------------------------------------------

Outcome operator_properties() {
    Outcome outcome;
    const auto start = std::chrono::steady_clock::now();

    const std::vector<std::size_t> dims = {2, 4, 8, 16, 32, 64, 256, 1024};
    const std::size_t vectors_per_dim = 1250; // 10^4 vectors in total
    Rng rng(0xACCE55ED);
    double worst_norm = 0.0, worst_invol = 0.0, worst_matrix = 0.0;

    for (const std::size_t n : dims) {
        const SquareMatrix m = build_diffusion_matrix(n);
        for (std::size_t rep = 0; rep < vectors_per_dim; ++rep) {
            const StateVector sv = random_signed(rng, n);
            const double norm_before = sv.norm();

            const StateVector diffused = apply_diffusion(sv);
            worst_norm = std::max(worst_norm, std::abs(diffused.norm() - norm_before));

            const StateVector oracled = apply_oracle(sv, rep % n);
            worst_norm = std::max(worst_norm, std::abs(oracled.norm() - norm_before));

            const StateVector back = apply_diffusion(diffused);
            const std::vector<double> via_matrix = apply_matrix(m, sv.amps());
            for (std::size_t i = 0; i < n; ++i) {
                worst_invol = std::max(worst_invol, std::abs(back[i] - sv[i]));
                worst_matrix = std::max(worst_matrix, std::abs(diffused[i] - via_matrix[i]));
            }
        }
    }

    outcome.require(worst_norm <= 1e-12, "norm drift " + fmt(worst_norm));
    outcome.require(worst_invol <= 1e-12, "involution residue " + fmt(worst_invol));
    outcome.require(worst_matrix <= 1e-12, "matrix mismatch " + fmt(worst_matrix));
    const double elapsed = seconds_since(start);
    outcome.require(elapsed < 30.0, "took " + fmt(elapsed) + " s, budget 30 s");
    outcome.detail = "10^4 vectors, dims 2..1024: norm " + fmt(worst_norm) + ", D^2-I " +
                     fmt(worst_invol) + ", matrix " + fmt(worst_matrix) + " (" + fmt(elapsed) +
                     " s)" + (outcome.detail.empty() ? "" : "; " + outcome.detail);
    return outcome;
}

// ---- 4: variance model ------------------------------------------------------

Outcome variance_model() {
    Outcome outcome;
    double worst_routes = 0.0, worst_cap = 0.0, worst_target = 0.0;
    std::size_t checked = 0;

    const std::vector<std::size_t> dims = {4, 8, 16, 32};
    for (const std::size_t n : dims) {
        const std::vector<EnsembleSpec> specs = {
            EnsembleSpec::uniform_positive(n),
            EnsembleSpec::uniform_signed(n),
            EnsembleSpec::perturbed_uniform(n, 0.25),
            EnsembleSpec::controlled_variance_grid(n),
        };
        for (const EnsembleSpec& spec : specs) {
            for (std::uint64_t i = 0; i < 125; ++i) {
                const StateVector sv = sample(spec, Seed{derive_seed(Seed{41}, i)});
                double total = 0.0;
                for (double a : sv.amps()) total += a;
                const double mean = total / double(n);
                double dev_sq = 0.0;
                for (double a : sv.amps()) dev_sq += (a - mean) * (a - mean);
                const double by_definition = dev_sq / double(n);
                const double by_closed_form = 1.0 / double(n) - (total * total) / double(n * n);
                worst_routes = std::max(worst_routes, std::abs(by_definition - by_closed_form));
                worst_cap = std::max(worst_cap, by_definition - 1.0 / double(n));
                ++checked;
            }
        }
    }
    outcome.require(worst_routes <= 1e-12, "route disagreement " + fmt(worst_routes));
    outcome.require(worst_cap <= 1e-12, "variance over 1/n by " + fmt(worst_cap));

    for (const std::size_t n : dims) {
        for (int tenth = 0; tenth <= 10; ++tenth) {
            const double target = tenth / 10.0;
            const EnsembleSpec spec = EnsembleSpec::controlled_variance(n, target);
            for (std::uint64_t s = 0; s < 100; ++s) {
                const StateVector sv = sample(spec, Seed{derive_seed(Seed{n}, s)});
                worst_target =
                    std::max(worst_target, std::abs(amplitude_variance(sv).ratio - target));
            }
        }
    }
    outcome.require(worst_target <= 1e-9, "target ratio missed by " + fmt(worst_target));
    outcome.detail = std::to_string(checked) + " sampled vectors: routes " + fmt(worst_routes) +
                     ", cap excess " + fmt(worst_cap) + "; 4400 controlled draws: target error " +
                     fmt(worst_target) + (outcome.detail.empty() ? "" : "; " + outcome.detail);
    return outcome;
}

// ---- 5: markov bound ---------------------------------------------------------

Outcome markov_zero_violations() {
    Outcome outcome;
    std::size_t violations = 0, checks = 0;
    for (const std::size_t n : {8, 16}) {
        const std::vector<EnsembleSpec> specs = {
            EnsembleSpec::uniform_positive(n),
            EnsembleSpec::uniform_signed(n),
            EnsembleSpec::perturbed_uniform(n, 0.25),
            EnsembleSpec::controlled_variance_grid(n),
        };
        const std::vector<double> eps_values = {0.01, 0.05, 0.1, 1.0 / double(n)};
        for (const EnsembleSpec& spec : specs) {
            for (std::uint64_t i = 0; i < 10000; ++i) {
                const StateVector sv = sample(spec, Seed{derive_seed(Seed{500 + n}, i)});
                for (const double eps : eps_values) {
                    if (empirical_exceedance(sv, eps) > markov_bound(n, eps)) ++violations;
                    ++checks;
                }
            }
        }
    }
    outcome.require(violations == 0, std::to_string(violations) + " violations");
    outcome.detail = std::to_string(checks) + " checks (8 ensembles x 10^4 samples x 4 eps), " +
                     std::to_string(violations) + " violations";
    return outcome;
}

// ---- 6 & 7: trend and linearity ----------------------------------------------

SweepConfig trend_config() {
    SweepConfig config;
    config.grover = {8, 1, IterationSchedule::floor_pi_over_4()};
    config.ensemble = EnsembleSpec::controlled_variance_grid(8, 20);
    config.num_samples = 50000;
    config.seed = Seed{20260808};
    config.num_bins = 20;
    config.metric = SuccessMetric::Probability;
    return config;
}

Outcome trend(const SweepSummary& summary, double elapsed) {
    Outcome outcome;
    outcome.require(summary.fit_on_bins.has_value(), "no bin fit");
    if (summary.fit_on_bins) {
        outcome.require(summary.fit_on_bins->slope < 0.0,
                        "bin slope " + fmt(summary.fit_on_bins->slope));
    }
    for (std::size_t b = 0; b + 1 < summary.bin_means.size(); ++b) {
        if (summary.bin_counts[b] == 0 || summary.bin_counts[b + 1] == 0) continue;
        const double allowance = 2.0 * std::sqrt(summary.bin_std_errors[b] * summary.bin_std_errors[b] +
                                                 summary.bin_std_errors[b + 1] * summary.bin_std_errors[b + 1]);
        outcome.require(summary.bin_means[b + 1] <= summary.bin_means[b] + allowance,
                        "bins " + std::to_string(b) + "->" + std::to_string(b + 1) +
                            " rise past 2 standard errors");
    }
    const double baseline_probability =
        run_baseline(std::vector<std::size_t>{8}, IterationSchedule::floor_pi_over_4())[0]
            .probability_pct / 100.0;
    outcome.require(std::abs(summary.bin_means[0] - baseline_probability) <= 1e-3,
                    "ratio~0 bin mean " + fmt(summary.bin_means[0]) + " vs baseline " +
                        fmt(baseline_probability));
    outcome.require(elapsed < 60.0, "took " + fmt(elapsed) + " s, budget 60 s");
    outcome.detail = "slope " + fmt(summary.fit_on_bins ? summary.fit_on_bins->slope : 0.0) +
                     ", ratio~0 bin mean " + fmt(summary.bin_means[0]) + ", baseline " +
                     fmt(baseline_probability) + " (" + fmt(elapsed) + " s)" +
                     (outcome.detail.empty() ? "" : "; " + outcome.detail);
    return outcome;
}

Outcome linearity(const SweepSummary& summary) {
    Outcome outcome;
    outcome.require(summary.fit_on_bins.has_value(), "no bin fit");
    const double r_squared = summary.fit_on_bins ? summary.fit_on_bins->r_squared : 0.0;
    outcome.require(r_squared >= 0.9, "r^2 " + fmt(r_squared));
    outcome.detail = "fit_on_bins r^2 = " + fmt(r_squared) + " (threshold 0.9)" +
                     (outcome.detail.empty() ? "" : "; " + outcome.detail);
    return outcome;
}

// ---- 8: per-ensemble success floor report -------------------------------------

Outcome ensemble_floor_report() {
    Outcome outcome;
    std::string report = "success-probability floor per ensemble (min / top-decile mean):\n";
    for (const std::size_t n : {8, 16}) {
        const std::vector<std::pair<std::string, EnsembleSpec>> specs = {
            {"uniform_positive", EnsembleSpec::uniform_positive(n)},
            {"uniform_signed", EnsembleSpec::uniform_signed(n)},
            {"perturbed_uniform(0.25)", EnsembleSpec::perturbed_uniform(n, 0.25)},
            {"controlled_variance", EnsembleSpec::controlled_variance_grid(n)},
        };
        for (const auto& [name, ensemble] : specs) {
            SweepConfig config;
            config.grover = {n, 1, IterationSchedule::floor_pi_over_4()};
            config.ensemble = ensemble;
            config.num_samples = 20000;
            config.seed = Seed{20260808};
            config.num_bins = 20;
            const SweepSummary summary = run_sweep(config);
            outcome.require(summary.min_success >= 0.0 && summary.min_success <= 1.0,
                            "min_success out of range for " + name);
            char line[160];
            std::snprintf(line, sizeof line, "      n=%-3zu %-24s min %.4f   top-decile %.4f\n", n,
                          name.c_str(), summary.min_success,
                          summary.mean_success_top_decile_variance);
            report += line;
        }
    }
    outcome.detail = "emitted for 4 ensembles x n in {8,16}\n" + report;
    return outcome;
}

// ---- 9: determinism ------------------------------------------------------------

Outcome determinism() {
    Outcome outcome;
    SweepConfig config = trend_config();
    config.num_samples = 5000;

    const std::string first = records_csv(run_sweep(config).records);
    const std::string second = records_csv(run_sweep(config).records);
    outcome.require(first == second, "repeat run changed the records CSV");

    config.threads = 4;
    const std::string threaded = records_csv(run_sweep(config).records);
    outcome.require(threaded == first, "4-thread run changed the records CSV");

    config.threads = 7;
    const std::string more_threads = records_csv(run_sweep(config).records);
    outcome.require(more_threads == first, "7-thread run changed the records CSV");

    outcome.detail = "5000-sample sweep: repeat, 4-thread and 7-thread runs byte-identical";
    return outcome;
}

} // namespace

int main() {
    std::vector<std::pair<std::string, std::function<Outcome()>>> criteria;
    criteria.emplace_back("baseline success table within 0.05", baseline_table);
    criteria.emplace_back("8x8 diffusion matrix exact", diffusion_matrix_exact);
    criteria.emplace_back("operator norm/involution/matrix properties", operator_properties);
    criteria.emplace_back("variance dual-route, cap and controlled targets", variance_model);
    criteria.emplace_back("markov bound never violated", markov_zero_violations);

    const auto sweep_start = std::chrono::steady_clock::now();
    const SweepSummary trend_summary = run_sweep(trend_config());
    const double sweep_elapsed = seconds_since(sweep_start);
    criteria.emplace_back("success falls with variance (trend)",
                          [&] { return trend(trend_summary, sweep_elapsed); });
    criteria.emplace_back("binned relationship essentially linear",
                          [&] { return linearity(trend_summary); });
    criteria.emplace_back("per-ensemble floor statistics emitted", ensemble_floor_report);
    criteria.emplace_back("byte-identical sweeps at any thread count", determinism);

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome outcome;
        try {
            outcome = criteria[i].second();
        } catch (const std::exception& e) {
            outcome.pass = false;
            outcome.detail = std::string("exception: ") + e.what();
        }
        if (!outcome.pass) ++failures;
        std::printf("[%zu/9] %s  %s: %s\n", i + 1, outcome.pass ? "PASS" : "FAIL",
                    criteria[i].first.c_str(), outcome.detail.c_str());
    }
    std::printf("%s: %d/9 criteria passed\n", failures == 0 ? "RESULT PASS" : "RESULT FAIL",
                9 - failures);
    return failures == 0 ? 0 : 1;
}
