#include "qrecall/report.hpp"

#include "qrecall/errors.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>

namespace qrecall {

using ordered_json = nlohmann::ordered_json;

std::string csv_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

std::string csv_row(std::span<const double> values) {
    std::string row;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) row += ',';
        row += csv_number(values[i]);
    }
    return row;
}

std::string records_csv(std::span<const SampleRecord> records) {
    std::string out = "sample_index,variance,variance_ratio,success_probability,success_amplitude\n";
    for (const SampleRecord& rec : records) {
        out += std::to_string(rec.sample_index);
        out += ',';
        out += csv_number(rec.variance);
        out += ',';
        out += csv_number(rec.variance_ratio);
        out += ',';
        out += csv_number(rec.success_probability);
        out += ',';
        out += csv_number(rec.success_amplitude);
        out += '\n';
    }
    return out;
}

std::string diffusion_csv(const SquareMatrix& m) {
    std::string out;
    for (std::size_t i = 0; i < m.n; ++i) {
        out += csv_row(std::span<const double>(m.data).subspan(i * m.n, m.n));
        out += '\n';
    }
    return out;
}

std::string baseline_csv(std::span<const BaselineRow> rows) {
    std::string out = "n,iterations,success_amplitude_pct,success_probability_pct\n";
    for (const BaselineRow& row : rows) {
        out += std::to_string(row.n);
        out += ',';
        out += std::to_string(row.iterations);
        out += ',';
        out += csv_number(row.amplitude_pct);
        out += ',';
        out += csv_number(row.probability_pct);
        out += '\n';
    }
    return out;
}

std::string baseline_json(std::span<const BaselineRow> rows, const IterationSchedule& schedule) {
    ordered_json doc;
    doc["schedule"] = schedule_name(schedule);
    doc["rows"] = ordered_json::array();
    for (const BaselineRow& row : rows) {
        doc["rows"].push_back({{"n", row.n},
                               {"iterations", row.iterations},
                               {"success_amplitude_pct", row.amplitude_pct},
                               {"success_probability_pct", row.probability_pct}});
    }
    return doc.dump(2) + "\n";
}

std::string markov_csv(std::span<const MarkovRow> rows) {
    std::string out = "eps,mean_exceedance,markov_bound\n";
    for (const MarkovRow& row : rows) {
        out += csv_number(row.eps);
        out += ',';
        out += csv_number(row.mean_exceedance);
        out += ',';
        out += csv_number(row.bound);
        out += '\n';
    }
    return out;
}

namespace {

ordered_json ensemble_to_json(const EnsembleSpec& spec) {
    ordered_json doc;
    switch (spec.kind) {
    case EnsembleKind::UniformPositive:
        doc["kind"] = "uniform_positive";
        break;
    case EnsembleKind::UniformSigned:
        doc["kind"] = "uniform_signed";
        break;
    case EnsembleKind::PerturbedUniform:
        doc["kind"] = "perturbed_uniform";
        break;
    case EnsembleKind::ControlledVariance:
        doc["kind"] = "controlled_variance";
        break;
    }
    doc["n"] = spec.n;
    if (spec.kind == EnsembleKind::PerturbedUniform) {
        doc["epsilon"] = spec.epsilon;
    }
    if (spec.kind == EnsembleKind::ControlledVariance) {
        if (spec.ratio) {
            doc["ratio"] = *spec.ratio;
        } else {
            doc["levels"] = spec.ratio_levels;
        }
    }
    return doc;
}

} // namespace

std::string ensemble_json(const EnsembleSpec& spec) {
    return ensemble_to_json(spec).dump();
}

EnsembleSpec parse_ensemble_json(const std::string& text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("ensemble JSON does not parse: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("kind") || !doc["kind"].is_string()) {
        throw ConfigError("ensemble JSON needs a string \"kind\" field");
    }
    const std::string kind = doc["kind"].get<std::string>();

    EnsembleSpec spec;
    try {
        if (doc.contains("n")) spec.n = doc["n"].get<std::size_t>();
        if (kind == "uniform_positive") {
            spec.kind = EnsembleKind::UniformPositive;
        } else if (kind == "uniform_signed") {
            spec.kind = EnsembleKind::UniformSigned;
        } else if (kind == "perturbed_uniform") {
            spec.kind = EnsembleKind::PerturbedUniform;
            if (doc.contains("epsilon")) spec.epsilon = doc["epsilon"].get<double>();
        } else if (kind == "controlled_variance") {
            spec.kind = EnsembleKind::ControlledVariance;
            if (doc.contains("ratio") && doc.contains("levels")) {
                throw ConfigError("controlled_variance takes \"ratio\" or \"levels\", not both");
            }
            if (doc.contains("ratio")) spec.ratio = doc["ratio"].get<double>();
            if (doc.contains("levels")) spec.ratio_levels = doc["levels"].get<int>();
        } else {
            throw ConfigError("unknown ensemble kind \"" + kind + "\"");
        }
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("ensemble JSON has a bad field: ") + e.what());
    }
    return spec;
}

std::string summary_json(const SweepConfig& config, const SweepSummary& summary) {
    ordered_json doc;
    doc["config"] = {{"n", config.grover.n},
                     {"marked", config.grover.marked},
                     {"schedule", schedule_name(config.grover.schedule)},
                     {"iterations", iteration_count(config.grover.n, config.grover.schedule)},
                     {"ensemble", ensemble_to_json(config.ensemble)},
                     {"num_samples", config.num_samples},
                     {"num_bins", config.num_bins},
                     {"seed", config.seed.value},
                     {"metric", metric_name(config.metric)}};

    doc["bins"] = ordered_json::array();
    for (std::size_t b = 0; b < summary.bin_centers.size(); ++b) {
        doc["bins"].push_back({{"center", summary.bin_centers[b]},
                               {"count", summary.bin_counts[b]},
                               {"mean_success", summary.bin_means[b]},
                               {"std_error", summary.bin_std_errors[b]}});
    }

    const auto fit_json = [](const std::optional<RegressionFit>& fit) -> ordered_json {
        if (!fit) return nullptr;
        return {{"slope", fit->slope}, {"intercept", fit->intercept}, {"r_squared", fit->r_squared}};
    };
    doc["fit_on_records"] = fit_json(summary.fit_on_records);
    doc["fit_on_bins"] = fit_json(summary.fit_on_bins);
    doc["min_success"] = summary.min_success;
    doc["mean_success_top_decile_variance"] = summary.mean_success_top_decile_variance;
    doc["num_records"] = summary.records.size();
    return doc.dump(2) + "\n";
}

std::string schedule_name(const IterationSchedule& schedule) {
    switch (schedule.kind) {
    case ScheduleKind::SqrtRounded:
        return "sqrt";
    case ScheduleKind::FloorPiOver4:
        return "standard";
    case ScheduleKind::Fixed:
        return "fixed:" + std::to_string(schedule.fixed_iterations);
    }
    return "standard";
}

IterationSchedule parse_schedule(const std::string& text) {
    if (text == "sqrt" || text == "paper") {
        return IterationSchedule::sqrt_rounded();
    }
    if (text == "standard") {
        return IterationSchedule::floor_pi_over_4();
    }
    if (text.rfind("fixed:", 0) == 0) {
        const std::string digits = text.substr(6);
        try {
            std::size_t used = 0;
            const int k = std::stoi(digits, &used);
            if (used != digits.size()) throw std::invalid_argument(digits);
            return IterationSchedule::fixed(k);
        } catch (const std::logic_error&) {
            throw ConfigError("bad iteration count in \"" + text + "\"");
        }
    }
    throw ConfigError("unknown schedule \"" + text + "\" (expected sqrt, standard or fixed:K)");
}

std::string metric_name(SuccessMetric metric) {
    return metric == SuccessMetric::Probability ? "probability" : "amplitude";
}

SuccessMetric parse_metric(const std::string& text) {
    if (text == "probability") return SuccessMetric::Probability;
    if (text == "amplitude") return SuccessMetric::Amplitude;
    throw ConfigError("unknown metric \"" + text + "\" (expected probability or amplitude)");
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot open \"" + path + "\" for writing");
    }
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) {
        throw IoError("write to \"" + path + "\" failed");
    }
}

} // namespace qrecall
