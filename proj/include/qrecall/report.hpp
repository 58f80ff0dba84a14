#pragma once

#include "qrecall/experiments.hpp"

#include <span>
#include <string>

namespace qrecall {

// One double as decimal text, 15 significant digits, C locale.
std::string csv_number(double v);

// Comma-joined csv_number row, no trailing newline.
std::string csv_row(std::span<const double> values);

// sample_index,variance,variance_ratio,success_probability,success_amplitude
std::string records_csv(std::span<const SampleRecord> records);

// n rows by n columns, row-major.
std::string diffusion_csv(const SquareMatrix& m);

std::string baseline_csv(std::span<const BaselineRow> rows);
std::string baseline_json(std::span<const BaselineRow> rows, const IterationSchedule& schedule);

// eps,mean_exceedance,markov_bound
std::string markov_csv(std::span<const MarkovRow> rows);

// {"kind": "controlled_variance", "n": 8, "ratio": 0.5} and friends. A missing
// "n" parses as 0 so the caller can fill it from context.
std::string ensemble_json(const EnsembleSpec& spec);
EnsembleSpec parse_ensemble_json(const std::string& text);

// Full sweep report: config echo, bins, fits, extremal statistics.
std::string summary_json(const SweepConfig& config, const SweepSummary& summary);

// "sqrt" | "standard" | "fixed:K"
std::string schedule_name(const IterationSchedule& schedule);
// Accepts the names above plus "paper" as an alias for "sqrt".
IterationSchedule parse_schedule(const std::string& text);

std::string metric_name(SuccessMetric metric);
SuccessMetric parse_metric(const std::string& text);

// Throws IoError when the file cannot be created or written.
void write_text_file(const std::string& path, const std::string& content);

} // namespace qrecall
