#include "qrecall/cli.hpp"

#include "qrecall/errors.hpp"
#include "qrecall/report.hpp"
#include "qrecall/svg_plot.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

namespace qrecall {

namespace {

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

void warn_if_not_power_of_two(std::size_t n, std::ostream& err) {
    if (n >= 2 && !is_power_of_two(n)) {
        err << "warning: N=" << n << " is not a power of two; a register of whole qubits"
            << " always has N = 2^q\n";
    }
}

std::uint64_t default_seed_from_env(std::ostream& err) {
    const char* env = std::getenv("QRECALL_SEED");
    if (env == nullptr || *env == '\0') return 42;
    char* end = nullptr;
    errno = 0;
    const unsigned long long parsed = std::strtoull(env, &end, 10);
    if (errno != 0 || end == nullptr || *end != '\0') {
        err << "warning: ignoring unparseable QRECALL_SEED=\"" << env << "\"\n";
        return 42;
    }
    return parsed;
}

std::string slurp_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot read \"" + path + "\"");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// --ensemble takes inline JSON (starts with '{') or a path to a JSON file.
// The --n flag wins over any "n" in the JSON.
EnsembleSpec resolve_ensemble(const std::string& text, std::size_t n, std::ostream& err) {
    const std::size_t first = text.find_first_not_of(" \t\r\n");
    std::string json_text = text;
    if (first == std::string::npos) {
        throw ConfigError("empty ensemble spec");
    }
    if (text[first] != '{') {
        json_text = slurp_file(text);
    }
    EnsembleSpec spec = parse_ensemble_json(json_text);
    if (spec.n != 0 && spec.n != n) {
        err << "warning: ensemble JSON says n=" << spec.n << "; --n " << n << " wins\n";
    }
    spec.n = n;
    validate(spec);
    return spec;
}

void emit(const std::string& content, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << content;
    } else {
        write_text_file(path, content);
    }
}

struct BaselineArgs {
    std::vector<std::size_t> sizes;
    std::string schedule = "standard";
    std::string format = "csv";
};

struct SweepArgs {
    std::size_t n = 8;
    std::size_t marked = 1;
    std::string schedule = "standard";
    std::string ensemble = R"({"kind": "controlled_variance"})";
    std::size_t samples = 10000;
    std::size_t bins = 20;
    std::uint64_t seed = 42;
    std::string metric = "probability";
    unsigned threads = 1;
    std::string out_path;
    std::string summary_path;
    std::string plot_path;
};

struct DiffusionArgs {
    std::size_t n = 8;
    std::string out_path;
};

struct MarkovArgs {
    std::size_t n = 8;
    std::string ensemble = R"({"kind": "uniform_signed"})";
    std::vector<double> eps{0.01, 0.05, 0.1};
    std::size_t samples = 10000;
    std::uint64_t seed = 42;
};

void run_baseline_cmd(const BaselineArgs& args, std::ostream& out, std::ostream& err) {
    const IterationSchedule schedule = parse_schedule(args.schedule);
    for (const std::size_t n : args.sizes) warn_if_not_power_of_two(n, err);
    const auto rows = run_baseline(args.sizes, schedule);
    if (args.format == "csv") {
        out << baseline_csv(rows);
    } else if (args.format == "json") {
        out << baseline_json(rows, schedule);
    } else {
        throw ConfigError("unknown format \"" + args.format + "\" (expected csv or json)");
    }
}

void run_sweep_cmd(const SweepArgs& args, std::ostream& out, std::ostream& err) {
    warn_if_not_power_of_two(args.n, err);
    SweepConfig config;
    config.grover = {args.n, args.marked, parse_schedule(args.schedule)};
    config.ensemble = resolve_ensemble(args.ensemble, args.n, err);
    config.num_samples = args.samples;
    config.num_bins = args.bins;
    config.seed = Seed{args.seed};
    config.metric = parse_metric(args.metric);
    config.threads = args.threads;

    const SweepSummary summary = run_sweep(config);

    emit(records_csv(summary.records), args.out_path, out);
    std::string summary_path = args.summary_path;
    if (summary_path.empty() && !args.out_path.empty()) {
        summary_path = args.out_path + ".summary.json";
    }
    if (!summary_path.empty()) {
        write_text_file(summary_path, summary_json(config, summary));
    }
    if (!args.plot_path.empty()) {
        write_text_file(args.plot_path, sweep_scatter_svg(config, summary));
    }
}

void run_diffusion_cmd(const DiffusionArgs& args, std::ostream& out, std::ostream& err) {
    warn_if_not_power_of_two(args.n, err);
    emit(diffusion_csv(build_diffusion_matrix(args.n)), args.out_path, out);
}

void run_markov_cmd(const MarkovArgs& args, std::ostream& out, std::ostream& err) {
    warn_if_not_power_of_two(args.n, err);
    const EnsembleSpec spec = resolve_ensemble(args.ensemble, args.n, err);
    const auto rows = markov_experiment(spec, args.eps, args.samples, Seed{args.seed});
    out << markov_csv(rows);
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Grover database-search simulator with noisy initial states"};
    app.name("qrecall");
    app.require_subcommand(1);

    const std::uint64_t env_seed = default_seed_from_env(err);

    BaselineArgs baseline;
    auto* baseline_cmd =
        app.add_subcommand("baseline", "Success metrics for uniform starts, one row per size");
    baseline_cmd->add_option("--sizes", baseline.sizes, "Database sizes, comma separated")
        ->required()
        ->delimiter(',');
    baseline_cmd->add_option("--schedule", baseline.schedule,
                             "Iteration rule: sqrt (alias: paper), standard, fixed:K");
    baseline_cmd->add_option("--format", baseline.format, "csv or json");

    SweepArgs sweep;
    sweep.seed = env_seed;
    auto* sweep_cmd = app.add_subcommand(
        "sweep", "Monte-Carlo sweep of success against initial-state variance");
    sweep_cmd->add_option("--n", sweep.n, "Database size")->required();
    sweep_cmd->add_option("--marked", sweep.marked, "Marked item index (default 1)");
    sweep_cmd->add_option("--schedule", sweep.schedule, "sqrt, standard or fixed:K");
    sweep_cmd->add_option("--ensemble", sweep.ensemble,
                          "Inline ensemble JSON or a path to a JSON file");
    sweep_cmd->add_option("--samples", sweep.samples, "Number of Monte-Carlo samples");
    sweep_cmd->add_option("--bins", sweep.bins, "Number of variance-ratio bins");
    sweep_cmd->add_option("--seed", sweep.seed, "Master seed (default: QRECALL_SEED or 42)");
    sweep_cmd->add_option("--metric", sweep.metric, "probability or amplitude");
    sweep_cmd->add_option("--threads", sweep.threads, "Worker threads; output is unaffected");
    sweep_cmd->add_option("--out", sweep.out_path, "Records CSV path (default: stdout)");
    sweep_cmd->add_option("--summary", sweep.summary_path,
                          "Summary JSON path (default: <out>.summary.json when --out is set)");
    sweep_cmd->add_option("--plot", sweep.plot_path, "Scatter SVG path");

    DiffusionArgs diffusion;
    auto* diffusion_cmd = app.add_subcommand("diffusion", "Dump the N x N diffusion matrix as CSV");
    diffusion_cmd->add_option("--n", diffusion.n, "Matrix dimension")->required();
    diffusion_cmd->add_option("--out", diffusion.out_path, "Output path (default: stdout)");

    MarkovArgs markov;
    markov.seed = env_seed;
    auto* markov_cmd = app.add_subcommand(
        "markov", "Mean empirical exceedance next to the Markov bound, one row per eps");
    markov_cmd->add_option("--n", markov.n, "Database size")->required();
    markov_cmd->add_option("--ensemble", markov.ensemble,
                           "Inline ensemble JSON or a path to a JSON file");
    markov_cmd->add_option("--eps", markov.eps, "Thresholds, comma separated")->delimiter(',');
    markov_cmd->add_option("--samples", markov.samples, "Number of samples");
    markov_cmd->add_option("--seed", markov.seed, "Master seed (default: QRECALL_SEED or 42)");

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("qrecall");
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
        if (baseline_cmd->parsed()) run_baseline_cmd(baseline, out, err);
        if (sweep_cmd->parsed()) run_sweep_cmd(sweep, out, err);
        if (diffusion_cmd->parsed()) run_diffusion_cmd(diffusion, out, err);
        if (markov_cmd->parsed()) run_markov_cmd(markov, out, err);
        return 0;
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const IoError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const NumericalFailure& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace qrecall
