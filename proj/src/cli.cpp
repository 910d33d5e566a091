#include "dlsched/cli.hpp"

#include "dlsched/bench.hpp"
#include "dlsched/evaluator.hpp"
#include "dlsched/instances.hpp"
#include "dlsched/solvers.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

namespace dlsched::cli {
namespace {

// Thrown for flag problems detected after CLI11 parsing.
struct FlagError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown for file open/read/write problems.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RangeFlags {
    std::string b;
    std::string a0;
    std::string t0;
    std::string alpha;
};

struct EnumFlags {
    std::size_t workers = 0;
    std::size_t guard = kDefaultEnumGuard;
    bool force = false;
};

struct Config {
    // gen
    std::size_t gen_n = 0;
    std::size_t count = 1;
    // solve
    std::string instance_path;
    std::size_t record = 0;
    std::optional<std::size_t> solve_n;
    std::optional<std::size_t> fixture_n;
    std::optional<double> a0;
    std::optional<double> alpha;
    std::optional<double> t0;
    std::string solver = "heuristic";
    // bench
    std::string n_spec;
    std::size_t reps = 30;
    bool full_precision = false;
    bool sequences = false;
    // shared
    std::uint64_t seed = 0;
    RangeFlags ranges;
    EnumFlags enumeration;
    bool second_smallest_variant = false;
    std::string format;
    std::string output_path;
};

double parse_number(std::string_view text, const std::string& flag) {
    double value = 0.0;
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc{} || end != text.data() + text.size())
        throw FlagError(flag + ": '" + std::string(text) + "' is not a number");
    return value;
}

std::size_t parse_size(std::string_view text, const std::string& flag) {
    std::size_t value = 0;
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc{} || end != text.data() + text.size())
        throw FlagError(flag + ": '" + std::string(text) + "' is not a non-negative integer");
    return value;
}

// "lo,hi"
void apply_range(const std::string& text, const std::string& flag, Range& target) {
    if (text.empty())
        return;
    const auto comma = text.find(',');
    if (comma == std::string::npos)
        throw FlagError(flag + ": expected 'low,high', got '" + text + "'");
    target.low = parse_number(std::string_view(text).substr(0, comma), flag);
    target.high = parse_number(std::string_view(text).substr(comma + 1), flag);
}

GenSpec gen_spec_from(const Config& config) {
    GenSpec spec;
    spec.seed = config.seed;
    apply_range(config.ranges.b, "--b-range", spec.b_range);
    apply_range(config.ranges.a0, "--a0-range", spec.a0_range);
    apply_range(config.ranges.t0, "--t0-range", spec.t0_range);
    apply_range(config.ranges.alpha, "--alpha-range", spec.alpha_range);
    try {
        validate_gen_spec(spec);
    } catch (const Error& e) {
        throw FlagError(e.what());
    }
    return spec;
}

EnumOptions enum_options_from(const Config& config) {
    EnumOptions options;
    options.workers = config.enumeration.workers;
    options.guard = config.enumeration.guard;
    options.force = config.enumeration.force;
    return options;
}

// "2..6", "2,4,8" or "5"
std::vector<std::size_t> parse_n_set(const std::string& text) {
    std::vector<std::size_t> out;
    if (const auto dots = text.find(".."); dots != std::string::npos) {
        const std::size_t low = parse_size(std::string_view(text).substr(0, dots), "--n");
        const std::size_t high = parse_size(std::string_view(text).substr(dots + 2), "--n");
        if (low > high)
            throw FlagError("--n: empty range '" + text + "'");
        for (std::size_t n = low; n <= high; ++n)
            out.push_back(n);
    } else {
        std::string_view rest = text;
        for (;;) {
            const auto comma = rest.find(',');
            out.push_back(parse_size(rest.substr(0, comma), "--n"));
            if (comma == std::string_view::npos)
                break;
            rest.remove_prefix(comma + 1);
        }
    }
    if (std::find(out.begin(), out.end(), std::size_t{0}) != out.end())
        throw FlagError("--n: n must be >= 1");
    return out;
}

// Writes to the -o path when given, otherwise to `out`.
void emit(const Config& config, std::ostream& out, const std::string& text) {
    if (config.output_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(config.output_path, std::ios::binary);
    if (!file)
        throw IoError("cannot open '" + config.output_path + "' for writing");
    file << text;
    if (!file)
        throw IoError("failed writing '" + config.output_path + "'");
}

int cmd_gen(const Config& config, std::ostream& out, std::ostream& err) {
    if (config.gen_n == 0)
        throw FlagError("--n: n must be >= 1");
    if (config.count == 0)
        throw FlagError("--count: must be >= 1");
    const GenSpec spec = gen_spec_from(config);
    const auto header = provenance_header(spec);

    std::ostringstream text;
    if (config.count == 1) {
        for (const auto& line : header)
            text << "# " << line << '\n';
        write_instance(generate_instance(spec, config.gen_n), text);
    } else {
        std::vector<Instance> batch;
        batch.reserve(config.count);
        for (std::size_t i = 0; i < config.count; ++i) {
            GenSpec item = spec;
            item.seed = derive_seed(spec.seed, config.gen_n, i);
            batch.push_back(generate_instance(item, config.gen_n));
        }
        std::vector<std::string> batch_header = header;
        batch_header.push_back("record i uses seed derive_seed(seed, n, i), i = 0.." + std::to_string(config.count - 1));
        write_batch(batch, batch_header, text);
    }
    emit(config, out, text.str());
    if (!config.output_path.empty())
        for (const auto& line : header)
            err << "# " << line << '\n';
    return kOk;
}

Instance load_instance(const Config& config) {
    const int sources = (config.instance_path.empty() ? 0 : 1) + (config.solve_n ? 1 : 0) + (config.fixture_n ? 1 : 0);
    if (sources != 1)
        throw FlagError("solve needs exactly one instance source: --instance, --n or --fixture");

    if (!config.instance_path.empty()) {
        std::ifstream file(config.instance_path);
        if (!file)
            throw IoError("cannot open '" + config.instance_path + "'");
        try {
            if (config.record == 0)
                return read_instance(file);
            const auto batch = read_batch(file);
            if (config.record > batch.size())
                throw FlagError("--record " + std::to_string(config.record) + ": file holds " +
                                std::to_string(batch.size()) + " records");
            return batch[config.record - 1];
        } catch (const Error& e) {
            throw IoError(config.instance_path + ": " + e.what());
        }
    }

    if (config.solve_n) {
        if (*config.solve_n == 0)
            throw FlagError("--n: n must be >= 1");
        return generate_instance(gen_spec_from(config), *config.solve_n);
    }

    if (!config.a0 || !config.alpha || !config.t0)
        throw FlagError("--fixture requires --a0, --alpha and --t0");
    try {
        return fixture_instance(*config.fixture_n, *config.a0, *config.alpha, *config.t0);
    } catch (const Error& e) {
        throw FlagError(e.what());
    }
}

int cmd_solve(const Config& config, std::ostream& out, std::ostream& err) {
    const auto solver = parse_solver_id(config.solver);
    if (!solver)
        throw FlagError("--solver: unknown solver '" + config.solver + "'");
    const std::string format = config.format.empty() ? "text" : config.format;
    if (format != "text" && format != "json")
        throw FlagError("--format: expected text or json, got '" + format + "'");

    const Instance instance = load_instance(config);
    if (instance.t0() == 0.0)
        err << "note: t0 = 0, the machine starts at time zero\n";

    HeuristicOptions heuristic_options;
    heuristic_options.second_smallest_variant = config.second_smallest_variant;

    SolveOutcome outcome = [&] {
        switch (*solver) {
        case SolverId::ExactEnum: return solve_exact_enumeration(instance, enum_options_from(config));
        case SolverId::ExactBnb: return solve_exact_bnb(instance);
        case SolverId::Sdr: return solve_sdr(instance);
        case SolverId::Ldr: return solve_ldr(instance);
        case SolverId::Heuristic: return solve_heuristic(instance, heuristic_options);
        }
        throw FlagError("--solver: unsupported");
    }();

    std::ostringstream text;
    const Schedule& schedule = outcome.schedule;
    if (format == "json") {
        nlohmann::json doc;
        doc["instance"] = {{"n", instance.n()},
                           {"a0", instance.a0()},
                           {"alpha", instance.alpha()},
                           {"t0", instance.t0()},
                           {"b", std::vector<double>(instance.rates().begin(), instance.rates().end())}};
        doc["solver"] = std::string(to_string(outcome.solver));
        doc["sequence"] = schedule.sequence.labels();
        doc["completion_times"] = schedule.completion_times;
        doc["makespan"] = schedule.makespan;
        doc["wall_time_s"] = outcome.wall_time;
        if (outcome.evaluated)
            doc["evaluated"] = *outcome.evaluated;
        if (config.solve_n)
            doc["seed"] = config.seed;
        text << doc.dump(2) << '\n';
    } else {
        text << "instance: " << format_record(instance) << '\n';
        if (config.solve_n)
            text << "seed: " << config.seed << " (" << kPrngName << ", " << kPrngMapping << ")\n";
        text << "solver: " << to_string(outcome.solver) << '\n';
        text << "sequence: " << format_sequence(schedule.sequence) << '\n';
        text << "completion_times:";
        for (double c : schedule.completion_times)
            text << ' ' << format_number(c);
        text << '\n';
        text << "makespan: " << format_number(schedule.makespan) << '\n';
        text << "wall_time_s: " << format_number(outcome.wall_time) << '\n';
        if (outcome.evaluated)
            text << "evaluated: " << *outcome.evaluated << '\n';
    }
    emit(config, out, text.str());
    return kOk;
}

int cmd_bench(const Config& config, std::ostream& out, std::ostream& err) {
    if (config.reps == 0)
        throw FlagError("--reps: must be >= 1");
    const std::string format_text = config.format.empty() ? "csv" : config.format;
    TableFormat format;
    try {
        format = parse_table_format(format_text);
    } catch (const Error& e) {
        throw FlagError(std::string("--format: ") + e.what());
    }

    BenchConfig bench;
    bench.n_set = parse_n_set(config.n_spec);
    bench.replications = config.reps;
    bench.gen_spec = gen_spec_from(config);
    bench.enum_options = enum_options_from(config);
    bench.heuristic_options.second_smallest_variant = config.second_smallest_variant;

    const BenchTable table = run_benchmark(bench);

    auto header = provenance_header(bench.gen_spec);
    header.push_back("n=" + config.n_spec + " reps=" + std::to_string(config.reps) +
                     " per-instance seed=derive_seed(seed, n, rep)");

    std::string text;
    if (format == TableFormat::Markdown) {
        for (const auto& line : header)
            text += "<!-- " + line + " -->\n";
        text += '\n';
    } else {
        for (const auto& line : header)
            err << "# " << line << '\n';
    }
    text += render_table(table, format, RenderOptions{config.full_precision});
    if (config.sequences && format == TableFormat::Markdown)
        text += "\n" + render_sequences(table);
    emit(config, out, text);
    return kOk;
}

void add_range_flags(CLI::App* app, Config& config) {
    app->add_option("--b-range", config.ranges.b, "deterioration rate range low,high (default 0,6)");
    app->add_option("--a0-range", config.ranges.a0, "base time range low,high (default 0.5,2.5)");
    app->add_option("--t0-range", config.ranges.t0, "start time range low,high (default 0.5,1.5)");
    app->add_option("--alpha-range", config.ranges.alpha, "learning index range low,high (default 0,1)");
}

void add_enum_flags(CLI::App* app, Config& config) {
    app->add_option("--workers", config.enumeration.workers, "enumeration threads (0 = all cores)");
    app->add_option("--guard", config.enumeration.guard, "largest n enumerated without --force")
        ->default_val(kDefaultEnumGuard);
    app->add_flag("--force", config.enumeration.force, "enumerate beyond the guard");
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Config config;
    CLI::App app{"Single-machine makespan scheduling with deteriorating jobs and learning effects", "dlsched"};
    app.require_subcommand(1);

    auto* gen = app.add_subcommand("gen", "generate random instance files");
    gen->add_option("--n", config.gen_n, "number of jobs")->required();
    gen->add_option("--seed", config.seed, "RNG seed");
    gen->add_option("--count", config.count, "instances to generate (>1 writes a batch file)");
    gen->add_option("-o,--output", config.output_path, "output file (default stdout)");
    add_range_flags(gen, config);

    auto* solve = app.add_subcommand("solve", "solve one instance");
    solve->add_option("-i,--instance", config.instance_path, "instance file");
    solve->add_option("--record", config.record, "read --instance as a batch file and take this 1-based record");
    solve->add_option("--n", config.solve_n, "generate a random instance with n jobs");
    solve->add_option("--seed", config.seed, "RNG seed for --n");
    solve->add_option("--fixture", config.fixture_n, "use the reference rate vector for n = 2..10");
    solve->add_option("--a0", config.a0, "base processing time for --fixture");
    solve->add_option("--alpha", config.alpha, "learning index for --fixture");
    solve->add_option("--t0", config.t0, "start time for --fixture");
    solve->add_option("--solver", config.solver, "exact | bnb | sdr | ldr | heuristic");
    solve->add_option("--format", config.format, "text | json");
    solve->add_option("-o,--output", config.output_path, "output file (default stdout)");
    solve->add_flag("--second-smallest-variant", config.second_smallest_variant,
                    "sequence2 starts with the second-smallest rate in the SDR branch");
    add_range_flags(solve, config);
    add_enum_flags(solve, config);

    auto* bench = app.add_subcommand("bench", "compare exact, heuristic and SDR on random instances");
    bench->add_option("--n", config.n_spec, "sizes: 2..10, 3,5,7 or 6")->required();
    bench->add_option("--reps", config.reps, "replications per n")->default_val(30);
    bench->add_option("--seed", config.seed, "base RNG seed");
    bench->add_option("--format", config.format, "csv | markdown");
    bench->add_option("-o,--output", config.output_path, "output file (default stdout)");
    bench->add_flag("--full-precision", config.full_precision, "print 17 significant digits");
    bench->add_flag("--sequences", config.sequences, "append best sequences (markdown only)");
    bench->add_flag("--second-smallest-variant", config.second_smallest_variant,
                    "sequence2 starts with the second-smallest rate in the SDR branch");
    add_range_flags(bench, config);
    add_enum_flags(bench, config);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kBadFlags;
    }

    try {
        if (gen->parsed())
            return cmd_gen(config, out, err);
        if (solve->parsed())
            return cmd_solve(config, out, err);
        return cmd_bench(config, out, err);
    } catch (const FlagError& e) {
        err << "error: " << e.what() << '\n';
        return kBadFlags;
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return kIoFailure;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        if (e.kind() == ErrorKind::TooLarge) {
            err << "hint: pass --force (or raise --guard) to enumerate anyway\n";
            return kGuardTripped;
        }
        return e.kind() == ErrorKind::InconsistentResult ? kIoFailure : kBadFlags;
    }
}

} // namespace dlsched::cli
