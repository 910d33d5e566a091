#include "dlsched/bench.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <sstream>

namespace dlsched {
namespace {

std::string fixed(double value, int decimals, const RenderOptions& options) {
    if (options.full_precision)
        return format_number(value);
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.*f", decimals, value);
    return buffer;
}

// Cells shared by every format so csv and markdown print identical numbers.
std::vector<std::string> row_cells(const BenchRow& row, const RenderOptions& options) {
    return {
        std::to_string(row.n),
        row.instance_id,
        fixed(row.makespan_exact, 3, options),
        fixed(row.makespan_heuristic, 3, options),
        fixed(row.makespan_sdr, 3, options),
        fixed(row.time_exact, 2, options),
        fixed(row.time_heuristic, 2, options),
        fixed(row.time_sdr, 2, options),
        fixed(row.err_heuristic, 2, options),
        fixed(row.err_sdr, 2, options),
    };
}

std::vector<std::string> mean_cells(const BenchTable& table, const RenderOptions& options) {
    return {"mean", "", "", "", "", "", "", "", fixed(table.mean_err_heuristic, 2, options),
            fixed(table.mean_err_sdr, 2, options)};
}

std::vector<std::string> header_cells() {
    std::vector<std::string> cells;
    std::string_view rest = kCsvHeader;
    for (;;) {
        const auto comma = rest.find(',');
        cells.emplace_back(rest.substr(0, comma));
        if (comma == std::string_view::npos)
            break;
        rest.remove_prefix(comma + 1);
    }
    return cells;
}

std::string join(const std::vector<std::string>& cells, TableFormat format) {
    std::string out;
    if (format == TableFormat::Markdown)
        out += "| ";
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i > 0)
            out += format == TableFormat::Csv ? "," : " | ";
        out += cells[i];
    }
    if (format == TableFormat::Markdown)
        out += " |";
    out += '\n';
    return out;
}

} // namespace

double error_percentage(double alg_makespan, double opt_makespan) {
    if (!(opt_makespan > 0.0) || !std::isfinite(opt_makespan))
        throw Error(ErrorKind::NonPositiveOptimum, "optimal makespan must be > 0, got " + format_number(opt_makespan));
    const double gap = alg_makespan - opt_makespan;
    if (gap < 0.0) {
        if (-gap <= kErrorClampTolerance * opt_makespan)
            return 0.0;
        throw Error(ErrorKind::InconsistentResult, "makespan " + format_number(alg_makespan) +
                                                       " beats the optimum " + format_number(opt_makespan));
    }
    return 100.0 * gap / opt_makespan;
}

double mean(std::span<const double> values) {
    if (values.empty())
        return 0.0;
    return std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(values.size());
}

std::uint64_t bench_instance_seed(const BenchConfig& config, std::size_t n, std::size_t replication) {
    return derive_seed(config.gen_spec.seed, n, replication);
}

BenchTable run_benchmark(const BenchConfig& config) {
    validate_gen_spec(config.gen_spec);
    for (std::size_t n : config.n_set) {
        if (n == 0)
            throw Error(ErrorKind::EmptyJobs, "benchmark sizes must be >= 1");
        if (n > config.enum_options.guard && !config.enum_options.force)
            throw Error(ErrorKind::TooLarge, "n = " + std::to_string(n) + " exceeds the enumeration guard of " +
                                                 std::to_string(config.enum_options.guard));
    }

    BenchTable table;
    for (std::size_t n : config.n_set) {
        for (std::size_t rep = 0; rep < config.replications; ++rep) {
            GenSpec spec = config.gen_spec;
            spec.seed = bench_instance_seed(config, n, rep);
            const Instance instance = generate_instance(spec, n);

            const SolveOutcome exact = solve_exact_enumeration(instance, config.enum_options);
            const SolveOutcome heuristic = solve_heuristic(instance, config.heuristic_options);
            const SolveOutcome sdr = solve_sdr(instance);

            BenchRow row;
            row.n = n;
            row.instance_id = "n" + std::to_string(n) + "-r" + std::to_string(rep) + "-s" + std::to_string(spec.seed);
            row.makespan_exact = exact.schedule.makespan;
            row.makespan_heuristic = heuristic.schedule.makespan;
            row.makespan_sdr = sdr.schedule.makespan;
            row.time_exact = exact.wall_time;
            row.time_heuristic = heuristic.wall_time;
            row.time_sdr = sdr.wall_time;
            row.err_heuristic = error_percentage(row.makespan_heuristic, row.makespan_exact);
            row.err_sdr = error_percentage(row.makespan_sdr, row.makespan_exact);
            row.seq_exact = exact.schedule.sequence;
            row.seq_heuristic = heuristic.schedule.sequence;
            row.seq_sdr = sdr.schedule.sequence;
            table.rows.push_back(std::move(row));
        }
    }
    aggregate(table);
    return table;
}

void aggregate(BenchTable& table) {
    std::vector<double> heuristic;
    std::vector<double> sdr;
    for (const auto& row : table.rows) {
        heuristic.push_back(row.err_heuristic);
        sdr.push_back(row.err_sdr);
    }
    table.mean_err_heuristic = mean(heuristic);
    table.mean_err_sdr = mean(sdr);
}

TableFormat parse_table_format(std::string_view text) {
    if (text == "csv")
        return TableFormat::Csv;
    if (text == "markdown" || text == "md")
        return TableFormat::Markdown;
    throw Error(ErrorKind::UnknownFormat, "unknown table format '" + std::string(text) + "' (csv, markdown)");
}

std::string render_table(const BenchTable& table, std::string_view format, const RenderOptions& options) {
    if (table.rows.empty())
        throw Error(ErrorKind::EmptyTable, "nothing to render");
    return render_table(table, parse_table_format(format), options);
}

std::string render_table(const BenchTable& table, TableFormat format, const RenderOptions& options) {
    if (table.rows.empty())
        throw Error(ErrorKind::EmptyTable, "nothing to render");

    const auto header = header_cells();
    std::string out = join(header, format);
    if (format == TableFormat::Markdown)
        out += join(std::vector<std::string>(header.size(), "---"), format);
    for (const auto& row : table.rows)
        out += join(row_cells(row, options), format);
    out += join(mean_cells(table, options), format);
    return out;
}

std::string render_sequences(const BenchTable& table) {
    if (table.rows.empty())
        throw Error(ErrorKind::EmptyTable, "nothing to render");
    std::ostringstream out;
    out << "| n | instance_id | method | best sequence |\n| --- | --- | --- | --- |\n";
    for (const auto& row : table.rows) {
        out << "| " << row.n << " | " << row.instance_id << " | exact | " << format_sequence(row.seq_exact) << " |\n";
        out << "| " << row.n << " | " << row.instance_id << " | sdr | " << format_sequence(row.seq_sdr) << " |\n";
        out << "| " << row.n << " | " << row.instance_id << " | heuristic | " << format_sequence(row.seq_heuristic)
            << " |\n";
    }
    return out.str();
}

} // namespace dlsched
