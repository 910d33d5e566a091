#pragma once

#include "dlsched/instances.hpp"
#include "dlsched/model.hpp"
#include "dlsched/solvers.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace dlsched {

/// Negative gaps up to this relative size are float noise and clamp to 0.
inline constexpr double kErrorClampTolerance = 1e-9;

/// 100 (alg - opt) / opt.
///
/// Throws NonPositiveOptimum when opt <= 0, and InconsistentResult when alg
/// undercuts opt by more than kErrorClampTolerance (relative), since that
/// means the exact solver is wrong.
double error_percentage(double alg_makespan, double opt_makespan);

/// Plain arithmetic mean; 0 for an empty input.
double mean(std::span<const double> values);

struct BenchRow {
    std::size_t n = 0;
    std::string instance_id;
    double makespan_exact = 0.0;
    double makespan_heuristic = 0.0;
    double makespan_sdr = 0.0;
    double time_exact = 0.0;
    double time_heuristic = 0.0;
    double time_sdr = 0.0;
    double err_heuristic = 0.0;
    double err_sdr = 0.0;
    Sequence seq_exact;
    Sequence seq_heuristic;
    Sequence seq_sdr;
};

struct BenchTable {
    std::vector<BenchRow> rows;
    double mean_err_heuristic = 0.0;
    double mean_err_sdr = 0.0;
};

struct BenchConfig {
    std::vector<std::size_t> n_set;
    std::size_t replications = 30;
    GenSpec gen_spec; ///< gen_spec.seed is the base seed
    EnumOptions enum_options;
    HeuristicOptions heuristic_options;
};

/// Seed actually used for (n, replication) under a config.
std::uint64_t bench_instance_seed(const BenchConfig& config, std::size_t n, std::size_t replication);

/// Rows in (n_set order, replication) order. Deterministic apart from the
/// timing columns. Refuses up front (TooLarge) if any n trips the guard.
BenchTable run_benchmark(const BenchConfig& config);

/// Fills the mean fields from the rows.
void aggregate(BenchTable& table);

enum class TableFormat { Csv, Markdown };

/// Throws Error(UnknownFormat).
TableFormat parse_table_format(std::string_view text);

struct RenderOptions {
    /// Print every number with 17 significant digits instead of the fixed
    /// 3 (makespan) / 2 (seconds, percent) decimals.
    bool full_precision = false;
};

inline constexpr std::string_view kCsvHeader = "n,instance_id,mk_exact,mk_heur,mk_sdr,t_exact,t_heur,t_sdr,err_heur,err_sdr";

/// Header, one line per row, then a `mean` row carrying the error means.
/// Empty tables raise EmptyTable before the format is examined.
std::string render_table(const BenchTable& table, std::string_view format, const RenderOptions& options = {});
std::string render_table(const BenchTable& table, TableFormat format, const RenderOptions& options = {});

/// Markdown listing of the best sequence found by each method per row.
std::string render_sequences(const BenchTable& table);

} // namespace dlsched
