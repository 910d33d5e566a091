#pragma once

#include "dlsched/model.hpp"

#include <cstdint>
#include <iosfwd>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace dlsched {

/// Open interval (low, high) for uniform sampling.
struct Range {
    double low = 0.0;
    double high = 0.0;

    friend bool operator==(const Range&, const Range&) = default;
};

/// Uniform parameter distributions for random instances. Defaults follow the
/// standard experimental setup: b ~ U(0,6), a0 ~ U(0.5,2.5), t0 ~ U(0.5,1.5),
/// alpha ~ U(0,1).
struct GenSpec {
    Range b_range{0.0, 6.0};
    Range a0_range{0.5, 2.5};
    Range t0_range{0.5, 1.5};
    Range alpha_range{0.0, 1.0};
    std::uint64_t seed = 0;
};

/// PRNG identification written into every generated-batch header.
inline constexpr std::string_view kPrngName = "mt19937_64";
inline constexpr std::string_view kPrngMapping = "u53-open";
inline constexpr int kGeneratorVersion = 1;

/// Alpha draws at or below this value are rejected and redrawn.
inline constexpr double kMinAlpha = 1e-6;

/// Maps one 64-bit draw to (0, 1): ((x >> 11) + 0.5) * 2^-53.
/// std::mt19937_64's output is fully specified by the standard and this
/// mapping is exact, so sampled instances are bit-reproducible on any
/// conforming platform (unlike std::uniform_real_distribution).
double unit_open(std::mt19937_64& engine);

/// Uniform draw strictly inside range, redrawing values that round onto an endpoint.
double sample_open(std::mt19937_64& engine, const Range& range);

/// Throws Error(BadRange) unless every range is finite, non-empty and
/// compatible with instance validity.
void validate_gen_spec(const GenSpec& spec);

/// Draws a0, t0, alpha (in that order) then b_1..b_n from an engine seeded
/// with spec.seed.
Instance generate_instance(const GenSpec& spec, std::size_t n);

/// Seed for replication `replication` of size `n` under a base seed
/// (splitmix64 mixing). Used by batch generation and the benchmark.
std::uint64_t derive_seed(std::uint64_t base, std::size_t n, std::size_t replication);

struct RateFixture {
    std::size_t n;
    std::vector<double> b;
};

/// The nine reference deterioration-rate vectors for n = 2..10. Only the
/// rates are fixed; a0, alpha and t0 must be supplied by the caller.
const std::vector<RateFixture>& reference_rate_vectors();

/// Builds an instance from the fixture of size n (2..10) plus caller parameters.
Instance fixture_instance(std::size_t n, double a0, double alpha, double t0);

/// 17 significant digits ("%.17g"); parses back to the identical double.
std::string format_number(double value);

/// Instance document: one `key = value` per line, '#' comments.
void write_instance(const Instance& instance, std::ostream& sink);
Instance read_instance(std::istream& source);

/// Single-line record `n=.. a0=.. alpha=.. t0=.. b=x,y,z`, used in batch files.
std::string format_record(const Instance& instance);
Instance parse_record(std::string_view line, std::size_t line_number = 1);

/// Batch file: header comment lines (each prefixed with "# ") then one record per line.
void write_batch(std::span<const Instance> instances, std::span<const std::string> header, std::ostream& sink);
std::vector<Instance> read_batch(std::istream& source);

/// Header lines describing how a batch was generated.
std::vector<std::string> provenance_header(const GenSpec& spec);

} // namespace dlsched
