#pragma once

#include "dlsched/error.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dlsched {

/// Zero-based job index used internally. Everything user-facing (file
/// formats, printed sequences, validate_sequence) uses 1-based labels J1..Jn.
using JobIndex = std::size_t;

/// Unvalidated instance fields as supplied by a caller or a file parser.
struct RawInstance {
    std::optional<std::size_t> n;
    double a0 = 0.0;
    double alpha = 0.0;
    double t0 = 0.0;
    std::vector<double> b;
};

/// One problem of type 1 | p_{j,r} = (a0 + b_j t) alpha^(r-1) | Cmax.
///
/// Invariants: n >= 1, a0 > 0, 0 < alpha <= 1, t0 >= 0, every b_j >= 0, all
/// values finite. Only obtainable through validate_instance.
class Instance {
public:
    [[nodiscard]] std::size_t n() const noexcept { return rates_.size(); }
    [[nodiscard]] double a0() const noexcept { return a0_; }
    [[nodiscard]] double alpha() const noexcept { return alpha_; }
    [[nodiscard]] double t0() const noexcept { return t0_; }
    [[nodiscard]] double rate(JobIndex j) const { return rates_.at(j); }
    [[nodiscard]] std::span<const double> rates() const noexcept { return rates_; }

    friend bool operator==(const Instance&, const Instance&) = default;

private:
    friend Instance validate_instance(const RawInstance& raw);

    Instance(double a0, double alpha, double t0, std::vector<double> rates)
        : a0_(a0), alpha_(alpha), t0_(t0), rates_(std::move(rates)) {}

    double a0_;
    double alpha_;
    double t0_;
    std::vector<double> rates_;
};

/// Validates raw fields; throws Error on the first violated constraint.
/// When raw.n is absent the job count is taken from raw.b.
Instance validate_instance(const RawInstance& raw);

/// A processing order: position r (0-based here) holds job order()[r].
class Sequence {
public:
    /// Empty order, the only valid permutation of zero jobs.
    Sequence() = default;

    /// Builds from 0-based job indices, checking the permutation property.
    static Sequence from_order(const Instance& instance, std::vector<JobIndex> order);

    [[nodiscard]] std::span<const JobIndex> order() const noexcept { return order_; }
    [[nodiscard]] std::size_t size() const noexcept { return order_.size(); }
    [[nodiscard]] JobIndex operator[](std::size_t position) const { return order_[position]; }

    /// 1-based job labels, the external representation.
    [[nodiscard]] std::vector<std::size_t> labels() const;

    friend bool operator==(const Sequence&, const Sequence&) = default;

private:
    explicit Sequence(std::vector<JobIndex> order) : order_(std::move(order)) {}

    std::vector<JobIndex> order_;
};

/// Validates a 1-based label list such as {2, 3, 1}.
Sequence validate_sequence(const Instance& instance, std::span<const std::size_t> labels);

/// "J2 J3 J1"
std::string format_sequence(const Sequence& sequence);

struct Schedule {
    Sequence sequence;
    std::vector<double> completion_times;
    double makespan = 0.0;
};

enum class SolverId { ExactEnum, ExactBnb, Sdr, Ldr, Heuristic };

std::string_view to_string(SolverId id);
std::optional<SolverId> parse_solver_id(std::string_view text);

struct SolveOutcome {
    SolverId solver;
    Schedule schedule;
    double wall_time = 0.0; ///< seconds
    /// Complete sequences evaluated (enumeration) or search nodes visited
    /// (branch and bound), when the solver tracks it.
    std::optional<std::uint64_t> evaluated;
};

} // namespace dlsched
