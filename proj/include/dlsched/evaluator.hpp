#pragma once

#include "dlsched/model.hpp"

#include <cstddef>
#include <string_view>
#include <vector>

namespace dlsched {

/// Positional learning factors alpha^(r-1) for r = 1..n, stored 0-based.
/// Every evaluation path reads factors from this table so that incremental
/// and from-scratch evaluation perform bit-identical arithmetic.
std::vector<double> learning_factors(double alpha, std::size_t n);

/// One step of the completion-time recurrence: start + (a0 + b*start) * factor.
/// The operation order is fixed; solvers must go through this function.
[[nodiscard]] constexpr double advance(double start, double a0, double rate, double factor) noexcept {
    return start + (a0 + rate * start) * factor;
}

/// p_{j,r} = (a0 + b_j t) alpha^(r-1). Job is 0-based, position is 1-based.
double processing_time(const Instance& instance, JobIndex job, std::size_t position, double start);

/// Completion times from C_0 = t0 through C_n; makespan = C_n.
Schedule evaluate(const Instance& instance, const Sequence& sequence);

/// a0 value at which two adjacent jobs at positions r, r+1 starting at T are
/// interchangeable: T (1 - alpha) / alpha^r.
double swap_threshold(double start, double alpha, std::size_t position);

enum class SwapPreference { Ldr, Sdr, Indifferent };

std::string_view to_string(SwapPreference preference);

/// Relative tolerance for deciding a0 == threshold.
inline constexpr double kIndifferenceTolerance = 1e-12;

/// Which of two adjacent jobs at positions r, r+1 (starting at T) should go
/// first: the larger rate (Ldr) when a0 exceeds the threshold, the smaller
/// rate (Sdr) when a0 is below it.
SwapPreference swap_preference(const Instance& instance, std::size_t position, double start);

/// Closed-form (b_k - b_l)(T alpha^r - T alpha^(r-1) + a0 alpha^(2r-1)).
///
/// Equals C(l then k) - C(k then l), the difference of the second job's
/// completion time between the two adjacent orders when the pair occupies
/// positions r and r+1 after a prefix completing at T. Positive means
/// putting k first finishes the pair earlier.
double pair_completion_delta(const Instance& instance, std::size_t position, double start,
                             double rate_k, double rate_l);

} // namespace dlsched
