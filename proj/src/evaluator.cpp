#include "dlsched/evaluator.hpp"

#include <algorithm>
#include <cmath>

namespace dlsched {

std::vector<double> learning_factors(double alpha, std::size_t n) {
    std::vector<double> factors(n);
    for (std::size_t r = 0; r < n; ++r)
        factors[r] = std::pow(alpha, static_cast<double>(r));
    return factors;
}

double processing_time(const Instance& instance, JobIndex job, std::size_t position, double start) {
    const double factor = std::pow(instance.alpha(), static_cast<double>(position - 1));
    return (instance.a0() + instance.rate(job) * start) * factor;
}

Schedule evaluate(const Instance& instance, const Sequence& sequence) {
    const std::size_t n = sequence.size();
    const std::vector<double> factors = learning_factors(instance.alpha(), n);

    Schedule schedule{sequence, std::vector<double>(n), 0.0};
    double completion = instance.t0();
    for (std::size_t r = 0; r < n; ++r) {
        completion = advance(completion, instance.a0(), instance.rate(sequence[r]), factors[r]);
        schedule.completion_times[r] = completion;
    }
    schedule.makespan = completion;
    return schedule;
}

double swap_threshold(double start, double alpha, std::size_t position) {
    if (alpha == 1.0 || start == 0.0)
        return 0.0;
    return start * (1.0 - alpha) / std::pow(alpha, static_cast<double>(position));
}

std::string_view to_string(SwapPreference preference) {
    switch (preference) {
    case SwapPreference::Ldr: return "LDR";
    case SwapPreference::Sdr: return "SDR";
    case SwapPreference::Indifferent: return "Indifferent";
    }
    return "unknown";
}

SwapPreference swap_preference(const Instance& instance, std::size_t position, double start) {
    const double threshold = swap_threshold(start, instance.alpha(), position);
    const double a0 = instance.a0();
    const double scale = std::max(std::abs(a0), std::abs(threshold));
    if (std::abs(a0 - threshold) <= kIndifferenceTolerance * scale)
        return SwapPreference::Indifferent;
    return a0 > threshold ? SwapPreference::Ldr : SwapPreference::Sdr;
}

double pair_completion_delta(const Instance& instance, std::size_t position, double start,
                             double rate_k, double rate_l) {
    const double alpha = instance.alpha();
    const auto r = static_cast<double>(position);
    const double bracket = start * std::pow(alpha, r) - start * std::pow(alpha, r - 1.0) +
                           instance.a0() * std::pow(alpha, 2.0 * r - 1.0);
    return (rate_k - rate_l) * bracket;
}

} // namespace dlsched
