#include "dlsched/model.hpp"

#include <cmath>
#include <sstream>

namespace dlsched {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::NonPositiveA0: return "NonPositiveA0";
    case ErrorKind::AlphaOutOfRange: return "AlphaOutOfRange";
    case ErrorKind::NegativeRate: return "NegativeRate";
    case ErrorKind::NegativeStart: return "NegativeStart";
    case ErrorKind::EmptyJobs: return "EmptyJobs";
    case ErrorKind::JobCountMismatch: return "JobCountMismatch";
    case ErrorKind::NonFiniteValue: return "NonFiniteValue";
    case ErrorKind::WrongLength: return "WrongLength";
    case ErrorKind::DuplicateJob: return "DuplicateJob";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::BadRange: return "BadRange";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::NonPositiveOptimum: return "NonPositiveOptimum";
    case ErrorKind::InconsistentResult: return "InconsistentResult";
    case ErrorKind::UnknownFormat: return "UnknownFormat";
    case ErrorKind::EmptyTable: return "EmptyTable";
    }
    return "Unknown";
}

Instance validate_instance(const RawInstance& raw) {
    const std::size_t n = raw.n.value_or(raw.b.size());
    if (n == 0 || raw.b.empty())
        throw Error(ErrorKind::EmptyJobs, "instance must contain at least one job");
    if (raw.b.size() != n) {
        std::ostringstream msg;
        msg << "n = " << n << " but " << raw.b.size() << " deterioration rates given";
        throw Error(ErrorKind::JobCountMismatch, msg.str());
    }

    // NaN fails every comparison below, so finiteness is checked first.
    if (!std::isfinite(raw.a0) || !std::isfinite(raw.alpha) || !std::isfinite(raw.t0))
        throw Error(ErrorKind::NonFiniteValue, "a0, alpha and t0 must be finite");
    if (raw.a0 <= 0.0)
        throw Error(ErrorKind::NonPositiveA0, "a0 must be > 0, got " + std::to_string(raw.a0));
    if (raw.alpha <= 0.0 || raw.alpha > 1.0)
        throw Error(ErrorKind::AlphaOutOfRange,
                    "alpha must satisfy 0 < alpha <= 1, got " + std::to_string(raw.alpha));
    if (raw.t0 < 0.0)
        throw Error(ErrorKind::NegativeStart, "t0 must be >= 0, got " + std::to_string(raw.t0));

    for (std::size_t j = 0; j < n; ++j) {
        if (!std::isfinite(raw.b[j]))
            throw Error(ErrorKind::NonFiniteValue, "b_" + std::to_string(j + 1) + " is not finite");
        if (raw.b[j] < 0.0)
            throw Error(ErrorKind::NegativeRate, "b_" + std::to_string(j + 1) + " must be >= 0");
    }

    return Instance(raw.a0, raw.alpha, raw.t0, raw.b);
}

Sequence Sequence::from_order(const Instance& instance, std::vector<JobIndex> order) {
    const std::size_t n = instance.n();
    if (order.size() != n) {
        std::ostringstream msg;
        msg << "expected " << n << " jobs, got " << order.size();
        throw Error(ErrorKind::WrongLength, msg.str());
    }
    std::vector<bool> seen(n, false);
    for (JobIndex j : order) {
        if (j >= n)
            throw Error(ErrorKind::IndexOutOfRange, "job J" + std::to_string(j + 1) + " does not exist");
        if (seen[j])
            throw Error(ErrorKind::DuplicateJob, "job J" + std::to_string(j + 1) + " appears twice");
        seen[j] = true;
    }
    return Sequence(std::move(order));
}

std::vector<std::size_t> Sequence::labels() const {
    std::vector<std::size_t> out;
    out.reserve(order_.size());
    for (JobIndex j : order_)
        out.push_back(j + 1);
    return out;
}

Sequence validate_sequence(const Instance& instance, std::span<const std::size_t> labels) {
    std::vector<JobIndex> order;
    order.reserve(labels.size());
    for (std::size_t label : labels) {
        if (label == 0 || label > instance.n())
            throw Error(ErrorKind::IndexOutOfRange, "job label " + std::to_string(label) + " is out of range");
        order.push_back(label - 1);
    }
    return Sequence::from_order(instance, std::move(order));
}

std::string format_sequence(const Sequence& sequence) {
    std::string out;
    for (std::size_t r = 0; r < sequence.size(); ++r) {
        if (r > 0)
            out += ' ';
        out += 'J';
        out += std::to_string(sequence[r] + 1);
    }
    return out;
}

std::string_view to_string(SolverId id) {
    switch (id) {
    case SolverId::ExactEnum: return "exact_enum";
    case SolverId::ExactBnb: return "exact_bnb";
    case SolverId::Sdr: return "sdr";
    case SolverId::Ldr: return "ldr";
    case SolverId::Heuristic: return "heuristic";
    }
    return "unknown";
}

std::optional<SolverId> parse_solver_id(std::string_view text) {
    if (text == "exact_enum" || text == "exact" || text == "enum")
        return SolverId::ExactEnum;
    if (text == "exact_bnb" || text == "bnb")
        return SolverId::ExactBnb;
    if (text == "sdr")
        return SolverId::Sdr;
    if (text == "ldr")
        return SolverId::Ldr;
    if (text == "heuristic")
        return SolverId::Heuristic;
    return std::nullopt;
}

} // namespace dlsched
