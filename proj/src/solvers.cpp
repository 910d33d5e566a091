#include "dlsched/solvers.hpp"

#include "dlsched/evaluator.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <limits>
#include <numeric>
#include <thread>

namespace dlsched {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

// Job indices ordered by rate, ties always by ascending index.
std::vector<JobIndex> rate_order(const Instance& instance, bool descending) {
    std::vector<JobIndex> order(instance.n());
    std::iota(order.begin(), order.end(), JobIndex{0});
    std::stable_sort(order.begin(), order.end(), [&](JobIndex lhs, JobIndex rhs) {
        return descending ? instance.rate(lhs) > instance.rate(rhs)
                          : instance.rate(lhs) < instance.rate(rhs);
    });
    return order;
}

// First entry of `ranking` not yet placed.
JobIndex first_unplaced(const std::vector<JobIndex>& ranking, const std::vector<bool>& placed) {
    for (JobIndex j : ranking)
        if (!placed[j])
            return j;
    return ranking.front();
}

SolveOutcome outcome_for(SolverId id, const Instance& instance, Sequence sequence, Clock::time_point start) {
    Schedule schedule = evaluate(instance, sequence);
    return SolveOutcome{id, std::move(schedule), seconds_since(start), std::nullopt};
}

// Shared greedy builder. `first` optionally fixes position 1.
Sequence threshold_greedy(const Instance& instance, std::optional<JobIndex> first) {
    const std::size_t n = instance.n();
    const auto descending = rate_order(instance, true);
    const auto ascending = rate_order(instance, false);
    const auto factors = learning_factors(instance.alpha(), n);

    std::vector<bool> placed(n, false);
    std::vector<JobIndex> order;
    order.reserve(n);
    double completion = instance.t0();

    for (std::size_t r = 0; r < n; ++r) {
        JobIndex job;
        if (r == 0 && first) {
            job = *first;
        } else {
            // Indifferent resolves to LDR: the rule is a0 >= threshold.
            const bool sdr = swap_preference(instance, r + 1, completion) == SwapPreference::Sdr;
            job = first_unplaced(sdr ? ascending : descending, placed);
        }
        placed[job] = true;
        order.push_back(job);
        completion = advance(completion, instance.a0(), instance.rate(job), factors[r]);
    }
    return Sequence::from_order(instance, std::move(order));
}

// Exhaustive depth-first search over completions of a fixed prefix. Children
// are visited in ascending job index so leaves arrive in lexicographic order
// and the strict comparison keeps the lexicographically first optimum.
class PermutationSearch {
public:
    PermutationSearch(const Instance& instance, std::span<const double> factors, bool prune)
        : rates_(instance.rates()), factors_(factors), a0_(instance.a0()), n_(instance.n()),
          prune_(prune), placed_(n_, false) {
        current_.reserve(n_);
    }

    void set_incumbent(double makespan, std::vector<JobIndex> order) {
        best_ = makespan;
        best_order_ = std::move(order);
    }

    void run(std::span<const JobIndex> prefix, double t0) {
        double completion = t0;
        for (JobIndex j : prefix) {
            completion = advance(completion, a0_, rates_[j], factors_[current_.size()]);
            placed_[j] = true;
            current_.push_back(j);
        }
        search(completion);
    }

    [[nodiscard]] double best() const { return best_; }
    [[nodiscard]] const std::vector<JobIndex>& best_order() const { return best_order_; }
    [[nodiscard]] std::uint64_t leaves() const { return leaves_; }
    [[nodiscard]] std::uint64_t nodes() const { return nodes_; }

private:
    // Runs the remaining positions with the smallest unplaced rate. Every
    // recurrence step is non-decreasing in both rate and start time (also
    // under rounding), so this never exceeds any real completion.
    [[nodiscard]] double lower_bound(double completion) const {
        double min_rate = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < n_; ++j)
            if (!placed_[j])
                min_rate = std::min(min_rate, rates_[j]);
        for (std::size_t r = current_.size(); r < n_; ++r)
            completion = advance(completion, a0_, min_rate, factors_[r]);
        return completion;
    }

    void search(double completion) {
        ++nodes_;
        const std::size_t depth = current_.size();
        if (depth == n_) {
            ++leaves_;
            if (completion < best_) {
                best_ = completion;
                best_order_ = current_;
            }
            return;
        }
        if (prune_ && lower_bound(completion) >= best_)
            return;
        for (JobIndex j = 0; j < n_; ++j) {
            if (placed_[j])
                continue;
            placed_[j] = true;
            current_.push_back(j);
            search(advance(completion, a0_, rates_[j], factors_[depth]));
            current_.pop_back();
            placed_[j] = false;
        }
    }

    std::span<const double> rates_;
    std::span<const double> factors_;
    double a0_;
    std::size_t n_;
    bool prune_;
    std::vector<bool> placed_;
    std::vector<JobIndex> current_;
    double best_ = std::numeric_limits<double>::infinity();
    std::vector<JobIndex> best_order_;
    std::uint64_t leaves_ = 0;
    std::uint64_t nodes_ = 0;
};

struct TaskResult {
    double best = std::numeric_limits<double>::infinity();
    std::vector<JobIndex> order;
    std::uint64_t leaves = 0;
};

// Ordered two-job prefixes (or the empty prefix for tiny n), in lexicographic order.
std::vector<std::vector<JobIndex>> enumeration_tasks(std::size_t n) {
    std::vector<std::vector<JobIndex>> tasks;
    if (n < 3) {
        tasks.emplace_back();
        return tasks;
    }
    for (JobIndex i = 0; i < n; ++i)
        for (JobIndex j = 0; j < n; ++j)
            if (i != j)
                tasks.push_back({i, j});
    return tasks;
}

} // namespace

SolveOutcome solve_sdr(const Instance& instance) {
    const auto start = Clock::now();
    return outcome_for(SolverId::Sdr, instance, Sequence::from_order(instance, rate_order(instance, false)), start);
}

SolveOutcome solve_ldr(const Instance& instance) {
    const auto start = Clock::now();
    return outcome_for(SolverId::Ldr, instance, Sequence::from_order(instance, rate_order(instance, true)), start);
}

Sequence heuristic_sequence1(const Instance& instance) {
    return threshold_greedy(instance, std::nullopt);
}

Sequence heuristic_sequence2(const Instance& instance, const HeuristicOptions& options) {
    if (instance.n() == 1)
        return threshold_greedy(instance, std::nullopt);

    const bool sdr = swap_preference(instance, 1, instance.t0()) == SwapPreference::Sdr;
    JobIndex first;
    if (sdr)
        first = rate_order(instance, false)[options.second_smallest_variant ? 1 : 0];
    else
        first = rate_order(instance, true)[1];
    return threshold_greedy(instance, first);
}

SolveOutcome solve_heuristic(const Instance& instance, const HeuristicOptions& options) {
    const auto start = Clock::now();
    Schedule first = evaluate(instance, heuristic_sequence1(instance));
    Schedule second = evaluate(instance, heuristic_sequence2(instance, options));
    Schedule& best = second.makespan < first.makespan ? second : first;
    return SolveOutcome{SolverId::Heuristic, std::move(best), seconds_since(start), std::nullopt};
}

SolveOutcome solve_exact_enumeration(const Instance& instance, const EnumOptions& options) {
    const std::size_t n = instance.n();
    if (n > options.guard && !options.force)
        throw Error(ErrorKind::TooLarge, "n = " + std::to_string(n) + " exceeds the enumeration guard of " +
                                             std::to_string(options.guard) + "; pass force to override");

    const auto start = Clock::now();
    const auto factors = learning_factors(instance.alpha(), n);
    const auto tasks = enumeration_tasks(n);
    std::vector<TaskResult> results(tasks.size());

    std::size_t workers = options.workers != 0 ? options.workers : std::thread::hardware_concurrency();
    workers = std::clamp<std::size_t>(workers, 1, tasks.size());

    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t t = next.fetch_add(1); t < tasks.size(); t = next.fetch_add(1)) {
            PermutationSearch search(instance, factors, false);
            search.run(tasks[t], instance.t0());
            results[t] = TaskResult{search.best(), search.best_order(), search.leaves()};
        }
    };
    if (workers == 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w)
            pool.emplace_back(work);
    }

    // Fold in task order; tasks are lexicographically ordered so the strict
    // comparison keeps the lexicographically smallest optimum.
    const TaskResult* best = &results.front();
    std::uint64_t leaves = 0;
    for (const auto& result : results) {
        leaves += result.leaves;
        if (result.best < best->best)
            best = &result;
    }

    Schedule schedule = evaluate(instance, Sequence::from_order(instance, best->order));
    SolveOutcome outcome{SolverId::ExactEnum, std::move(schedule), seconds_since(start), std::nullopt};
    if (options.count_evaluated)
        outcome.evaluated = leaves;
    return outcome;
}

SolveOutcome solve_exact_bnb(const Instance& instance) {
    const auto start = Clock::now();
    const auto factors = learning_factors(instance.alpha(), instance.n());
    const SolveOutcome seed = solve_heuristic(instance);

    PermutationSearch search(instance, factors, true);
    search.set_incumbent(seed.schedule.makespan,
                         std::vector<JobIndex>(seed.schedule.sequence.order().begin(),
                                               seed.schedule.sequence.order().end()));
    search.run({}, instance.t0());

    Schedule schedule = evaluate(instance, Sequence::from_order(instance, search.best_order()));
    return SolveOutcome{SolverId::ExactBnb, std::move(schedule), seconds_since(start), search.nodes()};
}

} // namespace dlsched
