// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Random instances come from the library generator with its default
// parameter ranges and fixed seeds, so every run checks the same cases.

#include "dlsched/bench.hpp"
#include "dlsched/evaluator.hpp"
#include "dlsched/instances.hpp"
#include "dlsched/solvers.hpp"

#include "test_support.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace dlsched;
using dlsched::testing::make_instance;
using dlsched::testing::rel_close;

namespace {

struct Verdict {
    bool pass = true;
    std::string detail;
};

// Collects the first few failure messages.
class Checker {
public:
    void require(bool ok, const std::string& what) {
        if (ok)
            return;
        ++failures_;
        if (failures_ <= 3)
            notes_ += (notes_.empty() ? "" : "; ") + what;
    }
    Verdict verdict(const std::string& summary) const {
        if (failures_ == 0)
            return {true, summary};
        return {false, summary + " | " + std::to_string(failures_) + " failure(s): " + notes_};
    }

private:
    std::size_t failures_ = 0;
    std::string notes_;
};

Instance generated(std::uint64_t seed, std::size_t n) {
    GenSpec spec;
    spec.seed = seed;
    return generate_instance(spec, n);
}

std::string fmt(double value, int decimals = 4) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.*f", decimals, value);
    return buffer;
}

// Reference makespan pairs (algorithm, optimum) and their recorded error cells.
struct ReferenceCell {
    const char* label;
    double algorithm;
    double optimum;
    double reference_error;
};

constexpr ReferenceCell kReferenceCells[] = {
    {"n=2 sdr", 26.265, 24.975, 5.16},       {"n=3 sdr", 93.334, 82.948, 12.52},
    {"n=4 sdr", 21.159, 16.780, 26.09},      {"n=5 sdr", 105.765, 81.458, 29.84},
    {"n=6 sdr", 249.031, 185.756, 34.06},    {"n=7 sdr", 4361.866, 3836.419, 13.69},
    {"n=8 sdr", 1435.403, 1020.844, 40.60},  {"n=9 sdr", 2691.113, 2162.115, 24.46},
    {"n=10 sdr", 5219.636, 4277.653, 22.02}, {"n=4 heuristic", 16.864, 16.780, 0.50},
};

Verdict metric_reproduction() {
    Checker check;
    for (const auto& cell : kReferenceCells) {
        const double err = error_percentage(cell.algorithm, cell.optimum);
        check.require(std::abs(err - cell.reference_error) <= 0.01,
                      std::string(cell.label) + " gives " + fmt(err) + ", expected " + fmt(cell.reference_error, 2));
    }
    // The n=10 heuristic cell is recorded as 1.70 but its own makespans give
    // 1.07; it is reported here and not asserted.
    const double n10 = error_percentage(4323.567, 4277.653);
    return check.verdict("10 reference cells within 0.01; n=10 heuristic cell recomputes to " + fmt(n10, 2) +
                         " (recorded 1.70, excluded)");
}

Verdict mean_aggregation() {
    const std::vector<double> heuristic{0, 0, 0.50, 0, 0, 0, 0, 0, 1.70};
    const std::vector<double> sdr{5.16, 12.52, 26.09, 29.84, 34.06, 13.69, 40.60, 24.46, 22.02};
    const double mh = mean(heuristic), ms = mean(sdr);
    Checker check;
    check.require(std::abs(mh - 0.24) <= 0.005, "heuristic mean " + fmt(mh));
    check.require(std::abs(ms - 23.16) <= 0.005, "sdr mean " + fmt(ms));
    return check.verdict("heuristic " + fmt(mh) + ", sdr " + fmt(ms));
}

// Adjacent pair swapped behind a random prefix of a generated instance, so
// the start time is a reachable completion time.
Verdict threshold_equivalence() {
    Checker check;
    std::mt19937_64 rng(20240601);
    std::size_t configs = 0, ldr = 0, sdr = 0;
    for (std::uint64_t seed = 0; seed < 1500; ++seed) {
        const std::size_t n = 2 + seed % 9;
        const Instance inst = generated(seed, n);
        std::vector<std::size_t> order(n);
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::shuffle(order.begin(), order.end(), rng);
        const std::size_t r = std::uniform_int_distribution<std::size_t>(1, n - 1)(rng);
        std::vector<std::size_t> swapped = order;
        std::swap(swapped[r - 1], swapped[r]);

        const Schedule kl = evaluate(inst, Sequence::from_order(inst, order));
        const Schedule lk = evaluate(inst, Sequence::from_order(inst, swapped));
        const double start = r == 1 ? inst.t0() : kl.completion_times[r - 2];
        const double bk = inst.rate(order[r - 1]), bl = inst.rate(order[r]);
        const double brute = lk.completion_times[r] - kl.completion_times[r];
        const double closed = pair_completion_delta(inst, r, start, bk, bl);
        const double scale = std::max(1.0, kl.completion_times[r]);
        check.require(std::abs(brute - closed) <= 1e-9 * scale, "seed " + std::to_string(seed) + " delta mismatch");

        const double larger_first = bk >= bl ? kl.completion_times[r] : lk.completion_times[r];
        const double smaller_first = bk >= bl ? lk.completion_times[r] : kl.completion_times[r];
        switch (swap_preference(inst, r, start)) {
        case SwapPreference::Ldr:
            ++ldr;
            check.require(larger_first <= smaller_first + 1e-9 * scale, "seed " + std::to_string(seed) + " ldr worse");
            break;
        case SwapPreference::Sdr:
            ++sdr;
            check.require(smaller_first <= larger_first + 1e-9 * scale, "seed " + std::to_string(seed) + " sdr worse");
            break;
        case SwapPreference::Indifferent: break;
        }
        ++configs;
    }
    check.require(configs >= 1000, "too few configurations");
    check.require(ldr > 0 && sdr > 0, "both preferences must be exercised");
    return check.verdict(std::to_string(configs) + " configurations (" + std::to_string(ldr) + " ldr, " +
                         std::to_string(sdr) + " sdr)");
}

Verdict exact_agreement() {
    Checker check;
    std::size_t instances = 0;
    for (std::uint64_t seed = 0; seed < 240; ++seed) {
        const std::size_t n = 2 + seed % 8;
        const Instance inst = generated(1000 + seed, n);
        EnumOptions many;
        many.workers = 4; // explicit, so single-core hosts still split the work
        EnumOptions single;
        single.workers = 1;
        const SolveOutcome e = solve_exact_enumeration(inst, many);
        const SolveOutcome b = solve_exact_bnb(inst);
        check.require(rel_close(e.schedule.makespan, b.schedule.makespan, 1e-12),
                      "n=" + std::to_string(n) + " seed " + std::to_string(seed) + " bnb differs");
        if (n <= 8) {
            const SolveOutcome s = solve_exact_enumeration(inst, single);
            check.require(s.schedule.sequence == e.schedule.sequence && s.schedule.makespan == e.schedule.makespan,
                          "seed " + std::to_string(seed) + " worker count changes the result");
        }
        ++instances;
    }
    return check.verdict(std::to_string(instances) + " instances, n in 2..9; 1 vs 4 workers for n <= 8");
}

Verdict heuristic_quality() {
    BenchConfig config;
    for (std::size_t n = 2; n <= 10; ++n)
        config.n_set.push_back(n);
    config.replications = 30;
    config.gen_spec.seed = 1;
    const BenchTable table = run_benchmark(config);
    Checker check;
    check.require(table.rows.size() == 270, "expected 270 rows");
    check.require(table.mean_err_heuristic < 5.0, "heuristic mean " + fmt(table.mean_err_heuristic, 3));
    check.require(table.mean_err_sdr > table.mean_err_heuristic, "sdr mean not above heuristic mean");
    return check.verdict("seed 1, 30 reps x n=2..10: heuristic " + fmt(table.mean_err_heuristic, 3) + "%, sdr " +
                         fmt(table.mean_err_sdr, 3) + "%");
}

Verdict enumeration_feasibility() {
    const Instance inst = fixture_instance(10, 1.5, 0.8, 1.0);
    const auto start = std::chrono::steady_clock::now();
    const SolveOutcome out = solve_exact_enumeration(inst);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    Checker check;
    check.require(out.evaluated && *out.evaluated == 3628800ULL, "permutation count");
    check.require(seconds < 120.0, "took " + fmt(seconds, 2) + " s");
    return check.verdict("n=10 in " + fmt(seconds, 3) + " s, " + std::to_string(out.evaluated.value_or(0)) +
                         " sequences");
}

Verdict invariants() {
    Checker check;

    // alpha = 1: LDR is optimal.
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const Instance g = generated(5000 + seed, 1 + seed % 7);
        const std::vector<double> b(g.rates().begin(), g.rates().end());
        const Instance inst = make_instance(g.a0(), 1.0, g.t0(), b);
        const double ldr = solve_ldr(inst).schedule.makespan;
        const double opt = solve_exact_enumeration(inst).schedule.makespan;
        check.require(rel_close(ldr, opt, 1e-12), "alpha=1 seed " + std::to_string(seed));
    }

    // b = 0: every permutation has makespan t0 + a0 * sum alpha^(r-1).
    for (std::size_t n = 1; n <= 6; ++n) {
        const Instance g = generated(6000 + n, n);
        const Instance inst = make_instance(g.a0(), g.alpha(), g.t0(), std::vector<double>(n, 0.0));
        double expected = inst.t0(), weight = 1.0;
        for (std::size_t r = 0; r < n; ++r, weight *= inst.alpha())
            expected += inst.a0() * weight;
        std::vector<std::size_t> order(n);
        std::iota(order.begin(), order.end(), std::size_t{0});
        do {
            const double m = evaluate(inst, Sequence::from_order(inst, order)).makespan;
            check.require(rel_close(m, expected, 1e-12), "b=0 n=" + std::to_string(n));
        } while (std::next_permutation(order.begin(), order.end()));
    }

    // Later start, later finish, for a fixed sequence.
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        const Instance g = generated(7000 + seed, 1 + seed % 10);
        const std::vector<double> b(g.rates().begin(), g.rates().end());
        const Instance later = make_instance(g.a0(), g.alpha(), g.t0() + 0.25, b);
        const Sequence seq = solve_heuristic(g).schedule.sequence;
        check.require(evaluate(later, Sequence::from_order(later, std::vector<std::size_t>(seq.order().begin(),
                                                                                            seq.order().end())))
                              .makespan > evaluate(g, seq).makespan,
                      "t0 monotonicity seed " + std::to_string(seed));
    }

    // Neither heuristic nor SDR beats the optimum.
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        const Instance inst = generated(8000 + seed, 1 + seed % 9);
        const double opt = solve_exact_enumeration(inst).schedule.makespan;
        check.require(solve_heuristic(inst).schedule.makespan >= opt, "heuristic below optimum");
        check.require(solve_sdr(inst).schedule.makespan >= opt, "sdr below optimum");
    }
    return check.verdict("alpha=1 ldr (100), b=0 exhaustive n<=6, t0 monotonicity (300), bounds (300)");
}

// Everything observable except wall times, rendered to text.
std::string deterministic_transcript() {
    std::ostringstream out;
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const Instance inst = generated(seed, 1 + seed % 9);
        out << format_record(inst) << '\n';
        for (const SolveOutcome& s : {solve_exact_enumeration(inst), solve_exact_bnb(inst), solve_heuristic(inst),
                                      solve_sdr(inst), solve_ldr(inst)}) {
            out << to_string(s.solver) << ' ' << format_sequence(s.schedule.sequence);
            for (double c : s.schedule.completion_times)
                out << ' ' << format_number(c);
            out << ' ' << s.evaluated.value_or(0) << '\n';
        }
    }
    BenchConfig config;
    config.n_set = {3, 6, 8};
    config.replications = 4;
    config.gen_spec.seed = 77;
    const BenchTable table = run_benchmark(config);
    for (const auto& row : table.rows)
        out << row.instance_id << ' ' << format_number(row.makespan_exact) << ' '
            << format_number(row.makespan_heuristic) << ' ' << format_number(row.makespan_sdr) << ' '
            << format_sequence(row.seq_exact) << '\n';
    out << format_number(table.mean_err_heuristic) << ' ' << format_number(table.mean_err_sdr) << '\n';
    return out.str();
}

Verdict determinism() {
    const std::string first = deterministic_transcript();
    const std::string second = deterministic_transcript();
    Checker check;
    check.require(first == second, "transcripts differ");
    return check.verdict("two runs, " + std::to_string(first.size()) + " bytes of instances, sequences, makespans");
}

} // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria{
        {"1 metric reproduction", metric_reproduction},
        {"2 mean aggregation", mean_aggregation},
        {"3 threshold rule vs pair swap", threshold_equivalence},
        {"4 exact solver agreement", exact_agreement},
        {"5 heuristic quality", heuristic_quality},
        {"6 enumeration feasibility", enumeration_feasibility},
        {"7 invariant suite", invariants},
        {"8 determinism", determinism},
    };
    int failed = 0;
    for (const auto& [name, run] : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Verdict verdict;
        try {
            verdict = run();
        } catch (const std::exception& e) {
            verdict = {false, std::string("exception: ") + e.what()};
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("[%s] %s: %s (%.2f s)\n", verdict.pass ? "PASS" : "FAIL", name, verdict.detail.c_str(), seconds);
        std::fflush(stdout);
        failed += verdict.pass ? 0 : 1;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
