#pragma once

#include "dlsched/model.hpp"

#include <cstddef>
#include <cstdint>

namespace dlsched {

/// Largest n the exhaustive search accepts without `force`.
inline constexpr std::size_t kDefaultEnumGuard = 13;

struct EnumOptions {
    /// Worker threads; 0 selects std::thread::hardware_concurrency().
    std::size_t workers = 0;
    bool count_evaluated = true;
    std::size_t guard = kDefaultEnumGuard;
    bool force = false;
};

struct HeuristicOptions {
    /// When the first position takes the SDR branch, sequence2 starts with
    /// the second-smallest rate instead of the smallest.
    bool second_smallest_variant = false;
};

/// Ascending rate, ties by ascending job index.
SolveOutcome solve_sdr(const Instance& instance);

/// Descending rate, ties by ascending job index.
SolveOutcome solve_ldr(const Instance& instance);

/// Greedy threshold construction: at each position compare a0 with the
/// swap threshold at the current completion time and take the largest
/// (a0 at or above) or smallest (below) remaining rate.
Sequence heuristic_sequence1(const Instance& instance);

/// Same as heuristic_sequence1 except for the first position, which takes
/// the second-largest rate in the LDR branch.
Sequence heuristic_sequence2(const Instance& instance, const HeuristicOptions& options = {});

/// Better of the two heuristic sequences; sequence1 wins ties.
SolveOutcome solve_heuristic(const Instance& instance, const HeuristicOptions& options = {});

/// Evaluates all n! sequences. Among equal makespans the lexicographically
/// smallest order is returned, independent of the worker count.
/// Throws Error(TooLarge) when n > options.guard and !options.force.
SolveOutcome solve_exact_enumeration(const Instance& instance, const EnumOptions& options = {});

/// Depth-first branch and bound seeded with the heuristic schedule. Returns
/// the same optimal makespan as enumeration; among tied optima the sequence
/// may differ.
SolveOutcome solve_exact_bnb(const Instance& instance);

} // namespace dlsched
