#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mcs/classifier.hpp"
#include "mcs/inventory.hpp"

namespace mcs {

// One accepted exchange of two vowels' positions, with the score gain seen
// by the search evaluation.
struct SwapMove {
  Final a = Final::a;
  Final b = Final::a;
  double delta = 0.0;
};

struct SearchResult {
  VowelAllocation best;
  EvalReport score;  // re-scored at final_reps repetitions
  std::vector<SwapMove> trace;
};

struct SearchParams {
  std::uint64_t seed = kDefaultSeed;
  int max_iters = 16;
  int reps_per_eval = 20;   // evaluation budget inside the search
  int final_reps = 100;     // budget for the final report
  double train_fraction = 0.8;
  // Gains at or below this (in average points) do not count as improvement;
  // keeps the search from chasing sampling noise.
  double min_improvement = 0.05;
};

// The search objective: the unweighted mean of the five position scores.
double score_allocation(const std::vector<LipSample>& data,
                        const VowelAllocation& alloc,
                        const EvalParams& params = {});

// Steepest-ascent local search over pairwise vowel swaps. Every candidate
// must verify clean under `rules`; all candidates of a round are evaluated
// with the same seed (common random numbers) and the best improving one is
// accepted, ties going to the earliest pair in canonical vowel order.
// Candidate evaluations run in parallel; acceptance is serial per round.
SearchResult hill_climb(const std::vector<LipSample>& data,
                        const VowelAllocation& start,
                        const ConfusablePairs& rules = ConfusablePairs::standard(),
                        const SearchParams& params = {});

// Exhaustive enumeration of all legal swap sequences up to `depth`
// (depth <= 2 keeps this below C(16,2)^2 evaluations); the test oracle for
// hill_climb. Ties prefer fewer swaps, then enumeration order.
SearchResult exhaustive_swap_search(const std::vector<LipSample>& data,
                                    const VowelAllocation& start, int depth,
                                    const ConfusablePairs& rules = ConfusablePairs::standard(),
                                    const SearchParams& params = {});

namespace serial {
SearchResult hill_climb(const std::vector<LipSample>& data,
                        const VowelAllocation& start,
                        const ConfusablePairs& rules = ConfusablePairs::standard(),
                        const SearchParams& params = {});
}  // namespace serial

// "swap a<->b +delta" lines, one per accepted move.
std::string format_trace(const std::vector<SwapMove>& trace);

}  // namespace mcs
