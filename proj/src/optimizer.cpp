#include "mcs/optimizer.hpp"

#include <algorithm>
#include <cstdio>
#include <unordered_map>

namespace mcs {

namespace {

using Mask = std::uint16_t;  // bit per base vowel

Mask position_mask(const VowelAllocation& alloc, Position p) {
  Mask m = 0;
  for (Final v : alloc.members(p)) m |= Mask(1u << static_cast<int>(v));
  return m;
}

// Memoizes position scores by member set; a position's evaluation depends
// only on its members, the data and the evaluation parameters.
class ScoreCache {
 public:
  ScoreCache(const std::vector<LipSample>& data, const EvalParams& params,
             bool parallel)
      : data_(data), params_(params), parallel_(parallel) {}

  // Ensures every mask of `alloc` is cached; evaluates missing ones,
  // in parallel when enabled.
  void prime(const std::vector<VowelAllocation>& allocs) {
    std::vector<Mask> missing;
    std::vector<std::pair<Mask, Position>> where;
    for (const auto& alloc : allocs) {
      for (int p = 0; p < kPositionCount; ++p) {
        const Mask m = position_mask(alloc, static_cast<Position>(p));
        if (!cache_.count(m) &&
            std::find(missing.begin(), missing.end(), m) == missing.end()) {
          missing.push_back(m);
          where.emplace_back(m, static_cast<Position>(p));
        }
      }
    }
    std::vector<double> means(missing.size());
    if (parallel_) {
#pragma omp parallel for schedule(dynamic)
      for (int i = 0; i < static_cast<int>(missing.size()); ++i)
        means[i] = evaluate(where[i].first, where[i].second);
    } else {
      for (std::size_t i = 0; i < missing.size(); ++i)
        means[i] = evaluate(where[i].first, where[i].second);
    }
    for (std::size_t i = 0; i < missing.size(); ++i)
      cache_[missing[i]] = means[i];
  }

  double average(const VowelAllocation& alloc) const {
    double sum = 0.0;
    for (int p = 0; p < kPositionCount; ++p)
      sum += cache_.at(position_mask(alloc, static_cast<Position>(p)));
    return sum / kPositionCount;
  }

 private:
  double evaluate(Mask mask, Position pos) const {
    // Rebuild a minimal allocation that puts exactly these vowels at `pos`;
    // evaluate_position only looks at that position's members.
    VowelAllocation a;
    const Position other = pos == Position::P1 ? Position::P2 : Position::P1;
    for (int v = 0; v < kBaseVowelCount; ++v)
      a.set(static_cast<Final>(v),
            (mask >> v) & 1u ? pos : other);
    return serial::evaluate_position(data_, pos, a, params_).mean;
  }

  const std::vector<LipSample>& data_;
  EvalParams params_;
  bool parallel_;
  std::unordered_map<Mask, double> cache_;
};

struct Candidate {
  Final a, b;
  VowelAllocation alloc;
};

std::vector<Candidate> legal_swaps(const VowelAllocation& alloc,
                                   const ConfusablePairs& rules) {
  std::vector<Candidate> out;
  for (int ia = 0; ia < kBaseVowelCount; ++ia) {
    for (int ib = ia + 1; ib < kBaseVowelCount; ++ib) {
      const Final va = static_cast<Final>(ia);
      const Final vb = static_cast<Final>(ib);
      if (alloc.of(va) == alloc.of(vb)) continue;
      VowelAllocation cand = apply_swap(alloc, va, vb);
      if (!verify_vowel_allocation(cand, rules).empty()) continue;
      out.push_back({va, vb, std::move(cand)});
    }
  }
  return out;
}

SearchResult run_hill_climb(const std::vector<LipSample>& data,
                            const VowelAllocation& start,
                            const ConfusablePairs& rules,
                            const SearchParams& params, bool parallel) {
  EvalParams eval{params.train_fraction, params.reps_per_eval, params.seed};
  ScoreCache cache(data, eval, parallel);

  SearchResult result;
  result.best = start;
  cache.prime({start});
  double current = cache.average(start);

  for (int iter = 0; iter < params.max_iters; ++iter) {
    const auto candidates = legal_swaps(result.best, rules);
    std::vector<VowelAllocation> allocs;
    allocs.reserve(candidates.size());
    for (const auto& c : candidates) allocs.push_back(c.alloc);
    cache.prime(allocs);

    int best_idx = -1;
    double best_score = current;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      const double s = cache.average(candidates[i].alloc);
      // The first accepted candidate must clear the noise bar; after that a
      // strictly higher score takes over, first-in-order winning exact ties.
      const double bar =
          best_idx < 0 ? current + params.min_improvement : best_score;
      if (s > bar) {
        best_score = s;
        best_idx = static_cast<int>(i);
      }
    }
    if (best_idx < 0) break;
    result.trace.push_back(
        {candidates[best_idx].a, candidates[best_idx].b, best_score - current});
    result.best = candidates[best_idx].alloc;
    current = best_score;
  }

  EvalParams final_eval{params.train_fraction, params.final_reps, params.seed};
  result.score = evaluate_allocation(data, result.best, final_eval);
  return result;
}

}  // namespace

double score_allocation(const std::vector<LipSample>& data,
                        const VowelAllocation& alloc, const EvalParams& params) {
  return evaluate_allocation(data, alloc, params).average;
}

SearchResult hill_climb(const std::vector<LipSample>& data,
                        const VowelAllocation& start,
                        const ConfusablePairs& rules,
                        const SearchParams& params) {
  return run_hill_climb(data, start, rules, params, /*parallel=*/true);
}

namespace serial {
SearchResult hill_climb(const std::vector<LipSample>& data,
                        const VowelAllocation& start,
                        const ConfusablePairs& rules,
                        const SearchParams& params) {
  return run_hill_climb(data, start, rules, params, /*parallel=*/false);
}
}  // namespace serial

SearchResult exhaustive_swap_search(const std::vector<LipSample>& data,
                                    const VowelAllocation& start, int depth,
                                    const ConfusablePairs& rules,
                                    const SearchParams& params) {
  EvalParams eval{params.train_fraction, params.reps_per_eval, params.seed};
  ScoreCache cache(data, eval, /*parallel=*/true);

  struct Entry {
    VowelAllocation alloc;
    std::vector<SwapMove> trace;
  };
  std::vector<Entry> frontier{{start, {}}};
  cache.prime({start});

  SearchResult result;
  result.best = start;
  double best_score = cache.average(start);

  for (int d = 0; d < depth; ++d) {
    std::vector<Entry> next;
    for (const Entry& e : frontier) {
      for (const Candidate& c : legal_swaps(e.alloc, rules)) {
        Entry cand{c.alloc, e.trace};
        cand.trace.push_back({c.a, c.b, 0.0});
        next.push_back(std::move(cand));
      }
    }
    std::vector<VowelAllocation> allocs;
    allocs.reserve(next.size());
    for (const auto& e : next) allocs.push_back(e.alloc);
    cache.prime(allocs);

    // Only a clear improvement dethrones the incumbent, so equal-scoring
    // sequences keep the shallower, earlier-enumerated one.
    for (auto& e : next) {
      const double s = cache.average(e.alloc);
      if (s > best_score + params.min_improvement) {
        best_score = s;
        result.best = e.alloc;
        result.trace = e.trace;
      }
    }
    frontier = std::move(next);
  }

  // Backfill the per-move deltas along the winning trace.
  {
    VowelAllocation a = start;
    double prev = cache.average(a);
    for (SwapMove& m : result.trace) {
      a = apply_swap(a, m.a, m.b);
      const double s = cache.average(a);
      m.delta = s - prev;
      prev = s;
    }
  }

  EvalParams final_eval{params.train_fraction, params.final_reps, params.seed};
  result.score = evaluate_allocation(data, result.best, final_eval);
  return result;
}

std::string format_trace(const std::vector<SwapMove>& trace) {
  std::string out;
  char buf[64];
  for (const SwapMove& m : trace) {
    out += "swap " + to_string(m.a) + "<->" + to_string(m.b);
    std::snprintf(buf, sizeof buf, " %+.2f\n", m.delta);
    out += buf;
  }
  return out;
}

}  // namespace mcs
