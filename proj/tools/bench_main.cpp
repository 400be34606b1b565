#include <chrono>
#include <cstdio>

#include "mcs/classifier.hpp"
#include "mcs/optimizer.hpp"
#include "support/fixtures.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

}  // namespace

// Compares the OpenMP kernels against the serial reference: same numbers,
// different wall time.
int main() {
#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (built without OpenMP)\n");
#endif

  const auto data = mcs::generate_synthetic(fixtures::confusion_demo_specs(),
                                            150, mcs::kDefaultSeed);
  std::printf("samples: %zu\n", data.size());

  mcs::EvalParams eval;
  eval.repetitions = 400;

  auto t0 = std::chrono::steady_clock::now();
  const auto serial_report =
      mcs::serial::evaluate_allocation(data, mcs::final_allocation(), eval);
  const double t_serial = seconds_since(t0);

  t0 = std::chrono::steady_clock::now();
  const auto parallel_report =
      mcs::evaluate_allocation(data, mcs::final_allocation(), eval);
  const double t_parallel = seconds_since(t0);

  bool equal = serial_report.average == parallel_report.average;
  for (int p = 0; p < mcs::kPositionCount; ++p) {
    equal = equal &&
            serial_report.per_position[p].mean ==
                parallel_report.per_position[p].mean &&
            serial_report.per_position[p].stddev ==
                parallel_report.per_position[p].stddev;
  }
  std::printf("evaluate_allocation x%d reps: serial %.3fs, parallel %.3fs "
              "(x%.2f), results %s\n",
              eval.repetitions, t_serial, t_parallel,
              t_parallel > 0 ? t_serial / t_parallel : 0.0,
              equal ? "identical" : "DIFFER");

  mcs::SearchParams search;
  t0 = std::chrono::steady_clock::now();
  const auto serial_search =
      mcs::serial::hill_climb(data, mcs::preliminary_allocation(),
                              mcs::ConfusablePairs::standard(), search);
  const double s_serial = seconds_since(t0);

  t0 = std::chrono::steady_clock::now();
  const auto parallel_search =
      mcs::hill_climb(data, mcs::preliminary_allocation(),
                      mcs::ConfusablePairs::standard(), search);
  const double s_parallel = seconds_since(t0);

  const bool same_best = serial_search.best == parallel_search.best &&
                         serial_search.trace.size() ==
                             parallel_search.trace.size();
  std::printf("hill_climb: serial %.3fs, parallel %.3fs (x%.2f), %zu swaps, "
              "results %s\n",
              s_serial, s_parallel,
              s_parallel > 0 ? s_serial / s_parallel : 0.0,
              parallel_search.trace.size(), same_best ? "identical" : "DIFFER");

  return equal && same_best ? 0 : 1;
}
