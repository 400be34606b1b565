#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mcs/inventory.hpp"
#include "mcs/pinyin.hpp"

namespace mcs {

inline constexpr std::uint64_t kDefaultSeed = 12345;

// One annotated video frame: inner-lip width A and height B.
struct LipSample {
  std::string speaker;
  std::string word;
  Final vowel = Final::a;  // base vowel
  int frame = 0;
  double a = 0.0;
  double b = 0.0;
};

using Point = std::array<double, 2>;

struct Gaussian2D {
  Point mu{};
  double sigma[2][2]{};  // symmetric; positive definite after fitting
};

// Sample mean and unbiased covariance. Near-singular covariances (smallest
// eigenvalue below 1e-9 of the largest) get a diagonal ridge of 1e-6 times
// the mean diagonal, floored at 1e-6 for fully degenerate clouds.
Gaussian2D fit_gaussian(std::span<const Point> samples);

// Bivariate normal density at x. Throws NumericDomainError unless sigma is
// positive definite.
double gaussian_pdf(const Gaussian2D& g, const Point& x);

// Highest-density label; exact ties go to the earlier label in the list.
// Callers keep the list in canonical vowel order.
Final classify(const std::vector<std::pair<Final, Gaussian2D>>& models,
               const Point& x);

struct PositionScore {
  double mean = 0.0;    // percent
  double stddev = 0.0;  // percent, over repetitions (n-1)
};

struct EvalParams {
  double train_fraction = 0.8;
  int repetitions = 100;
  std::uint64_t seed = kDefaultSeed;
};

// Repeated stratified split evaluation of one position: per repetition each
// vowel is split at the frame level, one Gaussian per vowel is fitted on the
// train part and every test frame is classified among that position's vowels
// only. Split streams are derived per (repetition, vowel), so a vowel's
// split does not depend on which other vowels share the position.
// Repetitions run in parallel; results are bit-identical to the serial
// reference for a given seed.
PositionScore evaluate_position(const std::vector<LipSample>& data,
                                Position pos, const VowelAllocation& alloc,
                                const EvalParams& params = {});

struct EvalReport {
  std::array<PositionScore, kPositionCount> per_position{};
  double average = 0.0;  // unweighted mean of the five position means
};

EvalReport evaluate_allocation(const std::vector<LipSample>& data,
                               const VowelAllocation& alloc,
                               const EvalParams& params = {});

namespace serial {
// Single-threaded reference implementations, kept for tests and the
// benchmark.
PositionScore evaluate_position(const std::vector<LipSample>& data,
                                Position pos, const VowelAllocation& alloc,
                                const EvalParams& params = {});
EvalReport evaluate_allocation(const std::vector<LipSample>& data,
                               const VowelAllocation& alloc,
                               const EvalParams& params = {});
}  // namespace serial

// CSV with header speaker,word,vowel,frame,A,B; "v" accepted for ü.
std::vector<LipSample> load_lip_csv(std::istream& in);
void save_lip_csv(std::ostream& out, const std::vector<LipSample>& data);

// Synthetic lip data: isotropic Gaussian clusters per vowel, weights
// normalized within a vowel.
struct ClusterSpec {
  Final vowel = Final::a;
  double cx = 0.0;
  double cy = 0.0;
  double sigma = 1.0;
  double weight = 1.0;
  std::string word;  // defaults to the vowel spelling
};

std::vector<LipSample> generate_synthetic(const std::vector<ClusterSpec>& specs,
                                          const std::map<Final, int>& frames,
                                          std::uint64_t seed);
std::vector<LipSample> generate_synthetic(const std::vector<ClusterSpec>& specs,
                                          int frames_per_vowel,
                                          std::uint64_t seed);

// Config lines: "vowel cx cy sigma [weight [word]]"; '#' comments.
std::vector<ClusterSpec> load_cluster_specs(std::istream& in);

}  // namespace mcs
