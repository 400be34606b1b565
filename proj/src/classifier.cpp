#include "mcs/classifier.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "mcs/errors.hpp"
#include "mcs/rng.hpp"

namespace mcs {

namespace {

constexpr double kPi = 3.14159265358979323846;

struct VowelSamples {
  Final vowel;
  std::vector<Point> points;
};

std::vector<VowelSamples> collect_position_samples(
    const std::vector<LipSample>& data, Position pos,
    const VowelAllocation& alloc) {
  std::vector<VowelSamples> out;
  for (Final v : alloc.members(pos)) out.push_back({v, {}});
  for (const LipSample& s : data) {
    for (auto& vs : out) {
      if (vs.vowel == s.vowel) {
        vs.points.push_back({s.a, s.b});
        break;
      }
    }
  }
  for (const auto& vs : out) {
    if (vs.points.size() < 5) {
      throw InsufficientDataError(
          "vowel " + to_string(vs.vowel) + " has only " +
              std::to_string(vs.points.size()) + " samples (need at least 5)",
          to_string(vs.vowel));
    }
  }
  return out;
}

int train_count(std::size_t n, double fraction) {
  int k = static_cast<int>(std::floor(static_cast<double>(n) * fraction + 0.5));
  k = std::max(2, std::min(static_cast<int>(n) - 1, k));
  return k;
}

// One train/test repetition over the vowels of a position. The split of a
// vowel depends only on (seed, repetition, vowel), not on its co-members.
double run_repetition(const std::vector<VowelSamples>& vowels,
                      double train_fraction, std::uint64_t seed, int rep) {
  std::vector<std::pair<Final, Gaussian2D>> models;
  std::vector<std::vector<const Point*>> test_sets(vowels.size());
  for (std::size_t vi = 0; vi < vowels.size(); ++vi) {
    const auto& vs = vowels[vi];
    const std::size_t n = vs.points.size();
    std::vector<std::uint32_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0u);
    Rng rng(derive_seed(derive_seed(seed, static_cast<std::uint64_t>(rep)),
                        static_cast<std::uint64_t>(vs.vowel)));
    rng.shuffle(idx);
    const int ntrain = train_count(n, train_fraction);
    std::vector<Point> train;
    train.reserve(ntrain);
    for (int k = 0; k < ntrain; ++k) train.push_back(vs.points[idx[k]]);
    for (std::size_t k = ntrain; k < n; ++k)
      test_sets[vi].push_back(&vs.points[idx[k]]);
    models.emplace_back(vs.vowel, fit_gaussian(train));
  }
  std::size_t correct = 0;
  std::size_t total = 0;
  for (std::size_t vi = 0; vi < vowels.size(); ++vi) {
    for (const Point* p : test_sets[vi]) {
      ++total;
      if (classify(models, *p) == vowels[vi].vowel) ++correct;
    }
  }
  return total == 0 ? 0.0
                    : 100.0 * static_cast<double>(correct) /
                          static_cast<double>(total);
}

PositionScore summarize(const std::vector<double>& accuracies) {
  PositionScore score;
  const std::size_t n = accuracies.size();
  if (n == 0) return score;
  score.mean = std::accumulate(accuracies.begin(), accuracies.end(), 0.0) /
               static_cast<double>(n);
  if (n > 1) {
    double ss = 0.0;
    for (double a : accuracies) ss += (a - score.mean) * (a - score.mean);
    score.stddev = std::sqrt(ss / static_cast<double>(n - 1));
  }
  return score;
}

}  // namespace

Gaussian2D fit_gaussian(std::span<const Point> samples) {
  const std::size_t n = samples.size();
  if (n < 2)
    throw InsufficientDataError("need at least 2 samples to fit a Gaussian",
                                "");
  Gaussian2D g;
  for (const Point& p : samples) {
    g.mu[0] += p[0];
    g.mu[1] += p[1];
  }
  g.mu[0] /= static_cast<double>(n);
  g.mu[1] /= static_cast<double>(n);
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (const Point& p : samples) {
    const double dx = p[0] - g.mu[0];
    const double dy = p[1] - g.mu[1];
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  const double denom = static_cast<double>(n - 1);
  g.sigma[0][0] = sxx / denom;
  g.sigma[0][1] = g.sigma[1][0] = sxy / denom;
  g.sigma[1][1] = syy / denom;

  const double tr = g.sigma[0][0] + g.sigma[1][1];
  const double det = g.sigma[0][0] * g.sigma[1][1] - g.sigma[0][1] * g.sigma[0][1];
  const double disc = std::sqrt(std::max(0.0, tr * tr / 4.0 - det));
  const double eig_max = tr / 2.0 + disc;
  const double eig_min = tr / 2.0 - disc;
  if (eig_max <= 0.0 || eig_min < 1e-9 * eig_max) {
    const double ridge = std::max(1e-6 * tr / 2.0, 1e-6);
    g.sigma[0][0] += ridge;
    g.sigma[1][1] += ridge;
  }
  return g;
}

double gaussian_pdf(const Gaussian2D& g, const Point& x) {
  const double det =
      g.sigma[0][0] * g.sigma[1][1] - g.sigma[0][1] * g.sigma[1][0];
  if (!(det > 0.0) || !(g.sigma[0][0] > 0.0))
    throw NumericDomainError("covariance is not positive definite");
  const double dx = x[0] - g.mu[0];
  const double dy = x[1] - g.mu[1];
  const double quad = (g.sigma[1][1] * dx * dx - 2.0 * g.sigma[0][1] * dx * dy +
                       g.sigma[0][0] * dy * dy) /
                      det;
  return std::exp(-0.5 * quad) / (2.0 * kPi * std::sqrt(det));
}

Final classify(const std::vector<std::pair<Final, Gaussian2D>>& models,
               const Point& x) {
  if (models.empty()) throw Error("classify needs at least one model");
  Final best = models.front().first;
  double best_p = gaussian_pdf(models.front().second, x);
  for (std::size_t i = 1; i < models.size(); ++i) {
    const double p = gaussian_pdf(models[i].second, x);
    if (p > best_p) {
      best_p = p;
      best = models[i].first;
    }
  }
  return best;
}

PositionScore evaluate_position(const std::vector<LipSample>& data,
                                Position pos, const VowelAllocation& alloc,
                                const EvalParams& params) {
  const auto vowels = collect_position_samples(data, pos, alloc);
  std::vector<double> acc(static_cast<std::size_t>(params.repetitions));
#pragma omp parallel for schedule(static)
  for (int rep = 0; rep < params.repetitions; ++rep) {
    acc[static_cast<std::size_t>(rep)] =
        run_repetition(vowels, params.train_fraction, params.seed, rep);
  }
  return summarize(acc);
}

EvalReport evaluate_allocation(const std::vector<LipSample>& data,
                               const VowelAllocation& alloc,
                               const EvalParams& params) {
  EvalReport report;
  double sum = 0.0;
  for (int p = 0; p < kPositionCount; ++p) {
    report.per_position[p] =
        evaluate_position(data, static_cast<Position>(p), alloc, params);
    sum += report.per_position[p].mean;
  }
  report.average = sum / kPositionCount;
  return report;
}

namespace serial {

PositionScore evaluate_position(const std::vector<LipSample>& data,
                                Position pos, const VowelAllocation& alloc,
                                const EvalParams& params) {
  const auto vowels = collect_position_samples(data, pos, alloc);
  std::vector<double> acc;
  acc.reserve(static_cast<std::size_t>(params.repetitions));
  for (int rep = 0; rep < params.repetitions; ++rep)
    acc.push_back(run_repetition(vowels, params.train_fraction, params.seed, rep));
  return summarize(acc);
}

EvalReport evaluate_allocation(const std::vector<LipSample>& data,
                               const VowelAllocation& alloc,
                               const EvalParams& params) {
  EvalReport report;
  double sum = 0.0;
  for (int p = 0; p < kPositionCount; ++p) {
    report.per_position[p] =
        serial::evaluate_position(data, static_cast<Position>(p), alloc, params);
    sum += report.per_position[p].mean;
  }
  report.average = sum / kPositionCount;
  return report;
}

}  // namespace serial

std::vector<LipSample> load_lip_csv(std::istream& in) {
  std::vector<LipSample> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    if (lineno == 1 && line.rfind("speaker", 0) == 0) continue;
    std::istringstream ss(line);
    std::string speaker, word, vowel, frame, a, b;
    if (!std::getline(ss, speaker, ',') || !std::getline(ss, word, ',') ||
        !std::getline(ss, vowel, ',') || !std::getline(ss, frame, ',') ||
        !std::getline(ss, a, ',') || !std::getline(ss, b, ','))
      throw SchemaError("lip CSV needs speaker,word,vowel,frame,A,B: " + line,
                        lineno);
    const auto v = final_from_string(vowel);
    if (!v || !is_base_vowel(*v))
      throw SchemaError("not a base vowel: '" + vowel + "'", lineno);
    LipSample s;
    s.speaker = speaker;
    s.word = word;
    s.vowel = *v;
    try {
      s.frame = std::stoi(frame);
      s.a = std::stod(a);
      s.b = std::stod(b);
    } catch (const std::exception&) {
      throw SchemaError("bad number in lip CSV line: " + line, lineno);
    }
    if (!(s.a > 0.0) || s.b < 0.0)
      throw SchemaError("lip parameters must have A > 0 and B >= 0: " + line,
                        lineno);
    out.push_back(std::move(s));
  }
  return out;
}

void save_lip_csv(std::ostream& out, const std::vector<LipSample>& data) {
  out << "speaker,word,vowel,frame,A,B\n";
  char buf[64];
  for (const LipSample& s : data) {
    out << s.speaker << "," << s.word << "," << to_string(s.vowel) << ","
        << s.frame;
    std::snprintf(buf, sizeof buf, ",%.6f,%.6f\n", s.a, s.b);
    out << buf;
  }
}

std::vector<LipSample> generate_synthetic(const std::vector<ClusterSpec>& specs,
                                          const std::map<Final, int>& frames,
                                          std::uint64_t seed) {
  // Group specs per vowel, keeping their order.
  std::vector<Final> order;
  std::vector<std::vector<const ClusterSpec*>> grouped;
  for (const ClusterSpec& spec : specs) {
    auto it = std::find(order.begin(), order.end(), spec.vowel);
    if (it == order.end()) {
      order.push_back(spec.vowel);
      grouped.emplace_back();
      it = std::prev(order.end());
    }
    grouped[static_cast<std::size_t>(it - order.begin())].push_back(&spec);
  }

  std::vector<LipSample> out;
  for (std::size_t gi = 0; gi < order.size(); ++gi) {
    const Final vowel = order[gi];
    const auto fit = frames.find(vowel);
    const int total = fit == frames.end() ? 0 : fit->second;
    if (total <= 0) continue;
    double wsum = 0.0;
    for (const ClusterSpec* c : grouped[gi]) wsum += c->weight;
    int assigned = 0;
    int frame = 0;
    for (std::size_t ci = 0; ci < grouped[gi].size(); ++ci) {
      const ClusterSpec* c = grouped[gi][ci];
      int n = ci + 1 == grouped[gi].size()
                  ? total - assigned
                  : static_cast<int>(std::floor(
                        total * c->weight / wsum + 0.5));
      n = std::min(n, total - assigned);
      assigned += n;
      Rng rng(derive_seed(derive_seed(seed, static_cast<std::uint64_t>(vowel)),
                          ci));
      for (int k = 0; k < n; ++k) {
        LipSample s;
        s.speaker = "synth";
        s.word = c->word.empty() ? to_string(vowel) : c->word;
        s.vowel = vowel;
        s.frame = frame++;
        s.a = c->cx + c->sigma * rng.normal();
        s.b = c->cy + c->sigma * rng.normal();
        out.push_back(std::move(s));
      }
    }
  }
  return out;
}

std::vector<LipSample> generate_synthetic(const std::vector<ClusterSpec>& specs,
                                          int frames_per_vowel,
                                          std::uint64_t seed) {
  std::map<Final, int> frames;
  for (const ClusterSpec& spec : specs) frames[spec.vowel] = frames_per_vowel;
  return generate_synthetic(specs, frames, seed);
}

std::vector<ClusterSpec> load_cluster_specs(std::istream& in) {
  std::vector<ClusterSpec> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ss(line);
    std::string vowel;
    if (!(ss >> vowel)) continue;
    ClusterSpec spec;
    const auto v = final_from_string(vowel);
    if (!v || !is_base_vowel(*v))
      throw SchemaError("not a base vowel: '" + vowel + "'", lineno);
    spec.vowel = *v;
    if (!(ss >> spec.cx >> spec.cy >> spec.sigma))
      throw SchemaError("cluster line needs vowel cx cy sigma", lineno);
    if (!(ss >> spec.weight)) spec.weight = 1.0;
    ss >> spec.word;
    out.push_back(std::move(spec));
  }
  return out;
}

}  // namespace mcs
