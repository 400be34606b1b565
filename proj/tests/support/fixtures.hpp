#pragma once

#include <vector>

#include "mcs/classifier.hpp"

namespace fixtures {

inline mcs::Final fin(const char* s) { return *mcs::final_from_string(s); }

// Synthetic lip-parameter geometry exercising the documented confusions:
// the retroflex part of i sits on ong, eng overlaps ei, en crowds ou.
// o, u and er sit on or next to the i/ong cell: they never share a position
// with i or ong, but they spoil every swap that would move i or ong into
// their home positions. From the preliminary allocation the accepted swaps
// are then exactly ong<->ü followed by eng<->en, and the resulting
// allocation is fully separated. Mirrors data/confusion_demo.cfg.
inline std::vector<mcs::ClusterSpec> confusion_demo_specs() {
  std::vector<mcs::ClusterSpec> specs;
  auto add = [&](const char* v, double cx, double cy, double w = 1.0,
                 const char* word = "") {
    specs.push_back({fin(v), cx, cy, 0.5, w, word});
  };
  add("i", 20.0, 20.0, 0.6, "zhi");  // retroflex frames
  add("i", 10.0, 20.0, 0.4, "yi");    // plain frames
  add("ong", 20.0, 20.0);
  add("o", 20.0, 19.5);
  add("u", 20.5, 20.0);
  add("ei", 8.8, 20.0);
  add("eng", 10.0, 20.0);
  add("ai", 9.5, 19.0);
  add("a", 39.0, 15.0);
  add("en", 42.0, 15.0);
  add("ou", 43.25, 15.0);
  add("er", 20.0, 20.0);
  add("ang", 30.0, 15.0);
  add("v", 42.0, 16.0);
  add("an", 50.0, 25.0);
  add("e", 55.0, 5.0);
  add("ao", 40.0, 25.0);
  return specs;
}

// Sixteen far-apart clusters (>= 10 sigma between any two) on a 4x4 grid.
inline std::vector<mcs::ClusterSpec> separated_specs(double sigma = 0.5,
                                                     double spacing = 10.0) {
  std::vector<mcs::ClusterSpec> specs;
  for (int v = 0; v < mcs::kBaseVowelCount; ++v) {
    specs.push_back({static_cast<mcs::Final>(v), 10.0 + spacing * (v % 4),
                     10.0 + spacing * (v / 4), sigma, 1.0, ""});
  }
  return specs;
}

// Per-vowel frame counts: recording-list occurrences times five.
inline std::map<mcs::Final, int> corpus_sized_frames() {
  std::map<mcs::Final, int> frames;
  const int counts[mcs::kBaseVowelCount] = {21, 5,  16, 16, 18, 5,  18, 13,
                                            18, 20, 23, 16, 20, 18, 14, 1};
  for (int v = 0; v < mcs::kBaseVowelCount; ++v)
    frames[static_cast<mcs::Final>(v)] = counts[v] * 5;
  return frames;
}

}  // namespace fixtures
