#include <sstream>
#include <string_view>

#include "mcs/pinyin.hpp"

namespace mcs {

namespace {

// Standard Mandarin syllable inventory, one row per final: the initials that
// may precede it ("-" is the zero initial). 408 pairs in total.
struct Row {
  std::string_view final;
  std::string_view initials;
};

constexpr Row kRows[] = {
    {"a",    "- b p m f d t n l g k h zh ch sh z c s"},
    {"o",    "- b p m f l"},
    {"e",    "- m d t n l g k h zh ch sh r z c s"},
    {"i",    "- b p m d t n l j q x zh ch sh r z c s"},
    {"u",    "- b p m f d t n l g k h zh ch sh r z c s"},
    {"v",    "- n l j q x"},
    {"ai",   "- b p m d t n l g k h zh ch sh z c s"},
    {"ei",   "- b p m f d t n l g k h zh sh z"},
    {"ao",   "- b p m d t n l g k h zh ch sh r z c s"},
    {"ou",   "- p m f d t n l g k h zh ch sh r z c s"},
    {"an",   "- b p m f d t n l g k h zh ch sh r z c s"},
    {"en",   "- b p m f d n g k h zh ch sh r z c s"},
    {"ang",  "- b p m f d t n l g k h zh ch sh r z c s"},
    {"eng",  "- b p m f d t n l g k h zh ch sh r z c s"},
    {"ong",  "d t n l g k h zh ch r z c s"},
    {"er",   "-"},
    {"ia",   "- l j q x"},
    {"ua",   "- g k h zh ch sh"},
    {"uo",   "- d t n l g k h zh ch sh r z c s"},
    {"ie",   "- b p m d t n l j q x"},
    {"ve",   "- n l j q x"},
    {"uai",  "- g k h zh ch sh"},
    {"uei",  "- d t g k h zh ch sh r z c s"},
    {"iao",  "- b p m d t n l j q x"},
    {"iou",  "- m d n l j q x"},
    {"ian",  "- b p m d t n l j q x"},
    {"uan",  "- d t n l g k h zh ch sh r z c s"},
    {"van",  "- j q x"},
    {"in",   "- b p m n l j q x"},
    {"uen",  "- d t l g k h zh ch sh r z c s"},
    {"vn",   "- j q x"},
    {"iang", "- n l j q x"},
    {"uang", "- g k h zh ch sh"},
    {"ing",  "- b p m d t n l j q x"},
    {"ueng", "-"},
    {"iong", "- j q x"},
};

Syllabary build_standard() {
  Syllabary sy;
  for (const Row& row : kRows) {
    const auto final = final_from_skeleton(row.final);
    std::istringstream in{std::string(row.initials)};
    std::string tok;
    while (in >> tok) {
      if (tok == "-") {
        sy.add(std::nullopt, *final);
      } else {
        sy.add(initial_from_string(tok), *final);
      }
    }
  }
  return sy;
}

}  // namespace

const Syllabary& Syllabary::standard() {
  static const Syllabary instance = build_standard();
  return instance;
}

}  // namespace mcs
