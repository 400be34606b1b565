#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "mcs/pinyin.hpp"

namespace mcs {

// The shipped recording word list: 242 monosyllables covering every
// initial+vowel combination, untoned.
const std::vector<std::string>& default_corpus();

// Loads a whitespace-separated word list.
std::vector<std::string> load_corpus(std::istream& in);

// Occurrence counts of the 16 base vowels after final decomposition,
// indexed by Final enum value.
std::array<int, kBaseVowelCount> vowel_histogram(
    const std::vector<std::string>& words,
    const Syllabary& syllabary = Syllabary::standard());

// Fixed order used when printing histograms:
// a o e i u ü ai ei ang eng ong an en er ou ao.
const std::array<Final, kBaseVowelCount>& histogram_print_order();

}  // namespace mcs
