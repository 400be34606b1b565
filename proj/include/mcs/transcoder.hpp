#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mcs/inventory.hpp"
#include "mcs/pinyin.hpp"

namespace mcs {

// Head movements coding the tones: still, right, up, down-then-up, down.
enum class HeadMove : std::uint8_t { none, right, up, downUp, down };
std::string_view to_string(HeadMove m);

// A final split into its optional gliding onset and the base vowel coded by
// a hand position.
struct FinalDecomposition {
  std::optional<Semiconsonant> semi;
  Final vowel = Final::a;
  friend bool operator==(const FinalDecomposition& a,
                         const FinalDecomposition& b) {
    return a.semi == b.semi && a.vowel == b.vowel;
  }
};

FinalDecomposition decompose_final(Final f);
HeadMove tone_to_head_move(Tone t);

// One cue: a handshape at a position, with the head movement on the
// vowel-bearing token only.
struct CueToken {
  Handshape handshape;
  Position position = Position::P2;
  std::optional<HeadMove> head;
  friend bool operator==(const CueToken& a, const CueToken& b) {
    return a.handshape == b.handshape && a.position == b.position &&
           a.head == b.head;
  }
};

struct SyllableCues {
  Syllable syllable;
  std::vector<CueToken> tokens;
  std::vector<std::string> warnings;  // combinability notes, never fatal
};

SyllableCues transcode_syllable(
    const Syllable& s,
    const VowelAllocation& alloc = final_allocation(),
    const ConsonantTable& table = ConsonantTable::standard(),
    const SemiCombinability& combinability = SemiCombinability::standard());

std::vector<SyllableCues> transcode_text(
    std::string_view text,
    const Syllabary& syllabary = Syllabary::standard(),
    const VowelAllocation& alloc = final_allocation(),
    const ConsonantTable& table = ConsonantTable::standard(),
    const SemiCombinability& combinability = SemiCombinability::standard());

// One machine-readable line per syllable:
// source,initial,final,tone,apical,tokens[,warn:...]
// with tokens as space-separated h<N>:<P>:<move> triples ("-" for no move).
std::string format_record(const SyllableCues& cues);

}  // namespace mcs
