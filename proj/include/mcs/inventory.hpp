#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mcs/pinyin.hpp"

namespace mcs {

// The five hand positions, with their anatomical anchors.
enum class Position : std::uint8_t { P1, P2, P3, P4, P5 };
inline constexpr int kPositionCount = 5;
std::string_view to_string(Position p);        // "P1".."P5"
std::string_view position_anchor(Position p);  // "cheek".."neck"
std::optional<Position> position_from_string(std::string_view s);

// A handshape, numbered 1-8.
struct Handshape {
  std::uint8_t id = 1;
  friend bool operator==(Handshape a, Handshape b) { return a.id == b.id; }
};
inline constexpr int kHandshapeCount = 8;

// The glides [j], [w], [ɥ] that replace leading i/u/ü of compound finals.
enum class Semiconsonant : std::uint8_t { j, w, q };  // q = [ɥ]
std::string_view to_string(Semiconsonant s);  // "[j]", "[w]", "[ɥ]"
std::optional<Semiconsonant> semiconsonant_from_string(std::string_view s);

// One of the 24 units coded by handshapes: an initial or a semiconsonant.
struct CueUnit {
  bool is_semi = false;
  Initial initial = Initial::b;
  Semiconsonant semi = Semiconsonant::j;

  static CueUnit of(Initial i) { return {false, i, Semiconsonant::j}; }
  static CueUnit of(Semiconsonant s) { return {true, Initial::b, s}; }
  int index() const {  // 0..23, initials first
    return is_semi ? kInitialCount + static_cast<int>(semi)
                   : static_cast<int>(initial);
  }
  std::string name() const;
  friend bool operator==(const CueUnit& a, const CueUnit& b) {
    return a.index() == b.index();
  }
};
inline constexpr int kCueUnitCount = kInitialCount + 3;
std::vector<CueUnit> all_cue_units();

// Total map from the 16 base vowels to positions.
class VowelAllocation {
 public:
  Position of(Final base_vowel) const;
  void set(Final base_vowel, Position p);
  std::vector<Final> members(Position p) const;

  void save(std::ostream& out) const;  // "vowel=position" lines
  static VowelAllocation load(std::istream& in);

  friend bool operator==(const VowelAllocation& a, const VowelAllocation& b) {
    return a.map_ == b.map_;
  }

 private:
  std::array<std::uint8_t, kBaseVowelCount> map_{};
};

// Exchanges the positions of two vowels.
VowelAllocation apply_swap(VowelAllocation a, Final va, Final vb);

// The allocation seeded from the French system plus the e/o/en/eng/er
// placements, and the one with the two corrective swaps applied.
VowelAllocation preliminary_allocation();
VowelAllocation final_allocation();

// Total map from the 24 cue units to handshapes, plus the handshape used
// when a vowel is cued with no consonant.
class ConsonantTable {
 public:
  Handshape of(CueUnit u) const { return map_[u.index()]; }
  Handshape of(Initial i) const { return of(CueUnit::of(i)); }
  Handshape of(Semiconsonant s) const { return of(CueUnit::of(s)); }
  void set(CueUnit u, Handshape h) { map_[u.index()] = h; }
  Handshape isolated_vowel_handshape() const { return isolated_; }
  void set_isolated_vowel_handshape(Handshape h) { isolated_ = h; }
  std::vector<CueUnit> members(Handshape h) const;

  void save(std::ostream& out) const;  // "consonant=handshape", "*=h"
  static ConsonantTable load(std::istream& in);
  static const ConsonantTable& standard();

 private:
  std::array<Handshape, kCueUnitCount> map_{};
  Handshape isolated_{5};
};

// Which initials may precede which semiconsonant (the combinability table;
// 32 checks in the standard one).
class SemiCombinability {
 public:
  bool combinable(Initial i, Semiconsonant s) const {
    return table_[static_cast<int>(i)][static_cast<int>(s)];
  }
  void set(Initial i, Semiconsonant s, bool v) {
    table_[static_cast<int>(i)][static_cast<int>(s)] = v;
  }
  int check_count() const;
  static const SemiCombinability& standard();

 private:
  std::array<std::array<bool, 3>, kInitialCount> table_{};
};

// Lip-shape class per cue unit; two consonants sharing a handshape must not
// share a class. Editable data, shipped with articulator-based defaults.
class VisemeClasses {
 public:
  const std::string& of(CueUnit u) const { return map_[u.index()]; }
  void set(CueUnit u, std::string cls) { map_[u.index()] = std::move(cls); }

  void save(std::ostream& out) const;  // "consonant=class" lines
  static VisemeClasses load(std::istream& in);
  static const VisemeClasses& standard();

 private:
  std::array<std::string, kCueUnitCount> map_{};
};

// Vowel pairs considered too similar in lip shape to share a position,
// with a whitelist for pairs in complementary distribution.
class ConfusablePairs {
 public:
  bool forbidden(Final a, Final b) const;  // confusable and not whitelisted
  void add(Final a, Final b, bool whitelisted = false);
  std::vector<std::pair<Final, Final>> pairs() const;

  void save(std::ostream& out) const;  // "a,b" or "a,b,ok" lines
  static ConfusablePairs load(std::istream& in);
  static const ConfusablePairs& standard();

 private:
  struct Entry {
    std::uint8_t a, b;
    bool whitelisted;
  };
  std::vector<Entry> entries_;
};

struct Violation {
  enum class Kind {
    capacity,      // too many members in a position or handshape
    placement,     // er outside P2/P4/P5
    totality,      // a vowel or consonant missing from the map
    cooccurrence,  // combinable consonant shares its semiconsonant's handshape
    viseme,        // two same-class consonants in one handshape
    confusable     // forbidden vowel pair in one position
  };
  Kind kind;
  std::string subject;  // who violates, e.g. "sh,[w]"
  std::string detail;
  friend bool operator==(const Violation& a, const Violation& b) {
    return a.kind == b.kind && a.subject == b.subject;
  }
};
std::string_view to_string(Violation::Kind k);

std::vector<Violation> verify_vowel_allocation(
    const VowelAllocation& a,
    const ConfusablePairs& confusables = ConfusablePairs::standard());

std::vector<Violation> verify_consonant_table(
    const ConsonantTable& t,
    const SemiCombinability& combinability = SemiCombinability::standard(),
    const VisemeClasses& visemes = VisemeClasses::standard());

}  // namespace mcs
