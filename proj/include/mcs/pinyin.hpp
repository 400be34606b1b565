#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mcs/errors.hpp"

namespace mcs {

// The 21 Mandarin initials.
enum class Initial : std::uint8_t {
  b, p, m, f, d, t, n, l, g, k, h, j, q, x, zh, ch, sh, r, z, c, s
};
inline constexpr int kInitialCount = 21;

// The 36 finals. The first 16 are the base vowels (the ones left after
// semiconsonant extraction), in the canonical order used everywhere:
// a o e i u ü ai ei ao ou an en ang eng ong er.
// In identifiers, "v" stands for ü (IME convention).
enum class Final : std::uint8_t {
  a, o, e, i, u, v, ai, ei, ao, ou, an, en, ang, eng, ong, er,
  ia, ua, uo, ie, ve, uai, uei, iao, iou, ian, uan, van, in, uen, vn,
  iang, uang, ing, ueng, iong
};
inline constexpr int kFinalCount = 36;
inline constexpr int kBaseVowelCount = 16;

inline bool is_base_vowel(Final f) {
  return static_cast<int>(f) < kBaseVowelCount;
}

struct Tone {
  std::uint8_t value = 0;  // 0 = neutral, 1-4 the main tones
  friend bool operator==(Tone a, Tone b) { return a.value == b.value; }
};

enum class ApicalVariant : std::uint8_t { none, dental, retroflex };

struct Syllable {
  std::optional<Initial> initial;
  Final final = Final::a;
  Tone tone;
  ApicalVariant apical = ApicalVariant::none;
  std::string source;  // original orthography as given to the parser

  // Linguistic equality; `source` is presentation only.
  friend bool operator==(const Syllable& a, const Syllable& b) {
    return a.initial == b.initial && a.final == b.final && a.tone == b.tone &&
           a.apical == b.apical;
  }
};

std::string_view to_string(Initial i);
std::string to_string(Final f);  // ü spelled with the Unicode character
std::string_view skeleton(Final f);  // ü spelled as "v"
std::optional<Initial> initial_from_string(std::string_view s);
std::optional<Final> final_from_skeleton(std::string_view s);
// Accepts "ü"/"v" spellings and the v-skeleton; used by table loaders.
std::optional<Final> final_from_string(std::string_view s);

// Validity table over (initial, final) pairs. One record per line,
// "initial,final" with "-" for the zero initial, UTF-8, ü as ü.
class Syllabary {
 public:
  static const Syllabary& standard();
  static Syllabary load(std::istream& in);

  bool validates(std::optional<Initial> initial, Final final) const;
  void save(std::ostream& out) const;
  std::size_t size() const { return count_; }

  // Toneless orthographic forms ("kuai", "wai", "jun", "lv"), longest first,
  // as parallel arrays with their parsed pair. ü appears as 'v'.
  struct Form {
    std::string text;
    std::optional<Initial> initial;
    Final final;
  };
  const std::vector<Form>& forms() const { return forms_; }

  void add(std::optional<Initial> initial, Final final);

 private:
  std::array<std::array<bool, kFinalCount>, kInitialCount + 1> table_{};
  std::vector<Form> forms_;
  std::size_t count_ = 0;
};

bool validate(std::optional<Initial> initial, Final final,
              const Syllabary& syllabary = Syllabary::standard());

// Splits text into raw syllable tokens. Whitespace and apostrophes separate;
// unseparated runs are cut by longest match against the syllabary, each
// token keeping its tone digit or mark. Throws ParseError on unmatchable input.
std::vector<std::string> segment(std::string_view text,
                                 const Syllabary& syllabary = Syllabary::standard());

// Parses one toned syllable. Tone digit 0-5 (5 = neutral) or a tone mark;
// no annotation means neutral. Orthographic normalization (y/w/yu forms,
// ü after j/q/x, iu/ui/un contractions, v for ü) is applied before lookup.
Syllable parse_syllable(std::string_view raw,
                        const Syllabary& syllabary = Syllabary::standard());

// Canonical orthography with trailing tone digit; inverse of parse_syllable.
std::string render_syllable(const Syllable& s);

}  // namespace mcs
