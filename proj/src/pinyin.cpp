#include "mcs/pinyin.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <unordered_map>
#include <unordered_set>

namespace mcs {

namespace {

constexpr std::string_view kInitialNames[kInitialCount] = {
    "b", "p", "m", "f", "d", "t", "n", "l", "g", "k", "h",
    "j", "q", "x", "zh", "ch", "sh", "r", "z", "c", "s"};

constexpr std::string_view kFinalSkeletons[kFinalCount] = {
    "a",  "o",  "e",  "i",   "u",   "v",   "ai",  "ei",  "ao",
    "ou", "an", "en", "ang", "eng", "ong", "er",  "ia",  "ua",
    "uo", "ie", "ve", "uai", "uei", "iao", "iou", "ian", "uan",
    "van", "in", "uen", "vn", "iang", "uang", "ing", "ueng", "iong"};

std::string v_to_umlaut(std::string_view skel) {
  std::string out;
  for (char c : skel) {
    if (c == 'v')
      out += "\xc3\xbc";  // ü
    else
      out += c;
  }
  return out;
}

// One code point of normalized pinyin: a lowercase letter ('v' for ü),
// possibly carrying a tone mark.
struct Letter {
  char base;
  int tone;  // -1 if unmarked
};

std::optional<Letter> map_code_point(char32_t cp) {
  if (cp >= U'A' && cp <= U'Z') cp = cp - U'A' + U'a';
  if (cp >= U'a' && cp <= U'z') return Letter{static_cast<char>(cp), -1};
  switch (cp) {
    case 0x00FC: case 0x00DC: return Letter{'v', -1};  // ü Ü
    case 0x0101: return Letter{'a', 1}; case 0x00E1: return Letter{'a', 2};
    case 0x01CE: return Letter{'a', 3}; case 0x00E0: return Letter{'a', 4};
    case 0x0113: return Letter{'e', 1}; case 0x00E9: return Letter{'e', 2};
    case 0x011B: return Letter{'e', 3}; case 0x00E8: return Letter{'e', 4};
    case 0x012B: return Letter{'i', 1}; case 0x00ED: return Letter{'i', 2};
    case 0x01D0: return Letter{'i', 3}; case 0x00EC: return Letter{'i', 4};
    case 0x014D: return Letter{'o', 1}; case 0x00F3: return Letter{'o', 2};
    case 0x01D2: return Letter{'o', 3}; case 0x00F2: return Letter{'o', 4};
    case 0x016B: return Letter{'u', 1}; case 0x00FA: return Letter{'u', 2};
    case 0x01D4: return Letter{'u', 3}; case 0x00F9: return Letter{'u', 4};
    case 0x01D6: return Letter{'v', 1}; case 0x01D8: return Letter{'v', 2};
    case 0x01DA: return Letter{'v', 3}; case 0x01DC: return Letter{'v', 4};
    default: return std::nullopt;
  }
}

struct CodePoint {
  char32_t cp;
  std::size_t offset;  // byte offset of the first byte
  std::size_t size;
};

// Minimal UTF-8 decoder; malformed bytes become U+FFFD of size 1.
std::vector<CodePoint> decode_utf8(std::string_view s) {
  std::vector<CodePoint> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const unsigned char b0 = static_cast<unsigned char>(s[i]);
    char32_t cp = 0xFFFD;
    std::size_t len = 1;
    if (b0 < 0x80) {
      cp = b0;
    } else if ((b0 >> 5) == 0x6 && i + 1 < s.size()) {
      cp = ((b0 & 0x1F) << 6) | (static_cast<unsigned char>(s[i + 1]) & 0x3F);
      len = 2;
    } else if ((b0 >> 4) == 0xE && i + 2 < s.size()) {
      cp = ((b0 & 0x0F) << 12) |
           ((static_cast<unsigned char>(s[i + 1]) & 0x3F) << 6) |
           (static_cast<unsigned char>(s[i + 2]) & 0x3F);
      len = 3;
    } else if ((b0 >> 3) == 0x1E && i + 3 < s.size()) {
      cp = ((b0 & 0x07) << 18) |
           ((static_cast<unsigned char>(s[i + 1]) & 0x3F) << 12) |
           ((static_cast<unsigned char>(s[i + 2]) & 0x3F) << 6) |
           (static_cast<unsigned char>(s[i + 3]) & 0x3F);
      len = 4;
    }
    out.push_back({cp, i, len});
    i += len;
  }
  return out;
}

bool is_separator(char32_t cp) {
  return cp == U' ' || cp == U'\t' || cp == U'\n' || cp == U'\r';
}

bool is_apostrophe(char32_t cp) { return cp == U'\'' || cp == 0x2019; }

// Orthographic normalization of the final part, zero-initial case:
// y/w/yu spellings restored to the underlying i/u/ü final skeleton.
std::string restore_zero_initial(std::string_view rest) {
  std::string r(rest);
  if (r.rfind("yu", 0) == 0) return "v" + r.substr(2);
  if (r.rfind("yv", 0) == 0) return "v" + r.substr(2);
  if (r.rfind("yi", 0) == 0) return "i" + r.substr(2);
  if (r[0] == 'y') return "i" + r.substr(1);
  if (r.rfind("wu", 0) == 0) return "u" + r.substr(2);
  if (r[0] == 'w') return "u" + r.substr(1);
  return r;
}

std::string normalize_final(std::optional<Initial> initial, std::string_view rest) {
  std::string r(rest);
  if (!initial) {
    r = restore_zero_initial(r);
  } else {
    const Initial ini = *initial;
    if ((ini == Initial::j || ini == Initial::q || ini == Initial::x) &&
        !r.empty() && r[0] == 'u') {
      r[0] = 'v';  // u after j/q/x is ü
    }
    if (r == "iu") r = "iou";
    else if (r == "ui") r = "uei";
    else if (r == "un") r = "uen";
  }
  return r;
}

// Canonical toneless orthography as a v-skeleton ('v' for ü).
std::string orthographic_skeleton(std::optional<Initial> initial, Final final) {
  const std::string_view skel = kFinalSkeletons[static_cast<int>(final)];
  if (!initial) {
    switch (final) {
      case Final::i: return "yi";
      case Final::in: return "yin";
      case Final::ing: return "ying";
      case Final::u: return "wu";
      case Final::v: return "yu";
      case Final::ve: return "yue";
      case Final::van: return "yuan";
      case Final::vn: return "yun";
      default:
        if (skel[0] == 'i') return "y" + std::string(skel.substr(1));
        if (skel[0] == 'u') return "w" + std::string(skel.substr(1));
        return std::string(skel);
    }
  }
  std::string fin(skel);
  const Initial ini = *initial;
  if ((ini == Initial::j || ini == Initial::q || ini == Initial::x) &&
      fin[0] == 'v') {
    fin[0] = 'u';
  } else if (fin == "iou") {
    fin = "iu";
  } else if (fin == "uei") {
    fin = "ui";
  } else if (fin == "uen") {
    fin = "un";
  }
  return std::string(to_string(ini)) + fin;
}

ApicalVariant apical_variant(std::optional<Initial> initial, Final final) {
  if (final != Final::i || !initial) return ApicalVariant::none;
  switch (*initial) {
    case Initial::z: case Initial::c: case Initial::s:
      return ApicalVariant::dental;
    case Initial::zh: case Initial::ch: case Initial::sh: case Initial::r:
      return ApicalVariant::retroflex;
    default:
      return ApicalVariant::none;
  }
}

}  // namespace

std::string_view to_string(Initial i) {
  return kInitialNames[static_cast<int>(i)];
}

std::string to_string(Final f) {
  return v_to_umlaut(kFinalSkeletons[static_cast<int>(f)]);
}

std::string_view skeleton(Final f) { return kFinalSkeletons[static_cast<int>(f)]; }

std::optional<Initial> initial_from_string(std::string_view s) {
  for (int i = 0; i < kInitialCount; ++i)
    if (kInitialNames[i] == s) return static_cast<Initial>(i);
  return std::nullopt;
}

std::optional<Final> final_from_skeleton(std::string_view s) {
  for (int i = 0; i < kFinalCount; ++i)
    if (kFinalSkeletons[i] == s) return static_cast<Final>(i);
  return std::nullopt;
}

std::optional<Final> final_from_string(std::string_view s) {
  std::string skel;
  skel.reserve(s.size());
  for (std::size_t i = 0; i < s.size();) {
    if (i + 1 < s.size() && static_cast<unsigned char>(s[i]) == 0xC3 &&
        static_cast<unsigned char>(s[i + 1]) == 0xBC) {
      skel += 'v';
      i += 2;
    } else {
      skel += s[i];
      ++i;
    }
  }
  return final_from_skeleton(skel);
}

void Syllabary::add(std::optional<Initial> initial, Final final) {
  const int row = initial ? static_cast<int>(*initial) + 1 : 0;
  if (table_[row][static_cast<int>(final)]) return;
  table_[row][static_cast<int>(final)] = true;
  ++count_;

  auto push = [&](std::string text) {
    forms_.push_back(Form{std::move(text), initial, final});
  };
  push(orthographic_skeleton(initial, final));
  // Accepted alternative spellings: explicit ü after j/q/x/y and the
  // uncontracted iou/uei/uen forms.
  const std::string_view skel = kFinalSkeletons[static_cast<int>(final)];
  if (initial) {
    const Initial ini = *initial;
    if ((ini == Initial::j || ini == Initial::q || ini == Initial::x) &&
        skel[0] == 'v') {
      push(std::string(to_string(ini)) + std::string(skel));
    }
    if (skel == "iou" || skel == "uei" || skel == "uen") {
      push(std::string(to_string(ini)) + std::string(skel));
    }
  } else if (skel[0] == 'v') {
    push("y" + std::string(skel));  // yü, yüe, ...
  }
}

bool Syllabary::validates(std::optional<Initial> initial, Final final) const {
  const int row = initial ? static_cast<int>(*initial) + 1 : 0;
  return table_[row][static_cast<int>(final)];
}

void Syllabary::save(std::ostream& out) const {
  for (int row = 0; row <= kInitialCount; ++row) {
    for (int f = 0; f < kFinalCount; ++f) {
      if (!table_[row][f]) continue;
      if (row == 0)
        out << "-";
      else
        out << kInitialNames[row - 1];
      out << "," << v_to_umlaut(kFinalSkeletons[f]) << "\n";
    }
  }
}

Syllabary Syllabary::load(std::istream& in) {
  Syllabary sy;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos)
      throw SchemaError("syllabary line missing comma: " + line, lineno);
    const std::string ini = line.substr(0, comma);
    const std::string fin = line.substr(comma + 1);
    std::optional<Initial> initial;
    if (ini != "-") {
      initial = initial_from_string(ini);
      if (!initial)
        throw SchemaError("unknown initial '" + ini + "'", lineno);
    }
    const auto final = final_from_string(fin);
    if (!final) throw SchemaError("unknown final '" + fin + "'", lineno);
    sy.add(initial, *final);
  }
  return sy;
}

bool validate(std::optional<Initial> initial, Final final,
              const Syllabary& syllabary) {
  return syllabary.validates(initial, final);
}

Syllable parse_syllable(std::string_view raw, const Syllabary& syllabary) {
  const auto cps = decode_utf8(raw);
  std::string letters;
  int mark_tone = -1;
  int digit = -1;
  for (std::size_t k = 0; k < cps.size(); ++k) {
    const char32_t cp = cps[k].cp;
    if (cp >= U'0' && cp <= U'9') {
      if (k + 1 != cps.size())
        throw InvalidToneError("tone digit must end the syllable: " +
                                   std::string(raw),
                               cps[k].offset, std::string(raw));
      digit = static_cast<int>(cp - U'0');
      break;
    }
    const auto letter = map_code_point(cp);
    if (!letter)
      throw InvalidSyllableError("unexpected character in syllable: " +
                                     std::string(raw),
                                 cps[k].offset, std::string(raw));
    if (letter->tone >= 0) {
      if (mark_tone >= 0)
        throw InvalidToneError("multiple tone marks in: " + std::string(raw),
                               cps[k].offset, std::string(raw));
      mark_tone = letter->tone;
    }
    letters += letter->base;
  }
  if (digit >= 0 && mark_tone >= 0)
    throw InvalidToneError("both tone mark and digit in: " + std::string(raw),
                           0, std::string(raw));
  if (digit > 5)
    throw InvalidToneError("tone digit out of range in: " + std::string(raw),
                           0, std::string(raw));
  if (letters.empty())
    throw InvalidSyllableError("empty syllable", 0, std::string(raw));

  Tone tone;
  if (digit >= 0)
    tone.value = static_cast<std::uint8_t>(digit == 5 ? 0 : digit);
  else if (mark_tone >= 0)
    tone.value = static_cast<std::uint8_t>(mark_tone);

  std::optional<Initial> initial;
  std::string rest = letters;
  if (letters.size() >= 2) {
    if (auto two = initial_from_string(letters.substr(0, 2))) {
      initial = two;
      rest = letters.substr(2);
    }
  }
  if (!initial) {
    if (auto one = initial_from_string(letters.substr(0, 1))) {
      initial = one;
      rest = letters.substr(1);
    }
  }
  if (rest.empty())
    throw InvalidSyllableError("syllable has no final: " + std::string(raw), 0,
                               std::string(raw));

  const std::string fin = normalize_final(initial, rest);
  const auto final = final_from_skeleton(fin);
  if (!final)
    throw InvalidSyllableError("unknown final '" + fin + "' in: " +
                                   std::string(raw),
                               0, std::string(raw));
  if (!syllabary.validates(initial, *final))
    throw InvalidSyllableError("not a valid Mandarin syllable: " +
                                   std::string(raw),
                               0, std::string(raw));

  Syllable s;
  s.initial = initial;
  s.final = *final;
  s.tone = tone;
  s.apical = apical_variant(initial, *final);
  s.source = std::string(raw);
  return s;
}

std::string render_syllable(const Syllable& s) {
  std::string out = v_to_umlaut(orthographic_skeleton(s.initial, s.final));
  out += static_cast<char>('0' + s.tone.value);
  return out;
}

std::vector<std::string> segment(std::string_view text,
                                 const Syllabary& syllabary) {
  // Longest accepted spelling is 6 letters (e.g. zhuang).
  std::unordered_set<std::string> forms;
  std::size_t max_len = 0;
  for (const auto& f : syllabary.forms()) {
    forms.insert(f.text);
    max_len = std::max(max_len, f.text.size());
  }

  const auto cps = decode_utf8(text);
  std::vector<std::string> tokens;
  std::size_t k = 0;
  while (k < cps.size()) {
    if (is_separator(cps[k].cp) || is_apostrophe(cps[k].cp)) {
      ++k;
      continue;
    }
    // Collect the longest run of letters from here.
    std::string skel;
    std::size_t end = k;
    while (end < cps.size() && skel.size() < max_len) {
      const auto letter = map_code_point(cps[end].cp);
      if (!letter) break;
      skel += letter->base;
      ++end;
    }
    std::size_t best = 0;
    for (std::size_t len = skel.size(); len >= 1; --len) {
      if (forms.count(skel.substr(0, len))) {
        best = len;
        break;
      }
    }
    if (best == 0) {
      std::size_t stop = k;
      while (stop < cps.size() && !is_separator(cps[stop].cp) &&
             !is_apostrophe(cps[stop].cp))
        ++stop;
      const std::size_t from = cps[k].offset;
      const std::size_t to = stop < cps.size() ? cps[stop].offset : text.size();
      throw ParseError("cannot segment pinyin at offset " +
                           std::to_string(from),
                       from, std::string(text.substr(from, to - from)));
    }
    std::size_t tok_end = k + best;
    if (tok_end < cps.size() && cps[tok_end].cp >= U'0' &&
        cps[tok_end].cp <= U'5')
      ++tok_end;
    const std::size_t from = cps[k].offset;
    const std::size_t to = tok_end < cps.size() ? cps[tok_end].offset
                                                : text.size();
    tokens.emplace_back(text.substr(from, to - from));
    k = tok_end;
  }
  return tokens;
}

}  // namespace mcs
