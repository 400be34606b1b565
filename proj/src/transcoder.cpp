#include "mcs/transcoder.hpp"

namespace mcs {

namespace {

constexpr std::string_view kHeadMoveNames[] = {"none", "right", "up", "downUp",
                                               "down"};

}  // namespace

std::string_view to_string(HeadMove m) {
  return kHeadMoveNames[static_cast<int>(m)];
}

FinalDecomposition decompose_final(Final f) {
  using S = Semiconsonant;
  if (is_base_vowel(f)) return {std::nullopt, f};
  switch (f) {
    case Final::ia: return {S::j, Final::a};
    case Final::ua: return {S::w, Final::a};
    case Final::uo: return {S::w, Final::o};
    case Final::ie: return {S::j, Final::e};
    case Final::ve: return {S::q, Final::e};
    case Final::uai: return {S::w, Final::ai};
    case Final::uei: return {S::w, Final::ei};
    case Final::iao: return {S::j, Final::ao};
    case Final::iou: return {S::j, Final::ou};
    case Final::ian: return {S::j, Final::an};
    case Final::uan: return {S::w, Final::an};
    case Final::van: return {S::q, Final::an};
    case Final::in: return {S::j, Final::en};
    case Final::uen: return {S::w, Final::en};
    case Final::vn: return {S::q, Final::en};
    case Final::iang: return {S::j, Final::ang};
    case Final::uang: return {S::w, Final::ang};
    case Final::ing: return {S::j, Final::eng};
    case Final::ueng: return {S::w, Final::eng};
    case Final::iong: return {S::j, Final::ong};
    default: return {std::nullopt, f};
  }
}

HeadMove tone_to_head_move(Tone t) {
  return static_cast<HeadMove>(t.value);
}

SyllableCues transcode_syllable(const Syllable& s, const VowelAllocation& alloc,
                                const ConsonantTable& table,
                                const SemiCombinability& combinability) {
  SyllableCues out;
  out.syllable = s;

  const FinalDecomposition dec = decompose_final(s.final);
  const Position pos = alloc.of(dec.vowel);
  const HeadMove move = tone_to_head_move(s.tone);

  if (s.initial && dec.semi) {
    // Consonant then glide: the consonant is cued at the side position with
    // no head movement, the glide carries vowel position and tone.
    out.tokens.push_back({table.of(*s.initial), Position::P2, std::nullopt});
    out.tokens.push_back({table.of(*dec.semi), pos, move});
    if (!combinability.combinable(*s.initial, *dec.semi)) {
      out.warnings.push_back(std::string(to_string(*s.initial)) + "+" +
                             std::string(to_string(*dec.semi)) +
                             " is not a listed combination");
    }
  } else if (s.initial) {
    out.tokens.push_back({table.of(*s.initial), pos, move});
  } else if (dec.semi) {
    out.tokens.push_back({table.of(*dec.semi), pos, move});
  } else {
    out.tokens.push_back({table.isolated_vowel_handshape(), pos, move});
  }
  return out;
}

std::vector<SyllableCues> transcode_text(std::string_view text,
                                         const Syllabary& syllabary,
                                         const VowelAllocation& alloc,
                                         const ConsonantTable& table,
                                         const SemiCombinability& combinability) {
  std::vector<SyllableCues> out;
  for (const std::string& raw : segment(text, syllabary)) {
    const Syllable s = parse_syllable(raw, syllabary);
    out.push_back(transcode_syllable(s, alloc, table, combinability));
  }
  return out;
}

std::string format_record(const SyllableCues& cues) {
  const Syllable& s = cues.syllable;
  std::string line = s.source;
  line += ",";
  line += s.initial ? std::string(to_string(*s.initial)) : "-";
  line += ",";
  line += to_string(s.final);
  line += ",";
  line += static_cast<char>('0' + s.tone.value);
  line += ",";
  switch (s.apical) {
    case ApicalVariant::none: line += "none"; break;
    case ApicalVariant::dental: line += "dental"; break;
    case ApicalVariant::retroflex: line += "retroflex"; break;
  }
  line += ",";
  for (std::size_t i = 0; i < cues.tokens.size(); ++i) {
    if (i) line += " ";
    const CueToken& t = cues.tokens[i];
    line += "h" + std::to_string(t.handshape.id) + ":";
    line += to_string(t.position);
    line += ":";
    line += t.head ? std::string(to_string(*t.head)) : "-";
  }
  for (const std::string& w : cues.warnings) line += ",warn:" + w;
  return line;
}

}  // namespace mcs
