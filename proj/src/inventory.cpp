#include "mcs/inventory.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

namespace mcs {

namespace {

constexpr std::string_view kPositionNames[kPositionCount] = {"P1", "P2", "P3",
                                                             "P4", "P5"};
constexpr std::string_view kPositionAnchors[kPositionCount] = {
    "cheek", "side", "mouth", "chin", "neck"};

constexpr std::string_view kSemiNames[3] = {"[j]", "[w]", "[\xc9\xa5]"};

std::string strip_cr(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

}  // namespace

std::string_view to_string(Position p) {
  return kPositionNames[static_cast<int>(p)];
}

std::string_view position_anchor(Position p) {
  return kPositionAnchors[static_cast<int>(p)];
}

std::optional<Position> position_from_string(std::string_view s) {
  for (int i = 0; i < kPositionCount; ++i)
    if (kPositionNames[i] == s) return static_cast<Position>(i);
  return std::nullopt;
}

std::string_view to_string(Semiconsonant s) {
  return kSemiNames[static_cast<int>(s)];
}

std::optional<Semiconsonant> semiconsonant_from_string(std::string_view s) {
  for (int i = 0; i < 3; ++i)
    if (kSemiNames[i] == s) return static_cast<Semiconsonant>(i);
  if (s == "[yu]" || s == "[y]") return Semiconsonant::q;  // ASCII fallback
  return std::nullopt;
}

std::string CueUnit::name() const {
  if (is_semi) return std::string(to_string(semi));
  return std::string(to_string(initial));
}

std::vector<CueUnit> all_cue_units() {
  std::vector<CueUnit> units;
  units.reserve(kCueUnitCount);
  for (int i = 0; i < kInitialCount; ++i)
    units.push_back(CueUnit::of(static_cast<Initial>(i)));
  for (int s = 0; s < 3; ++s)
    units.push_back(CueUnit::of(static_cast<Semiconsonant>(s)));
  return units;
}

Position VowelAllocation::of(Final base_vowel) const {
  return static_cast<Position>(map_[static_cast<int>(base_vowel)]);
}

void VowelAllocation::set(Final base_vowel, Position p) {
  map_[static_cast<int>(base_vowel)] = static_cast<std::uint8_t>(p);
}

std::vector<Final> VowelAllocation::members(Position p) const {
  std::vector<Final> out;
  for (int v = 0; v < kBaseVowelCount; ++v)
    if (map_[v] == static_cast<std::uint8_t>(p))
      out.push_back(static_cast<Final>(v));
  return out;
}

void VowelAllocation::save(std::ostream& out) const {
  for (int v = 0; v < kBaseVowelCount; ++v) {
    out << to_string(static_cast<Final>(v)) << "="
        << kPositionNames[map_[v]] << "\n";
  }
}

VowelAllocation VowelAllocation::load(std::istream& in) {
  VowelAllocation a;
  std::array<bool, kBaseVowelCount> seen{};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = strip_cr(line);
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw SchemaError("allocation line missing '=': " + line, lineno);
    const auto vowel = final_from_string(line.substr(0, eq));
    if (!vowel || !is_base_vowel(*vowel))
      throw SchemaError("not a base vowel: " + line.substr(0, eq), lineno);
    const auto pos = position_from_string(line.substr(eq + 1));
    if (!pos) throw SchemaError("unknown position: " + line.substr(eq + 1), lineno);
    a.set(*vowel, *pos);
    seen[static_cast<int>(*vowel)] = true;
  }
  for (int v = 0; v < kBaseVowelCount; ++v)
    if (!seen[v])
      throw TableIncompleteError("allocation missing vowel " +
                                     to_string(static_cast<Final>(v)),
                                 lineno);
  return a;
}

VowelAllocation apply_swap(VowelAllocation a, Final va, Final vb) {
  const Position pa = a.of(va);
  const Position pb = a.of(vb);
  a.set(va, pb);
  a.set(vb, pa);
  return a;
}

VowelAllocation preliminary_allocation() {
  VowelAllocation a;
  auto put = [&](Position p, std::initializer_list<Final> vs) {
    for (Final v : vs) a.set(v, p);
  };
  put(Position::P1, {Final::an, Final::e, Final::o});
  put(Position::P2, {Final::a, Final::ou, Final::en, Final::er});
  put(Position::P3, {Final::i, Final::ong, Final::ang});
  put(Position::P4, {Final::ai, Final::u, Final::ao});
  put(Position::P5, {Final::v, Final::ei, Final::eng});
  return a;
}

VowelAllocation final_allocation() {
  VowelAllocation a = apply_swap(preliminary_allocation(), Final::ong, Final::v);
  return apply_swap(a, Final::eng, Final::en);
}

std::vector<CueUnit> ConsonantTable::members(Handshape h) const {
  std::vector<CueUnit> out;
  for (const CueUnit& u : all_cue_units())
    if (of(u) == h) out.push_back(u);
  return out;
}

void ConsonantTable::save(std::ostream& out) const {
  for (const CueUnit& u : all_cue_units())
    out << u.name() << "=" << int(of(u).id) << "\n";
  out << "*=" << int(isolated_.id) << "\n";
}

ConsonantTable ConsonantTable::load(std::istream& in) {
  ConsonantTable t;
  std::array<bool, kCueUnitCount> seen{};
  bool isolated_seen = false;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = strip_cr(line);
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw SchemaError("consonant line missing '=': " + line, lineno);
    const std::string key = line.substr(0, eq);
    int id = 0;
    try {
      id = std::stoi(line.substr(eq + 1));
    } catch (const std::exception&) {
      throw SchemaError("bad handshape number: " + line, lineno);
    }
    if (id < 1 || id > kHandshapeCount)
      throw SchemaError("handshape out of range 1-8: " + line, lineno);
    const Handshape h{static_cast<std::uint8_t>(id)};
    if (key == "*") {
      t.set_isolated_vowel_handshape(h);
      isolated_seen = true;
      continue;
    }
    CueUnit unit;
    if (auto semi = semiconsonant_from_string(key)) {
      unit = CueUnit::of(*semi);
    } else if (auto ini = initial_from_string(key)) {
      unit = CueUnit::of(*ini);
    } else {
      throw SchemaError("unknown consonant '" + key + "'", lineno);
    }
    t.set(unit, h);
    seen[unit.index()] = true;
  }
  for (const CueUnit& u : all_cue_units())
    if (!seen[u.index()])
      throw TableIncompleteError("consonant table missing " + u.name(), lineno);
  if (!isolated_seen)
    throw TableIncompleteError("consonant table missing isolated-vowel line '*='",
                               lineno);
  return t;
}

const ConsonantTable& ConsonantTable::standard() {
  // Seeded from the French system where the combinability rules allow it
  // (b p m f d t l g k z s r and the three semiconsonants keep their
  // groups; sh and n are displaced by those rules), free consonants fill
  // the remaining slots subject to viseme distinctness. Produced by
  // constraint solving over those rules; the verifier is the authority.
  static const ConsonantTable instance = [] {
    ConsonantTable t;
    auto put = [&](int h, std::initializer_list<const char*> names) {
      for (const char* n : names) {
        if (auto ini = initial_from_string(n))
          t.set(CueUnit::of(*ini), Handshape{static_cast<std::uint8_t>(h)});
        else
          t.set(CueUnit::of(*semiconsonant_from_string(n)),
                Handshape{static_cast<std::uint8_t>(h)});
      }
    };
    put(1, {"p", "d", "j"});
    put(2, {"k", "z", "q"});
    put(3, {"s", "r", "n"});
    put(4, {"b", "[yu]", "zh"});
    put(5, {"m", "t", "f"});
    put(6, {"l", "[w]", "x"});
    put(7, {"g", "ch", "c"});
    put(8, {"[j]", "sh", "h"});
    t.set_isolated_vowel_handshape(Handshape{5});
    return t;
  }();
  return instance;
}

int SemiCombinability::check_count() const {
  int n = 0;
  for (const auto& row : table_)
    for (bool b : row) n += b ? 1 : 0;
  return n;
}

const SemiCombinability& SemiCombinability::standard() {
  static const SemiCombinability instance = [] {
    SemiCombinability c;
    auto put = [&](std::initializer_list<const char*> inis,
                   std::initializer_list<Semiconsonant> semis) {
      for (const char* n : inis)
        for (Semiconsonant s : semis)
          c.set(*initial_from_string(n), s, true);
    };
    using S = Semiconsonant;
    put({"b", "p", "m", "f"}, {S::j});
    put({"d", "t", "n", "l"}, {S::j, S::w, S::q});
    put({"g", "k", "h"}, {S::w});
    put({"j", "q", "x"}, {S::j, S::q});
    put({"zh", "ch", "sh", "r", "z", "c", "s"}, {S::w});
    return c;
  }();
  return instance;
}

void VisemeClasses::save(std::ostream& out) const {
  for (const CueUnit& u : all_cue_units())
    out << u.name() << "=" << of(u) << "\n";
}

VisemeClasses VisemeClasses::load(std::istream& in) {
  VisemeClasses v;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = strip_cr(line);
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw SchemaError("viseme line missing '=': " + line, lineno);
    const std::string key = line.substr(0, eq);
    CueUnit unit;
    if (auto semi = semiconsonant_from_string(key)) {
      unit = CueUnit::of(*semi);
    } else if (auto ini = initial_from_string(key)) {
      unit = CueUnit::of(*ini);
    } else {
      throw SchemaError("unknown consonant '" + key + "'", lineno);
    }
    v.set(unit, line.substr(eq + 1));
  }
  return v;
}

const VisemeClasses& VisemeClasses::standard() {
  static const VisemeClasses instance = [] {
    VisemeClasses v;
    auto put = [&](const char* cls, std::initializer_list<const char*> names) {
      for (const char* n : names) {
        if (auto ini = initial_from_string(n))
          v.set(CueUnit::of(*ini), cls);
        else
          v.set(CueUnit::of(*semiconsonant_from_string(n)), cls);
      }
    };
    put("bilabial", {"b", "p", "m"});
    put("labiodental", {"f"});
    put("alveolar", {"d", "t", "n", "l"});
    put("velar", {"g", "k", "h"});
    put("palatal", {"j", "q", "x"});
    put("retroflex", {"zh", "ch", "sh", "r"});
    put("dental-sibilant", {"z", "c", "s"});
    put("semi-spread", {"[j]"});
    put("semi-rounded", {"[w]"});
    put("semi-front-rounded", {"[yu]"});
    return v;
  }();
  return instance;
}

bool ConfusablePairs::forbidden(Final a, Final b) const {
  const auto ia = static_cast<std::uint8_t>(a);
  const auto ib = static_cast<std::uint8_t>(b);
  for (const Entry& e : entries_) {
    if ((e.a == ia && e.b == ib) || (e.a == ib && e.b == ia))
      return !e.whitelisted;
  }
  return false;
}

void ConfusablePairs::add(Final a, Final b, bool whitelisted) {
  entries_.push_back(Entry{static_cast<std::uint8_t>(a),
                           static_cast<std::uint8_t>(b), whitelisted});
}

std::vector<std::pair<Final, Final>> ConfusablePairs::pairs() const {
  std::vector<std::pair<Final, Final>> out;
  for (const Entry& e : entries_)
    out.emplace_back(static_cast<Final>(e.a), static_cast<Final>(e.b));
  return out;
}

void ConfusablePairs::save(std::ostream& out) const {
  for (const Entry& e : entries_) {
    out << to_string(static_cast<Final>(e.a)) << ","
        << to_string(static_cast<Final>(e.b));
    if (e.whitelisted) out << ",ok";
    out << "\n";
  }
}

ConfusablePairs ConfusablePairs::load(std::istream& in) {
  ConfusablePairs c;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = strip_cr(line);
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    std::string a, b, flag;
    if (!std::getline(ss, a, ',') || !std::getline(ss, b, ','))
      throw SchemaError("confusable line needs two vowels: " + line, lineno);
    std::getline(ss, flag, ',');
    const auto va = final_from_string(a);
    const auto vb = final_from_string(b);
    if (!va || !vb || !is_base_vowel(*va) || !is_base_vowel(*vb))
      throw SchemaError("not base vowels: " + line, lineno);
    c.add(*va, *vb, flag == "ok");
  }
  return c;
}

const ConfusablePairs& ConfusablePairs::standard() {
  // Lip-shape similarity classes: rounded vowels, the unrounded nasal
  // codas, the open set, the mid unrounded pair, plus ao/ong whose
  // offglides are both rounded. e/o is listed but whitelisted: they occur
  // after disjoint consonant sets, so the handshape disambiguates.
  static const ConfusablePairs instance = [] {
    ConfusablePairs c;
    auto pair = [&](const char* a, const char* b, bool ok = false) {
      c.add(*final_from_string(a), *final_from_string(b), ok);
    };
    const char* rounded[] = {"o", "u", "v", "ou", "ong"};
    for (int i = 0; i < 5; ++i)
      for (int j = i + 1; j < 5; ++j) pair(rounded[i], rounded[j]);
    const char* nasal[] = {"an", "en", "ang", "eng"};
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) pair(nasal[i], nasal[j]);
    pair("a", "an");
    pair("a", "ang");
    pair("e", "eng");
    pair("ao", "ong");
    pair("e", "o", /*ok=*/true);
    return c;
  }();
  return instance;
}

std::string_view to_string(Violation::Kind k) {
  switch (k) {
    case Violation::Kind::capacity: return "capacity";
    case Violation::Kind::placement: return "placement";
    case Violation::Kind::totality: return "totality";
    case Violation::Kind::cooccurrence: return "cooccurrence";
    case Violation::Kind::viseme: return "viseme";
    case Violation::Kind::confusable: return "confusable";
  }
  return "?";
}

std::vector<Violation> verify_vowel_allocation(const VowelAllocation& a,
                                               const ConfusablePairs& confusables) {
  std::vector<Violation> out;
  constexpr int kCapacity[kPositionCount] = {3, 4, 3, 3, 3};
  for (int p = 0; p < kPositionCount; ++p) {
    const auto members = a.members(static_cast<Position>(p));
    if (static_cast<int>(members.size()) != kCapacity[p]) {
      out.push_back({Violation::Kind::capacity,
                     std::string(kPositionNames[p]),
                     "has " + std::to_string(members.size()) + " vowels, expected " +
                         std::to_string(kCapacity[p])});
    }
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        if (confusables.forbidden(members[i], members[j])) {
          out.push_back({Violation::Kind::confusable,
                         to_string(members[i]) + "," + to_string(members[j]),
                         "confusable pair share " +
                             std::string(kPositionNames[p])});
        }
      }
    }
  }
  const Position per = a.of(Final::er);
  if (per != Position::P2 && per != Position::P4 && per != Position::P5) {
    out.push_back({Violation::Kind::placement, "er",
                   "er must sit in P2, P4 or P5, found " +
                       std::string(to_string(per))});
  }
  return out;
}

std::vector<Violation> verify_consonant_table(const ConsonantTable& t,
                                              const SemiCombinability& combinability,
                                              const VisemeClasses& visemes) {
  std::vector<Violation> out;
  for (int h = 1; h <= kHandshapeCount; ++h) {
    const auto members = t.members(Handshape{static_cast<std::uint8_t>(h)});
    if (members.size() > 3) {
      out.push_back({Violation::Kind::capacity, "handshape " + std::to_string(h),
                     "has " + std::to_string(members.size()) +
                         " consonants, at most 3 allowed"});
    }
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        const CueUnit& a = members[i];
        const CueUnit& b = members[j];
        // A consonant must not share a handshape with a semiconsonant it can
        // precede; l with [w] is the one tolerated exception.
        const auto check_pair = [&](const CueUnit& cons, const CueUnit& semi) {
          if (cons.is_semi || !semi.is_semi) return;
          if (!combinability.combinable(cons.initial, semi.semi)) return;
          if (cons.initial == Initial::l && semi.semi == Semiconsonant::w)
            return;
          out.push_back({Violation::Kind::cooccurrence,
                         cons.name() + "," + semi.name(),
                         "combinable pair share handshape " +
                             std::to_string(h)});
        };
        check_pair(a, b);
        check_pair(b, a);
        if (!a.is_semi && !b.is_semi && visemes.of(a) == visemes.of(b)) {
          out.push_back({Violation::Kind::viseme, a.name() + "," + b.name(),
                         "same lip-shape class '" + visemes.of(a) +
                             "' share handshape " + std::to_string(h)});
        }
      }
    }
  }
  // Semiconsonants must occupy three distinct handshapes.
  const Handshape hj = t.of(Semiconsonant::j);
  const Handshape hw = t.of(Semiconsonant::w);
  const Handshape hq = t.of(Semiconsonant::q);
  if (hj == hw || hj == hq || hw == hq) {
    out.push_back({Violation::Kind::placement, "semiconsonants",
                   "[j], [w], [\xc9\xa5] must use three distinct handshapes"});
  }
  return out;
}

}  // namespace mcs
