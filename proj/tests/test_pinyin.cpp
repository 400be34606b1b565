#include <doctest.h>

#include <fstream>
#include <sstream>

#include "mcs/pinyin.hpp"

using namespace mcs;

namespace {

Syllable parse(const char* raw) { return parse_syllable(raw); }

}  // namespace

TEST_CASE("segment splits on digits, apostrophes and longest match") {
  CHECK(segment("song1shu3") == std::vector<std::string>{"song1", "shu3"});
  CHECK(segment("xi'an1") == std::vector<std::string>{"xi", "an1"});
  CHECK(segment("xian1") == std::vector<std::string>{"xian1"});
  CHECK(segment("  ma1   pa4\n") == std::vector<std::string>{"ma1", "pa4"});
  CHECK(segment("") == std::vector<std::string>{});
  // tone marks inside a run
  CHECK(segment("s\xc5\x8dngsh\xc3\xb9") ==
        std::vector<std::string>{"s\xc5\x8dng", "sh\xc3\xb9"});
}

TEST_CASE("segment is longest-match for every single orthographic form") {
  for (const auto& form : Syllabary::standard().forms()) {
    const std::string toned = form.text + "3";
    const auto tokens = segment(toned);
    REQUIRE(tokens.size() == 1);
    CHECK(tokens[0] == toned);
  }
}

TEST_CASE("segment reports the offending span") {
  CHECK_THROWS_AS(segment("xq1"), ParseError);
  try {
    segment("ma1 xq1run");
  } catch (const ParseError& e) {
    CHECK(e.span() == "xq1run");
    CHECK(e.offset() == 4);
  }
}

TEST_CASE("parse_syllable handles plain, w/y and contracted forms") {
  const Syllable ma = parse("ma1");
  CHECK(ma.initial == Initial::m);
  CHECK(ma.final == Final::a);
  CHECK(ma.tone.value == 1);
  CHECK(ma.apical == ApicalVariant::none);

  const Syllable kuai = parse("kuai4");
  CHECK(kuai.initial == Initial::k);
  CHECK(kuai.final == Final::uai);
  const Syllable wai = parse("wai4");
  CHECK_FALSE(wai.initial.has_value());
  CHECK(wai.final == Final::uai);
  CHECK(wai.tone.value == 4);

  const Syllable jun = parse("jun1");
  CHECK(jun.initial == Initial::j);
  CHECK(jun.final == Final::vn);

  const Syllable shi = parse("shi4");
  CHECK(shi.initial == Initial::sh);
  CHECK(shi.final == Final::i);
  CHECK(shi.apical == ApicalVariant::retroflex);
  CHECK(parse("zi1").apical == ApicalVariant::dental);
  CHECK(parse("mi1").apical == ApicalVariant::none);

  CHECK(parse("xiu1") == parse("xiou1"));
  CHECK(parse("dui4") == parse("duei4"));
  CHECK(parse("lun2").final == Final::uen);
  CHECK(parse("you3").final == Final::iou);
  CHECK(parse("yuan2").final == Final::van);
  CHECK(parse("ying1").final == Final::ing);
  CHECK(parse("weng1").final == Final::ueng);
}

TEST_CASE("parse_syllable accepts v, explicit umlaut and nonstandard spellings") {
  CHECK(parse("lv4") == parse("l\xc3\xbc"
                              "4"));
  CHECK(parse("lv4").final == Final::v);
  CHECK(parse("ju1") == parse("j\xc3\xbc"
                              "1"));
  CHECK(parse("yu3") == parse("y\xc3\xbc"
                              "3"));
  CHECK(parse("nve4") == parse("n\xc3\xbc"
                               "e4"));
}

TEST_CASE("tone marks and digits give equal syllables") {
  CHECK(parse("s\xc5\x8dng") == parse("song1"));
  CHECK(parse("m\xc3\xa1") == parse("ma2"));
  CHECK(parse("l\xc7\x9c") == parse("lv4"));
  CHECK(parse("ma5") == parse("ma0"));
  CHECK(parse("ma") == parse("ma0"));
}

TEST_CASE("parse_syllable rejects bad input") {
  CHECK_THROWS_AS(parse("xq1"), InvalidSyllableError);
  CHECK_THROWS_AS(parse("bong1"), InvalidSyllableError);
  CHECK_THROWS_AS(parse("ma7"), InvalidToneError);
  CHECK_THROWS_AS(parse("ma1a"), InvalidToneError);
  CHECK_THROWS_AS(parse(""), InvalidSyllableError);
  CHECK_THROWS_AS(parse("m\xc3\xa1"
                        "1"),
                  InvalidToneError);  // mark and digit
  CHECK_THROWS_AS(parse("zh1"), InvalidSyllableError);
}

TEST_CASE("render_syllable produces canonical orthography") {
  Syllable s;
  s.initial = Initial::m;
  s.final = Final::a;
  s.tone.value = 1;
  CHECK(render_syllable(s) == "ma1");

  Syllable wai;
  wai.final = Final::uai;
  wai.tone.value = 4;
  CHECK(render_syllable(wai) == "wai4");

  Syllable lv;
  lv.initial = Initial::l;
  lv.final = Final::v;
  lv.tone.value = 4;
  CHECK(render_syllable(lv) == "l\xc3\xbc"
                               "4");

  Syllable ju;  // ü written u after j
  ju.initial = Initial::j;
  ju.final = Final::v;
  ju.tone.value = 1;
  CHECK(render_syllable(ju) == "ju1");

  Syllable diu;  // iou contracts to iu
  diu.initial = Initial::d;
  diu.final = Final::iou;
  diu.tone.value = 1;
  CHECK(render_syllable(diu) == "diu1");
}

TEST_CASE("validate follows the shipped syllabary") {
  CHECK(validate(Initial::k, Final::uai));
  CHECK_FALSE(validate(Initial::b, Final::ong));
  CHECK(validate(std::nullopt, Final::er));
  CHECK(validate(Initial::t, Final::ei));   // tei
  CHECK(validate(Initial::l, Final::o));    // lo
  CHECK(validate(Initial::m, Final::e));    // me
  CHECK_FALSE(validate(Initial::f, Final::i));
}

TEST_CASE("round trip over the full syllabary and tones") {
  // Equality includes the apical flag, so restate its defining rule here.
  const auto expected_apical = [](std::optional<Initial> ini, Final f) {
    if (f != Final::i || !ini) return ApicalVariant::none;
    if (*ini == Initial::z || *ini == Initial::c || *ini == Initial::s)
      return ApicalVariant::dental;
    if (*ini == Initial::zh || *ini == Initial::ch || *ini == Initial::sh ||
        *ini == Initial::r)
      return ApicalVariant::retroflex;
    return ApicalVariant::none;
  };

  const Syllabary& sy = Syllabary::standard();
  std::size_t cases = 0;
  for (int row = 0; row <= kInitialCount; ++row) {
    std::optional<Initial> ini;
    if (row > 0) ini = static_cast<Initial>(row - 1);
    for (int f = 0; f < kFinalCount; ++f) {
      const Final fin = static_cast<Final>(f);
      if (!sy.validates(ini, fin)) continue;
      for (int t = 0; t <= 4; ++t) {
        Syllable s;
        s.initial = ini;
        s.final = fin;
        s.tone.value = static_cast<std::uint8_t>(t);
        s.apical = expected_apical(ini, fin);
        const Syllable back = parse_syllable(render_syllable(s));
        CHECK(back == s);
        ++cases;
      }
    }
  }
  CHECK(cases == sy.size() * 5);
  CHECK(sy.size() == 408);
}

TEST_CASE("wai and kuai share the same final value") {
  CHECK(parse("wai4").final == parse("kuai4").final);
}

TEST_CASE("syllabary save/load round trip and shipped file consistency") {
  const Syllabary& sy = Syllabary::standard();
  std::ostringstream out;
  sy.save(out);
  std::istringstream in(out.str());
  const Syllabary loaded = Syllabary::load(in);
  CHECK(loaded.size() == sy.size());
  for (int row = 0; row <= kInitialCount; ++row) {
    std::optional<Initial> ini;
    if (row > 0) ini = static_cast<Initial>(row - 1);
    for (int f = 0; f < kFinalCount; ++f) {
      CHECK(loaded.validates(ini, static_cast<Final>(f)) ==
            sy.validates(ini, static_cast<Final>(f)));
    }
  }

  std::ifstream file(std::string(MCS_DATA_DIR) + "/syllabary.txt",
                     std::ios::binary);
  REQUIRE(file.good());
  std::ostringstream file_text;
  file_text << file.rdbuf();
  CHECK(file_text.str() == out.str());
}
