#include "mcs/corpus.hpp"

#include <istream>
#include <sstream>

#include "mcs/transcoder.hpp"

namespace mcs {

namespace {

// 242 words, grouped by the base vowel they exercise. Nonstandard spellings
// (yü, jü, xü, qü, xiou) are kept as recorded; the parser accepts them.
constexpr std::string_view kCorpusText =
    // ei
    "ei gei shei wei lei fei mei tei bei nei hei dei pei\n"
    // ü
    "n\xc3\xbc y\xc3\xbc j\xc3\xbc x\xc3\xbc q\xc3\xbc\n"
    // en
    "en chen cen gen shen wen fen men ben nen sen ren hen ken zhen pen\n"
    // ao
    "ao chao yao xiao cao gao shao lao mao tao bao nao sao rao zao kao zhao "
    "pao\n"
    // u
    "chu cu gu shu wu lu fu tu bu nu su ru hu zu ku zhu du pu\n"
    // ai
    "ai chai cai gai shai wai lai mai tai bai nai sai hai zai kai zhai dai "
    "pai\n"
    // ang
    "chang yang cang xiang jiang gang shang wang lang tang fang bang nang "
    "sang rang hang zang zhang dang pang\n"
    // ong
    "chong yong cong gong long tong nong song rong hong zong kong zhong "
    "dong\n"
    // i
    "chi yi xi ci ji mi ti bi ni si ri zi qi zhi di pi\n"
    // eng
    "cheng ceng geng sheng weng leng feng meng teng beng neng seng reng heng "
    "keng zheng deng peng\n"
    // an
    "an chan yan xian can gan shan wan lan fan man tan yuan ban nan san ran "
    "han zan kan zhan dan pan\n"
    // ou
    "ou chou you xiou cou gou shou lou fou mou tou nou sou hou rou zou kou "
    "zhou dou pou\n"
    // a
    "a cha ya xia ca ga sha wa la ma fa ta ba na sa ha za ka zha da pa\n"
    // e
    "e che ye ce she le me te ne se re he ze ke zhe de\n"
    // o
    "o wo fo bo po\n"
    // er
    "er\n";

}  // namespace

const std::vector<std::string>& default_corpus() {
  static const std::vector<std::string> words = [] {
    std::vector<std::string> w;
    std::istringstream in{std::string(kCorpusText)};
    std::string tok;
    while (in >> tok) w.push_back(tok);
    return w;
  }();
  return words;
}

std::vector<std::string> load_corpus(std::istream& in) {
  std::vector<std::string> w;
  std::string tok;
  while (in >> tok) w.push_back(tok);
  return w;
}

std::array<int, kBaseVowelCount> vowel_histogram(
    const std::vector<std::string>& words, const Syllabary& syllabary) {
  std::array<int, kBaseVowelCount> counts{};
  for (const std::string& word : words) {
    const Syllable s = parse_syllable(word, syllabary);
    const FinalDecomposition dec = decompose_final(s.final);
    ++counts[static_cast<int>(dec.vowel)];
  }
  return counts;
}

const std::array<Final, kBaseVowelCount>& histogram_print_order() {
  static const std::array<Final, kBaseVowelCount> order = {
      Final::a,   Final::o,   Final::e,   Final::i,
      Final::u,   Final::v,   Final::ai,  Final::ei,
      Final::ang, Final::eng, Final::ong, Final::an,
      Final::en,  Final::er,  Final::ou,  Final::ao};
  return order;
}

}  // namespace mcs
