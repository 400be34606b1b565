#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mcs/classifier.hpp"
#include "mcs/corpus.hpp"
#include "mcs/optimizer.hpp"
#include "mcs/transcoder.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw mcs::Error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

template <typename T>
T load_from_file(const std::string& path, T (*loader)(std::istream&)) {
  std::ifstream in(path);
  if (!in) throw mcs::Error("cannot open file: " + path);
  return loader(in);
}

mcs::VowelAllocation pick_allocation(const std::string& choice) {
  if (choice == "final") return mcs::final_allocation();
  if (choice == "preliminary") return mcs::preliminary_allocation();
  return load_from_file(choice, &mcs::VowelAllocation::load);
}

void print_chart(const mcs::VowelAllocation& alloc,
                 const mcs::ConsonantTable& table) {
  std::printf("Hand positions (vowels)\n");
  for (int p = 0; p < mcs::kPositionCount; ++p) {
    const auto pos = static_cast<mcs::Position>(p);
    std::printf("  %s %-5s:", std::string(to_string(pos)).c_str(),
                std::string(position_anchor(pos)).c_str());
    for (mcs::Final v : alloc.members(pos))
      std::printf(" %s", mcs::to_string(v).c_str());
    std::printf("\n");
  }
  std::printf("Handshapes (consonants)\n");
  for (int h = 1; h <= mcs::kHandshapeCount; ++h) {
    std::printf("  %d:", h);
    for (const mcs::CueUnit& u :
         table.members(mcs::Handshape{static_cast<std::uint8_t>(h)}))
      std::printf(" %s", u.name().c_str());
    if (table.isolated_vowel_handshape().id == h)
      std::printf(" (isolated vowel)");
    std::printf("\n");
  }
  std::printf("Tones (head movements)\n ");
  for (int t = 0; t <= 4; ++t)
    std::printf(" %d=%s", t,
                std::string(to_string(static_cast<mcs::HeadMove>(t))).c_str());
  std::printf("\n");
}

void print_report(const mcs::EvalReport& report) {
  for (int p = 0; p < mcs::kPositionCount; ++p) {
    std::printf("%s mean=%.2f std=%.2f\n",
                std::string(to_string(static_cast<mcs::Position>(p))).c_str(),
                report.per_position[p].mean, report.per_position[p].stddev);
  }
  std::printf("average=%.2f\n", report.average);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mandarin cued-speech toolkit: pinyin transcoding, lip-shape "
               "separability evaluation, allocation search"};
  app.require_subcommand(1);

  // transcode
  std::vector<std::string> words;
  std::string in_file;
  bool lenient = false;
  bool chart = false;
  std::string alloc_choice = "final";
  std::string consonants_file;
  auto* cmd_tr = app.add_subcommand("transcode", "Pinyin text to cue tokens");
  cmd_tr->add_option("text", words, "pinyin text (toned)");
  cmd_tr->add_option("--file", in_file, "read input from file");
  cmd_tr->add_flag("--lenient", lenient, "report parse errors, keep going");
  cmd_tr->add_flag("--chart", chart, "print the system chart instead");
  cmd_tr->add_option("--allocation", alloc_choice,
                     "final | preliminary | table file");
  cmd_tr->add_option("--consonants", consonants_file, "consonant table file");

  // corpus-stats
  std::string corpus_file;
  auto* cmd_cs = app.add_subcommand("corpus-stats",
                                    "vowel occurrence histogram of a corpus");
  cmd_cs->add_option("--file", corpus_file,
                     "word list file (default: built-in recording list)");

  // verify
  std::string visemes_file, confusables_file;
  auto* cmd_vf = app.add_subcommand("verify", "check tables against the rules");
  cmd_vf->add_option("--allocation", alloc_choice,
                     "final | preliminary | table file");
  cmd_vf->add_option("--consonants", consonants_file, "consonant table file");
  cmd_vf->add_option("--visemes", visemes_file, "viseme class file");
  cmd_vf->add_option("--confusables", confusables_file,
                     "confusable vowel pair file");

  // eval
  std::string csv_file;
  std::uint64_t seed = mcs::kDefaultSeed;
  int reps = 100;
  double train_fraction = 0.8;
  bool serial = false;
  auto* cmd_ev = app.add_subcommand("eval", "per-position separability scores");
  cmd_ev->add_option("csv", csv_file, "lip sample CSV")->required();
  cmd_ev->add_option("--allocation", alloc_choice,
                     "final | preliminary | table file");
  cmd_ev->add_option("--seed", seed, "random seed");
  cmd_ev->add_option("--reps", reps, "repetitions per position");
  cmd_ev->add_option("--train-fraction", train_fraction, "train share");
  cmd_ev->add_flag("--serial", serial, "use the serial reference path");

  // optimize
  std::string start_choice = "preliminary";
  int search_reps = 20;
  int final_reps = 100;
  int max_iters = 16;
  bool oracle = false;
  int depth = 2;
  auto* cmd_op = app.add_subcommand("optimize",
                                    "hill-climb the vowel allocation");
  cmd_op->add_option("csv", csv_file, "lip sample CSV")->required();
  cmd_op->add_option("--start", start_choice,
                     "preliminary | final | table file");
  cmd_op->add_option("--seed", seed, "random seed");
  cmd_op->add_option("--reps", search_reps, "repetitions per search eval");
  cmd_op->add_option("--final-reps", final_reps, "repetitions for re-score");
  cmd_op->add_option("--max-iters", max_iters, "swap rounds bound");
  cmd_op->add_flag("--oracle", oracle,
                   "also run the exhaustive depth-limited search");
  cmd_op->add_option("--depth", depth, "oracle search depth");

  // gen-synthetic
  std::string config_file, out_file;
  int frames = 100;
  auto* cmd_gs = app.add_subcommand("gen-synthetic",
                                    "sample lip data from Gaussian clusters");
  cmd_gs->add_option("--config", config_file, "cluster config file")
      ->required();
  cmd_gs->add_option("--frames", frames, "frames per vowel");
  cmd_gs->add_option("--seed", seed, "random seed");
  cmd_gs->add_option("--out", out_file, "output CSV (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*cmd_tr) {
      const mcs::VowelAllocation alloc = pick_allocation(alloc_choice);
      const mcs::ConsonantTable table =
          consonants_file.empty()
              ? mcs::ConsonantTable::standard()
              : load_from_file(consonants_file, &mcs::ConsonantTable::load);
      if (chart) {
        print_chart(alloc, table);
        return 0;
      }
      std::string text;
      if (!in_file.empty()) text = read_file(in_file);
      for (const std::string& w : words) {
        if (!text.empty()) text += ' ';
        text += w;
      }
      // Whitespace never falls inside a syllable, so chunk-wise segmentation
      // matches whole-text segmentation and lets lenient mode skip bad runs.
      int failures = 0;
      std::istringstream chunks(text);
      std::string chunk;
      while (chunks >> chunk) {
        try {
          for (const mcs::SyllableCues& cues :
               mcs::transcode_text(chunk, mcs::Syllabary::standard(), alloc,
                                   table)) {
            std::printf("%s\n", mcs::format_record(cues).c_str());
          }
        } catch (const mcs::ParseError& e) {
          ++failures;
          std::fprintf(stderr, "error: %s\n", e.what());
          if (!lenient) return 2;
        }
      }
      return (failures == 0 || lenient) ? 0 : 2;
    }

    if (*cmd_cs) {
      const std::vector<std::string> corpus =
          corpus_file.empty() ? mcs::default_corpus()
                              : load_from_file(corpus_file, &mcs::load_corpus);
      const auto counts = mcs::vowel_histogram(corpus);
      int total = 0;
      for (mcs::Final v : mcs::histogram_print_order()) {
        std::printf("%s:%d\n", mcs::to_string(v).c_str(),
                    counts[static_cast<int>(v)]);
        total += counts[static_cast<int>(v)];
      }
      std::printf("total:%d\n", total);
      return 0;
    }

    if (*cmd_vf) {
      mcs::VowelAllocation alloc;
      mcs::ConsonantTable table;
      try {
        alloc = pick_allocation(alloc_choice);
        table = consonants_file.empty()
                    ? mcs::ConsonantTable::standard()
                    : load_from_file(consonants_file, &mcs::ConsonantTable::load);
      } catch (const mcs::TableIncompleteError& e) {
        std::printf("violation totality: %s\n", e.what());
        return 1;
      }
      const mcs::VisemeClasses visemes =
          visemes_file.empty()
              ? mcs::VisemeClasses::standard()
              : load_from_file(visemes_file, &mcs::VisemeClasses::load);
      const mcs::ConfusablePairs confusables =
          confusables_file.empty()
              ? mcs::ConfusablePairs::standard()
              : load_from_file(confusables_file, &mcs::ConfusablePairs::load);
      auto violations = mcs::verify_vowel_allocation(alloc, confusables);
      const auto consonant_violations = mcs::verify_consonant_table(
          table, mcs::SemiCombinability::standard(), visemes);
      violations.insert(violations.end(), consonant_violations.begin(),
                        consonant_violations.end());
      for (const mcs::Violation& v : violations) {
        std::printf("violation %s %s: %s\n",
                    std::string(to_string(v.kind)).c_str(), v.subject.c_str(),
                    v.detail.c_str());
      }
      if (violations.empty()) std::printf("ok\n");
      return violations.empty() ? 0 : 1;
    }

    if (*cmd_ev) {
      const mcs::VowelAllocation alloc = pick_allocation(alloc_choice);
      const auto data = load_from_file(csv_file, &mcs::load_lip_csv);
      const mcs::EvalParams params{train_fraction, reps, seed};
      const mcs::EvalReport report =
          serial ? mcs::serial::evaluate_allocation(data, alloc, params)
                 : mcs::evaluate_allocation(data, alloc, params);
      print_report(report);
      return 0;
    }

    if (*cmd_op) {
      const mcs::VowelAllocation start = pick_allocation(start_choice);
      const auto data = load_from_file(csv_file, &mcs::load_lip_csv);
      mcs::SearchParams params;
      params.seed = seed;
      params.reps_per_eval = search_reps;
      params.final_reps = final_reps;
      params.max_iters = max_iters;
      const mcs::SearchResult result = mcs::hill_climb(data, start,
                                                       mcs::ConfusablePairs::standard(),
                                                       params);
      std::printf("%s", mcs::format_trace(result.trace).c_str());
      std::printf("accepted %zu swap(s)\n", result.trace.size());
      print_report(result.score);
      std::ostringstream alloc_text;
      result.best.save(alloc_text);
      std::printf("%s", alloc_text.str().c_str());
      if (oracle) {
        const mcs::SearchResult ex = mcs::exhaustive_swap_search(
            data, start, depth, mcs::ConfusablePairs::standard(), params);
        std::printf("oracle depth=%d\n%s", depth,
                    mcs::format_trace(ex.trace).c_str());
        std::printf("oracle average=%.2f\n", ex.score.average);
        std::printf("oracle agrees=%s\n",
                    ex.best == result.best ? "yes" : "no");
      }
      return 0;
    }

    if (*cmd_gs) {
      const auto specs = load_from_file(config_file, &mcs::load_cluster_specs);
      const auto data = mcs::generate_synthetic(specs, frames, seed);
      if (out_file.empty()) {
        mcs::save_lip_csv(std::cout, data);
      } else {
        std::ofstream out(out_file, std::ios::binary);
        if (!out) throw mcs::Error("cannot open output file: " + out_file);
        mcs::save_lip_csv(out, data);
      }
      return 0;
    }
  } catch (const mcs::SchemaError& e) {
    std::fprintf(stderr, "error (line %zu): %s\n", e.line(), e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 0;
}
