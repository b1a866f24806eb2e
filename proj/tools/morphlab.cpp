// Copyright 2026 The morphlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// morphlab command-line driver.

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "morphlab/corpus.hpp"
#include "morphlab/error.hpp"
#include "morphlab/frequency.hpp"
#include "morphlab/metrics.hpp"
#include "morphlab/parallel.hpp"
#include "morphlab/pipeline.hpp"
#include "morphlab/pseudogen.hpp"
#include "morphlab/segmenter.hpp"

namespace fs = std::filesystem;
using namespace morphlab;

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitIo = 4;

void write_file(const fs::path& path, const std::function<void(std::ostream&)>& body) {
  if (path.has_parent_path()) {
    std::error_code ec;
    fs::create_directories(path.parent_path(), ec);
    if (ec) throw IoError("cannot create directory '" + path.parent_path().string() + "'");
  }
  std::ostringstream buffer;
  body(buffer);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path.string() + "'");
  out << buffer.str();
  out.flush();
  if (!out) throw IoError("error writing '" + path.string() + "'");
}

Lexicon words_of(const std::vector<GoldEntry>& gold, std::string name) {
  Lexicon lex;
  lex.name = std::move(name);
  for (const GoldEntry& e : gold) lex.words.push_back(e.word());
  return lex;
}

Lexicon load_words(const std::string& lexicon, const std::string& gold) {
  if (!gold.empty()) return words_of(load_segmentations(gold), gold);
  return load_lexicon(lexicon);
}

PredictionMap segment_with(const MorphModel& model, std::span<const GoldEntry> gold) {
  std::vector<Word> words;
  for (const GoldEntry& e : gold) words.push_back(e.word());
  const auto segs = segment_all_parallel(model, words);
  PredictionMap preds;
  for (const Segmentation& s : segs) preds.insert_or_assign(s.word().surface(), s);
  return preds;
}

std::vector<AffixGroup> groups_from(const std::string& path) {
  return path.empty() ? default_affix_groups() : load_affix_groups(path);
}

// name=path pairs; a bare path is named after its file stem.
std::pair<std::string, std::string> named_path(const std::string& arg) {
  const auto eq = arg.find('=');
  if (eq == std::string::npos) return {fs::path(arg).stem().string(), arg};
  return {arg.substr(0, eq), arg.substr(eq + 1)};
}

struct Common {
  int threads = 0;
};

struct TrainArgs {
  std::string lexicon;
  std::string gold;
  std::string model;
  std::uint64_t seed = 0;
  int max_epochs = 50;
  std::optional<double> threshold;
};

struct SegmentArgs {
  std::string model;
  std::string lexicon;
  std::string gold;
  std::string out;
};

struct EvalArgs {
  std::string gold;
  std::string predictions;
  std::string model;
  std::string categories;
  std::string affix_groups;
  std::string counts;
  std::string dictionary;
  std::string raters;
  std::size_t lexicon_size = 0;
  std::string out;
};

struct VoteArgs {
  std::string raters;
  std::string out;
  std::string rater_counts;
};

struct AffixArgs {
  std::string gold;
  std::vector<std::string> predictions;
  std::string model;
  std::string raters;
  std::string affix_groups;
  std::string counts;
  std::string dictionary;
  std::size_t lexicon_size = 0;
  std::string out;
};

struct PseudoArgs {
  std::string gold;
  std::uint64_t seed = 0;
  std::string out;
  std::string meta;
  std::size_t retry_budget = 10000;
  std::optional<double> cv_probability;
};

struct Analysis2Args {
  std::string gold;
  std::size_t sets = 1000;
  std::uint64_t seed = 0;
  std::string out = ".";
  bool serial = false;
};

void run_train(const TrainArgs& a) {
  if (a.lexicon.empty() == a.gold.empty()) {
    throw ValidationError("train needs exactly one of --lexicon or --gold");
  }
  TrainConfig cfg;
  cfg.seed = a.seed;
  cfg.max_epochs = a.max_epochs;
  cfg.convergence_threshold = a.threshold;
  const MorphModel model = train(load_words(a.lexicon, a.gold), cfg);
  write_file(a.model, [&](std::ostream& out) { model.save(out); });
}

void run_segment(const SegmentArgs& a) {
  if (a.lexicon.empty() == a.gold.empty()) {
    throw ValidationError("segment needs exactly one of --lexicon or --gold");
  }
  const MorphModel model = MorphModel::load(fs::path(a.model));
  const Lexicon lex = load_words(a.lexicon, a.gold);
  const auto segs = segment_all_parallel(model, lex.words);
  std::vector<GoldEntry> rows;
  for (const Segmentation& s : segs) rows.push_back({s, std::string(), std::nullopt});
  write_file(a.out, [&](std::ostream& out) { write_segmentations(out, rows); });
}

std::optional<SmoothedTable> smoothed_counts(const std::string& counts,
                                             const std::string& dictionary,
                                             std::span<const GoldEntry> gold) {
  if (counts.empty()) return std::nullopt;
  const Lexicon dict =
      dictionary.empty() ? words_of({gold.begin(), gold.end()}, "gold")
                         : load_lexicon(dictionary);
  return sgt_smooth(load_counts(counts), dict);
}

void run_eval(const EvalArgs& a) {
  if (a.predictions.empty() == a.model.empty()) {
    throw ValidationError("eval needs exactly one of --predictions or --model");
  }
  std::vector<GoldEntry> gold = load_segmentations(a.gold);
  const CategoryVocabulary vocab = a.categories.empty()
                                       ? CategoryVocabulary::builtin()
                                       : load_category_vocabulary(a.categories);
  apply_category_vocabulary(gold, vocab);

  std::vector<PredictionSource> sources;
  if (!a.model.empty()) {
    sources.push_back({"model", segment_with(MorphModel::load(fs::path(a.model)), gold)});
  } else {
    sources.push_back({"predictions", to_prediction_map(load_segmentations(a.predictions))});
  }
  if (!a.raters.empty()) {
    sources.push_back({"raters", to_prediction_map(vote_all(load_raters(a.raters)))});
  }
  const auto categories = category_reports(gold, sources.front().predictions, vocab);
  const auto smoothed = smoothed_counts(a.counts, a.dictionary, gold);
  const auto groups = groups_from(a.affix_groups);
  const auto affixes = affix_report(gold, groups, sources, a.lexicon_size,
                                    smoothed ? &*smoothed : nullptr);
  const fs::path dir(a.out);
  write_file(dir / "categories.tsv",
             [&](std::ostream& out) { write_category_tsv(out, categories); });
  write_file(dir / "affixes.tsv",
             [&](std::ostream& out) { write_affix_tsv(out, affixes, sources); });
}

void run_vote(const VoteArgs& a) {
  const auto raters = load_raters(a.raters);
  const auto voted = vote_all(raters);
  write_file(a.out, [&](std::ostream& out) { write_segmentations(out, voted); });
  if (!a.rater_counts.empty()) {
    write_file(a.rater_counts, [&](std::ostream& out) {
      out << "surface\traters\n";
      for (const RaterData& r : raters) {
        out << r.word.surface() << '\t' << r.responses.size() << '\n';
      }
    });
  }
}

void run_affix_report(const AffixArgs& a) {
  const std::vector<GoldEntry> gold = load_segmentations(a.gold);
  std::vector<PredictionSource> sources;
  for (const std::string& arg : a.predictions) {
    auto [name, path] = named_path(arg);
    sources.push_back({name, to_prediction_map(load_segmentations(path))});
  }
  if (!a.model.empty()) {
    sources.push_back({"model", segment_with(MorphModel::load(fs::path(a.model)), gold)});
  }
  if (!a.raters.empty()) {
    sources.push_back({"raters", to_prediction_map(vote_all(load_raters(a.raters)))});
  }
  if (sources.empty()) {
    throw ValidationError("affix-report needs --predictions, --model or --raters");
  }
  const auto smoothed = smoothed_counts(a.counts, a.dictionary, gold);
  const auto rows = affix_report(gold, groups_from(a.affix_groups), sources,
                                 a.lexicon_size, smoothed ? &*smoothed : nullptr);
  write_file(a.out, [&](std::ostream& out) { write_affix_tsv(out, rows, sources); });
}

void run_gen_pseudo(const PseudoArgs& a) {
  GenerateConfig gen;
  gen.retry_budget = a.retry_budget;
  gen.cv_probability = a.cv_probability;
  const PseudoSetPlan plan =
      PseudoSetPlan::from_gold(load_segmentations(a.gold), a.seed, {}, gen);
  const PseudoLexicon lex = plan.generate_set(0);
  write_file(a.out, [&](std::ostream& out) { write_segmentations(out, lex.ground_truth); });
  const std::string meta = a.meta.empty() ? a.out + ".json" : a.meta;
  write_file(meta, [&](std::ostream& out) { out << pseudo_metadata_json(lex); });
}

void run_analysis2_cmd(const Analysis2Args& a) {
  Analysis2Config cfg;
  cfg.set_count = a.sets;
  cfg.seed = a.seed;
  cfg.parallel = !a.serial;
  const Analysis2Report report = run_analysis2(load_segmentations(a.gold), cfg);
  const fs::path dir(a.out);
  write_file(dir / "analysis2_sets.tsv",
             [&](std::ostream& out) { write_sets_tsv(out, report); });
  write_file(dir / "analysis2_summary.tsv",
             [&](std::ostream& out) { write_summary_tsv(out, report); });
  write_file(dir / "analysis2.svg",
             [&](std::ostream& out) { write_analysis2_svg(out, report); });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"morphlab: statistical morph segmentation experiments"};
  app.set_version_flag("--version",
                       std::string("morphlab ") + MORPHLAB_VERSION + "\nmodel format " +
                           std::to_string(MorphModel::kFormatVersion));
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_option("--threads", common.threads, "worker threads (default: all)")
      ->check(CLI::NonNegativeNumber);

  std::function<void()> action;

  TrainArgs train_args;
  auto* train_cmd = app.add_subcommand("train", "train a morph model");
  train_cmd->add_option("--lexicon", train_args.lexicon, "one word per line")
      ;
  train_cmd->add_option("--gold", train_args.gold, "segmentation TSV; words only")
      ;
  train_cmd->add_option("--model,-o", train_args.model, "model file to write")->required();
  train_cmd->add_option("--seed", train_args.seed);
  train_cmd->add_option("--max-epochs", train_args.max_epochs)->check(CLI::PositiveNumber);
  train_cmd->add_option("--threshold", train_args.threshold,
                        "epoch improvement in bits below which training stops");
  train_cmd->callback([&] { action = [&] { run_train(train_args); }; });

  SegmentArgs seg_args;
  auto* seg_cmd = app.add_subcommand("segment", "segment words with a model");
  seg_cmd->add_option("--model", seg_args.model)->required();
  seg_cmd->add_option("--lexicon", seg_args.lexicon);
  seg_cmd->add_option("--gold", seg_args.gold);
  seg_cmd->add_option("--out,-o", seg_args.out, "segmentation TSV to write")->required();
  seg_cmd->callback([&] { action = [&] { run_segment(seg_args); }; });

  EvalArgs eval_args;
  auto* eval_cmd = app.add_subcommand("eval", "score predictions against gold");
  eval_cmd->add_option("--gold", eval_args.gold)->required();
  eval_cmd->add_option("--predictions", eval_args.predictions);
  eval_cmd->add_option("--model", eval_args.model);
  eval_cmd->add_option("--categories", eval_args.categories);
  eval_cmd->add_option("--affix-groups", eval_args.affix_groups);
  eval_cmd->add_option("--counts", eval_args.counts);
  eval_cmd->add_option("--dictionary", eval_args.dictionary);
  eval_cmd->add_option("--raters", eval_args.raters);
  eval_cmd->add_option("--lexicon-size", eval_args.lexicon_size,
                       "denominator for type frequency (default: gold size)");
  eval_cmd->add_option("--out,-o", eval_args.out, "output directory")->required();
  eval_cmd->callback([&] { action = [&] { run_eval(eval_args); }; });

  VoteArgs vote_args;
  auto* vote_cmd = app.add_subcommand("vote", "majority-vote rater segmentations");
  vote_cmd->add_option("--raters", vote_args.raters)->required();
  vote_cmd->add_option("--out,-o", vote_args.out)->required();
  vote_cmd->add_option("--rater-counts", vote_args.rater_counts,
                       "also write the number of raters per word");
  vote_cmd->callback([&] { action = [&] { run_vote(vote_args); }; });

  AffixArgs affix_args;
  auto* affix_cmd = app.add_subcommand("affix-report", "affix recovery per group");
  affix_cmd->add_option("--gold", affix_args.gold)->required();
  affix_cmd->add_option("--predictions", affix_args.predictions, "[name=]path, repeatable");
  affix_cmd->add_option("--model", affix_args.model);
  affix_cmd->add_option("--raters", affix_args.raters);
  affix_cmd->add_option("--affix-groups", affix_args.affix_groups);
  affix_cmd->add_option("--counts", affix_args.counts);
  affix_cmd->add_option("--dictionary", affix_args.dictionary);
  affix_cmd->add_option("--lexicon-size", affix_args.lexicon_size);
  affix_cmd->add_option("--out,-o", affix_args.out)->required();
  affix_cmd->callback([&] { action = [&] { run_affix_report(affix_args); }; });

  PseudoArgs pseudo_args;
  auto* pseudo_cmd = app.add_subcommand("gen-pseudo", "generate one pseudo-lexicon");
  pseudo_cmd->add_option("--gold", pseudo_args.gold)->required();
  pseudo_cmd->add_option("--seed", pseudo_args.seed);
  pseudo_cmd->add_option("--out,-o", pseudo_args.out, "segmentation TSV")->required();
  pseudo_cmd->add_option("--meta", pseudo_args.meta, "JSON sidecar (default: OUT.json)");
  pseudo_cmd->add_option("--retry-budget", pseudo_args.retry_budget)
      ->check(CLI::PositiveNumber);
  pseudo_cmd->add_option("--cv-probability", pseudo_args.cv_probability)
      ->check(CLI::Range(0.0, 1.0));
  pseudo_cmd->callback([&] { action = [&] { run_gen_pseudo(pseudo_args); }; });

  Analysis2Args a2_args;
  auto* a2_cmd = app.add_subcommand("analysis2", "real vs pseudo-lexicon comparison");
  a2_cmd->add_option("--gold", a2_args.gold)->required();
  a2_cmd->add_option("--sets", a2_args.sets)->check(CLI::PositiveNumber);
  a2_cmd->add_option("--seed", a2_args.seed);
  a2_cmd->add_option("--out,-o", a2_args.out, "output directory");
  a2_cmd->add_flag("--serial", a2_args.serial, "run sets without OpenMP");
  a2_cmd->callback([&] { action = [&] { run_analysis2_cmd(a2_args); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitValidation;
  }

  try {
    if (common.threads > 0) set_thread_count(common.threads);
    action();
  } catch (const Error& e) {
    std::cerr << "morphlab: " << e.what() << '\n';
    switch (e.kind()) {
      case ErrorKind::kValidation: return kExitValidation;
      case ErrorKind::kInfeasible: return kExitInfeasible;
      case ErrorKind::kIo: return kExitIo;
    }
  } catch (const std::exception& e) {
    std::cerr << "morphlab: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
