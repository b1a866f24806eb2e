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

#ifndef MORPHLAB_PIPELINE_HPP_
#define MORPHLAB_PIPELINE_HPP_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "morphlab/corpus.hpp"
#include "morphlab/frequency.hpp"
#include "morphlab/metrics.hpp"
#include "morphlab/pseudogen.hpp"
#include "morphlab/segmenter.hpp"

namespace morphlab {

/// Trains on the gold words, segments them and macro-averages against gold.
PRResult train_and_score(std::span<const GoldEntry> gold, const TrainConfig& config);

/// Everything one pseudo set needs, derived once from the real gold data.
struct PseudoSetPlan {
  SourceStats stats;
  std::vector<WordTemplate> templates;
  MorphTypeCounts morph_counts;
  GenerateConfig generate;
  TrainConfig train;
  std::uint64_t base_seed = 0;

  /// Restricts `gold` to morphs of at most three syllables, counts and fits
  /// the three levels and collects templates.
  static PseudoSetPlan from_gold(std::span<const GoldEntry> gold,
                                 std::uint64_t base_seed,
                                 const TrainConfig& train = {},
                                 const GenerateConfig& generate = {});

  std::uint64_t seed_for(std::size_t set_index) const { return base_seed + set_index; }
  PseudoLexicon generate_set(std::size_t set_index) const;
};

struct SetResult {
  std::size_t index = 0;
  std::uint64_t seed = 0;
  double precision = 0.0;
  double recall = 0.0;
};

/// Generates set k with seed base+k, trains a fresh model on it (same seed)
/// and scores it against the generated ground truth.
SetResult run_pseudo_set(const PseudoSetPlan& plan, std::size_t set_index);

/// Reference loop over sets 0..count-1.
std::vector<SetResult> run_pseudo_sets_serial(const PseudoSetPlan& plan,
                                              std::size_t count);
/// OpenMP loop over sets; identical output to the serial loop. A failure in
/// any set is rethrown after the loop (lowest set index first).
std::vector<SetResult> run_pseudo_sets_parallel(const PseudoSetPlan& plan,
                                                std::size_t count);

/// Nearest-rank percentile (p in (0, 100]) of unsorted values.
double nearest_rank_percentile(std::vector<double> values, double p);

struct Analysis2Report {
  PRResult real;
  std::vector<SetResult> sets;
  double mean_precision = 0.0;
  double mean_recall = 0.0;
  double precision_2_5 = 0.0;
  double precision_97_5 = 0.0;
  double recall_2_5 = 0.0;
  double recall_97_5 = 0.0;
};

struct Analysis2Config {
  std::size_t set_count = 1000;
  std::uint64_t seed = 0;
  bool parallel = true;
  TrainConfig train;
  GenerateConfig generate;
};

Analysis2Report run_analysis2(std::span<const GoldEntry> gold,
                              const Analysis2Config& config);
Analysis2Report summarise(PRResult real, std::vector<SetResult> sets);

void write_sets_tsv(std::ostream& out, const Analysis2Report& report);
void write_summary_tsv(std::ostream& out, const Analysis2Report& report);
/// Two 30-bin histograms over [0, 1] (precision, recall) with the real-data
/// value, the pseudo mean and the 2.5-97.5 percentile interval marked.
void write_analysis2_svg(std::ostream& out, const Analysis2Report& report);

// Table-shaped reports.
void write_category_tsv(std::ostream& out, std::span<const CategoryReport> rows);

struct AffixReportRow {
  std::string group;
  std::size_t n = 0;
  double type_freq = 0.0;
  std::optional<double> token_freq;
  /// One rate per prediction source; unset when the group has no words.
  std::vector<std::optional<double>> recovery;
};

struct PredictionSource {
  std::string name;
  PredictionMap predictions;
};

/// One row per group. `lexicon_size` defaults to the gold size when zero.
std::vector<AffixReportRow> affix_report(std::span<const GoldEntry> gold,
                                         std::span<const AffixGroup> groups,
                                         std::span<const PredictionSource> sources,
                                         std::size_t lexicon_size,
                                         const SmoothedTable* smoothed);
void write_affix_tsv(std::ostream& out, std::span<const AffixReportRow> rows,
                     std::span<const PredictionSource> sources);

/// Majority-voted segmentation per rated word, in file order.
std::vector<GoldEntry> vote_all(std::span<const RaterData> raters);

/// Shortest decimal text that reads back to the same double.
std::string format_real(double value);

}  // namespace morphlab

#endif  // MORPHLAB_PIPELINE_HPP_
