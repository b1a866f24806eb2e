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

#ifndef MORPHLAB_METRICS_HPP_
#define MORPHLAB_METRICS_HPP_

#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "morphlab/corpus.hpp"
#include "morphlab/textmodel.hpp"

namespace morphlab {

struct PRResult {
  double precision = 0.0;
  double recall = 0.0;
};

struct CategoryReport {
  std::string category;
  std::size_t n = 0;
  double macro_precision = 0.0;
  double macro_recall = 0.0;
};

/// Predicted segmentations keyed by surface.
using PredictionMap = std::unordered_map<std::string, Segmentation>;

/// Boundary precision and recall for one word. When both are undefined (no
/// predicted and no gold boundaries) both are 1; when only one is undefined
/// that one is 0. Throws WordMismatch.
PRResult word_pr(const Segmentation& pred, const Segmentation& gold);

/// Arithmetic mean of per-word results. Throws EmptyCategory.
CategoryReport macro_average(std::span<const PRResult> results,
                             std::string category = {});
/// (pred, gold) pairs. Throws EmptyCategory or WordMismatch.
CategoryReport macro_pr(std::span<const std::pair<Segmentation, Segmentation>> pairs,
                        std::string category = {});

/// A site gets a boundary iff strictly more than half of the responses have
/// one there. Throws WordMismatch, or ValidationError on no responses.
Segmentation majority_vote(std::span<const Segmentation> responses);

/// Rows per category present in `gold`, ordered by `vocab` and then by first
/// appearance. Throws MissingWord when a gold word has no prediction.
std::vector<CategoryReport> category_reports(
    std::span<const GoldEntry> gold, const PredictionMap& preds,
    const CategoryVocabulary& vocab = CategoryVocabulary::builtin());

/// Token length of the group form that the gold analysis separates off at
/// the group's edge, or nullopt. A subcategory holding hyphenated affix
/// labels (comma-separated, e.g. "-nga") restricts membership to groups
/// containing one of those affixes.
std::optional<std::size_t> affix_length(const GoldEntry& entry,
                                        const AffixGroup& group);

/// True iff `pred` has a boundary at the affix/stem junction and none inside
/// the affix. Stem-internal boundaries are ignored. Throws GroupMismatch.
bool affix_recovered(const GoldEntry& entry, const AffixGroup& group,
                     const Segmentation& pred);

/// Mean of affix_recovered over `entries`. Throws EmptyCategory,
/// GroupMismatch or MissingWord.
double recovery_rate(std::span<const GoldEntry> entries, const AffixGroup& group,
                     const PredictionMap& preds);

/// Entries whose gold analysis carries an affix of `group`.
std::vector<GoldEntry> group_members(std::span<const GoldEntry> entries,
                                     const AffixGroup& group);

PredictionMap to_prediction_map(std::span<const GoldEntry> entries);

}  // namespace morphlab

#endif  // MORPHLAB_METRICS_HPP_
