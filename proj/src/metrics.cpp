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

#include "morphlab/metrics.hpp"

#include <algorithm>
#include <map>

#include "morphlab/error.hpp"

namespace morphlab {

namespace {

void require_same_word(const Segmentation& a, const Segmentation& b) {
  if (a.word().surface() != b.word().surface()) {
    throw WordMismatch("segmentations of '" + a.word().surface() + "' and '" +
                       b.word().surface() + "' compared");
  }
}

const Segmentation& prediction_for(const PredictionMap& preds, const Word& word) {
  auto it = preds.find(word.surface());
  if (it == preds.end()) {
    throw MissingWord("no prediction for '" + word.surface() + "'");
  }
  return it->second;
}

std::vector<std::string> affix_labels(const std::string& subcategory) {
  std::vector<std::string> labels;
  for (std::string label : split_fields(subcategory, ',')) {
    while (!label.empty() && label.front() == ' ') label.erase(label.begin());
    while (!label.empty() && label.back() == ' ') label.pop_back();
    if (label.size() > 1 && (label.front() == '-' || label.back() == '-')) {
      labels.push_back(label);
    }
  }
  return labels;
}

}  // namespace

PRResult word_pr(const Segmentation& pred, const Segmentation& gold) {
  require_same_word(pred, gold);
  std::size_t hits = 0;
  for (std::size_t b : pred.boundaries()) {
    if (gold.has_boundary(b)) ++hits;
  }
  const std::size_t np = pred.size();
  const std::size_t ng = gold.size();
  if (np == 0 && ng == 0) return {1.0, 1.0};
  PRResult r;
  r.precision = np == 0 ? 0.0 : static_cast<double>(hits) / static_cast<double>(np);
  r.recall = ng == 0 ? 0.0 : static_cast<double>(hits) / static_cast<double>(ng);
  return r;
}

CategoryReport macro_average(std::span<const PRResult> results,
                             std::string category) {
  if (results.empty()) {
    throw EmptyCategory("no words in category '" + category + "'");
  }
  double p = 0.0;
  double r = 0.0;
  for (const PRResult& x : results) {
    p += x.precision;
    r += x.recall;
  }
  const double n = static_cast<double>(results.size());
  return {std::move(category), results.size(), p / n, r / n};
}

CategoryReport macro_pr(std::span<const std::pair<Segmentation, Segmentation>> pairs,
                        std::string category) {
  std::vector<PRResult> results;
  results.reserve(pairs.size());
  for (const auto& [pred, gold] : pairs) results.push_back(word_pr(pred, gold));
  return macro_average(results, std::move(category));
}

Segmentation majority_vote(std::span<const Segmentation> responses) {
  if (responses.empty()) throw ValidationError("majority vote needs a response");
  const Segmentation& first = responses.front();
  std::vector<std::size_t> votes(first.word().site_count() + 1, 0);
  for (const Segmentation& r : responses) {
    require_same_word(r, first);
    for (std::size_t b : r.boundaries()) ++votes[b];
  }
  std::vector<std::size_t> boundaries;
  for (std::size_t site = 1; site < votes.size(); ++site) {
    if (2 * votes[site] > responses.size()) boundaries.push_back(site);
  }
  return Segmentation(first.word(), std::move(boundaries));
}

std::vector<CategoryReport> category_reports(std::span<const GoldEntry> gold,
                                             const PredictionMap& preds,
                                             const CategoryVocabulary& vocab) {
  std::vector<std::string> order;
  std::map<std::string, std::vector<PRResult>> by_category;
  for (const GoldEntry& e : gold) {
    auto [it, inserted] = by_category.try_emplace(e.category);
    if (inserted) order.push_back(e.category);
    it->second.push_back(word_pr(prediction_for(preds, e.word()), e.gold));
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](const std::string& a, const std::string& b) {
                     auto rank = [&](const std::string& c) {
                       for (std::size_t i = 0; i < vocab.labels.size(); ++i) {
                         if (vocab.labels[i].first == c) return i;
                       }
                       return vocab.labels.size();
                     };
                     return rank(a) < rank(b);
                   });
  std::vector<CategoryReport> reports;
  for (const std::string& c : order) {
    reports.push_back(macro_average(by_category[c], c));
  }
  return reports;
}

std::optional<std::size_t> affix_length(const GoldEntry& entry,
                                        const AffixGroup& group) {
  if (entry.gold.empty()) return std::nullopt;
  if (entry.subcategory) {
    const auto labels = affix_labels(*entry.subcategory);
    if (!labels.empty()) {
      bool named = false;
      for (const std::string& label : labels) {
        if (label == group.name) named = true;
        for (const TokenSeq& form : group.forms) {
          const std::string text = GraphemeInventory::maori().render(form);
          const std::string hyphenated =
              group.edge == AffixEdge::kPrefix ? text + "-" : "-" + text;
          if (label == hyphenated) named = true;
        }
      }
      if (!named) return std::nullopt;
    }
  }
  const auto morphs = segmentation_to_morphs(entry.gold);
  const TokenSeq& edge =
      group.edge == AffixEdge::kPrefix ? morphs.front() : morphs.back();
  for (const TokenSeq& form : group.forms) {
    if (form == edge) return form.size();
  }
  return std::nullopt;
}

bool affix_recovered(const GoldEntry& entry, const AffixGroup& group,
                     const Segmentation& pred) {
  require_same_word(pred, entry.gold);
  const auto len = affix_length(entry, group);
  if (!len) {
    throw GroupMismatch("gold analysis of '" + entry.word().surface() +
                        "' has no affix from group '" + group.name + "'");
  }
  const std::size_t n = entry.word().size();
  // Affix occupies tokens [lo, hi); its internal sites are lo+1 .. hi-1.
  const std::size_t lo = group.edge == AffixEdge::kPrefix ? 0 : n - *len;
  const std::size_t hi = lo + *len;
  const std::size_t junction = group.edge == AffixEdge::kPrefix ? hi : lo;
  if (!pred.has_boundary(junction)) return false;
  for (std::size_t site = lo + 1; site < hi; ++site) {
    if (pred.has_boundary(site)) return false;
  }
  return true;
}

double recovery_rate(std::span<const GoldEntry> entries, const AffixGroup& group,
                     const PredictionMap& preds) {
  if (entries.empty()) {
    throw EmptyCategory("affix group '" + group.name + "' has no words");
  }
  std::size_t recovered = 0;
  for (const GoldEntry& e : entries) {
    if (affix_recovered(e, group, prediction_for(preds, e.word()))) ++recovered;
  }
  return static_cast<double>(recovered) / static_cast<double>(entries.size());
}

std::vector<GoldEntry> group_members(std::span<const GoldEntry> entries,
                                     const AffixGroup& group) {
  std::vector<GoldEntry> out;
  for (const GoldEntry& e : entries) {
    if (affix_length(e, group)) out.push_back(e);
  }
  return out;
}

PredictionMap to_prediction_map(std::span<const GoldEntry> entries) {
  PredictionMap map;
  for (const GoldEntry& e : entries) map.insert_or_assign(e.word().surface(), e.gold);
  return map;
}

}  // namespace morphlab
