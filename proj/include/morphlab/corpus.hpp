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

#ifndef MORPHLAB_CORPUS_HPP_
#define MORPHLAB_CORPUS_HPP_

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "morphlab/textmodel.hpp"

namespace morphlab {

/// Unique words in file order.
struct Lexicon {
  std::string name;
  std::vector<Word> words;
};

/// One segmented word with its (optional) category labels. Loaded gold
/// standards, predictions and generated ground truth all use this record.
struct GoldEntry {
  Segmentation gold;
  std::string category;
  std::optional<std::string> subcategory;

  const Word& word() const { return gold.word(); }
};

struct RaterData {
  Word word;
  std::vector<std::string> rater_ids;
  std::vector<Segmentation> responses;
};

enum class AffixEdge { kPrefix, kSuffix };

struct AffixGroup {
  std::string name;
  AffixEdge edge = AffixEdge::kPrefix;
  std::vector<TokenSeq> forms;
  bool is_default = false;
  bool template_consistent = false;
  std::optional<std::string> thematic_consonant_note;
};

/// Controlled vocabulary of category labels (label, description).
struct CategoryVocabulary {
  std::vector<std::pair<std::string, std::string>> labels;

  bool contains(const std::string& label) const;
  static const CategoryVocabulary& builtin();
};

// Lexicon files: one surface per line; blank lines and '#' comments skipped.
Lexicon parse_lexicon(std::istream& in, std::string name,
                      const GraphemeInventory& inventory =
                          GraphemeInventory::maori());
Lexicon load_lexicon(const std::filesystem::path& path,
                     const GraphemeInventory& inventory =
                         GraphemeInventory::maori());
void write_lexicon(std::ostream& out, const Lexicon& lexicon);

/// Builds a segmentation from '+'-separated morph strings. A junction that
/// falls inside a digraph moves to the site after it, with a warning.
Segmentation segmentation_from_morphs(const Word& word,
                                      const std::vector<std::string>& morphs,
                                      const GraphemeInventory& inventory =
                                          GraphemeInventory::maori(),
                                      std::size_t line = 0);

// Segmentation TSV: surface, '+'-joined morphs, [category], [subcategory].
std::vector<GoldEntry> parse_segmentations(
    std::istream& in,
    const GraphemeInventory& inventory = GraphemeInventory::maori());
std::vector<GoldEntry> load_segmentations(
    const std::filesystem::path& path,
    const GraphemeInventory& inventory = GraphemeInventory::maori());
void write_segmentations(std::ostream& out,
                         const std::vector<GoldEntry>& entries,
                         const GraphemeInventory& inventory =
                             GraphemeInventory::maori());

/// Fills missing categories with "other" and rejects labels outside `vocab`.
void apply_category_vocabulary(std::vector<GoldEntry>& entries,
                               const CategoryVocabulary& vocab);
CategoryVocabulary load_category_vocabulary(const std::filesystem::path& path);

// Rater TSV: surface, rater id, '+'-joined morphs. Words keep first-seen order.
std::vector<RaterData> parse_raters(
    std::istream& in,
    const GraphemeInventory& inventory = GraphemeInventory::maori());
std::vector<RaterData> load_raters(
    const std::filesystem::path& path,
    const GraphemeInventory& inventory = GraphemeInventory::maori());

// Affix-group JSON: array of {name, edge, forms, is_default,
// template_consistent, [thematic_consonant_note]}. An uppercase C inside a
// form stands for any consonant of the inventory.
std::vector<AffixGroup> parse_affix_groups(
    const std::string& json_text,
    const GraphemeInventory& inventory = GraphemeInventory::maori());
std::vector<AffixGroup> load_affix_groups(
    const std::filesystem::path& path,
    const GraphemeInventory& inventory = GraphemeInventory::maori());
/// The six passive/nominal/causative groups bundled with the library.
const std::vector<AffixGroup>& default_affix_groups();
const std::string& default_affix_groups_json();

std::string read_file(const std::filesystem::path& path);
/// Splits on tabs, keeping empty fields.
std::vector<std::string> split_fields(const std::string& line, char sep = '\t');

}  // namespace morphlab

#endif  // MORPHLAB_CORPUS_HPP_
