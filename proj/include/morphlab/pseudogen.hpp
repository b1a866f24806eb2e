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

// Pseudo-lexicons that share a real lexicon's recurrence statistics but
// carry no other cue to their structure. Phonemes build (C)V syllables,
// syllables build morphs and morphs build words; at each level types are
// drawn from a rank-frequency law fitted to the source data and duplicates
// are rejected and redrawn.

#ifndef MORPHLAB_PSEUDOGEN_HPP_
#define MORPHLAB_PSEUDOGEN_HPP_

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "morphlab/corpus.hpp"
#include "morphlab/powerlaw.hpp"
#include "morphlab/rng.hpp"
#include "morphlab/textmodel.hpp"

namespace morphlab {

enum class Level { kPhoneme = 0, kSyllable = 1, kMorph = 2 };

const char* level_name(Level level);

struct RankedType {
  TokenSeq form;
  long count = 0;
};

/// Types of one level ranked by how many unique types of the next level up
/// contain them. Ties keep first-occurrence order.
struct LevelStats {
  Level level = Level::kPhoneme;
  std::vector<RankedType> types;
  std::optional<PowerLawFit> fit;

  RankedCounts ranked_counts() const;
};

using SourceStats = std::array<LevelStats, 3>;

struct WordTemplate {
  /// Syllables per morph, in order; each 1..3.
  std::vector<int> morph_syllable_counts;
};

struct MorphTypeCounts {
  std::size_t mono = 0;
  std::size_t di = 0;
  std::size_t tri = 0;

  std::size_t of(int syllables) const;
  friend bool operator==(const MorphTypeCounts&, const MorphTypeCounts&) = default;
};

/// Type-level counts: phonemes per unique syllable, syllables per unique
/// morph, morphs per unique word. Fits are left unset. Throws
/// ValidationError on empty input and SyllabificationFailure.
SourceStats count_level_frequencies(std::span<const GoldEntry> gold,
                                    const GraphemeInventory& inventory =
                                        GraphemeInventory::maori());

/// Fits every level in place; propagates DegenerateFit and friends.
void fit_levels(SourceStats& stats);

/// Per-word morph syllable counts. Throws ValidationError for a morph of
/// more than three syllables.
std::vector<WordTemplate> word_templates(std::span<const GoldEntry> gold,
                                         const GraphemeInventory& inventory =
                                             GraphemeInventory::maori());

/// Unique gold morphs by syllable count.
MorphTypeCounts morph_type_counts(std::span<const GoldEntry> gold,
                                  const GraphemeInventory& inventory =
                                      GraphemeInventory::maori());

/// Drops words containing a morph of more than `max_syllables` syllables.
std::vector<GoldEntry> filter_max_morph_syllables(std::span<const GoldEntry> gold,
                                                  int max_syllables,
                                                  const GraphemeInventory& inventory =
                                                      GraphemeInventory::maori());

/// Categorical distribution sampled by inversion.
class DiscreteSampler {
 public:
  DiscreteSampler() = default;
  explicit DiscreteSampler(std::vector<double> weights);

  std::size_t sample(Rng& rng) const;
  const std::vector<double>& probs() const { return probs_; }
  std::size_t size() const { return probs_.size(); }

 private:
  std::vector<double> probs_;
  std::vector<double> cumulative_;
};

/// Law-weighted distribution over an inventory of `type_count` types: a
/// random permutation assigns ranks 1..K and type at rank x gets weight
/// a * b^(-x), normalised.
struct TypeDistribution {
  /// rank_order[x - 1] is the inventory index holding rank x.
  std::vector<std::size_t> rank_order;
  /// Probability per inventory index.
  std::vector<double> probs;

  /// Sampler over the indices with `keep[i]` set, renormalised. Throws
  /// ValidationError when nothing is kept.
  DiscreteSampler restricted(const std::vector<bool>& keep) const;
  DiscreteSampler sampler() const { return DiscreteSampler(probs); }
};

TypeDistribution make_sampler(const PowerLawFit& fit, std::size_t type_count,
                              Rng& rng);

struct GenerateConfig {
  /// Draws allowed per new type before RetryExhausted.
  std::size_t retry_budget = 10000;
  /// Chance of a consonant onset. Unset: share of CV among source syllables.
  std::optional<double> cv_probability;
};

struct PseudoLexicon {
  std::vector<Word> words;
  /// Ground-truth analyses, one per word, morph junctions as boundaries.
  std::vector<GoldEntry> ground_truth;
  std::uint64_t seed = 0;
  SourceStats source_stats;
  MorphTypeCounts morph_type_counts;
  double cv_probability = 0.0;
  std::vector<TokenSeq> syllables;
  std::vector<TokenSeq> morphs;
};

/// Throws RetryExhausted when a level cannot be filled with unique types and
/// ValidationError when stats lack fits or templates need absent morph sizes.
PseudoLexicon generate_pseudo_lexicon(const SourceStats& stats,
                                      std::span<const WordTemplate> templates,
                                      const MorphTypeCounts& counts,
                                      const GraphemeInventory& inventory,
                                      std::uint64_t seed,
                                      const GenerateConfig& config = {});

/// Sidecar metadata (seed, fits, counts) as JSON text.
std::string pseudo_metadata_json(const PseudoLexicon& lexicon,
                                 const GraphemeInventory& inventory =
                                     GraphemeInventory::maori());

}  // namespace morphlab

#endif  // MORPHLAB_PSEUDOGEN_HPP_
