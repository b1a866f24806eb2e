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

// Unsupervised MDL segmentation in the style of Morfessor Baseline.
//
// The model is a morph inventory with type-based usage counts. Its cost in
// bits is a two-part code:
//
//   L(corpus | lexicon) = -sum over analyses, morphs of log2(count(m) / N)
//   L(lexicon)          = sum over morph types of
//                           [-sum_g log2 p(g) + log2(|G| + 1)]
//                         + log2 C(N - 1, M - 1)
//
// where N is the number of morph tokens across all analyses, M the number of
// morph types, p(g) the maximum-likelihood grapheme distribution of the
// training words and |G| the number of distinct graphemes in it.

#ifndef MORPHLAB_SEGMENTER_HPP_
#define MORPHLAB_SEGMENTER_HPP_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "morphlab/corpus.hpp"
#include "morphlab/textmodel.hpp"

namespace morphlab {

/// How decoding prices a substring that is not in the inventory.
enum class UnknownMorphPolicy {
  /// Grapheme code + end marker + log2(N + 1).
  kExtendLexiconCost,
};

struct TrainConfig {
  std::uint64_t seed = 0;
  int max_epochs = 50;
  /// Minimum cost improvement per epoch, in bits. Unset means
  /// 0.005 * (number of training words).
  std::optional<double> convergence_threshold;
  UnknownMorphPolicy unknown_morph_policy = UnknownMorphPolicy::kExtendLexiconCost;

  double threshold_for(std::size_t word_count) const {
    return convergence_threshold.value_or(0.005 * static_cast<double>(word_count));
  }
};

/// Per-epoch bookkeeping recorded during training.
struct EpochTrace {
  double cost_before = 0.0;
  double cost_after = 0.0;
  /// |incremental - from-scratch| at epoch end, before resynchronising.
  double cache_drift = 0.0;
  std::size_t accepted_changes = 0;
};

class MorphModel {
 public:
  /// The model format version written by save().
  static constexpr int kFormatVersion = 1;

  MorphModel() = default;

  const TrainConfig& config() const { return config_; }
  const GraphemeInventory& inventory() const { return *inventory_; }

  /// Training analyses in lexicon order.
  const std::vector<Segmentation>& analyses() const { return analyses_; }
  const Segmentation* find_analysis(const std::string& surface) const;

  /// Usage count of a morph, 0 when absent.
  long morph_count(const TokenSeq& morph) const;
  std::size_t morph_types() const { return counts_.size(); }
  long total_tokens() const { return total_tokens_; }
  /// (morph, count) pairs sorted by descending count, then surface.
  std::vector<std::pair<TokenSeq, long>> morph_table() const;

  /// Maximum-likelihood grapheme probability; 0 for unseen graphemes.
  double grapheme_prob(GraphemeId id) const;
  std::size_t alphabet_size() const { return alphabet_size_; }
  /// Bits to spell one grapheme in the lexicon code. Graphemes never seen in
  /// training cost log2(T + 1), T being the training grapheme total.
  double grapheme_cost(GraphemeId id) const;
  double end_marker_cost() const;
  /// Lexicon code length of one morph type (graphemes + end marker).
  double morph_spelling_cost(const TokenSeq& morph) const;

  /// Cached total cost in bits.
  double cost() const { return cost_cache_; }
  /// Cost recomputed from the analyses.
  double recompute_cost() const;
  double lexicon_cost() const;
  double corpus_cost() const;

  /// Decoding price of one morph under the current counts.
  double decode_morph_cost(const TokenSeq& morph) const;
  /// Sum of decode_morph_cost over the pieces of `seg`.
  double decode_cost(const Segmentation& seg) const;

  /// Stored analysis for training words, Viterbi decoding otherwise.
  Segmentation segment(const Word& word) const;
  /// Minimum decode_cost segmentation. Ties go to fewer boundaries, then to
  /// the longest first morph (applied left to right).
  Segmentation viterbi_segment(const Word& word) const;

  const std::vector<EpochTrace>& trace() const { return trace_; }

  void save(std::ostream& out) const;
  void save(const std::filesystem::path& path) const;
  static MorphModel load(std::istream& in, const GraphemeInventory& inventory =
                                               GraphemeInventory::maori());
  static MorphModel load(const std::filesystem::path& path,
                         const GraphemeInventory& inventory =
                             GraphemeInventory::maori());

  /// Builds a model from fixed analyses (no training). Counts, grapheme
  /// statistics and cost follow from the analyses.
  static MorphModel from_analyses(std::vector<Segmentation> analyses,
                                  TrainConfig config = {},
                                  const GraphemeInventory& inventory =
                                      GraphemeInventory::maori());

 private:
  friend MorphModel train(const Lexicon& lexicon, const TrainConfig& config,
                          const GraphemeInventory& inventory);
  friend class Trainer;

  void init_graphemes(const std::vector<Segmentation>& analyses);
  void rebuild_counts();

  const GraphemeInventory* inventory_ = &GraphemeInventory::maori();
  TrainConfig config_;
  std::vector<Segmentation> analyses_;
  std::unordered_map<std::string, std::size_t> analysis_index_;
  // Morph keys are token ids packed one per byte.
  std::unordered_map<std::string, long> counts_;
  long total_tokens_ = 0;
  std::vector<long> grapheme_counts_;
  long grapheme_total_ = 0;
  std::size_t alphabet_size_ = 0;
  std::vector<double> grapheme_cost_;
  double cost_cache_ = 0.0;
  std::vector<EpochTrace> trace_;
};

/// Learns a morph inventory from word types. Deterministic in
/// (lexicon, config). Throws ValidationError on an empty lexicon.
MorphModel train(const Lexicon& lexicon, const TrainConfig& config = {},
                 const GraphemeInventory& inventory = GraphemeInventory::maori());

/// log2 of the binomial coefficient C(n, k).
double log2_binomial(long n, long k);

}  // namespace morphlab

#endif  // MORPHLAB_SEGMENTER_HPP_
