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

#ifndef MORPHLAB_FREQUENCY_HPP_
#define MORPHLAB_FREQUENCY_HPP_

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "morphlab/corpus.hpp"

namespace morphlab {

/// Surface-exact corpus counts, in file order.
struct CountTable {
  std::vector<std::pair<std::string, long>> counts;
  long total = 0;

  static CountTable from_pairs(std::vector<std::pair<std::string, long>> counts);
};

enum class SmoothingMethod { kSimpleGoodTuring, kAddOneFallback };

struct SmoothedTable {
  /// Probabilities of words with a non-zero count.
  std::unordered_map<std::string, double> probs;
  /// Probability given to each dictionary word with a zero count.
  double p_unseen_each = 0.0;
  std::unordered_set<std::string> unseen_words;
  SmoothingMethod method = SmoothingMethod::kSimpleGoodTuring;

  /// Throws MissingWord for words neither counted nor in the dictionary.
  double prob(const std::string& surface) const;
  double total_mass() const;
};

// Count file: surface TAB count per line.
CountTable parse_counts(std::istream& in);
CountTable load_counts(const std::filesystem::path& path);

/// Simple Good-Turing (Gale & Sampson) estimates for counted words, with the
/// N1/N unseen mass split evenly over zero-count dictionary words.
///
/// Adjusted counts use r* = (r+1) S(r+1)/S(r), S being a least-squares line
/// through (log r, log Z_r) with Z_r = 2 N_r / (r_next - r_prev). Turing
/// estimates (r+1) N_{r+1}/N_r are used for small r until they fall within
/// 1.96 standard deviations of the smoothed value or N_{r+1} is missing;
/// from then on the smoothed value is used. Seen probabilities are
/// (1 - N1/N) r* / sum(N_r r*), renormalised to 1 when the dictionary has no
/// unseen words.
///
/// With fewer than two distinct counts, or no singletons while unseen
/// dictionary words exist, the table is degenerate: a warning is emitted and
/// add-one smoothing is applied to the counts divided by their gcd.
SmoothedTable sgt_smooth(const CountTable& table, const Lexicon& dictionary);

/// Share of `lexicon_size` words whose gold analysis separates off an affix
/// of `group` at the group's edge.
double type_frequency(const AffixGroup& group, std::span<const GoldEntry> gold,
                      std::size_t lexicon_size);

/// Smoothed token mass of the gold words carrying an affix of `group`.
double token_frequency(const AffixGroup& group, std::span<const GoldEntry> gold,
                       const SmoothedTable& smoothed);

}  // namespace morphlab

#endif  // MORPHLAB_FREQUENCY_HPP_
