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

// Test-only brute-force oracles for the segmenter. Nothing here calls the
// segmenter's cost code: grapheme statistics, the two-part code and the
// decode prices are recomputed from their definitions.

#ifndef MORPHLAB_TESTS_ORACLE_HPP_
#define MORPHLAB_TESTS_ORACLE_HPP_

#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <vector>

#include "morphlab/textmodel.hpp"

namespace morphlab::oracle {

struct GraphemeStats {
  std::map<GraphemeId, double> bits;  // -log2 p(g)
  double end_marker = 0.0;            // log2(|G| + 1)
  double unseen_bits = 0.0;           // log2(T + 1)
};

inline GraphemeStats grapheme_stats(const std::vector<TokenSeq>& words) {
  std::map<GraphemeId, long> counts;
  long total = 0;
  for (const auto& w : words) {
    for (GraphemeId g : w) {
      ++counts[g];
      ++total;
    }
  }
  GraphemeStats s;
  for (const auto& [g, c] : counts) s.bits[g] = -std::log2(double(c) / double(total));
  s.end_marker = std::log2(double(counts.size()) + 1.0);
  s.unseen_bits = std::log2(double(total) + 1.0);
  return s;
}

inline double spelling(const TokenSeq& morph, const GraphemeStats& s) {
  double bits = s.end_marker;
  for (GraphemeId g : morph) {
    auto it = s.bits.find(g);
    bits += it == s.bits.end() ? s.unseen_bits : it->second;
  }
  return bits;
}

inline double log2_choose(long n, long k) {
  return (std::lgamma(double(n) + 1) - std::lgamma(double(k) + 1) -
          std::lgamma(double(n - k) + 1)) /
         std::log(2.0);
}

/// Pieces of `tokens` cut at the set bits of `mask` (bit i-1 = site i).
inline std::vector<TokenSeq> cut(const TokenSeq& tokens, std::uint32_t mask) {
  std::vector<TokenSeq> pieces;
  std::size_t start = 0;
  for (std::size_t site = 1; site < tokens.size(); ++site) {
    if (mask >> (site - 1) & 1u) {
      pieces.emplace_back(tokens.begin() + start, tokens.begin() + site);
      start = site;
    }
  }
  pieces.emplace_back(tokens.begin() + start, tokens.end());
  return pieces;
}

inline std::vector<std::size_t> mask_sites(std::uint32_t mask, std::size_t n) {
  std::vector<std::size_t> sites;
  for (std::size_t site = 1; site < n; ++site) {
    if (mask >> (site - 1) & 1u) sites.push_back(site);
  }
  return sites;
}

/// Two-part MDL cost of a joint analysis, straight from the definition.
inline double joint_cost(const std::vector<std::vector<TokenSeq>>& analyses,
                         const GraphemeStats& s) {
  std::map<TokenSeq, long> counts;
  long n = 0;
  for (const auto& a : analyses) {
    for (const auto& m : a) {
      ++counts[m];
      ++n;
    }
  }
  double corpus = 0.0;
  double lexicon = 0.0;
  for (const auto& [m, c] : counts) {
    corpus -= double(c) * std::log2(double(c) / double(n));
    lexicon += spelling(m, s);
  }
  lexicon += log2_choose(n - 1, long(counts.size()) - 1);
  return corpus + lexicon;
}

struct JointOptimum {
  double cost = std::numeric_limits<double>::infinity();
  std::vector<std::uint32_t> masks;
};

/// Exhaustive search over every joint segmentation of `words`.
inline JointOptimum global_optimum(const std::vector<TokenSeq>& words) {
  const GraphemeStats s = grapheme_stats(words);
  // Intern every substring so a leaf only touches small integer arrays.
  std::map<TokenSeq, int> ids;
  std::vector<double> spell;
  std::vector<std::vector<std::vector<int>>> options(words.size());
  for (std::size_t w = 0; w < words.size(); ++w) {
    const std::uint32_t combos = 1u << (words[w].size() - 1);
    for (std::uint32_t mask = 0; mask < combos; ++mask) {
      std::vector<int> pieces;
      for (const TokenSeq& m : cut(words[w], mask)) {
        auto [it, inserted] = ids.try_emplace(m, int(ids.size()));
        if (inserted) spell.push_back(spelling(m, s));
        pieces.push_back(it->second);
      }
      options[w].push_back(std::move(pieces));
    }
  }
  std::vector<long> counts(ids.size(), 0);
  std::vector<std::uint32_t> current(words.size(), 0);
  JointOptimum best;
  long n = 0;

  auto leaf = [&]() {
    double corpus = 0.0;
    double lexicon = 0.0;
    long m = 0;
    for (std::size_t i = 0; i < counts.size(); ++i) {
      if (counts[i] == 0) continue;
      ++m;
      corpus -= double(counts[i]) * std::log2(double(counts[i]) / double(n));
      lexicon += spell[i];
    }
    const double cost = corpus + lexicon + log2_choose(n - 1, m - 1);
    if (cost < best.cost - 1e-12) {
      best.cost = cost;
      best.masks = current;
    }
  };
  auto recurse = [&](auto&& self, std::size_t w) -> void {
    if (w == words.size()) {
      leaf();
      return;
    }
    for (std::uint32_t mask = 0; mask < options[w].size(); ++mask) {
      for (int id : options[w][mask]) ++counts[id];
      n += long(options[w][mask].size());
      current[w] = mask;
      self(self, w + 1);
      for (int id : options[w][mask]) --counts[id];
      n -= long(options[w][mask].size());
    }
  };
  recurse(recurse, 0);
  return best;
}

/// Decode price of one morph given the trained morph counts and the
/// training words' grapheme statistics.
inline double decode_price(const TokenSeq& morph, const std::map<TokenSeq, long>& counts,
                           long total, const GraphemeStats& s) {
  auto it = counts.find(morph);
  if (it != counts.end()) return std::log2(double(total)) - std::log2(double(it->second));
  return spelling(morph, s) + std::log2(double(total) + 1.0);
}

struct DecodeOptimum {
  double cost = std::numeric_limits<double>::infinity();
  std::vector<std::uint32_t> argmins;  // every mask within 1e-9 of the minimum
};

inline DecodeOptimum best_decoding(const TokenSeq& word,
                                   const std::map<TokenSeq, long>& counts, long total,
                                   const GraphemeStats& s) {
  DecodeOptimum best;
  const std::uint32_t combos = 1u << (word.size() - 1);
  std::vector<double> costs(combos);
  for (std::uint32_t mask = 0; mask < combos; ++mask) {
    double c = 0.0;
    for (const TokenSeq& m : cut(word, mask)) c += decode_price(m, counts, total, s);
    costs[mask] = c;
    best.cost = std::min(best.cost, c);
  }
  for (std::uint32_t mask = 0; mask < combos; ++mask) {
    if (costs[mask] <= best.cost + 1e-9) best.argmins.push_back(mask);
  }
  return best;
}

}  // namespace morphlab::oracle

#endif  // MORPHLAB_TESTS_ORACLE_HPP_
