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

#include "morphlab/pseudogen.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "morphlab/error.hpp"

namespace morphlab {

const char* level_name(Level level) {
  switch (level) {
    case Level::kPhoneme: return "phoneme";
    case Level::kSyllable: return "syllable";
    case Level::kMorph: return "morph";
  }
  return "?";
}

RankedCounts LevelStats::ranked_counts() const {
  RankedCounts out;
  out.reserve(types.size());
  for (std::size_t i = 0; i < types.size(); ++i) {
    out.emplace_back(static_cast<double>(i + 1), static_cast<double>(types[i].count));
  }
  return out;
}

std::size_t MorphTypeCounts::of(int syllables) const {
  switch (syllables) {
    case 1: return mono;
    case 2: return di;
    case 3: return tri;
    default: return 0;
  }
}

namespace {

// Counts, per lower-level type, the number of distinct upper-level types it
// occurs in. Insertion order is the first-occurrence order.
class TypeCounter {
 public:
  void add_container(const std::vector<TokenSeq>& parts) {
    std::set<TokenSeq> distinct;
    for (const TokenSeq& p : parts) {
      if (!distinct.insert(p).second) continue;
      auto [it, inserted] = index_.try_emplace(p, types_.size());
      if (inserted) types_.push_back({p, 0});
      ++types_[it->second].count;
    }
  }

  std::vector<RankedType> ranked() const {
    std::vector<RankedType> out = types_;
    std::stable_sort(out.begin(), out.end(), [](const RankedType& a, const RankedType& b) {
      return a.count > b.count;
    });
    return out;
  }

 private:
  std::map<TokenSeq, std::size_t> index_;
  std::vector<RankedType> types_;
};

}  // namespace

SourceStats count_level_frequencies(std::span<const GoldEntry> gold,
                                    const GraphemeInventory& inventory) {
  if (gold.empty()) throw ValidationError("no gold analyses to count");

  std::unordered_set<std::string> seen_words;
  std::set<TokenSeq> seen_morphs;
  std::set<TokenSeq> seen_syllables;
  TypeCounter morphs_in_words;
  TypeCounter syllables_in_morphs;
  TypeCounter phonemes_in_syllables;

  for (const GoldEntry& e : gold) {
    if (!seen_words.insert(e.word().surface()).second) continue;
    const auto pieces = segmentation_to_morphs(e.gold);
    morphs_in_words.add_container(pieces);
    for (const TokenSeq& morph : pieces) {
      if (!seen_morphs.insert(morph).second) continue;
      const auto syllables = syllabify(morph, inventory);
      syllables_in_morphs.add_container(syllables);
      for (const TokenSeq& syl : syllables) {
        if (!seen_syllables.insert(syl).second) continue;
        std::vector<TokenSeq> phonemes;
        for (GraphemeId g : syl) phonemes.push_back({g});
        phonemes_in_syllables.add_container(phonemes);
      }
    }
  }

  SourceStats stats;
  stats[0] = {Level::kPhoneme, phonemes_in_syllables.ranked(), std::nullopt};
  stats[1] = {Level::kSyllable, syllables_in_morphs.ranked(), std::nullopt};
  stats[2] = {Level::kMorph, morphs_in_words.ranked(), std::nullopt};
  return stats;
}

void fit_levels(SourceStats& stats) {
  for (LevelStats& level : stats) {
    try {
      level.fit = fit_power_law(level.ranked_counts());
    } catch (const ValidationError& e) {
      throw ValidationError(std::string(level_name(level.level)) + " level: " +
                            e.what());
    }
  }
}

std::vector<WordTemplate> word_templates(std::span<const GoldEntry> gold,
                                         const GraphemeInventory& inventory) {
  std::vector<WordTemplate> out;
  out.reserve(gold.size());
  for (const GoldEntry& e : gold) {
    WordTemplate t;
    for (const TokenSeq& morph : segmentation_to_morphs(e.gold)) {
      const int n = static_cast<int>(syllabify(morph, inventory).size());
      if (n > 3) {
        throw ValidationError("'" + e.word().surface() +
                              "' has a morph of more than three syllables");
      }
      t.morph_syllable_counts.push_back(n);
    }
    out.push_back(std::move(t));
  }
  return out;
}

MorphTypeCounts morph_type_counts(std::span<const GoldEntry> gold,
                                  const GraphemeInventory& inventory) {
  std::set<TokenSeq> seen;
  MorphTypeCounts counts;
  for (const GoldEntry& e : gold) {
    for (const TokenSeq& morph : segmentation_to_morphs(e.gold)) {
      if (!seen.insert(morph).second) continue;
      switch (syllabify(morph, inventory).size()) {
        case 1: ++counts.mono; break;
        case 2: ++counts.di; break;
        case 3: ++counts.tri; break;
        default:
          throw ValidationError("morph '" + inventory.render(morph) +
                                "' has more than three syllables");
      }
    }
  }
  return counts;
}

std::vector<GoldEntry> filter_max_morph_syllables(std::span<const GoldEntry> gold,
                                                  int max_syllables,
                                                  const GraphemeInventory& inventory) {
  std::vector<GoldEntry> out;
  for (const GoldEntry& e : gold) {
    bool keep = true;
    for (const TokenSeq& morph : segmentation_to_morphs(e.gold)) {
      if (static_cast<int>(syllabify(morph, inventory).size()) > max_syllables) {
        keep = false;
        break;
      }
    }
    if (keep) out.push_back(e);
  }
  return out;
}

DiscreteSampler::DiscreteSampler(std::vector<double> weights) {
  double total = 0.0;
  for (double w : weights) {
    if (!(w >= 0) || !std::isfinite(w)) {
      throw ValidationError("sampler weights must be finite and non-negative");
    }
    total += w;
  }
  if (!(total > 0)) throw ValidationError("sampler has no mass");
  probs_.reserve(weights.size());
  cumulative_.reserve(weights.size());
  double run = 0.0;
  for (double w : weights) {
    probs_.push_back(w / total);
    run += w / total;
    cumulative_.push_back(run);
  }
}

std::size_t DiscreteSampler::sample(Rng& rng) const {
  const double u = rng.uniform01() * cumulative_.back();
  auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
  std::size_t i = static_cast<std::size_t>(it - cumulative_.begin());
  return std::min(i, probs_.size() - 1);
}

DiscreteSampler TypeDistribution::restricted(const std::vector<bool>& keep) const {
  std::vector<double> w(probs.size(), 0.0);
  bool any = false;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    if (keep[i]) {
      w[i] = probs[i];
      any = any || probs[i] > 0;
    }
  }
  if (!any) throw ValidationError("restricted sampler is empty");
  return DiscreteSampler(std::move(w));
}

TypeDistribution make_sampler(const PowerLawFit& fit, std::size_t type_count,
                              Rng& rng) {
  if (type_count == 0) throw ValidationError("cannot sample from an empty inventory");
  TypeDistribution dist;
  dist.rank_order.resize(type_count);
  std::iota(dist.rank_order.begin(), dist.rank_order.end(), 0);
  rng.shuffle(std::span<std::size_t>(dist.rank_order));
  // Weights relative to rank 1 keep long inventories from underflowing.
  std::vector<double> w(type_count);
  double total = 0.0;
  for (std::size_t x = 0; x < type_count; ++x) {
    w[x] = std::pow(fit.b, -static_cast<double>(x));
    total += w[x];
  }
  dist.probs.assign(type_count, 0.0);
  for (std::size_t x = 0; x < type_count; ++x) {
    dist.probs[dist.rank_order[x]] = w[x] / total;
  }
  return dist;
}

namespace {

Word make_word(const TokenSeq& tokens, const GraphemeInventory& inventory) {
  return Word(inventory.render(tokens), tokens);
}

}  // namespace

PseudoLexicon generate_pseudo_lexicon(const SourceStats& stats,
                                      std::span<const WordTemplate> templates,
                                      const MorphTypeCounts& counts,
                                      const GraphemeInventory& inventory,
                                      std::uint64_t seed,
                                      const GenerateConfig& config) {
  for (const LevelStats& level : stats) {
    if (!level.fit) {
      throw ValidationError(std::string(level_name(level.level)) +
                            " level has no fitted law");
    }
  }
  for (const WordTemplate& t : templates) {
    if (t.morph_syllable_counts.empty()) throw ValidationError("empty word template");
    for (int s : t.morph_syllable_counts) {
      if (s < 1 || s > 3) throw ValidationError("template morph sizes must be 1..3");
      if (counts.of(s) == 0) {
        throw ValidationError("template needs " + std::to_string(s) +
                              "-syllable morphs but none are requested");
      }
    }
  }

  PseudoLexicon out;
  out.seed = seed;
  out.source_stats = stats;
  out.morph_type_counts = counts;
  Rng rng(seed);

  // Phonemes: consonants plus the vowels the source syllables use. Long
  // vowels only when some source syllable carries them.
  std::set<GraphemeId> source_vowels;
  std::size_t source_cv = 0;
  for (const RankedType& syl : stats[1].types) {
    for (GraphemeId g : syl.form) {
      if (inventory.is_vowel(g)) source_vowels.insert(g);
    }
    if (syl.form.size() == 2) ++source_cv;
  }
  std::vector<GraphemeId> phonemes(inventory.consonants());
  for (GraphemeId v : inventory.short_vowels()) phonemes.push_back(v);
  for (GraphemeId v : inventory.long_vowels()) {
    if (source_vowels.contains(v)) phonemes.push_back(v);
  }
  out.cv_probability = config.cv_probability.value_or(
      stats[1].types.empty() ? 1.0
                             : static_cast<double>(source_cv) /
                                   static_cast<double>(stats[1].types.size()));

  const TypeDistribution phoneme_dist = make_sampler(*stats[0].fit, phonemes.size(), rng);
  std::vector<bool> is_consonant(phonemes.size());
  for (std::size_t i = 0; i < phonemes.size(); ++i) {
    is_consonant[i] = !inventory.is_vowel(phonemes[i]);
  }
  std::vector<bool> is_vowel(is_consonant.size());
  std::transform(is_consonant.begin(), is_consonant.end(), is_vowel.begin(),
                 [](bool c) { return !c; });
  const DiscreteSampler consonant_sampler = phoneme_dist.restricted(is_consonant);
  const DiscreteSampler vowel_sampler = phoneme_dist.restricted(is_vowel);

  // Syllables.
  const std::size_t syllable_target = stats[1].types.size();
  std::set<TokenSeq> syllable_set;
  while (out.syllables.size() < syllable_target) {
    std::size_t attempts = 0;
    while (true) {
      if (++attempts > config.retry_budget) throw RetryExhausted("syllable", attempts - 1);
      TokenSeq syl;
      if (rng.bernoulli(out.cv_probability)) {
        syl.push_back(phonemes[consonant_sampler.sample(rng)]);
      }
      syl.push_back(phonemes[vowel_sampler.sample(rng)]);
      if (syllable_set.insert(syl).second) {
        out.syllables.push_back(std::move(syl));
        break;
      }
    }
  }

  // Morphs, with the requested number of types per syllable count.
  const DiscreteSampler syllable_sampler =
      make_sampler(*stats[1].fit, out.syllables.size(), rng).sampler();
  std::set<TokenSeq> morph_set;
  std::vector<int> morph_size;
  for (int size = 1; size <= 3; ++size) {
    for (std::size_t k = 0; k < counts.of(size); ++k) {
      std::size_t attempts = 0;
      while (true) {
        if (++attempts > config.retry_budget) throw RetryExhausted("morph", attempts - 1);
        TokenSeq morph;
        for (int s = 0; s < size; ++s) {
          const TokenSeq& syl = out.syllables[syllable_sampler.sample(rng)];
          morph.insert(morph.end(), syl.begin(), syl.end());
        }
        if (morph_set.insert(morph).second) {
          out.morphs.push_back(std::move(morph));
          morph_size.push_back(size);
          break;
        }
      }
    }
  }

  // Words, one per template.
  const TypeDistribution morph_dist = make_sampler(*stats[2].fit, out.morphs.size(), rng);
  std::array<std::optional<DiscreteSampler>, 4> by_size;
  for (int size = 1; size <= 3; ++size) {
    if (counts.of(size) == 0) continue;
    std::vector<bool> keep(out.morphs.size());
    for (std::size_t i = 0; i < keep.size(); ++i) keep[i] = morph_size[i] == size;
    by_size[size] = morph_dist.restricted(keep);
  }
  std::set<TokenSeq> word_set;
  for (const WordTemplate& t : templates) {
    std::size_t attempts = 0;
    while (true) {
      if (++attempts > config.retry_budget) throw RetryExhausted("word", attempts - 1);
      TokenSeq tokens;
      std::vector<std::size_t> lengths;
      for (int size : t.morph_syllable_counts) {
        const TokenSeq& morph = out.morphs[by_size[size]->sample(rng)];
        tokens.insert(tokens.end(), morph.begin(), morph.end());
        lengths.push_back(morph.size());
      }
      if (word_set.insert(tokens).second) {
        Word word = make_word(tokens, inventory);
        out.ground_truth.push_back(
            {Segmentation::from_morph_lengths(word, lengths), "pseudo", std::nullopt});
        out.words.push_back(std::move(word));
        break;
      }
    }
  }
  return out;
}

std::string pseudo_metadata_json(const PseudoLexicon& lexicon,
                                 const GraphemeInventory& inventory) {
  using nlohmann::ordered_json;
  ordered_json doc;
  doc["seed"] = lexicon.seed;
  doc["words"] = lexicon.words.size();
  doc["cv_probability"] = lexicon.cv_probability;
  doc["morph_type_counts"] = {{"mono", lexicon.morph_type_counts.mono},
                              {"di", lexicon.morph_type_counts.di},
                              {"tri", lexicon.morph_type_counts.tri}};
  ordered_json fits = ordered_json::object();
  for (const LevelStats& level : lexicon.source_stats) {
    ordered_json f;
    f["types"] = level.types.size();
    if (level.fit) {
      f["a"] = level.fit->a;
      f["b"] = level.fit->b;
      f["residual"] = level.fit->residual;
    }
    fits[level_name(level.level)] = f;
  }
  doc["fits"] = fits;
  doc["syllables"] = ordered_json::array();
  for (const TokenSeq& s : lexicon.syllables) doc["syllables"].push_back(inventory.render(s));
  return doc.dump(2) + "\n";
}

}  // namespace morphlab
