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

#include "morphlab/segmenter.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <numeric>
#include <span>
#include <sstream>
#include <unordered_map>

#include "morphlab/error.hpp"
#include "morphlab/rng.hpp"

namespace morphlab {

namespace {

constexpr double kTieEps = 1e-9;

std::string pack(const TokenSeq& tokens) {
  return std::string(tokens.begin(), tokens.end());
}

std::string pack(TokenSeq::const_iterator first, TokenSeq::const_iterator last) {
  return std::string(first, last);
}

TokenSeq unpack(const std::string& key) {
  return TokenSeq(key.begin(), key.end());
}

long double clogc(long c) {
  return c > 0 ? static_cast<long double>(c) * std::log2(static_cast<long double>(c))
               : 0.0L;
}

std::vector<std::string> split_plus(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == '+') {
      out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(std::move(cur));
  return out;
}

}  // namespace

double log2_binomial(long n, long k) {
  if (k < 0 || k > n) return 0.0;
  const long double v = std::lgamma(static_cast<long double>(n) + 1) -
                        std::lgamma(static_cast<long double>(k) + 1) -
                        std::lgamma(static_cast<long double>(n - k) + 1);
  return static_cast<double>(v / std::log(2.0L));
}

// ---------------------------------------------------------------------------
// MorphModel accessors and cost

const Segmentation* MorphModel::find_analysis(const std::string& surface) const {
  auto it = analysis_index_.find(surface);
  return it == analysis_index_.end() ? nullptr : &analyses_[it->second];
}

long MorphModel::morph_count(const TokenSeq& morph) const {
  auto it = counts_.find(pack(morph));
  return it == counts_.end() ? 0 : it->second;
}

std::vector<std::pair<TokenSeq, long>> MorphModel::morph_table() const {
  struct Row {
    std::string text;
    std::string key;
    long count;
  };
  std::vector<Row> rows;
  rows.reserve(counts_.size());
  for (const auto& [key, count] : counts_) {
    rows.push_back({inventory_->render(unpack(key)), key, count});
  }
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    if (a.count != b.count) return a.count > b.count;
    if (a.text != b.text) return a.text < b.text;
    return a.key < b.key;
  });
  std::vector<std::pair<TokenSeq, long>> out;
  out.reserve(rows.size());
  for (const Row& r : rows) out.emplace_back(unpack(r.key), r.count);
  return out;
}

double MorphModel::grapheme_prob(GraphemeId id) const {
  if (grapheme_total_ == 0 || id >= grapheme_counts_.size()) return 0.0;
  return static_cast<double>(grapheme_counts_[id]) /
         static_cast<double>(grapheme_total_);
}

double MorphModel::grapheme_cost(GraphemeId id) const {
  if (id < grapheme_cost_.size()) return grapheme_cost_[id];
  return std::log2(static_cast<double>(grapheme_total_) + 1.0);
}

double MorphModel::end_marker_cost() const {
  return std::log2(static_cast<double>(alphabet_size_) + 1.0);
}

double MorphModel::morph_spelling_cost(const TokenSeq& morph) const {
  double bits = end_marker_cost();
  for (GraphemeId g : morph) bits += grapheme_cost(g);
  return bits;
}

void MorphModel::init_graphemes(const std::vector<Segmentation>& analyses) {
  grapheme_counts_.assign(inventory_->size(), 0);
  grapheme_total_ = 0;
  for (const Segmentation& seg : analyses) {
    for (GraphemeId g : seg.word().tokens()) {
      ++grapheme_counts_[g];
      ++grapheme_total_;
    }
  }
  alphabet_size_ = 0;
  grapheme_cost_.assign(inventory_->size(), 0.0);
  const double unseen = std::log2(static_cast<double>(grapheme_total_) + 1.0);
  for (std::size_t g = 0; g < grapheme_counts_.size(); ++g) {
    if (grapheme_counts_[g] > 0) {
      ++alphabet_size_;
      grapheme_cost_[g] = -std::log2(static_cast<double>(grapheme_counts_[g]) /
                                     static_cast<double>(grapheme_total_));
    } else {
      grapheme_cost_[g] = unseen;
    }
  }
}

namespace {

struct CostParts {
  long double corpus = 0;
  long double lexicon = 0;
};

template <typename SpellingCost>
CostParts cost_from_counts(const std::unordered_map<std::string, long>& counts,
                           SpellingCost&& spelling) {
  // Sum in key order so the result does not depend on hash-table layout.
  std::vector<const std::pair<const std::string, long>*> items;
  items.reserve(counts.size());
  for (const auto& kv : counts) items.push_back(&kv);
  std::sort(items.begin(), items.end(),
            [](auto* a, auto* b) { return a->first < b->first; });
  long n = 0;
  long double sum_clogc = 0;
  long double spell = 0;
  for (const auto* kv : items) {
    n += kv->second;
    sum_clogc += clogc(kv->second);
    spell += spelling(unpack(kv->first));
  }
  CostParts parts;
  if (n == 0) return parts;
  const long m = static_cast<long>(counts.size());
  parts.corpus = clogc(n) - sum_clogc;
  parts.lexicon = spell + log2_binomial(n - 1, m - 1);
  return parts;
}

}  // namespace

double MorphModel::recompute_cost() const {
  std::unordered_map<std::string, long> counts;
  for (const Segmentation& seg : analyses_) {
    for (const TokenSeq& piece : segmentation_to_morphs(seg)) ++counts[pack(piece)];
  }
  auto parts = cost_from_counts(
      counts, [this](const TokenSeq& m) { return morph_spelling_cost(m); });
  return static_cast<double>(parts.corpus + parts.lexicon);
}

double MorphModel::lexicon_cost() const {
  return static_cast<double>(
      cost_from_counts(counts_, [this](const TokenSeq& m) {
        return morph_spelling_cost(m);
      }).lexicon);
}

double MorphModel::corpus_cost() const {
  return static_cast<double>(
      cost_from_counts(counts_, [this](const TokenSeq& m) {
        return morph_spelling_cost(m);
      }).corpus);
}

void MorphModel::rebuild_counts() {
  counts_.clear();
  total_tokens_ = 0;
  analysis_index_.clear();
  for (std::size_t i = 0; i < analyses_.size(); ++i) {
    analysis_index_.emplace(analyses_[i].word().surface(), i);
    for (const TokenSeq& piece : segmentation_to_morphs(analyses_[i])) {
      ++counts_[pack(piece)];
      ++total_tokens_;
    }
  }
  cost_cache_ = recompute_cost();
}

MorphModel MorphModel::from_analyses(std::vector<Segmentation> analyses,
                                     TrainConfig config,
                                     const GraphemeInventory& inventory) {
  MorphModel model;
  model.inventory_ = &inventory;
  model.config_ = config;
  model.analyses_ = std::move(analyses);
  model.init_graphemes(model.analyses_);
  model.rebuild_counts();
  return model;
}

// ---------------------------------------------------------------------------
// Decoding

double MorphModel::decode_morph_cost(const TokenSeq& morph) const {
  const long c = morph_count(morph);
  const double n = static_cast<double>(total_tokens_);
  if (c > 0) return std::log2(n) - std::log2(static_cast<double>(c));
  return morph_spelling_cost(morph) + std::log2(n + 1.0);
}

double MorphModel::decode_cost(const Segmentation& seg) const {
  double bits = 0.0;
  for (const TokenSeq& piece : segmentation_to_morphs(seg)) {
    bits += decode_morph_cost(piece);
  }
  return bits;
}

Segmentation MorphModel::segment(const Word& word) const {
  if (const Segmentation* stored = find_analysis(word.surface())) return *stored;
  return viterbi_segment(word);
}

Segmentation MorphModel::viterbi_segment(const Word& word) const {
  const TokenSeq& tokens = word.tokens();
  const std::size_t n = tokens.size();
  if (n <= 1) return Segmentation(word, {});

  // Suffix DP: best[i] is the cheapest segmentation of tokens[i..n).
  // Filling right to left lets ties prefer the longest first morph.
  struct Cell {
    double cost = std::numeric_limits<double>::infinity();
    std::size_t pieces = 0;
    std::size_t next = 0;
  };
  std::vector<Cell> best(n + 1);
  best[n] = {0.0, 0, n};
  for (std::size_t i = n; i-- > 0;) {
    for (std::size_t j = n; j > i; --j) {
      TokenSeq piece(tokens.begin() + i, tokens.begin() + j);
      const double c = decode_morph_cost(piece) + best[j].cost;
      const std::size_t pieces = best[j].pieces + 1;
      Cell& cell = best[i];
      // j descends, so an exact tie keeps the longer piece already stored.
      if (c < cell.cost - kTieEps ||
          (std::abs(c - cell.cost) <= kTieEps && pieces < cell.pieces)) {
        cell = {c, pieces, j};
      }
    }
  }
  std::vector<std::size_t> boundaries;
  for (std::size_t i = best[0].next; i < n; i = best[i].next) {
    boundaries.push_back(i);
  }
  return Segmentation(word, std::move(boundaries));
}

// ---------------------------------------------------------------------------
// Training

// Constructions form a tree: a word is a node, and an accepted split turns
// a node into two child nodes shared with every other word containing them.
// Node counts include every use; only leaves are morphs.
class Trainer {
 public:
  Trainer(MorphModel& model) : model_(model) {}

  void initialise(const Lexicon& lexicon) {
    words_.clear();
    nodes_.clear();
    for (const Word& w : lexicon.words) {
      words_.push_back(pack(w.tokens()));
      insert(words_.back(), 1);
    }
  }

  long double cost() const {
    if (n_ == 0) return 0.0L;
    return clogc(n_) - sum_clogc_ + spelling_sum_ + log2_binomial(n_ - 1, m_ - 1);
  }

  /// Re-optimises the construction tree under word `i`; returns true when
  /// any node changed (each change strictly lowers the cost).
  bool resegment(std::size_t i) { return optimise(words_[i]); }

  /// Rebuilds the incremental sums from the counts; returns the drift.
  long double resync() {
    const long double incremental = cost();
    sum_clogc_ = 0;
    spelling_sum_ = 0;
    std::vector<std::string> keys;
    keys.reserve(model_.counts_.size());
    for (const auto& kv : model_.counts_) keys.push_back(kv.first);
    std::sort(keys.begin(), keys.end());
    for (const auto& k : keys) {
      sum_clogc_ += clogc(model_.counts_[k]);
      spelling_sum_ += model_.morph_spelling_cost(unpack(k));
    }
    return std::abs(incremental - cost());
  }

  /// Leaf lengths of word `i`, left to right.
  std::vector<std::size_t> morph_lengths(std::size_t i) const {
    std::vector<std::size_t> out;
    expand(words_[i], out);
    return out;
  }

 private:
  struct Node {
    long count = 0;
    std::size_t split = 0;  // 0: leaf
  };

  void expand(const std::string& key, std::vector<std::size_t>& out) const {
    const auto it = nodes_.find(key);
    const std::size_t k = it == nodes_.end() ? 0 : it->second.split;
    if (k == 0) {
      out.push_back(key.size());
      return;
    }
    expand(key.substr(0, k), out);
    expand(key.substr(k), out);
  }

  // Adds `delta` uses of `key`, following its current split.
  void insert(const std::string& key, long delta) {
    Node& node = nodes_[key];
    node.count += delta;
    assert(node.count >= 0);
    const std::size_t k = node.split;
    if (k == 0) {
      add_leaf(key, delta);
      return;
    }
    insert(key.substr(0, k), delta);
    insert(key.substr(k), delta);
  }

  // Removes the subtree under `key` at its full count, then picks the
  // cheapest of: its current shape, whole, or any single split (children
  // keep their own trees). The current shape wins ties. Recurses into the
  // halves of a split.
  bool optimise(const std::string& key) {
    const long count = nodes_[key].count;
    if (count == 0) return false;
    const std::size_t current = nodes_[key].split;
    insert(key, -count);

    auto price = [&](std::size_t k) {
      nodes_[key].split = k;
      insert(key, count);
      const long double c = cost();
      insert(key, -count);
      return c;
    };
    long double best = price(current);
    std::size_t choice = current;
    if (current != 0) {
      const long double c = price(0);
      if (c < best - kTieEps) {
        best = c;
        choice = 0;
      }
    }
    // Descending split points: ties keep the longest left part.
    for (std::size_t k = key.size() - 1; k > 0; --k) {
      if (k == current) continue;
      const long double c = price(k);
      if (c < best - kTieEps) {
        best = c;
        choice = k;
      }
    }
    nodes_[key].split = choice;
    insert(key, count);
    bool changed = choice != current;
    if (choice != 0) {
      // Copies: the recursion may rehash nodes_.
      const std::string left = key.substr(0, choice);
      const std::string right = key.substr(choice);
      changed = optimise(left) || changed;
      changed = optimise(right) || changed;
    }
    return changed;
  }

  void add_leaf(const std::string& key, long delta) {
    auto& counts = model_.counts_;
    auto it = counts.find(key);
    const long before = it == counts.end() ? 0 : it->second;
    const long after = before + delta;
    assert(after >= 0);
    sum_clogc_ += clogc(after) - clogc(before);
    n_ += delta;
    if (before == 0 && after > 0) {
      ++m_;
      spelling_sum_ += model_.morph_spelling_cost(unpack(key));
    } else if (before > 0 && after == 0) {
      --m_;
      spelling_sum_ -= model_.morph_spelling_cost(unpack(key));
    }
    if (after == 0) {
      if (it != counts.end()) counts.erase(it);
    } else if (it == counts.end()) {
      counts.emplace(key, after);
    } else {
      it->second = after;
    }
  }

  MorphModel& model_;
  std::vector<std::string> words_;
  std::unordered_map<std::string, Node> nodes_;
  long n_ = 0;
  long m_ = 0;
  long double sum_clogc_ = 0;
  long double spelling_sum_ = 0;
};

MorphModel train(const Lexicon& lexicon, const TrainConfig& config,
                 const GraphemeInventory& inventory) {
  if (lexicon.words.empty()) throw ValidationError("cannot train on an empty lexicon");
  if (config.max_epochs < 1) throw ValidationError("max_epochs must be at least 1");
  const double threshold = config.threshold_for(lexicon.words.size());
  if (!(threshold > 0)) throw ValidationError("convergence threshold must be positive");

  MorphModel model;
  model.inventory_ = &inventory;
  model.config_ = config;
  {
    std::vector<Segmentation> whole;
    whole.reserve(lexicon.words.size());
    for (const Word& w : lexicon.words) whole.emplace_back(w, std::vector<std::size_t>{});
    model.init_graphemes(whole);
  }

  Trainer trainer(model);
  trainer.initialise(lexicon);

  Rng rng(config.seed);
  std::vector<std::size_t> order(lexicon.words.size());
  std::iota(order.begin(), order.end(), 0);

  for (int epoch = 0; epoch < config.max_epochs; ++epoch) {
    EpochTrace trace;
    trace.cost_before = static_cast<double>(trainer.cost());
    rng.shuffle(std::span<std::size_t>(order));
    for (std::size_t i : order) {
      if (trainer.resegment(i)) ++trace.accepted_changes;
    }
    trace.cache_drift = static_cast<double>(trainer.resync());
    trace.cost_after = static_cast<double>(trainer.cost());
    model.trace_.push_back(trace);
    if (trace.cost_before - trace.cost_after < threshold) break;
  }

  model.analyses_.clear();
  for (std::size_t i = 0; i < lexicon.words.size(); ++i) {
    model.analyses_.push_back(Segmentation::from_morph_lengths(
        lexicon.words[i], trainer.morph_lengths(i)));
  }
  model.rebuild_counts();
  return model;
}

// ---------------------------------------------------------------------------
// Persistence

void MorphModel::save(std::ostream& out) const {
  std::ostringstream num;
  num << std::setprecision(17);
  out << "# morphlab morph model\n";
  out << "format\t" << kFormatVersion << '\n';
  out << "seed\t" << config_.seed << '\n';
  out << "max_epochs\t" << config_.max_epochs << '\n';
  out << "convergence_threshold\t";
  if (config_.convergence_threshold) {
    num << *config_.convergence_threshold;
    out << num.str();
  } else {
    out << "default";
  }
  out << '\n';
  out << "unknown_morph_policy\textend_lexicon_cost\n";
  out << "total_tokens\t" << total_tokens_ << '\n';
  out << "morph_types\t" << counts_.size() << '\n';
  num.str("");
  num << cost_cache_;
  out << "cost\t" << num.str() << '\n';
  for (const auto& [morph, count] : morph_table()) {
    out << "morph\t" << inventory_->render(morph) << '\t' << count << '\n';
  }
  for (const Segmentation& seg : analyses_) {
    out << "analysis\t" << seg.word().surface() << '\t'
        << render_morphs(seg, *inventory_) << '\n';
  }
}

void MorphModel::save(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write model '" + path.string() + "'");
  save(out);
  if (!out) throw IoError("error writing model '" + path.string() + "'");
}

MorphModel MorphModel::load(std::istream& in, const GraphemeInventory& inventory) {
  TrainConfig config;
  std::vector<Segmentation> analyses;
  std::unordered_map<std::string, long> declared;
  long declared_tokens = -1;
  bool have_format = false;
  std::string raw;
  std::size_t line = 0;
  auto fail = [&](const std::string& msg) {
    throw ValidationError("model line " + std::to_string(line) + ": " + msg);
  };
  while (std::getline(in, raw)) {
    ++line;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    if (raw.empty() || raw[0] == '#') continue;
    const auto fields = split_fields(raw);
    const std::string& tag = fields[0];
    try {
      if (tag == "format") {
        if (fields.size() != 2 || std::stoi(fields[1]) != kFormatVersion) {
          fail("unsupported model format");
        }
        have_format = true;
      } else if (tag == "seed") {
        config.seed = std::stoull(fields.at(1));
      } else if (tag == "max_epochs") {
        config.max_epochs = std::stoi(fields.at(1));
      } else if (tag == "convergence_threshold") {
        if (fields.at(1) != "default") config.convergence_threshold = std::stod(fields[1]);
      } else if (tag == "unknown_morph_policy") {
        if (fields.at(1) != "extend_lexicon_cost") fail("unknown morph policy");
      } else if (tag == "total_tokens") {
        declared_tokens = std::stol(fields.at(1));
      } else if (tag == "morph_types" || tag == "cost") {
        // informational; recomputed below
      } else if (tag == "morph") {
        if (fields.size() != 3) fail("morph rows need text and count");
        declared[pack(tokenize(fields[1], inventory).tokens())] = std::stol(fields[2]);
      } else if (tag == "analysis") {
        if (fields.size() != 3) fail("analysis rows need surface and morphs");
        const Word word = tokenize(fields[1], inventory);
        analyses.push_back(segmentation_from_morphs(word, split_plus(fields[2]),
                                                    inventory, line));
      } else {
        fail("unknown row type '" + tag + "'");
      }
    } catch (const std::invalid_argument&) {
      fail("malformed number");
    } catch (const std::out_of_range&) {
      fail("missing or out-of-range field");
    }
  }
  if (!have_format) throw ValidationError("model file lacks a format line");
  MorphModel model = from_analyses(std::move(analyses), config, inventory);
  if (declared != model.counts_ ||
      (declared_tokens >= 0 && declared_tokens != model.total_tokens_)) {
    throw ValidationError("model morph counts disagree with its analyses");
  }
  return model;
}

MorphModel MorphModel::load(const std::filesystem::path& path,
                            const GraphemeInventory& inventory) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open model '" + path.string() + "'");
  return load(in, inventory);
}

}  // namespace morphlab
