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

#include "morphlab/frequency.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <numeric>

#include "morphlab/error.hpp"
#include "morphlab/metrics.hpp"

namespace morphlab {

CountTable CountTable::from_pairs(std::vector<std::pair<std::string, long>> counts) {
  CountTable table;
  for (const auto& [surface, c] : counts) {
    if (c < 0) throw ValidationError("negative count for '" + surface + "'");
    table.total += c;
  }
  table.counts = std::move(counts);
  return table;
}

double SmoothedTable::prob(const std::string& surface) const {
  if (auto it = probs.find(surface); it != probs.end()) return it->second;
  if (unseen_words.contains(surface)) return p_unseen_each;
  throw MissingWord("no smoothed probability for '" + surface + "'");
}

double SmoothedTable::total_mass() const {
  // Summed in sorted order so the result is reproducible.
  std::map<std::string, double> sorted(probs.begin(), probs.end());
  double sum = 0.0;
  for (const auto& [w, p] : sorted) sum += p;
  return sum + p_unseen_each * static_cast<double>(unseen_words.size());
}

CountTable parse_counts(std::istream& in) {
  std::vector<std::pair<std::string, long>> counts;
  std::unordered_set<std::string> seen;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    if (raw.empty() || raw[0] == '#') continue;
    const auto fields = split_fields(raw);
    const std::string where = "line " + std::to_string(line) + ": ";
    if (fields.size() != 2) throw ValidationError(where + "expected surface, count");
    long c = 0;
    try {
      std::size_t used = 0;
      c = std::stol(fields[1], &used);
      if (used != fields[1].size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw ValidationError(where + "bad count '" + fields[1] + "'");
    }
    std::string surface = normalize_surface(fields[0]);
    if (!seen.insert(surface).second) throw DuplicateWord(surface, line);
    counts.emplace_back(std::move(surface), c);
  }
  return CountTable::from_pairs(std::move(counts));
}

CountTable load_counts(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open counts '" + path.string() + "'");
  return parse_counts(in);
}

namespace {

SmoothedTable add_one_fallback(const CountTable& table,
                               const std::vector<std::string>& unseen) {
  long g = 0;
  for (const auto& [w, c] : table.counts) g = std::gcd(g, c);
  long scaled_total = 0;
  std::size_t seen = 0;
  for (const auto& [w, c] : table.counts) {
    if (c > 0) {
      scaled_total += c / g;
      ++seen;
    }
  }
  const double denom = static_cast<double>(scaled_total) +
                       static_cast<double>(seen + unseen.size());
  SmoothedTable out;
  out.method = SmoothingMethod::kAddOneFallback;
  for (const auto& [w, c] : table.counts) {
    if (c > 0) out.probs[w] = static_cast<double>(c / g + 1) / denom;
  }
  out.unseen_words.insert(unseen.begin(), unseen.end());
  out.p_unseen_each = unseen.empty() ? 0.0 : 1.0 / denom;
  return out;
}

}  // namespace

SmoothedTable sgt_smooth(const CountTable& table, const Lexicon& dictionary) {
  if (table.total < 1) throw ValidationError("count table is empty");

  std::unordered_set<std::string> counted;
  for (const auto& [w, c] : table.counts) {
    if (c > 0) counted.insert(w);
  }
  std::vector<std::string> unseen;
  for (const Word& w : dictionary.words) {
    if (!counted.contains(w.surface())) unseen.push_back(w.surface());
  }

  std::map<long, long> freq_of_freq;
  for (const auto& [w, c] : table.counts) {
    if (c > 0) ++freq_of_freq[c];
  }
  const bool no_singletons = !freq_of_freq.contains(1);
  if (freq_of_freq.size() < 2 || (no_singletons && !unseen.empty())) {
    warn("degenerate count table for Good-Turing smoothing; using add-one");
    return add_one_fallback(table, unseen);
  }

  std::vector<long> r;
  std::vector<long> n;
  for (const auto& [rv, nv] : freq_of_freq) {
    r.push_back(rv);
    n.push_back(nv);
  }
  const std::size_t rows = r.size();
  const double big_n = static_cast<double>(table.total);
  const double p_zero = no_singletons ? 0.0 : static_cast<double>(n[0]) / big_n;

  // Averaging transform, then a least-squares line in log-log space.
  std::vector<double> log_r(rows);
  std::vector<double> log_z(rows);
  for (std::size_t j = 0; j < rows; ++j) {
    const double i = j == 0 ? 0.0 : static_cast<double>(r[j - 1]);
    const double k = j + 1 == rows ? 2.0 * static_cast<double>(r[j]) - i
                                   : static_cast<double>(r[j + 1]);
    log_r[j] = std::log(static_cast<double>(r[j]));
    log_z[j] = std::log(2.0 * static_cast<double>(n[j]) / (k - i));
  }
  double mean_x = 0.0;
  double mean_y = 0.0;
  for (std::size_t j = 0; j < rows; ++j) {
    mean_x += log_r[j];
    mean_y += log_z[j];
  }
  mean_x /= static_cast<double>(rows);
  mean_y /= static_cast<double>(rows);
  double xy = 0.0;
  double xx = 0.0;
  for (std::size_t j = 0; j < rows; ++j) {
    xy += (log_r[j] - mean_x) * (log_z[j] - mean_y);
    xx += (log_r[j] - mean_x) * (log_r[j] - mean_x);
  }
  const double slope = xy / xx;
  const double intercept = mean_y - slope * mean_x;
  if (slope > -1.0) {
    warn("Good-Turing log-log slope " + std::to_string(slope) +
         " is above -1; estimates may be unreliable");
  }
  auto smoothed = [&](double rv) { return std::exp(intercept + slope * std::log(rv)); };

  std::map<long, long> row_of;
  for (std::size_t j = 0; j < rows; ++j) row_of[r[j]] = static_cast<long>(j);

  std::vector<double> r_star(rows);
  bool use_smoothed = false;
  for (std::size_t j = 0; j < rows; ++j) {
    const double rv = static_cast<double>(r[j]);
    const double y = (rv + 1.0) * smoothed(rv + 1.0) / smoothed(rv);
    auto next = row_of.find(r[j] + 1);
    if (next == row_of.end()) use_smoothed = true;
    if (!use_smoothed) {
      const double next_n = static_cast<double>(n[next->second]);
      const double nj = static_cast<double>(n[j]);
      const double x = (rv + 1.0) * next_n / nj;
      const double sd = std::sqrt((rv + 1.0) * (rv + 1.0) * next_n / (nj * nj) *
                                  (1.0 + next_n / nj));
      if (std::fabs(x - y) <= 1.96 * sd) {
        use_smoothed = true;
      } else {
        r_star[j] = x;
      }
    }
    if (use_smoothed) r_star[j] = y;
  }
  double n_prime = 0.0;
  for (std::size_t j = 0; j < rows; ++j) n_prime += static_cast<double>(n[j]) * r_star[j];

  const double seen_mass = unseen.empty() ? 1.0 : 1.0 - p_zero;
  SmoothedTable out;
  out.method = SmoothingMethod::kSimpleGoodTuring;
  for (const auto& [w, c] : table.counts) {
    if (c > 0) {
      out.probs[w] = seen_mass * r_star[static_cast<std::size_t>(row_of[c])] / n_prime;
    }
  }
  out.unseen_words.insert(unseen.begin(), unseen.end());
  out.p_unseen_each =
      unseen.empty() ? 0.0 : p_zero / static_cast<double>(unseen.size());
  return out;
}

double type_frequency(const AffixGroup& group, std::span<const GoldEntry> gold,
                      std::size_t lexicon_size) {
  if (lexicon_size < 1) throw ValidationError("lexicon size must be at least 1");
  std::size_t matched = 0;
  for (const GoldEntry& e : gold) {
    if (affix_length(e, group)) ++matched;
  }
  return static_cast<double>(matched) / static_cast<double>(lexicon_size);
}

double token_frequency(const AffixGroup& group, std::span<const GoldEntry> gold,
                       const SmoothedTable& smoothed) {
  double mass = 0.0;
  for (const GoldEntry& e : gold) {
    if (affix_length(e, group)) mass += smoothed.prob(e.word().surface());
  }
  return mass;
}

}  // namespace morphlab
