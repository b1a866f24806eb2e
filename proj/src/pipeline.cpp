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

#include "morphlab/pipeline.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <exception>
#include <ostream>

#include "morphlab/error.hpp"
#include "morphlab/parallel.hpp"

namespace morphlab {

std::string format_real(double value) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, end);
}

PRResult train_and_score(std::span<const GoldEntry> gold, const TrainConfig& config) {
  Lexicon lexicon;
  lexicon.words.reserve(gold.size());
  for (const GoldEntry& e : gold) lexicon.words.push_back(e.word());
  const MorphModel model = train(lexicon, config);
  std::vector<PRResult> results;
  results.reserve(gold.size());
  for (const GoldEntry& e : gold) results.push_back(word_pr(model.segment(e.word()), e.gold));
  const CategoryReport r = macro_average(results);
  return {r.macro_precision, r.macro_recall};
}

PseudoSetPlan PseudoSetPlan::from_gold(std::span<const GoldEntry> gold,
                                       std::uint64_t base_seed,
                                       const TrainConfig& train,
                                       const GenerateConfig& generate) {
  const std::vector<GoldEntry> kept = filter_max_morph_syllables(gold, 3);
  if (kept.empty()) throw ValidationError("no gold words left after filtering");
  PseudoSetPlan plan;
  plan.stats = count_level_frequencies(kept);
  fit_levels(plan.stats);
  plan.templates = word_templates(kept);
  plan.morph_counts = morph_type_counts(kept);
  plan.generate = generate;
  plan.train = train;
  plan.base_seed = base_seed;
  return plan;
}

PseudoLexicon PseudoSetPlan::generate_set(std::size_t set_index) const {
  return generate_pseudo_lexicon(stats, templates, morph_counts,
                                 GraphemeInventory::maori(), seed_for(set_index),
                                 generate);
}

SetResult run_pseudo_set(const PseudoSetPlan& plan, std::size_t set_index) {
  const PseudoLexicon lexicon = plan.generate_set(set_index);
  TrainConfig train = plan.train;
  train.seed = plan.seed_for(set_index);
  const PRResult pr = train_and_score(lexicon.ground_truth, train);
  return {set_index, plan.seed_for(set_index), pr.precision, pr.recall};
}

std::vector<SetResult> run_pseudo_sets_serial(const PseudoSetPlan& plan,
                                              std::size_t count) {
  std::vector<SetResult> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) out.push_back(run_pseudo_set(plan, k));
  return out;
}

std::vector<SetResult> run_pseudo_sets_parallel(const PseudoSetPlan& plan,
                                                std::size_t count) {
  std::vector<SetResult> out(count);
  std::vector<std::exception_ptr> errors(count);
  const long n = static_cast<long>(count);
#pragma omp parallel for schedule(dynamic, 1)
  for (long k = 0; k < n; ++k) {
    try {
      out[k] = run_pseudo_set(plan, static_cast<std::size_t>(k));
    } catch (...) {
      errors[k] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

double nearest_rank_percentile(std::vector<double> values, double p) {
  if (values.empty()) throw ValidationError("percentile of no values");
  if (!(p > 0 && p <= 100)) throw ValidationError("percentile must be in (0, 100]");
  std::sort(values.begin(), values.end());
  const double n = static_cast<double>(values.size());
  // Guard against p/100*n landing a hair above an integer.
  std::size_t rank = static_cast<std::size_t>(std::ceil(p / 100.0 * n - 1e-9));
  rank = std::clamp<std::size_t>(rank, 1, values.size());
  return values[rank - 1];
}

Analysis2Report summarise(PRResult real, std::vector<SetResult> sets) {
  if (sets.empty()) throw ValidationError("analysis needs at least one set");
  Analysis2Report report;
  report.real = real;
  std::vector<double> p;
  std::vector<double> r;
  for (const SetResult& s : sets) {
    p.push_back(s.precision);
    r.push_back(s.recall);
  }
  double sp = 0.0;
  double sr = 0.0;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    sp += p[i];
    sr += r[i];
  }
  report.mean_precision = sp / static_cast<double>(sets.size());
  report.mean_recall = sr / static_cast<double>(sets.size());
  report.precision_2_5 = nearest_rank_percentile(p, 2.5);
  report.precision_97_5 = nearest_rank_percentile(p, 97.5);
  report.recall_2_5 = nearest_rank_percentile(r, 2.5);
  report.recall_97_5 = nearest_rank_percentile(r, 97.5);
  report.sets = std::move(sets);
  return report;
}

Analysis2Report run_analysis2(std::span<const GoldEntry> gold,
                              const Analysis2Config& config) {
  if (config.set_count < 1) throw ValidationError("set count must be at least 1");
  const std::vector<GoldEntry> kept = filter_max_morph_syllables(gold, 3);
  TrainConfig real_train = config.train;
  real_train.seed = config.seed;
  const PRResult real = train_and_score(kept, real_train);
  const PseudoSetPlan plan =
      PseudoSetPlan::from_gold(kept, config.seed, config.train, config.generate);
  auto sets = config.parallel ? run_pseudo_sets_parallel(plan, config.set_count)
                              : run_pseudo_sets_serial(plan, config.set_count);
  return summarise(real, std::move(sets));
}

void write_sets_tsv(std::ostream& out, const Analysis2Report& report) {
  out << "set\tseed\tprecision\trecall\n";
  for (const SetResult& s : report.sets) {
    out << s.index << '\t' << s.seed << '\t' << format_real(s.precision) << '\t'
        << format_real(s.recall) << '\n';
  }
}

void write_summary_tsv(std::ostream& out, const Analysis2Report& report) {
  out << "metric\treal\tpseudo_mean\tpseudo_p2_5\tpseudo_p97_5\tsets\n";
  out << "precision\t" << format_real(report.real.precision) << '\t'
      << format_real(report.mean_precision) << '\t' << format_real(report.precision_2_5)
      << '\t' << format_real(report.precision_97_5) << '\t' << report.sets.size()
      << '\n';
  out << "recall\t" << format_real(report.real.recall) << '\t'
      << format_real(report.mean_recall) << '\t' << format_real(report.recall_2_5)
      << '\t' << format_real(report.recall_97_5) << '\t' << report.sets.size() << '\n';
}

namespace {

constexpr int kBins = 30;

std::string fixed(double v, int digits = 2) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

struct Panel {
  std::string title;
  std::vector<double> values;
  double real;
  double mean;
  double lo;
  double hi;
};

void draw_panel(std::ostream& out, const Panel& panel, double x0, double y0) {
  const double width = 360.0;
  const double height = 200.0;
  std::vector<int> bins(kBins, 0);
  for (double v : panel.values) {
    int b = static_cast<int>(std::floor(v * kBins));
    bins[std::clamp(b, 0, kBins - 1)]++;
  }
  const int peak = std::max(1, *std::max_element(bins.begin(), bins.end()));
  const double bw = width / kBins;
  auto xpos = [&](double v) { return x0 + std::clamp(v, 0.0, 1.0) * width; };

  out << "  <g>\n";
  out << "    <text x=\"" << fixed(x0 + width / 2) << "\" y=\"" << fixed(y0 - 10)
      << "\" text-anchor=\"middle\" font-size=\"14\">" << panel.title << "</text>\n";
  for (int i = 0; i < kBins; ++i) {
    if (bins[i] == 0) continue;
    const double h = height * bins[i] / peak;
    out << "    <rect x=\"" << fixed(x0 + i * bw) << "\" y=\"" << fixed(y0 + height - h)
        << "\" width=\"" << fixed(bw) << "\" height=\"" << fixed(h)
        << "\" fill=\"#bbbbbb\" stroke=\"#555555\" stroke-width=\"0.5\"/>\n";
  }
  out << "    <line x1=\"" << fixed(x0) << "\" y1=\"" << fixed(y0 + height) << "\" x2=\""
      << fixed(x0 + width) << "\" y2=\"" << fixed(y0 + height)
      << "\" stroke=\"black\"/>\n";
  for (int t = 0; t <= 10; t += 2) {
    const double v = t / 10.0;
    out << "    <text x=\"" << fixed(xpos(v)) << "\" y=\"" << fixed(y0 + height + 16)
        << "\" text-anchor=\"middle\" font-size=\"10\">" << fixed(v, 1) << "</text>\n";
  }
  // Percentile interval and mean, just under the axis.
  const double iy = y0 + height + 26;
  out << "    <line x1=\"" << fixed(xpos(panel.lo)) << "\" y1=\"" << fixed(iy)
      << "\" x2=\"" << fixed(xpos(panel.hi)) << "\" y2=\"" << fixed(iy)
      << "\" stroke=\"red\" stroke-width=\"2\"/>\n";
  out << "    <circle cx=\"" << fixed(xpos(panel.mean)) << "\" cy=\"" << fixed(iy)
      << "\" r=\"3\" fill=\"red\"/>\n";
  out << "    <line x1=\"" << fixed(xpos(panel.real)) << "\" y1=\"" << fixed(y0)
      << "\" x2=\"" << fixed(xpos(panel.real)) << "\" y2=\"" << fixed(y0 + height)
      << "\" stroke=\"blue\" stroke-width=\"2\"/>\n";
  out << "  </g>\n";
}

}  // namespace

void write_analysis2_svg(std::ostream& out, const Analysis2Report& report) {
  Panel precision{"precision", {}, report.real.precision, report.mean_precision,
                  report.precision_2_5, report.precision_97_5};
  Panel recall{"recall", {}, report.real.recall, report.mean_recall, report.recall_2_5,
               report.recall_97_5};
  for (const SetResult& s : report.sets) {
    precision.values.push_back(s.precision);
    recall.values.push_back(s.recall);
  }
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"840\" height=\"300\" "
         "viewBox=\"0 0 840 300\">\n";
  out << "  <rect width=\"840\" height=\"300\" fill=\"white\"/>\n";
  draw_panel(out, precision, 40.0, 40.0);
  draw_panel(out, recall, 440.0, 40.0);
  out << "</svg>\n";
}

void write_category_tsv(std::ostream& out, std::span<const CategoryReport> rows) {
  out << "category\tn\tprecision\trecall\n";
  for (const CategoryReport& r : rows) {
    out << r.category << '\t' << r.n << '\t' << format_real(r.macro_precision) << '\t'
        << format_real(r.macro_recall) << '\n';
  }
}

std::vector<AffixReportRow> affix_report(std::span<const GoldEntry> gold,
                                         std::span<const AffixGroup> groups,
                                         std::span<const PredictionSource> sources,
                                         std::size_t lexicon_size,
                                         const SmoothedTable* smoothed) {
  if (lexicon_size == 0) lexicon_size = gold.size();
  std::vector<AffixReportRow> rows;
  for (const AffixGroup& group : groups) {
    AffixReportRow row;
    row.group = group.name;
    const std::vector<GoldEntry> members = group_members(gold, group);
    row.n = members.size();
    row.type_freq = type_frequency(group, gold, std::max<std::size_t>(lexicon_size, 1));
    if (smoothed) row.token_freq = token_frequency(group, gold, *smoothed);
    for (const PredictionSource& src : sources) {
      if (members.empty()) {
        row.recovery.emplace_back(std::nullopt);
      } else {
        row.recovery.emplace_back(recovery_rate(members, group, src.predictions));
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_affix_tsv(std::ostream& out, std::span<const AffixReportRow> rows,
                     std::span<const PredictionSource> sources) {
  out << "group\tn\ttype_freq\ttoken_freq";
  for (const PredictionSource& s : sources) out << "\trecovery_" << s.name;
  out << '\n';
  for (const AffixReportRow& r : rows) {
    out << r.group << '\t' << r.n << '\t' << format_real(r.type_freq) << '\t'
        << (r.token_freq ? format_real(*r.token_freq) : std::string("NA"));
    for (const auto& rate : r.recovery) {
      out << '\t' << (rate ? format_real(*rate) : std::string("NA"));
    }
    out << '\n';
  }
}

std::vector<GoldEntry> vote_all(std::span<const RaterData> raters) {
  std::vector<GoldEntry> out;
  out.reserve(raters.size());
  for (const RaterData& r : raters) {
    out.push_back({majority_vote(r.responses), std::string(), std::nullopt});
  }
  return out;
}

}  // namespace morphlab
