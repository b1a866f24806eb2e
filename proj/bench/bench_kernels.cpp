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

// Serial vs parallel timings for the two OpenMP kernels.
//
//   morphlab_bench [gold.tsv] [sets] [threads]

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "morphlab/corpus.hpp"
#include "morphlab/parallel.hpp"
#include "morphlab/pipeline.hpp"

namespace {

template <typename F>
double seconds(F&& f) {
  const auto start = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void report(const std::string& name, double serial, double parallel, bool same) {
  std::cout << name << "\tserial " << serial << " s\tparallel " << parallel
            << " s\tspeedup " << (parallel > 0 ? serial / parallel : 0.0)
            << "\tidentical " << (same ? "yes" : "NO") << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  using namespace morphlab;
  const std::string gold_path = argc > 1 ? argv[1] : MORPHLAB_DEFAULT_GOLD;
  const std::size_t sets = argc > 2 ? std::strtoul(argv[2], nullptr, 10) : 16;
  if (argc > 3) set_thread_count(std::atoi(argv[3]));
  std::cout << "threads " << max_threads() << '\n';

  const auto gold = load_segmentations(gold_path);
  const PseudoSetPlan plan = PseudoSetPlan::from_gold(gold, 1);

  std::vector<SetResult> a;
  std::vector<SetResult> b;
  const double ts = seconds([&] { a = run_pseudo_sets_serial(plan, sets); });
  const double tp = seconds([&] { b = run_pseudo_sets_parallel(plan, sets); });
  bool same = a.size() == b.size();
  for (std::size_t i = 0; same && i < a.size(); ++i) {
    same = a[i].precision == b[i].precision && a[i].recall == b[i].recall;
  }
  report("pseudo_sets", ts, tp, same);

  // Decode unseen pseudo words with a model trained on the real gold.
  Lexicon lex;
  for (const auto& e : gold) lex.words.push_back(e.word());
  const MorphModel model = train(lex);
  std::vector<Word> words;
  for (std::size_t k = 0; k < sets; ++k) {
    for (Word& w : plan.generate_set(k).words) words.push_back(std::move(w));
  }
  std::vector<Segmentation> s;
  std::vector<Segmentation> p;
  const double ss = seconds([&] { s = segment_all_serial(model, words); });
  const double sp = seconds([&] { p = segment_all_parallel(model, words); });
  same = s.size() == p.size();
  for (std::size_t i = 0; same && i < s.size(); ++i) {
    same = s[i].boundaries() == p[i].boundaries();
  }
  report("segment_all (" + std::to_string(words.size()) + " words)", ss, sp, same);
  return 0;
}
