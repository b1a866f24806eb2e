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

// Drives the morphlab executable end to end.

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "morphlab/corpus.hpp"
#include "morphlab/pseudogen.hpp"
#include "morphlab/segmenter.hpp"

namespace fs = std::filesystem;

namespace {

const fs::path kSource = MORPHLAB_SOURCE_DIR;

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("morphlab_cli_" + std::to_string(::getpid()) + "_" +
            std::to_string(counter()++));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  static int& counter() {
    static int n = 0;
    return n;
  }
};

int run(const std::string& args, const fs::path& log) {
  const std::string cmd = std::string("\"") + MORPHLAB_CLI + "\" " + args + " >\"" +
                          log.string() + "\" 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void spit(const fs::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  out << text;
}

std::string q(const fs::path& p) { return "\"" + p.string() + "\""; }

}  // namespace

TEST_CASE("version") {
  TempDir t;
  CHECK(run("--version", t.path / "log") == 0);
  CHECK(slurp(t.path / "log").find("model format 1") != std::string::npos);
}

TEST_CASE("train then segment reproduces the stored analyses") {
  TempDir t;
  spit(t.path / "lex.txt", "kaka\nkakakaka\nkakarara\nrara\nwhare\nwharenui\nnui\n");
  REQUIRE(run("train --lexicon " + q(t.path / "lex.txt") + " --model " +
                  q(t.path / "m.tsv") + " --seed 4",
              t.path / "log") == 0);
  REQUIRE(run("segment --model " + q(t.path / "m.tsv") + " --lexicon " +
                  q(t.path / "lex.txt") + " --out " + q(t.path / "seg.tsv"),
              t.path / "log") == 0);
  const auto model = morphlab::MorphModel::load(t.path / "m.tsv");
  const auto segs = morphlab::load_segmentations(t.path / "seg.tsv");
  REQUIRE(segs.size() == model.analyses().size());
  for (std::size_t i = 0; i < segs.size(); ++i) CHECK(segs[i].gold == model.analyses()[i]);

  // --threads is accepted before or after the subcommand.
  CHECK(run("--threads 1 segment --model " + q(t.path / "m.tsv") + " --lexicon " +
                q(t.path / "lex.txt") + " --out " + q(t.path / "seg1.tsv"),
            t.path / "log") == 0);
  CHECK(slurp(t.path / "seg1.tsv") == slurp(t.path / "seg.tsv"));
}

TEST_CASE("eval reports") {
  TempDir t;
  spit(t.path / "gold.tsv",
       "kaka\tkaka\tmonomorphemic\n"
       "whareniho\twhare+niho\tcompounding\n"
       "rangatira\tranga+tira\tcompounding\n");
  REQUIRE(run("eval --gold " + q(t.path / "gold.tsv") + " --predictions " +
                  q(t.path / "gold.tsv") + " --out " + q(t.path / "out"),
              t.path / "log") == 0);
  CHECK(slurp(t.path / "out" / "categories.tsv") ==
        "category\tn\tprecision\trecall\n"
        "monomorphemic\t1\t1\t1\n"
        "compounding\t2\t1\t1\n");
  const std::string affixes = slurp(t.path / "out" / "affixes.tsv");
  CHECK(affixes.rfind("group\tn\ttype_freq\ttoken_freq\trecovery_predictions\n", 0) == 0);
  CHECK(affixes.find("whaka-\t0\t0\tNA\tNA\n") != std::string::npos);

  REQUIRE(run("train --gold " + q(t.path / "gold.tsv") + " --model " + q(t.path / "m.tsv"),
              t.path / "log") == 0);
  CHECK(run("eval --gold " + q(t.path / "gold.tsv") + " --model " + q(t.path / "m.tsv") +
                " --out " + q(t.path / "out2"),
            t.path / "log") == 0);
  CHECK(fs::exists(t.path / "out2" / "categories.tsv"));
}

TEST_CASE("vote and affix-report") {
  TempDir t;
  spit(t.path / "raters.tsv",
       "whakarongo\tr1\twhaka+rongo\n"
       "whakarongo\tr2\twhaka+rongo\n"
       "whakarongo\tr3\twhakarongo\n"
       "kaka\tr1\tka+ka\n"
       "kaka\tr2\tkaka\n");
  REQUIRE(run("vote --raters " + q(t.path / "raters.tsv") + " --out " +
                  q(t.path / "voted.tsv") + " --rater-counts " + q(t.path / "n.tsv"),
              t.path / "log") == 0);
  CHECK(slurp(t.path / "voted.tsv") == "whakarongo\twhaka+rongo\nkaka\tkaka\n");
  CHECK(slurp(t.path / "n.tsv") == "surface\traters\nwhakarongo\t3\nkaka\t2\n");

  spit(t.path / "gold.tsv", "whakarongo\twhaka+rongo\taffixation\n");
  spit(t.path / "counts.tsv", "whakarongo\t3\nkaka\t1\nwhare\t1\nnui\t2\n");
  REQUIRE(run("affix-report --gold " + q(t.path / "gold.tsv") + " --predictions gold=" +
                  (t.path / "gold.tsv").string() + " --raters " + q(t.path / "raters.tsv") +
                  " --counts " + q(t.path / "counts.tsv") + " --out " +
                  q(t.path / "affix.tsv"),
              t.path / "log") == 0);
  std::istringstream rows(slurp(t.path / "affix.tsv"));
  std::string header;
  std::string first;
  std::getline(rows, header);
  std::getline(rows, first);
  CHECK(header == "group\tn\ttype_freq\ttoken_freq\trecovery_gold\trecovery_raters");
  CHECK(first.rfind("whaka-\t1\t1\t", 0) == 0);
  CHECK(first.substr(first.size() - 4) == "\t1\t1");
  CHECK(first.find("NA") == std::string::npos);
}

TEST_CASE("gen-pseudo writes data and sidecar") {
  TempDir t;
  const fs::path gold = kSource / "data" / "synthetic_gold.tsv";
  REQUIRE(run("gen-pseudo --gold " + q(gold) + " --seed 9 --out " + q(t.path / "p.tsv"),
              t.path / "log") == 0);
  const auto rows = morphlab::load_segmentations(t.path / "p.tsv");
  const auto kept =
      morphlab::filter_max_morph_syllables(morphlab::load_segmentations(gold), 3);
  CHECK(rows.size() == kept.size());
  CHECK(slurp(t.path / "p.tsv.json").find("\"seed\": 9") != std::string::npos);
}

TEST_CASE("exit codes") {
  TempDir t;
  spit(t.path / "bad.txt", "kaka\nxyz\n");
  CHECK(run("train --lexicon " + q(t.path / "bad.txt") + " --model " + q(t.path / "m"),
            t.path / "log") == 2);
  CHECK(slurp(t.path / "log").find("line 2") != std::string::npos);
  CHECK(run("train --lexicon " + q(t.path / "missing.txt") + " --model " + q(t.path / "m"),
            t.path / "log") == 4);
  CHECK(slurp(t.path / "log").find("missing.txt") != std::string::npos);
  CHECK(run("train --model " + q(t.path / "m"), t.path / "log") == 2);
  CHECK(run("frobnicate", t.path / "log") == 2);
  CHECK(run("", t.path / "log") == 2);
  spit(t.path / "ok.txt", "kaka\n");
  CHECK(run("train --lexicon " + q(t.path / "ok.txt") + " --model " +
                q(t.path / "ok.txt" / "nested"),
            t.path / "log") == 4);
  const fs::path gold = kSource / "data" / "synthetic_gold.tsv";
  CHECK(run("gen-pseudo --gold " + q(gold) + " --retry-budget 1 --out " + q(t.path / "p.tsv"),
            t.path / "log") == 3);
  spit(t.path / "mismatch.tsv", "kaka\tka+kaa\n");
  CHECK(run("eval --gold " + q(t.path / "mismatch.tsv") + " --predictions " +
                q(t.path / "mismatch.tsv") + " --out " + q(t.path / "o"),
            t.path / "log") == 2);
}
