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

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "morphlab/corpus.hpp"
#include "morphlab/error.hpp"
#include "support.hpp"

#ifndef MORPHLAB_SOURCE_DIR
#error "MORPHLAB_SOURCE_DIR must be defined"
#endif

using namespace morphlab;

namespace {

Lexicon parse(const std::string& text) {
  std::istringstream in(text);
  return parse_lexicon(in, "test");
}

std::vector<GoldEntry> parse_seg(const std::string& text) {
  std::istringstream in(text);
  return parse_segmentations(in);
}

}  // namespace

TEST_CASE("lexicon parsing") {
  Lexicon lex = parse("kaka\nwhare\n");
  REQUIRE(lex.words.size() == 2);
  CHECK(lex.words[1].surface() == "whare");

  CHECK(parse("# comment\n\nKaka\r\n").words.at(0).surface() == "kaka");

  try {
    parse("kaka\nxyz\n");
    FAIL("expected UnknownGrapheme");
  } catch (const UnknownGrapheme& e) {
    CHECK(e.line() == 2);
    CHECK(e.position() == 0);
  }
  try {
    parse("kaka\nwhare\nkaka\n");
    FAIL("expected DuplicateWord");
  } catch (const DuplicateWord& e) {
    CHECK(e.line() == 3);
  }
  CHECK_THROWS_AS(load_lexicon("/nonexistent/lexicon.txt"), IoError);
}

TEST_CASE("lexicon round trip") {
  const Lexicon lex = parse("whakapapa\nkāinga\nngā\nrongo\n");
  std::ostringstream out;
  write_lexicon(out, lex);
  const Lexicon back = parse(out.str());
  REQUIRE(back.words.size() == lex.words.size());
  for (std::size_t i = 0; i < lex.words.size(); ++i) {
    CHECK(back.words[i].surface() == lex.words[i].surface());
    CHECK(back.words[i].tokens() == lex.words[i].tokens());
  }
}

TEST_CASE("segmentation parsing") {
  auto e = parse_seg("whakapapa\twhaka+papa\n");
  REQUIRE(e.size() == 1);
  CHECK(e[0].gold.boundaries() == std::vector<std::size_t>{4});
  CHECK(e[0].category.empty());

  CHECK(parse_seg("kaka\tkaka\n").at(0).gold.empty());
  CHECK_THROWS_AS(parse_seg("kaka\tka+kaa\n"), MorphMismatch);
  CHECK_THROWS_AS(parse_seg("kaka\tka++ka\n"), MorphMismatch);
  CHECK_THROWS_AS(parse_seg("kaka\n"), ValidationError);
  CHECK_THROWS_AS(parse_seg("kaka\tkaka\ta\tb\tc\n"), ValidationError);

  auto full = parse_seg("whakarongo\twhaka+rongo\taffixation\twhaka-\n");
  CHECK(full.at(0).category == "affixation");
  CHECK(full.at(0).subcategory == std::optional<std::string>("whaka-"));
}

TEST_CASE("boundary inside a digraph moves after it") {
  WarningCapture warnings;
  auto e = parse_seg("kanga\tkan+ga\n");
  // tokens k a ng a; the junction falls inside "ng"
  CHECK(e.at(0).gold.boundaries() == std::vector<std::size_t>{3});
  CHECK(warnings.count() == 1);

  // Moved past the last token: one warning for the move, one for the drop.
  auto end = parse_seg("kang\tkan+g\n");
  CHECK(end.at(0).gold.empty());
  CHECK(warnings.count() == 3);
}

TEST_CASE("segmentation round trip") {
  const std::string text =
      "whakapapa\twhaka+papa\taffixation\twhaka-\n"
      "kaka\tkaka\tmonomorphemic\n"
      "kāinga\tkāinga\n"
      "rangatira\tranga+tira\tcompounding\n";
  const auto entries = parse_seg(text);
  std::ostringstream out;
  write_segmentations(out, entries);
  const auto back = parse_seg(out.str());
  REQUIRE(back.size() == entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    CHECK(back[i].gold == entries[i].gold);
    CHECK(back[i].category == entries[i].category);
    CHECK(back[i].subcategory == entries[i].subcategory);
  }
  std::ostringstream again;
  write_segmentations(again, back);
  CHECK(again.str() == out.str());
}

TEST_CASE("category vocabulary") {
  const auto& vocab = CategoryVocabulary::builtin();
  REQUIRE(vocab.labels.size() == 5);
  CHECK(vocab.labels.front().first == "monomorphemic");
  CHECK(vocab.contains("compounding"));
  CHECK_FALSE(vocab.contains("pseudo"));

  auto entries = parse_seg("kaka\tkaka\n");
  apply_category_vocabulary(entries, vocab);
  CHECK(entries[0].category == "other");
  auto bad = parse_seg("kaka\tkaka\tweird\n");
  CHECK_THROWS_AS(apply_category_vocabulary(bad, vocab), ValidationError);

  const auto loaded = load_category_vocabulary(
      std::filesystem::path(MORPHLAB_SOURCE_DIR) / "data" / "categories.tsv");
  CHECK(loaded.labels == vocab.labels);
}

TEST_CASE("rater parsing") {
  std::istringstream in(
      "whakapapa\tr1\twhaka+papa\n"
      "kaka\tr1\tkaka\n"
      "whakapapa\tr2\twhakapapa\n");
  const auto raters = parse_raters(in);
  REQUIRE(raters.size() == 2);
  CHECK(raters[0].word.surface() == "whakapapa");
  CHECK(raters[0].rater_ids == std::vector<std::string>{"r1", "r2"});
  CHECK(raters[0].responses.at(0).boundaries() == std::vector<std::size_t>{4});
  CHECK(raters[0].responses.at(1).empty());
  std::istringstream bad("kaka\tkaka\n");
  CHECK_THROWS_AS(parse_raters(bad), ValidationError);
}

TEST_CASE("affix groups") {
  const auto& groups = default_affix_groups();
  REQUIRE(groups.size() == 6);
  CHECK(groups[0].name == "whaka-");
  CHECK(groups[0].edge == AffixEdge::kPrefix);
  CHECK(groups[1].name == "-tia,-tanga");
  CHECK(groups[1].is_default);
  CHECK(groups[1].template_consistent);
  for (const auto& g : groups) CHECK_FALSE(g.forms.empty());

  CHECK_THROWS_AS(parse_affix_groups(R"([{"name":"x-","edge":"prefix","forms":[],
      "is_default":true,"template_consistent":false}])"),
                  ConfigError);
  CHECK_THROWS_AS(parse_affix_groups(R"([{"name":"x-","edge":"middle","forms":["a"],
      "is_default":true,"template_consistent":false}])"),
                  ConfigError);
  CHECK_THROWS_AS(parse_affix_groups("{}"), ConfigError);
  CHECK_THROWS_AS(parse_affix_groups("[{"), ConfigError);

  const auto expanded = parse_affix_groups(R"([{"name":"-Cia","edge":"suffix",
      "forms":["Cia"],"is_default":false,"template_consistent":true}])");
  CHECK(expanded.at(0).forms.size() == GraphemeInventory::maori().consonants().size());

  const auto bundled = load_affix_groups(std::filesystem::path(MORPHLAB_SOURCE_DIR) /
                                         "data" / "affix_groups.json");
  REQUIRE(bundled.size() == groups.size());
  for (std::size_t i = 0; i < groups.size(); ++i) {
    CHECK(bundled[i].name == groups[i].name);
    CHECK(bundled[i].forms == groups[i].forms);
    CHECK(bundled[i].is_default == groups[i].is_default);
    CHECK(bundled[i].template_consistent == groups[i].template_consistent);
  }
}

TEST_CASE("split_fields") {
  CHECK(split_fields("a\tb\t") == std::vector<std::string>{"a", "b", ""});
  CHECK(split_fields("a+b", '+') == std::vector<std::string>{"a", "b"});
}
