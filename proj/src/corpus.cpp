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

#include "morphlab/corpus.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "morphlab/error.hpp"

namespace morphlab {

namespace bundled {
const std::string& affix_groups_json();
const std::string& categories_tsv();
}  // namespace bundled

namespace {

bool skippable(const std::string& line) {
  return line.empty() || line[0] == '#';
}

std::string strip_cr(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

Word tokenize_at_line(const std::string& surface, std::size_t line,
                      const GraphemeInventory& inventory) {
  try {
    return tokenize(surface, inventory);
  } catch (const UnknownGrapheme& e) {
    throw UnknownGrapheme(e.surface(), e.position(), line);
  } catch (const ValidationError& e) {
    throw ValidationError("line " + std::to_string(line) + ": " + e.what());
  }
}

std::vector<std::string> split_morphs(const std::string& field) {
  std::vector<std::string> morphs;
  std::string cur;
  for (char c : field) {
    if (c == '+') {
      morphs.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  morphs.push_back(std::move(cur));
  return morphs;
}

}  // namespace

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> split_fields(const std::string& line, char sep) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(sep, start);
    if (pos == std::string::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
}

Lexicon parse_lexicon(std::istream& in, std::string name,
                      const GraphemeInventory& inventory) {
  Lexicon lexicon{std::move(name), {}};
  std::unordered_set<std::string> seen;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    raw = strip_cr(std::move(raw));
    if (skippable(raw)) continue;
    const std::string surface = normalize_surface(raw);
    if (!seen.insert(surface).second) throw DuplicateWord(surface, line);
    lexicon.words.push_back(tokenize_at_line(surface, line, inventory));
  }
  return lexicon;
}

Lexicon load_lexicon(const std::filesystem::path& path,
                     const GraphemeInventory& inventory) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open lexicon '" + path.string() + "'");
  return parse_lexicon(in, path.stem().string(), inventory);
}

void write_lexicon(std::ostream& out, const Lexicon& lexicon) {
  for (const Word& w : lexicon.words) out << w.surface() << '\n';
}

Segmentation segmentation_from_morphs(const Word& word,
                                      const std::vector<std::string>& morphs,
                                      const GraphemeInventory& inventory,
                                      std::size_t line) {
  const std::string where =
      line > 0 ? "line " + std::to_string(line) + ": " : std::string();
  std::string joined;
  for (const std::string& m : morphs) {
    if (m.empty()) {
      throw MorphMismatch(where + "empty morph in analysis of '" +
                          word.surface() + "'");
    }
    joined += normalize_surface(m);
  }
  if (joined != word.surface()) {
    throw MorphMismatch(where + "morphs '" + joined +
                        "' do not concatenate to '" + word.surface() + "'");
  }

  // Code-point offset at which each token ends.
  std::vector<std::size_t> token_end;
  std::size_t offset = 0;
  for (GraphemeId id : word.tokens()) {
    offset += decode_utf8(inventory.text(id)).size();
    token_end.push_back(offset);
  }
  if (offset != decode_utf8(word.surface()).size()) {
    throw MorphMismatch(where + "word '" + word.surface() +
                        "' was tokenized with a different inventory");
  }

  std::set<std::size_t> sites;
  std::size_t junction = 0;
  for (std::size_t i = 0; i + 1 < morphs.size(); ++i) {
    junction += decode_utf8(normalize_surface(morphs[i])).size();
    std::size_t site = 0;
    while (token_end[site] < junction) ++site;
    // token_end[site] >= junction: token `site` (0-based) ends at or after it
    if (token_end[site] != junction) {
      warn(where + "boundary inside digraph in '" + word.surface() +
           "' moved after the digraph");
    }
    const std::size_t mapped = site + 1;
    if (mapped > word.site_count()) {
      warn(where + "boundary at end of '" + word.surface() + "' dropped");
      continue;
    }
    sites.insert(mapped);
  }
  return Segmentation(word, {sites.begin(), sites.end()});
}

std::vector<GoldEntry> parse_segmentations(std::istream& in,
                                           const GraphemeInventory& inventory) {
  std::vector<GoldEntry> entries;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    raw = strip_cr(std::move(raw));
    if (skippable(raw)) continue;
    const auto fields = split_fields(raw);
    if (fields.size() < 2 || fields.size() > 4) {
      throw ValidationError("line " + std::to_string(line) +
                            ": expected 2 to 4 tab-separated columns");
    }
    const Word word =
        tokenize_at_line(normalize_surface(fields[0]), line, inventory);
    GoldEntry entry{
        segmentation_from_morphs(word, split_morphs(fields[1]), inventory, line),
        fields.size() > 2 ? fields[2] : std::string(), std::nullopt};
    if (fields.size() > 3 && !fields[3].empty()) entry.subcategory = fields[3];
    entries.push_back(std::move(entry));
  }
  return entries;
}

std::vector<GoldEntry> load_segmentations(const std::filesystem::path& path,
                                          const GraphemeInventory& inventory) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open segmentations '" + path.string() + "'");
  try {
    return parse_segmentations(in, inventory);
  } catch (const ValidationError& e) {
    throw ValidationError(path.string() + ": " + e.what());
  }
}

void write_segmentations(std::ostream& out,
                         const std::vector<GoldEntry>& entries,
                         const GraphemeInventory& inventory) {
  for (const GoldEntry& e : entries) {
    out << e.word().surface() << '\t' << render_morphs(e.gold, inventory);
    if (!e.category.empty() || e.subcategory) out << '\t' << e.category;
    if (e.subcategory) out << '\t' << *e.subcategory;
    out << '\n';
  }
}

bool CategoryVocabulary::contains(const std::string& label) const {
  for (const auto& [l, d] : labels) {
    if (l == label) return true;
  }
  return false;
}

namespace {

CategoryVocabulary parse_vocabulary(std::istream& in) {
  CategoryVocabulary vocab;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    raw = strip_cr(std::move(raw));
    if (skippable(raw)) continue;
    auto fields = split_fields(raw);
    if (fields[0].empty()) {
      throw ConfigError("categories line " + std::to_string(line) +
                        ": empty label");
    }
    vocab.labels.emplace_back(fields[0], fields.size() > 1 ? fields[1] : "");
  }
  if (vocab.labels.empty()) throw ConfigError("category vocabulary is empty");
  return vocab;
}

}  // namespace

const CategoryVocabulary& CategoryVocabulary::builtin() {
  static const CategoryVocabulary vocab = [] {
    std::istringstream in(bundled::categories_tsv());
    return parse_vocabulary(in);
  }();
  return vocab;
}

CategoryVocabulary load_category_vocabulary(const std::filesystem::path& path) {
  std::istringstream in(read_file(path));
  return parse_vocabulary(in);
}

void apply_category_vocabulary(std::vector<GoldEntry>& entries,
                               const CategoryVocabulary& vocab) {
  for (GoldEntry& e : entries) {
    if (e.category.empty()) e.category = "other";
    if (!vocab.contains(e.category)) {
      throw ValidationError("unknown category '" + e.category + "' for '" +
                            e.word().surface() + "'");
    }
  }
}

std::vector<RaterData> parse_raters(std::istream& in,
                                    const GraphemeInventory& inventory) {
  std::vector<RaterData> out;
  std::unordered_map<std::string, std::size_t> index;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    raw = strip_cr(std::move(raw));
    if (skippable(raw)) continue;
    const auto fields = split_fields(raw);
    if (fields.size() != 3) {
      throw ValidationError("line " + std::to_string(line) +
                            ": expected surface, rater id, morphs");
    }
    const std::string surface = normalize_surface(fields[0]);
    auto [it, inserted] = index.try_emplace(surface, out.size());
    if (inserted) {
      out.push_back({tokenize_at_line(surface, line, inventory), {}, {}});
    }
    RaterData& data = out[it->second];
    data.rater_ids.push_back(fields[1]);
    data.responses.push_back(
        segmentation_from_morphs(data.word, split_morphs(fields[2]), inventory,
                                 line));
  }
  return out;
}

std::vector<RaterData> load_raters(const std::filesystem::path& path,
                                   const GraphemeInventory& inventory) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open rater file '" + path.string() + "'");
  return parse_raters(in, inventory);
}

namespace {

std::vector<std::string> expand_consonant_slot(const std::string& form,
                                               const GraphemeInventory& inv) {
  const std::size_t slot = form.find('C');
  if (slot == std::string::npos) return {form};
  std::vector<std::string> out;
  for (GraphemeId c : inv.consonants()) {
    std::string filled = form.substr(0, slot) + inv.text(c) + form.substr(slot + 1);
    for (auto& f : expand_consonant_slot(filled, inv)) out.push_back(std::move(f));
  }
  return out;
}

}  // namespace

std::vector<AffixGroup> parse_affix_groups(const std::string& json_text,
                                           const GraphemeInventory& inventory) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("affix groups: ") + e.what());
  }
  if (!doc.is_array()) throw ConfigError("affix groups: top level must be an array");

  std::vector<AffixGroup> groups;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const json& g = doc[i];
    const std::string where = "affix groups[" + std::to_string(i) + "]";
    try {
      AffixGroup group;
      group.name = g.at("name").get<std::string>();
      const std::string edge = g.at("edge").get<std::string>();
      if (edge == "prefix") {
        group.edge = AffixEdge::kPrefix;
      } else if (edge == "suffix") {
        group.edge = AffixEdge::kSuffix;
      } else {
        throw ConfigError(where + ": edge must be 'prefix' or 'suffix'");
      }
      group.is_default = g.at("is_default").get<bool>();
      group.template_consistent = g.at("template_consistent").get<bool>();
      if (g.contains("thematic_consonant_note") &&
          !g["thematic_consonant_note"].is_null()) {
        group.thematic_consonant_note =
            g["thematic_consonant_note"].get<std::string>();
      }
      for (const auto& f : g.at("forms")) {
        for (const std::string& form :
             expand_consonant_slot(f.get<std::string>(), inventory)) {
          const std::string norm = normalize_surface(form);
          try {
            group.forms.push_back(tokenize(norm, inventory).tokens());
          } catch (const ValidationError& e) {
            throw ConfigError(where + ": form '" + form + "': " + e.what());
          }
        }
      }
      if (group.forms.empty()) throw ConfigError(where + ": forms must be non-empty");
      groups.push_back(std::move(group));
    } catch (const json::exception& e) {
      throw ConfigError(where + ": " + e.what());
    }
  }
  return groups;
}

std::vector<AffixGroup> load_affix_groups(const std::filesystem::path& path,
                                          const GraphemeInventory& inventory) {
  try {
    return parse_affix_groups(read_file(path), inventory);
  } catch (const ConfigError& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
}

const std::string& default_affix_groups_json() {
  return bundled::affix_groups_json();
}

const std::vector<AffixGroup>& default_affix_groups() {
  static const std::vector<AffixGroup> groups =
      parse_affix_groups(bundled::affix_groups_json());
  return groups;
}

}  // namespace morphlab
