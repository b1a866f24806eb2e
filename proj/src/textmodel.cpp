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

#include "morphlab/textmodel.hpp"

#include <algorithm>
#include <set>

#include "morphlab/error.hpp"

namespace morphlab {

GraphemeInventory::GraphemeInventory(std::vector<std::string> consonants,
                                     std::vector<std::string> short_vowels,
                                     std::vector<std::string> long_vowels) {
  if (long_vowels.size() > short_vowels.size()) {
    throw ConfigError("inventory: more long vowels than short vowels");
  }
  std::set<std::string> seen;
  auto add = [&](std::string text, GraphemeClass cls) -> GraphemeId {
    if (text.empty()) throw ConfigError("inventory: empty grapheme");
    if (!seen.insert(text).second) {
      throw ConfigError("inventory: duplicate grapheme '" + text + "'");
    }
    if (text_.size() >= 255) throw ConfigError("inventory: too many graphemes");
    max_bytes_ = std::max(max_bytes_, text.size());
    text_.push_back(std::move(text));
    class_.push_back(cls);
    return static_cast<GraphemeId>(text_.size() - 1);
  };
  for (auto& c : consonants) {
    consonants_.push_back(add(std::move(c), GraphemeClass::kConsonant));
  }
  for (auto& v : short_vowels) {
    short_vowels_.push_back(add(std::move(v), GraphemeClass::kShortVowel));
  }
  for (auto& v : long_vowels) {
    long_vowels_.push_back(add(std::move(v), GraphemeClass::kLongVowel));
  }
  short_of_.assign(text_.size(), 0);
  for (std::size_t i = 0; i < long_vowels_.size(); ++i) {
    short_of_[long_vowels_[i]] = short_vowels_[i];
  }
}

const GraphemeInventory& GraphemeInventory::maori() {
  static const GraphemeInventory inventory(
      {"p", "t", "k", "m", "n", "ng", "w", "r", "wh", "h"},
      {"a", "e", "i", "o", "u"},
      {"ā", "ē", "ī", "ō", "ū"});
  return inventory;
}

std::optional<GraphemeId> GraphemeInventory::find(std::string_view text) const {
  for (std::size_t i = 0; i < text_.size(); ++i) {
    if (text_[i] == text) return static_cast<GraphemeId>(i);
  }
  return std::nullopt;
}

GraphemeId GraphemeInventory::short_of(GraphemeId long_vowel) const {
  if (grapheme_class(long_vowel) != GraphemeClass::kLongVowel) {
    throw std::invalid_argument("short_of: not a long vowel");
  }
  return short_of_[long_vowel];
}

std::string GraphemeInventory::render(std::span<const GraphemeId> tokens) const {
  std::string out;
  for (GraphemeId id : tokens) out += text(id);
  return out;
}

Segmentation::Segmentation(Word word, std::vector<std::size_t> boundaries)
    : word_(std::move(word)), boundaries_(std::move(boundaries)) {
  std::sort(boundaries_.begin(), boundaries_.end());
  for (std::size_t i = 0; i < boundaries_.size(); ++i) {
    const std::size_t b = boundaries_[i];
    if (b < 1 || b > word_.site_count()) {
      throw ValidationError("boundary " + std::to_string(b) +
                            " outside sites of '" + word_.surface() + "'");
    }
    if (i > 0 && boundaries_[i - 1] == b) {
      throw ValidationError("duplicate boundary " + std::to_string(b) +
                            " in '" + word_.surface() + "'");
    }
  }
}

Segmentation Segmentation::from_morph_lengths(
    Word word, std::span<const std::size_t> lengths) {
  std::vector<std::size_t> boundaries;
  std::size_t pos = 0;
  for (std::size_t i = 0; i + 1 < lengths.size(); ++i) {
    pos += lengths[i];
    boundaries.push_back(pos);
  }
  return Segmentation(std::move(word), std::move(boundaries));
}

bool Segmentation::has_boundary(std::size_t site) const {
  return std::binary_search(boundaries_.begin(), boundaries_.end(), site);
}

std::u32string decode_utf8(std::string_view text) {
  std::u32string out;
  std::size_t i = 0;
  while (i < text.size()) {
    const auto c = static_cast<unsigned char>(text[i]);
    std::size_t extra = 0;
    char32_t cp = 0;
    if (c < 0x80) {
      cp = c;
    } else if ((c & 0xE0) == 0xC0) {
      cp = c & 0x1F;
      extra = 1;
    } else if ((c & 0xF0) == 0xE0) {
      cp = c & 0x0F;
      extra = 2;
    } else if ((c & 0xF8) == 0xF0) {
      cp = c & 0x07;
      extra = 3;
    } else {
      out.push_back(U'�');
      ++i;
      continue;
    }
    if (i + extra >= text.size()) {
      out.push_back(U'�');
      break;
    }
    bool ok = true;
    for (std::size_t k = 1; k <= extra; ++k) {
      const auto cc = static_cast<unsigned char>(text[i + k]);
      if ((cc & 0xC0) != 0x80) {
        ok = false;
        break;
      }
      cp = (cp << 6) | (cc & 0x3F);
    }
    if (!ok) {
      out.push_back(U'�');
      ++i;
      continue;
    }
    out.push_back(cp);
    i += extra + 1;
  }
  return out;
}

std::string encode_utf8(std::u32string_view text) {
  std::string out;
  for (char32_t cp : text) {
    if (cp < 0x80) {
      out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
      out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
      out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
      out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
  }
  return out;
}

namespace {

// Precomposed lowercase vowel+macron for a base vowel, or 0.
char32_t macron_of(char32_t base) {
  switch (base) {
    case U'a': return U'ā';
    case U'e': return U'ē';
    case U'i': return U'ī';
    case U'o': return U'ō';
    case U'u': return U'ū';
    default: return 0;
  }
}

char32_t fold_case(char32_t cp) {
  if (cp >= U'A' && cp <= U'Z') return cp + (U'a' - U'A');
  switch (cp) {
    case U'Ā': return U'ā';
    case U'Ē': return U'ē';
    case U'Ī': return U'ī';
    case U'Ō': return U'ō';
    case U'Ū': return U'ū';
    default: return cp;
  }
}

}  // namespace

std::string normalize_surface(std::string_view raw) {
  while (!raw.empty() && (raw.back() == '\r' || raw.back() == '\n')) {
    raw.remove_suffix(1);
  }
  std::u32string out;
  for (char32_t cp : decode_utf8(raw)) {
    cp = fold_case(cp);
    if (cp == U'̄' && !out.empty()) {
      if (char32_t m = macron_of(out.back()); m != 0) {
        out.back() = m;
        continue;
      }
    }
    out.push_back(cp);
  }
  return encode_utf8(out);
}

Word tokenize(std::string_view surface, const GraphemeInventory& inventory) {
  if (surface.empty()) throw ValidationError("cannot tokenize an empty word");
  TokenSeq tokens;
  std::size_t i = 0;
  std::size_t code_points = 0;
  while (i < surface.size()) {
    std::optional<GraphemeId> match;
    std::size_t match_len = 0;
    const std::size_t longest =
        std::min(inventory.max_grapheme_bytes(), surface.size() - i);
    for (std::size_t len = longest; len >= 1; --len) {
      if (auto id = inventory.find(surface.substr(i, len))) {
        match = id;
        match_len = len;
        break;
      }
    }
    if (!match) {
      throw UnknownGrapheme(std::string(surface), code_points);
    }
    tokens.push_back(*match);
    code_points += decode_utf8(surface.substr(i, match_len)).size();
    i += match_len;
  }
  return Word(std::string(surface), std::move(tokens));
}

int mora_count(std::span<const GraphemeId> tokens,
               const GraphemeInventory& inventory) {
  int moras = 0;
  for (GraphemeId id : tokens) {
    switch (inventory.grapheme_class(id)) {
      case GraphemeClass::kShortVowel: moras += 1; break;
      case GraphemeClass::kLongVowel: moras += 2; break;
      case GraphemeClass::kConsonant: break;
    }
  }
  return moras;
}

std::vector<TokenSeq> segmentation_to_morphs(const Segmentation& seg) {
  const TokenSeq& tokens = seg.word().tokens();
  std::vector<TokenSeq> pieces;
  std::size_t start = 0;
  for (std::size_t b : seg.boundaries()) {
    pieces.emplace_back(tokens.begin() + start, tokens.begin() + b);
    start = b;
  }
  pieces.emplace_back(tokens.begin() + start, tokens.end());
  return pieces;
}

std::string render_morphs(const Segmentation& seg,
                          const GraphemeInventory& inventory) {
  std::string out;
  for (const TokenSeq& piece : segmentation_to_morphs(seg)) {
    if (!out.empty()) out += '+';
    out += inventory.render(piece);
  }
  return out;
}

std::vector<TokenSeq> syllabify(std::span<const GraphemeId> tokens,
                                const GraphemeInventory& inventory) {
  std::vector<TokenSeq> syllables;
  std::size_t i = 0;
  while (i < tokens.size()) {
    if (inventory.is_vowel(tokens[i])) {
      syllables.push_back({tokens[i]});
      ++i;
    } else if (i + 1 < tokens.size() && inventory.is_vowel(tokens[i + 1])) {
      syllables.push_back({tokens[i], tokens[i + 1]});
      i += 2;
    } else {
      throw SyllabificationFailure("cannot syllabify '" +
                                   inventory.render(tokens) +
                                   "' as (C)V syllables");
    }
  }
  return syllables;
}

}  // namespace morphlab
