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

// Orthographic words as grapheme-token sequences. Boundary sites sit between
// tokens, never between the letters of a digraph: site i lies between token i
// and token i+1 (1-based), so a word of n tokens has sites 1..n-1.

#ifndef MORPHLAB_TEXTMODEL_HPP_
#define MORPHLAB_TEXTMODEL_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace morphlab {

using GraphemeId = std::uint8_t;
using TokenSeq = std::vector<GraphemeId>;

enum class GraphemeClass { kConsonant, kShortVowel, kLongVowel };

class GraphemeInventory {
 public:
  /// Long vowels pair with short vowels by position. Throws ConfigError on
  /// duplicates, empty strings, or an unpaired long vowel.
  GraphemeInventory(std::vector<std::string> consonants,
                    std::vector<std::string> short_vowels,
                    std::vector<std::string> long_vowels);

  /// p t k m n ng w r wh h / a e i o u / ā ē ī ō ū
  static const GraphemeInventory& maori();

  std::size_t size() const { return text_.size(); }
  const std::string& text(GraphemeId id) const { return text_.at(id); }
  GraphemeClass grapheme_class(GraphemeId id) const { return class_.at(id); }
  bool is_vowel(GraphemeId id) const {
    return grapheme_class(id) != GraphemeClass::kConsonant;
  }
  std::optional<GraphemeId> find(std::string_view text) const;

  const std::vector<GraphemeId>& consonants() const { return consonants_; }
  const std::vector<GraphemeId>& short_vowels() const { return short_vowels_; }
  const std::vector<GraphemeId>& long_vowels() const { return long_vowels_; }
  /// Short counterpart of a long vowel.
  GraphemeId short_of(GraphemeId long_vowel) const;

  std::size_t max_grapheme_bytes() const { return max_bytes_; }

  std::string render(std::span<const GraphemeId> tokens) const;

 private:
  std::vector<std::string> text_;
  std::vector<GraphemeClass> class_;
  std::vector<GraphemeId> consonants_;
  std::vector<GraphemeId> short_vowels_;
  std::vector<GraphemeId> long_vowels_;
  std::vector<GraphemeId> short_of_;
  std::size_t max_bytes_ = 0;
};

/// A tokenized surface form. Tokens always re-concatenate to `surface`.
class Word {
 public:
  Word() = default;
  Word(std::string surface, TokenSeq tokens)
      : surface_(std::move(surface)), tokens_(std::move(tokens)) {}

  const std::string& surface() const { return surface_; }
  const TokenSeq& tokens() const { return tokens_; }
  std::size_t size() const { return tokens_.size(); }
  std::size_t site_count() const {
    return tokens_.empty() ? 0 : tokens_.size() - 1;
  }

  friend bool operator==(const Word& a, const Word& b) {
    return a.surface_ == b.surface_;
  }

 private:
  std::string surface_;
  TokenSeq tokens_;
};

/// Boundary sites placed in one word.
class Segmentation {
 public:
  Segmentation() = default;
  /// Sorts `boundaries`; throws ValidationError on a duplicate or a site
  /// outside 1..site_count.
  Segmentation(Word word, std::vector<std::size_t> boundaries);

  /// Boundaries at the junctions of consecutive pieces of the given token
  /// lengths.
  static Segmentation from_morph_lengths(Word word,
                                         std::span<const std::size_t> lengths);

  const Word& word() const { return word_; }
  const std::vector<std::size_t>& boundaries() const { return boundaries_; }
  std::size_t size() const { return boundaries_.size(); }
  bool empty() const { return boundaries_.empty(); }
  bool has_boundary(std::size_t site) const;

  friend bool operator==(const Segmentation& a, const Segmentation& b) {
    return a.word_ == b.word_ && a.boundaries_ == b.boundaries_;
  }

 private:
  Word word_;
  std::vector<std::size_t> boundaries_;
};

/// Lowercases, folds combining macrons onto their vowel and strips a trailing
/// CR. Only the folding the inventory needs is performed.
std::string normalize_surface(std::string_view raw);

/// Greedy longest-match tokenization. Throws UnknownGrapheme.
Word tokenize(std::string_view surface,
              const GraphemeInventory& inventory = GraphemeInventory::maori());

/// Short vowels weigh one mora, long vowels two, consonants nothing.
int mora_count(std::span<const GraphemeId> tokens,
               const GraphemeInventory& inventory = GraphemeInventory::maori());
inline int mora_count(const Word& word, const GraphemeInventory& inventory =
                                            GraphemeInventory::maori()) {
  return mora_count(word.tokens(), inventory);
}

std::vector<TokenSeq> segmentation_to_morphs(const Segmentation& seg);

/// "whaka+papa" style rendering.
std::string render_morphs(const Segmentation& seg,
                          const GraphemeInventory& inventory =
                              GraphemeInventory::maori());

/// Splits a token sequence into (C)V syllables. Throws SyllabificationFailure
/// when a consonant is not followed by a vowel.
std::vector<TokenSeq> syllabify(std::span<const GraphemeId> tokens,
                                const GraphemeInventory& inventory =
                                    GraphemeInventory::maori());

/// Decode a UTF-8 string to code points; invalid bytes map to U+FFFD.
std::u32string decode_utf8(std::string_view text);
std::string encode_utf8(std::u32string_view text);

}  // namespace morphlab

#endif  // MORPHLAB_TEXTMODEL_HPP_
