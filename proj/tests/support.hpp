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

// Small helpers shared by the unit tests.

#ifndef MORPHLAB_TESTS_SUPPORT_HPP_
#define MORPHLAB_TESTS_SUPPORT_HPP_

#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "morphlab/corpus.hpp"
#include "morphlab/error.hpp"
#include "morphlab/rng.hpp"
#include "morphlab/textmodel.hpp"

namespace morphlab {

// Collects warnings for its lifetime instead of printing them.
class WarningCapture {
 public:
  WarningCapture()
      : previous_(set_warning_handler(
            [this](const std::string& m) { messages_.push_back(m); })) {}
  ~WarningCapture() { set_warning_handler(previous_); }
  WarningCapture(const WarningCapture&) = delete;
  WarningCapture& operator=(const WarningCapture&) = delete;

  std::size_t count() const { return messages_.size(); }
  const std::vector<std::string>& messages() const { return messages_; }

 private:
  std::vector<std::string> messages_;
  WarningHandler previous_;
};

inline std::vector<GoldEntry> gold_from_lines(std::initializer_list<std::string> lines) {
  std::string text;
  for (const auto& l : lines) text += l + "\n";
  std::istringstream in(text);
  return parse_segmentations(in);
}

inline Segmentation seg(const std::string& surface,
                        std::vector<std::size_t> boundaries) {
  return Segmentation(tokenize(surface), std::move(boundaries));
}

inline Lexicon lexicon_of(std::initializer_list<std::string> words) {
  Lexicon lex;
  for (const auto& w : words) lex.words.push_back(tokenize(w));
  return lex;
}

}  // namespace morphlab

#endif  // MORPHLAB_TESTS_SUPPORT_HPP_
