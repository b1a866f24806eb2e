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

// Frequency-of-frequency tables and the Simple Good-Turing estimates that
// tests/oracles/sgt_reference.py produces for them.

#ifndef MORPHLAB_TESTS_SGT_CASES_HPP_
#define MORPHLAB_TESTS_SGT_CASES_HPP_

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "morphlab/corpus.hpp"
#include "morphlab/frequency.hpp"

namespace morphlab::sgt {

struct Case {
  const char* name;
  std::map<long, long> freq_of_freq;
  long unseen;
  std::vector<std::pair<long, double>> expected;
  double expected_unseen;
};

// Frozen from tests/oracles/sgt_reference.py.
inline std::vector<Case> cases() {
  std::map<long, long> zipfish;
  for (long r = 1; r <= 20; ++r) zipfish[r] = std::max(1L, 60 / (r * r));
  return {
      {"small", {{1, 3}, {2, 2}, {3, 1}}, 2,
       {{1, 0.070742605562344255}, {2, 0.13967776422451708}, {3, 0.20841665486393299}},
       0.14999999999999999},
      {"prosody",
       {{1, 120}, {2, 40}, {3, 24}, {4, 13}, {5, 15}, {6, 5}, {7, 11}, {8, 2},
        {9, 2}, {10, 1}, {12, 3}, {14, 2}, {15, 1}, {16, 1}, {17, 3}, {19, 1},
        {20, 3}, {21, 2}, {23, 3}, {24, 3}, {25, 3}, {26, 2}, {27, 2}, {28, 1},
        {31, 2}, {32, 2}, {33, 1}, {34, 2}, {36, 2}, {41, 3}, {43, 1}, {45, 3},
        {46, 1}, {47, 1}, {50, 1}, {71, 1}, {84, 1}, {101, 1}, {105, 1}, {121, 1},
        {124, 1}, {146, 1}, {162, 1}, {193, 1}, {199, 1}, {224, 1}, {226, 1},
        {254, 1}, {257, 1}, {339, 1}, {421, 1}, {456, 1}, {481, 1}, {483, 1},
        {1140, 1}, {1256, 1}, {1322, 1}, {1530, 1}, {2131, 1}, {2395, 1},
        {6925, 1}, {7846, 1}},
       50,
       {{1, 2.468474125117172e-05}, {2, 5.5221274647292998e-05},
        {3, 8.6719173600823476e-05}, {4, 0.00011856800528718323},
        {5, 0.00015058462833122396}, {6, 0.00018269457960756893},
        {7, 0.00021486181093836217}, {8, 0.00024706673184407096},
        {9, 0.00027929777516933819}, {10, 0.00031154766955937205},
        {12, 0.00037608631077636371}, {14, 0.0004406592327428193},
        {15, 0.0004729544766678451}, {16, 0.00050525418053383073},
        {17, 0.00053755759207718755}, {19, 0.00060217328962278627},
        {20, 0.0006344847217979885}, {21, 0.00066679810433153963},
        {23, 0.00073142973663196421}, {24, 0.000763747593707746},
        {25, 0.00079606660036645447}, {26, 0.00082838662787483521},
        {27, 0.00086070756603016387}, {28, 0.00089302931994167617},
        {31, 0.00098999870640653479}, {32, 0.001022323000490617},
        {33, 0.0010546477909955424}, {34, 0.0010869730351159524},
        {36, 0.0011516247362516514}, {41, 0.0013132597099410944},
        {43, 0.0013779155174666804}, {45, 0.0014425721596966995},
        {46, 0.001474900760379017}, {47, 0.0015072295318407118},
        {50, 0.00160421677003426}, {71, 0.0022831527263585164},
        {84, 0.0027034589141850421}, {101, 0.0032530972801729191},
        {105, 0.0033824247589868536}, {121, 0.003899736807866113},
        {124, 0.0039967331270382798}, {146, 0.0047080416234606889},
        {162, 0.0052253586765531861}, {193, 0.0062276632183242116},
        {199, 0.0064216579537809083}, {224, 0.0072299701302320409},
        {226, 0.0072946351507120191}, {254, 0.0081999460029666751},
        {257, 0.008296943648877517}, {339, 0.010948215368236688},
        {421, 0.01359949027074756}, {456, 0.014731132544454337},
        {481, 0.015539448595563655}, {483, 0.015604113884087894},
        {1140, 0.036846675404433933}, {1256, 0.040597265783654024},
        {1322, 0.042731222434119413}, {1530, 0.049456419346593422},
        {2131, 0.068888359487410997}, {2395, 0.077424187026014432},
        {6925, 0.22389123311466461}, {7846, 0.25366963288845695}},
       7.7664876059801953e-05},
      {"gapped", {{1, 5}, {2, 3}, {5, 1}, {10, 1}}, 4,
       {{1, 0.025621130761781054}, {2, 0.058731177574399045},
        {5, 0.16321465710050129}, {10, 0.34017846405970403}},
       0.04807692307692308},
      {"zipfish", zipfish, 10,
       {{1, 0.001421959258431648}, {2, 0.0051705740219766426},
        {3, 0.0079736778809634864}, {4, 0.010794150317848007},
        {5, 0.013622833452298382}, {6, 0.016456052419190084},
        {7, 0.019292042486097026}, {8, 0.022129849873697},
        {9, 0.024968913683683185}, {10, 0.02780888240388844},
        {11, 0.030649524507242187}, {12, 0.033490681266830372},
        {13, 0.036332240220199027}, {14, 0.039174119454411474},
        {15, 0.042016257890498378}, {16, 0.044858609054591513},
        {17, 0.047701136958061365}, {18, 0.050543813297948978},
        {19, 0.053386615509024904}, {20, 0.056229525379781237}},
       0.018461538461538463},
      {"closed", {{1, 4}, {2, 2}, {3, 2}, {4, 1}}, 0,
       {{1, 0.057495475597950096}, {2, 0.11128971039754718},
        {3, 0.1647134076845774}, {4, 0.21801186144395032}},
       0.0},
  };
}

struct Built {
  CountTable table;
  Lexicon dictionary;
  std::map<std::string, long> count_of;
};

inline Built build(const Case& c) {
  Built b;
  std::vector<std::pair<std::string, long>> pairs;
  for (const auto& [r, n] : c.freq_of_freq) {
    for (long i = 0; i < n; ++i) {
      std::string w = "w" + std::to_string(r) + "_" + std::to_string(i);
      pairs.emplace_back(w, r);
      b.count_of[w] = r;
      b.dictionary.words.emplace_back(w, TokenSeq{});
    }
  }
  for (long i = 0; i < c.unseen; ++i) {
    b.dictionary.words.emplace_back("unseen" + std::to_string(i), TokenSeq{});
  }
  b.table = CountTable::from_pairs(std::move(pairs));
  return b;
}

}  // namespace morphlab::sgt

#endif  // MORPHLAB_TESTS_SGT_CASES_HPP_
