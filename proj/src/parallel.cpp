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

#include "morphlab/parallel.hpp"

#include <exception>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace morphlab {

void set_thread_count(int threads) {
#ifdef _OPENMP
  if (threads > 0) omp_set_num_threads(threads);
#else
  (void)threads;
#endif
}

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

std::vector<Segmentation> segment_all_serial(const MorphModel& model,
                                             std::span<const Word> words) {
  std::vector<Segmentation> out;
  out.reserve(words.size());
  for (const Word& w : words) out.push_back(model.segment(w));
  return out;
}

std::vector<Segmentation> segment_all_parallel(const MorphModel& model,
                                               std::span<const Word> words) {
  std::vector<Segmentation> out(words.size());
  std::exception_ptr error;
  const long n = static_cast<long>(words.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (long i = 0; i < n; ++i) {
    try {
      out[i] = model.segment(words[i]);
    } catch (...) {
#pragma omp critical(morphlab_segment_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return out;
}

}  // namespace morphlab
