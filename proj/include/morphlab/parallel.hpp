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

// Data-parallel kernels. Each has a serial reference twin that the tests
// compare against; results never depend on the thread count.

#ifndef MORPHLAB_PARALLEL_HPP_
#define MORPHLAB_PARALLEL_HPP_

#include <span>
#include <vector>

#include "morphlab/segmenter.hpp"

namespace morphlab {

/// Threads used by the parallel kernels; 0 keeps the OpenMP default.
void set_thread_count(int threads);
int max_threads();

std::vector<Segmentation> segment_all_serial(const MorphModel& model,
                                             std::span<const Word> words);
std::vector<Segmentation> segment_all_parallel(const MorphModel& model,
                                               std::span<const Word> words);

}  // namespace morphlab

#endif  // MORPHLAB_PARALLEL_HPP_
