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

#include "morphlab/error.hpp"

#include <iostream>
#include <mutex>
#include <utility>

namespace morphlab {

namespace {

std::mutex& warning_mutex() {
  static std::mutex m;
  return m;
}

WarningHandler& warning_handler() {
  static WarningHandler h = [](const std::string& msg) {
    std::cerr << "warning: " << msg << '\n';
  };
  return h;
}

std::string describe_unknown(const std::string& surface, std::size_t position,
                             std::size_t line) {
  std::string msg;
  if (line > 0) msg += "line " + std::to_string(line) + ": ";
  msg += "unknown grapheme in '" + surface + "' at position " +
         std::to_string(position);
  return msg;
}

}  // namespace

UnknownGrapheme::UnknownGrapheme(std::string surface, std::size_t position,
                                 std::size_t line)
    : ValidationError(describe_unknown(surface, position, line)),
      surface_(std::move(surface)),
      position_(position),
      line_(line) {}

void warn(const std::string& message) {
  std::lock_guard<std::mutex> lock(warning_mutex());
  if (warning_handler()) warning_handler()(message);
}

WarningHandler set_warning_handler(WarningHandler handler) {
  std::lock_guard<std::mutex> lock(warning_mutex());
  return std::exchange(warning_handler(), std::move(handler));
}

}  // namespace morphlab
