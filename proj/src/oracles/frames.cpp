// Copyright 2026 The slowprov Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <set>

#include "slowprov/decide.hpp"
#include "slowprov/oracles.hpp"

namespace slowprov::oracles {

FrameIterator::FrameIterator(std::size_t size) : size_(size), parent_(size, 0) {
  if (size == 0 || size > 8) throw std::invalid_argument("frame size must be in 1..8");
}

bool FrameIterator::acyclic() const {
  for (std::size_t w = 1; w < size_; ++w) {
    std::size_t at = w;
    for (std::size_t steps = 0; at != 0; ++steps) {
      if (steps >= size_) return false;
      at = parent_[at];
    }
  }
  return true;
}

bool FrameIterator::next(modal::KripkeModel& out) {
  if (done_) return false;
  for (;;) {
    if (started_) {
      // Odometer increment over parent[1..size-1], last digit fastest.
      std::size_t i = size_;
      for (;;) {
        if (i <= 1) {
          done_ = true;
          return false;
        }
        --i;
        if (++parent_[i] < size_) break;
        parent_[i] = 0;
      }
    }
    started_ = true;
    if (acyclic()) {
      out = modal::KripkeModel::from_parents(parent_);
      return true;
    }
  }
}

std::vector<modal::KripkeModel> enumerate_tree_frames(std::size_t size) {
  std::vector<modal::KripkeModel> out;
  FrameIterator it(size);
  modal::KripkeModel m;
  while (it.next(m)) out.push_back(m);
  return out;
}

std::vector<modal::KripkeModel> enumerate_a_sound_extensions(const modal::KripkeModel& frame,
                                                             const modal::Formula& a,
                                                             std::size_t var_limit) {
  const std::set<std::string> vs = modal::variables(a);
  std::vector<std::string> vars(vs.begin(), vs.end());
  if (vars.size() > var_limit) vars.resize(var_limit);
  std::vector<modal::KripkeModel> out;
  modal::for_each_a_sound_extension(frame, a, vars, [&out](const modal::KripkeModel& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

}  // namespace slowprov::oracles
