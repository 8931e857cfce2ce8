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

// Brute-force reference implementations used to cross-check the main
// modules.

#ifndef SLOWPROV_ORACLES_HPP_
#define SLOWPROV_ORACLES_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "slowprov/formula.hpp"
#include "slowprov/model.hpp"
#include "slowprov/ordinal.hpp"

namespace slowprov::oracles {

class HardCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kOracleBitCap = std::uint64_t{1} << 30;

// F_alpha(n) by plain native recursion on the three defining clauses, with
// the closed forms F_1(x) = 2x+1 and F_2(x) = 2^{x+1}(x+1)-1 as base cases.
// Throws HardCapExceeded as soon as a value would exceed `bit_cap` bits.
Natural oracle_F(const Ordinal& alpha, const Natural& n, std::uint64_t bit_cap = kOracleBitCap);

// Labeled rooted trees on w0..w{size-1} with root w0, in lexicographic order
// of the parent array (parent[1], ..., parent[size-1]). There are
// size^(size-2) of them.
class FrameIterator {
 public:
  explicit FrameIterator(std::size_t size);

  // Writes the next frame and returns true, or returns false when done.
  bool next(modal::KripkeModel& out);
  std::size_t size() const { return size_; }

 private:
  bool acyclic() const;

  std::size_t size_;
  std::vector<std::size_t> parent_;
  bool started_ = false;
  bool done_ = false;
};

// All frames of the given size (size <= 8).
std::vector<modal::KripkeModel> enumerate_tree_frames(std::size_t size);

// All A-sound models over `frame` using the first `var_limit` variables of
// `a` (sorted by name). See modal::for_each_a_sound_extension for order.
std::vector<modal::KripkeModel> enumerate_a_sound_extensions(const modal::KripkeModel& frame,
                                                             const modal::Formula& a,
                                                             std::size_t var_limit);

}  // namespace slowprov::oracles

#endif  // SLOWPROV_ORACLES_HPP_
