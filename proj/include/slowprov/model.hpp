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

#ifndef SLOWPROV_MODEL_HPP_
#define SLOWPROV_MODEL_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "slowprov/formula.hpp"

namespace slowprov::modal {

// World sets are bitmasks, so models have at most 64 worlds.
using WorldSet = std::uint64_t;
inline constexpr std::size_t kMaxWorlds = 64;

inline WorldSet bit(std::size_t w) { return WorldSet{1} << w; }
inline bool has(WorldSet s, std::size_t w) { return (s >> w) & 1U; }

// Finite Kripke model. prec[a] is the set of b with a < b (the full
// transitive relation); prec_r[a] likewise for the R-relation.
struct KripkeModel {
  std::vector<std::string> worlds;
  std::size_t root = 0;
  std::vector<WorldSet> prec;
  std::vector<WorldSet> prec_r;
  std::map<std::string, WorldSet> val;

  std::size_t size() const { return worlds.size(); }
  WorldSet all() const;
  std::optional<std::size_t> index_of(std::string_view name) const;
  // Two-step relation: a <2 b iff a < c < b for some c.
  std::vector<WorldSet> prec2() const;

  // Model on worlds w0..w{n-1} from a parent array (parent[0] is ignored;
  // world 0 is the root). prec_r is empty and the valuation is empty.
  static KripkeModel from_parents(const std::vector<std::size_t>& parent);
};

enum class Semantics { kGL, kGLT, kGL2 };

// First violated condition, or ok. Conditions follow the A-sound model
// definition: 1 tree-like frame, 2 R within <, 3 and 4 composition
// closure, 5 reflexive witnesses.
struct Diagnostic {
  int condition = 0;  // 0 means ok
  std::string message;

  bool ok() const { return condition == 0; }
  static Diagnostic okay() { return {}; }
};

// Conditions 1-4.
Diagnostic validate_frame(const KripkeModel& m);
// Conditions 1-5 relative to `a`.
Diagnostic validate_model(const KripkeModel& m, const Formula& a);
// Condition 5 only; assumes 1-4 hold.
Diagnostic check_condition5(const KripkeModel& m, const Formula& a);

class SemanticsMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Set of worlds where `a` holds. No precondition checks; under GL the
// formula may use Box only, under GL2 prec_r is ignored.
WorldSet truth_set(const KripkeModel& m, const Formula& a, Semantics sem);

// Truth at world `w` after checking the semantic preconditions
// (throws SemanticsMismatch).
bool eval(const KripkeModel& m, std::size_t w, const Formula& a, Semantics sem);

class ModelFileError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// JSON model document:
//   {"worlds":[..], "root":"w0", "prec":[[a,b],..], "precR":[[a,b],..],
//    "val":{"p":[..]}}
// The loader checks structure and conditions 1-4 and throws ModelFileError
// naming the first violation.
KripkeModel load_model_json(std::string_view text);
std::string dump_model_json(const KripkeModel& m, int indent = -1);

}  // namespace slowprov::modal

#endif  // SLOWPROV_MODEL_HPP_
