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

#ifndef SLOWPROV_PROOF_HPP_
#define SLOWPROV_PROOF_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "slowprov/formula.hpp"

namespace slowprov::modal {

enum class System { kGL, kGLT, kGL2 };

// Justification tags. AxK_box, AxL_box and Nec_box are the primitive
// rules of GL (Box is its only modality). In GLT and GL2 the only
// necessitation rule is Nec_tri; Nec_box is rejected there.
enum class Rule {
  kTaut,
  kAxKTri,
  kAxLTri,
  kAxKBox,
  kAxLBox,
  kAxT1,
  kAxT2,
  kAxT3,
  kAxT4,
  kAx2,
  kMP,
  kNecTri,
  kNecBox,
};

const char* rule_name(Rule r);
std::optional<Rule> rule_from_name(std::string_view name);
const char* system_name(System s);
std::optional<System> system_from_name(std::string_view name);

struct ProofLine {
  Formula formula;
  Rule rule = Rule::kTaut;
  std::vector<std::size_t> refs;  // 0-based indices of earlier lines
};

struct ProofObject {
  System system = System::kGLT;
  std::vector<ProofLine> lines;
};

struct CheckResult {
  bool ok = true;
  std::size_t line = 0;  // 1-based; 0 when ok
  std::string reason;
};

// Validates every line. Taut lines are truth-tabled with the maximal modal
// subformulas as atoms; axiom lines are matched (after desugaring the
// duals) against the schemata of the declared system; MP(i, j) needs line
// j to be "line i -> this" (either order of refs is accepted).
CheckResult check_proof(const ProofObject& p);

// Propositional tautology test with modal subformulas as atoms.
bool is_tautology(const Formula& f);

// JSON form: {"system":"GLT","lines":[{"formula":"..","rule":"MP","refs":[1,2]}]}
// with 1-based refs. Throws std::invalid_argument on malformed documents.
ProofObject parse_proof_json(std::string_view text);
std::string dump_proof_json(const ProofObject& p, int indent = -1);

}  // namespace slowprov::modal

#endif  // SLOWPROV_PROOF_HPP_
