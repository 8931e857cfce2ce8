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

#ifndef SLOWPROV_DECIDE_HPP_
#define SLOWPROV_DECIDE_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "slowprov/formula.hpp"
#include "slowprov/model.hpp"
#include "slowprov/proof.hpp"

namespace slowprov::modal {

struct Theorem {
  std::optional<ProofObject> proof;  // checked Hilbert derivation, if any
  std::string certificate;           // description of the semantic argument otherwise
};

struct Countermodel {
  KripkeModel model;
  std::size_t world = 0;  // the formula is false here
};

struct Inconclusive {
  std::uint64_t bound = 0;  // model-size bound that was exhausted
  std::string reason;
};

using DecisionOutcome = std::variant<Theorem, Countermodel, Inconclusive>;

struct DecideLimits {
  std::size_t max_model_size = 5;
  std::size_t max_proof_depth = 5;
  // Cap on elementary work units per search (type checks, model checks,
  // prover nodes).
  std::uint64_t max_work = 50'000'000;
  // Largest countermodel that the GL tree unravelling may build.
  std::size_t max_countermodel_worlds = 64;
};

// GL with Box as the modality. Throws SemanticsMismatch if the formula
// uses [.] or <.>. Complete: decides by elimination of Hintikka types over
// the boxed subformulas; Inconclusive only when max_work is exceeded or a
// countermodel would exceed max_countermodel_worlds.
DecisionOutcome gl_decide(const Formula& a, const DecideLimits& limits = {});

// GL2 (Box over two-step reachability, [.] over one step). []A is
// translated to [.][.]A and the result decided as GL for [.]; countermodels
// are replayed under GL2 semantics.
DecisionOutcome gl2_decide(const Formula& a, const DecideLimits& limits = {});

// GLT. Rounds r = 1, 2, ...: bounded proof search of depth min(r, max depth)
// and exhaustive A-sound model search at size r (up to max_model_size).
DecisionOutcome glt_decide(const Formula& a, const DecideLimits& limits = {});

DecisionOutcome decide(System s, const Formula& a, const DecideLimits& limits = {});

// Goal-directed search for a GLT Hilbert proof of `a` with at most
// `depth` nested modal rule applications. Every returned proof passes
// check_proof.
std::optional<ProofObject> glt_prove(const Formula& a, std::size_t depth,
                                     std::uint64_t max_nodes = 200'000);

// Calls `fn` on every model over `frame` (prec taken from it) whose
// prec_r satisfies conditions 2-4, with every valuation of the given
// variables, that satisfies condition 5 for `a`. Order: prec_r subsets by
// bitmask over the (a, b) pairs of prec in row-major order, then valuation
// masks ascending (variable i owns bits i*n .. i*n+n-1). Stops early when
// `fn` returns false; returns false in that case.
bool for_each_a_sound_extension(const KripkeModel& frame, const Formula& a,
                                const std::vector<std::string>& vars,
                                const std::function<bool(const KripkeModel&)>& fn);

// Every prec_r over the frame that satisfies conditions 2-4, ascending.
std::vector<std::vector<WorldSet>> closed_r_relations(const KripkeModel& frame);

// Random A-sound model relative to `a`: random tree of 1..max_size
// worlds, random valuation of the variables of `a` (at least one, "p"
// when `a` has none), random prec_r closed under conditions 3-4, then
// pairs lacking a reflexive witness are pruned (with closure restored)
// until condition 5 holds.
KripkeModel random_a_sound_model(const Formula& a, std::size_t max_size, std::mt19937_64& rng);

}  // namespace slowprov::modal

#endif  // SLOWPROV_DECIDE_HPP_
