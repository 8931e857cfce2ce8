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

#include "slowprov/decide.hpp"

namespace slowprov::modal {

namespace {

// Adds pairs until conditions 3 and 4 hold.
void close_up(const std::vector<WorldSet>& prec, std::vector<WorldSet>& r) {
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t a = 0; a < prec.size(); ++a) {
      WorldSet next = r[a];
      for (std::size_t b = 0; b < prec.size(); ++b) {
        if (has(prec[a], b)) next |= r[b];
        if (has(r[a], b)) next |= prec[b];
      }
      if (next != r[a]) {
        r[a] = next;
        changed = true;
      }
    }
  }
}

// Removes pairs until conditions 3 and 4 hold: a pair is dropped when a
// pair it would force is missing.
void close_down(const std::vector<WorldSet>& prec, std::vector<WorldSet>& r) {
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t a = 0; a < prec.size(); ++a) {
      for (std::size_t b = 0; b < prec.size(); ++b) {
        // a < b and b <R c needs a <R c: drop (b, c).
        if (has(prec[a], b) && (r[b] & ~r[a]) != 0) {
          r[b] &= r[a];
          changed = true;
        }
        // a <R b and b < c needs a <R c: drop (a, b).
        if (has(r[a], b) && (prec[b] & ~r[a]) != 0) {
          r[a] &= ~bit(b);
          changed = true;
        }
      }
    }
  }
}

}  // namespace

KripkeModel random_a_sound_model(const Formula& a, std::size_t max_size, std::mt19937_64& rng) {
  if (max_size == 0 || max_size > kMaxWorlds) throw std::invalid_argument("bad model size");
  const std::size_t n = std::uniform_int_distribution<std::size_t>(1, max_size)(rng);
  std::vector<std::size_t> parent(n, 0);
  for (std::size_t w = 1; w < n; ++w) {
    parent[w] = std::uniform_int_distribution<std::size_t>(0, w - 1)(rng);
  }
  KripkeModel m = KripkeModel::from_parents(parent);

  std::set<std::string> vars = variables(a);
  if (vars.empty()) vars.insert("p");
  for (const std::string& v : vars) {
    m.val[v] = std::uniform_int_distribution<WorldSet>(0, m.all())(rng);
  }

  std::bernoulli_distribution coin(0.3);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (has(m.prec[x], y) && coin(rng)) m.prec_r[x] |= bit(y);
    }
  }
  close_up(m.prec, m.prec_r);

  for (;;) {
    Diagnostic d = check_condition5(m, a);
    if (d.ok()) break;
    // Drop every pair without a witness, then restore closure.
    WorldSet refl = m.all();
    for (const Formula& b : subformulas(a)) {
      const WorldSet tb = truth_set(m, b, Semantics::kGLT);
      WorldSet tri = 0;
      for (std::size_t w = 0; w < n; ++w) {
        if ((m.prec[w] & ~tb) == 0) tri |= bit(w);
      }
      refl &= (m.all() & ~tri) | tb;
    }
    for (std::size_t x = 0; x < n; ++x) {
      WorldSet covered = m.prec_r[x] & refl;
      for (std::size_t c = 0; c < n; ++c) {
        if (has(m.prec_r[x] & refl, c)) covered |= m.prec[c];
      }
      m.prec_r[x] &= covered;
    }
    close_down(m.prec, m.prec_r);
  }
  return m;
}

}  // namespace slowprov::modal
