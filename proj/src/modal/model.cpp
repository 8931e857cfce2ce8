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

#include <unordered_map>

#include "slowprov/model.hpp"

namespace slowprov::modal {

WorldSet KripkeModel::all() const {
  return size() >= 64 ? ~WorldSet{0} : bit(size()) - 1;
}

std::optional<std::size_t> KripkeModel::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < worlds.size(); ++i) {
    if (worlds[i] == name) return i;
  }
  return std::nullopt;
}

std::vector<WorldSet> KripkeModel::prec2() const {
  std::vector<WorldSet> out(size(), 0);
  for (std::size_t a = 0; a < size(); ++a) {
    for (std::size_t c = 0; c < size(); ++c) {
      if (has(prec[a], c)) out[a] |= prec[c];
    }
  }
  return out;
}

KripkeModel KripkeModel::from_parents(const std::vector<std::size_t>& parent) {
  KripkeModel m;
  const std::size_t n = parent.size();
  m.worlds.reserve(n);
  for (std::size_t i = 0; i < n; ++i) m.worlds.push_back("w" + std::to_string(i));
  m.prec.assign(n, 0);
  m.prec_r.assign(n, 0);
  for (std::size_t b = 1; b < n; ++b) {
    for (std::size_t a = parent[b], guard = 0; guard < n; a = parent[a], ++guard) {
      m.prec[a] |= bit(b);
      if (a == 0) break;
    }
  }
  return m;
}

namespace {

std::string pair_text(const KripkeModel& m, std::size_t a, std::size_t b) {
  return "(" + m.worlds[a] + ", " + m.worlds[b] + ")";
}

WorldSet box_of(const std::vector<WorldSet>& rel, WorldSet s) {
  WorldSet out = 0;
  for (std::size_t a = 0; a < rel.size(); ++a) {
    if ((rel[a] & ~s) == 0) out |= bit(a);
  }
  return out;
}

}  // namespace

Diagnostic validate_frame(const KripkeModel& m) {
  const std::size_t n = m.size();
  auto fail = [](int c, std::string msg) { return Diagnostic{c, std::move(msg)}; };
  if (n == 0) return fail(1, "no worlds");
  if (n > kMaxWorlds) return fail(1, "more than 64 worlds");
  if (m.root >= n) return fail(1, "root is not a world");
  if (m.prec.size() != n || m.prec_r.size() != n) return fail(1, "relation size mismatch");
  const WorldSet all = m.all();

  for (std::size_t a = 0; a < n; ++a) {
    if ((m.prec[a] & ~all) != 0) return fail(1, "relation mentions unknown world");
    if (has(m.prec[a], a)) return fail(1, "prec is not irreflexive at " + m.worlds[a]);
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (has(m.prec[a], b) && (m.prec[b] & ~m.prec[a]) != 0) {
        return fail(1, "prec is not transitive at " + pair_text(m, a, b));
      }
    }
  }
  if (m.prec[m.root] != (all & ~bit(m.root))) {
    return fail(1, "root does not reach every other world");
  }
  for (std::size_t b = 0; b < n; ++b) {
    WorldSet preds = 0;
    for (std::size_t a = 0; a < n; ++a) {
      if (has(m.prec[a], b)) preds |= bit(a);
    }
    if (b == m.root) {
      if (preds != 0) return fail(1, "root has a predecessor");
      continue;
    }
    int immediate = 0;
    for (std::size_t a = 0; a < n; ++a) {
      if (has(preds, a) && (m.prec[a] & preds) == 0) ++immediate;
    }
    if (immediate != 1) {
      return fail(1, m.worlds[b] + " does not have a unique immediate predecessor");
    }
  }

  for (std::size_t a = 0; a < n; ++a) {
    if ((m.prec_r[a] & ~m.prec[a]) != 0) {
      for (std::size_t b = 0; b < n; ++b) {
        if (has(m.prec_r[a], b) && !has(m.prec[a], b)) {
          return fail(2, "precR pair " + pair_text(m, a, b) + " is not in prec");
        }
      }
    }
  }
  // 3: a < b <R c implies a <R c.
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (!has(m.prec[a], b)) continue;
      const WorldSet missing = m.prec_r[b] & ~m.prec_r[a];
      if (missing != 0) {
        const auto c = static_cast<std::size_t>(__builtin_ctzll(missing));
        return fail(3, m.worlds[a] + " < " + m.worlds[b] + " <R " + m.worlds[c] + " but not " +
                           m.worlds[a] + " <R " + m.worlds[c]);
      }
    }
  }
  // 4: a <R b < c implies a <R c.
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (!has(m.prec_r[a], b)) continue;
      const WorldSet missing = m.prec[b] & ~m.prec_r[a];
      if (missing != 0) {
        const auto c = static_cast<std::size_t>(__builtin_ctzll(missing));
        return fail(4, m.worlds[a] + " <R " + m.worlds[b] + " < " + m.worlds[c] + " but not " +
                           m.worlds[a] + " <R " + m.worlds[c]);
      }
    }
  }
  return Diagnostic::okay();
}

WorldSet truth_set(const KripkeModel& m, const Formula& a, Semantics sem) {
  const WorldSet all = m.all();
  std::vector<WorldSet> two;
  if (sem == Semantics::kGL2) two = m.prec2();
  const std::vector<WorldSet>& box_rel =
      sem == Semantics::kGL ? m.prec : (sem == Semantics::kGLT ? m.prec_r : two);

  std::unordered_map<Formula, WorldSet, FormulaHash> memo;
  for (const Formula& g : subformulas(a)) {
    WorldSet s = 0;
    switch (g.op()) {
      case Op::kBot:
        s = 0;
        break;
      case Op::kTop:
        s = all;
        break;
      case Op::kVar: {
        auto it = m.val.find(g.name());
        s = it == m.val.end() ? 0 : (it->second & all);
        break;
      }
      case Op::kNot:
        s = all & ~memo[g.lhs()];
        break;
      case Op::kAnd:
        s = memo[g.lhs()] & memo[g.rhs()];
        break;
      case Op::kOr:
        s = memo[g.lhs()] | memo[g.rhs()];
        break;
      case Op::kImplies:
        s = (all & ~memo[g.lhs()]) | memo[g.rhs()];
        break;
      case Op::kIff:
        s = all & ~(memo[g.lhs()] ^ memo[g.rhs()]);
        break;
      case Op::kBox:
        s = box_of(box_rel, memo[g.lhs()]);
        break;
      case Op::kDiamond:
        s = all & ~box_of(box_rel, all & ~memo[g.lhs()]);
        break;
      case Op::kTriangle:
        s = box_of(m.prec, memo[g.lhs()]);
        break;
      case Op::kNabla:
        s = all & ~box_of(m.prec, all & ~memo[g.lhs()]);
        break;
    }
    memo[g] = s;
  }
  return memo[a];
}

Diagnostic check_condition5(const KripkeModel& m, const Formula& a) {
  const std::size_t n = m.size();
  WorldSet reflexive = m.all();
  for (const Formula& b : subformulas(a)) {
    const WorldSet tb = truth_set(m, b, Semantics::kGLT);
    const WorldSet tri_b = box_of(m.prec, tb);
    reflexive &= (m.all() & ~tri_b) | tb;
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (!has(m.prec_r[x], y)) continue;
      bool found = false;
      for (std::size_t c = 0; c < n && !found; ++c) {
        found = has(m.prec_r[x], c) && has(reflexive, c) && (c == y || has(m.prec[c], y));
      }
      if (!found) {
        return Diagnostic{5, "no reflexive witness for precR pair " + pair_text(m, x, y)};
      }
    }
  }
  return Diagnostic::okay();
}

Diagnostic validate_model(const KripkeModel& m, const Formula& a) {
  Diagnostic d = validate_frame(m);
  if (!d.ok()) return d;
  return check_condition5(m, a);
}

bool eval(const KripkeModel& m, std::size_t w, const Formula& a, Semantics sem) {
  if (w >= m.size()) throw std::out_of_range("world index out of range");
  switch (sem) {
    case Semantics::kGL: {
      if (contains_op(a, Op::kTriangle) || contains_op(a, Op::kNabla)) {
        throw SemanticsMismatch("GL semantics takes formulas with [] and <> only");
      }
      Diagnostic d = validate_frame(m);
      if (d.condition == 1) throw SemanticsMismatch("not a tree-like frame: " + d.message);
      break;
    }
    case Semantics::kGLT: {
      Diagnostic d = validate_model(m, a);
      if (!d.ok()) {
        throw SemanticsMismatch("not an A-sound model (condition " + std::to_string(d.condition) +
                                "): " + d.message);
      }
      break;
    }
    case Semantics::kGL2: {
      Diagnostic d = validate_frame(m);
      if (d.condition == 1) throw SemanticsMismatch("not a tree-like frame: " + d.message);
      break;
    }
  }
  return has(truth_set(m, a, sem), w);
}

}  // namespace slowprov::modal
