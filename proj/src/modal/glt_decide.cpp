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
#include <unordered_map>

#include "slowprov/decide.hpp"
#include "slowprov/oracles.hpp"

namespace slowprov::modal {

namespace {

// Formula compiled to world-set operations over a fixed frame.
class SetProgram {
 public:
  explicit SetProgram(const Formula& a, const std::vector<std::string>& vars) {
    std::unordered_map<Formula, int, FormulaHash> index;
    for (const Formula& g : subformulas(a)) {
      Node n{g.op()};
      if (g.op() == Op::kVar) {
        auto it = std::find(vars.begin(), vars.end(), g.name());
        n.slot = it == vars.end() ? -1 : static_cast<int>(it - vars.begin());
      } else if (g.is_unary()) {
        n.a = index.at(g.lhs());
      } else if (g.is_binary()) {
        n.a = index.at(g.lhs());
        n.b = index.at(g.rhs());
      }
      index.emplace(g, static_cast<int>(nodes_.size()));
      nodes_.push_back(n);
    }
  }

  std::size_t size() const { return nodes_.size(); }

  // Truth sets of every subformula (GLT semantics); `vals[i]` is the
  // extension of variable i.
  void run(const std::vector<WorldSet>& prec, const std::vector<WorldSet>& prec_r, WorldSet all,
           const std::vector<WorldSet>& vals, std::vector<WorldSet>& out) const {
    out.resize(nodes_.size());
    auto box = [&](const std::vector<WorldSet>& rel, WorldSet s) {
      WorldSet r = 0;
      for (std::size_t w = 0; w < rel.size(); ++w) {
        if ((rel[w] & ~s) == 0) r |= bit(w);
      }
      return r;
    };
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
      const Node& n = nodes_[i];
      WorldSet s = 0;
      switch (n.op) {
        case Op::kBot:
          s = 0;
          break;
        case Op::kTop:
          s = all;
          break;
        case Op::kVar:
          s = n.slot < 0 ? 0 : vals[n.slot];
          break;
        case Op::kNot:
          s = all & ~out[n.a];
          break;
        case Op::kAnd:
          s = out[n.a] & out[n.b];
          break;
        case Op::kOr:
          s = out[n.a] | out[n.b];
          break;
        case Op::kImplies:
          s = (all & ~out[n.a]) | out[n.b];
          break;
        case Op::kIff:
          s = all & ~(out[n.a] ^ out[n.b]);
          break;
        case Op::kBox:
          s = box(prec_r, out[n.a]);
          break;
        case Op::kDiamond:
          s = all & ~box(prec_r, all & ~out[n.a]);
          break;
        case Op::kTriangle:
          s = box(prec, out[n.a]);
          break;
        case Op::kNabla:
          s = all & ~box(prec, all & ~out[n.a]);
          break;
      }
      out[i] = s;
    }
  }

  // Worlds satisfying [.]B -> B for every subformula B.
  static WorldSet reflexive(const std::vector<WorldSet>& prec, WorldSet all,
                            const std::vector<WorldSet>& truth) {
    WorldSet r = all;
    for (WorldSet t : truth) {
      WorldSet tri = 0;
      for (std::size_t w = 0; w < prec.size(); ++w) {
        if ((prec[w] & ~t) == 0) tri |= bit(w);
      }
      r &= (all & ~tri) | t;
    }
    return r;
  }

  static bool condition5(const std::vector<WorldSet>& prec, const std::vector<WorldSet>& prec_r,
                         WorldSet refl) {
    for (std::size_t x = 0; x < prec_r.size(); ++x) {
      const WorldSet witnesses = prec_r[x] & refl;
      WorldSet covered = witnesses;
      for (std::size_t c = 0; c < prec.size(); ++c) {
        if (has(witnesses, c)) covered |= prec[c];
      }
      if ((prec_r[x] & ~covered) != 0) return false;
    }
    return true;
  }

 private:
  struct Node {
    Op op;
    int a = -1;
    int b = -1;
    int slot = -1;
  };
  std::vector<Node> nodes_;
};

bool closed_34(const std::vector<WorldSet>& prec, const std::vector<WorldSet>& r) {
  for (std::size_t a = 0; a < prec.size(); ++a) {
    for (std::size_t b = 0; b < prec.size(); ++b) {
      if (has(prec[a], b) && (r[b] & ~r[a]) != 0) return false;
      if (has(r[a], b) && (prec[b] & ~r[a]) != 0) return false;
    }
  }
  return true;
}

std::vector<WorldSet> unpack_vals(std::uint64_t mask, std::size_t n, std::size_t nvars) {
  std::vector<WorldSet> vals(nvars, 0);
  const WorldSet all = n >= 64 ? ~WorldSet{0} : bit(n) - 1;
  for (std::size_t i = 0; i < nvars; ++i) vals[i] = (mask >> (i * n)) & all;
  return vals;
}

}  // namespace

std::vector<std::vector<WorldSet>> closed_r_relations(const KripkeModel& frame) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a < frame.size(); ++a) {
    for (std::size_t b = 0; b < frame.size(); ++b) {
      if (has(frame.prec[a], b)) pairs.emplace_back(a, b);
    }
  }
  if (pairs.size() > 24) throw std::length_error("frame too large for R-relation enumeration");
  std::vector<std::vector<WorldSet>> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    std::vector<WorldSet> r(frame.size(), 0);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if ((mask >> i) & 1U) r[pairs[i].first] |= bit(pairs[i].second);
    }
    if (closed_34(frame.prec, r)) out.push_back(std::move(r));
  }
  return out;
}

bool for_each_a_sound_extension(const KripkeModel& frame, const Formula& a,
                                const std::vector<std::string>& vars,
                                const std::function<bool(const KripkeModel&)>& fn) {
  const std::size_t n = frame.size();
  if (n * vars.size() > 40) throw std::length_error("too many valuation bits");
  const SetProgram prog(a, vars);
  const WorldSet all = frame.all();
  std::vector<WorldSet> truth;
  for (const auto& r : closed_r_relations(frame)) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n * vars.size())); ++mask) {
      const std::vector<WorldSet> vals = unpack_vals(mask, n, vars.size());
      prog.run(frame.prec, r, all, vals, truth);
      if (!SetProgram::condition5(frame.prec, r, SetProgram::reflexive(frame.prec, all, truth))) {
        continue;
      }
      KripkeModel m = frame;
      m.prec_r = r;
      m.val.clear();
      for (std::size_t i = 0; i < vars.size(); ++i) m.val[vars[i]] = vals[i];
      if (!fn(m)) return false;
    }
  }
  return true;
}

DecisionOutcome glt_decide(const Formula& a, const DecideLimits& limits) {
  const std::set<std::string> vs = variables(a);
  const std::vector<std::string> vars(vs.begin(), vs.end());
  const SetProgram prog(a, vars);
  std::uint64_t work = 0;
  bool capped = false;

  const std::size_t rounds = std::max(limits.max_model_size, limits.max_proof_depth);
  for (std::size_t r = 1; r <= rounds; ++r) {
    if (r <= limits.max_proof_depth) {
      if (auto proof = glt_prove(a, r)) return Theorem{std::move(proof), ""};
    }
    if (r > limits.max_model_size || r > 8 || capped) continue;
    if (r * vars.size() > 40) {
      capped = true;
      continue;
    }
    oracles::FrameIterator frames(r);
    KripkeModel frame;
    std::vector<WorldSet> truth;
    while (!capped && frames.next(frame)) {
      const WorldSet all = frame.all();
      for (const auto& rel : closed_r_relations(frame)) {
        const std::uint64_t nmasks = std::uint64_t{1} << (r * vars.size());
        for (std::uint64_t mask = 0; mask < nmasks; ++mask) {
          work += prog.size();
          if (work > limits.max_work) {
            capped = true;
            break;
          }
          const std::vector<WorldSet> vals = unpack_vals(mask, r, vars.size());
          prog.run(frame.prec, rel, all, vals, truth);
          const WorldSet falsified = all & ~truth.back();
          if (falsified == 0) continue;
          if (!SetProgram::condition5(frame.prec, rel,
                                      SetProgram::reflexive(frame.prec, all, truth))) {
            continue;
          }
          KripkeModel m = frame;
          m.prec_r = rel;
          for (std::size_t i = 0; i < vars.size(); ++i) m.val[vars[i]] = vals[i];
          const auto w = static_cast<std::size_t>(__builtin_ctzll(falsified));
          if (!validate_model(m, a).ok() || has(truth_set(m, a, Semantics::kGLT), w)) {
            throw std::logic_error("internal error: GLT countermodel does not replay");
          }
          return Countermodel{std::move(m), w};
        }
        if (capped) break;
      }
    }
  }
  std::string reason = "no proof up to depth " + std::to_string(limits.max_proof_depth) +
                       " and no A-sound countermodel up to size " +
                       std::to_string(limits.max_model_size);
  if (capped) reason += " (model search stopped at the work cap)";
  return Inconclusive{limits.max_model_size, reason};
}

}  // namespace slowprov::modal
