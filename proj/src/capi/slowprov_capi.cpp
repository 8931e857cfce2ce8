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

#include "slowprov/slowprov.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "slowprov/decide.hpp"
#include "slowprov/fgh.hpp"
#include "slowprov/formula.hpp"
#include "slowprov/itercalc.hpp"
#include "slowprov/model.hpp"
#include "slowprov/oracles.hpp"
#include "slowprov/ordinal.hpp"
#include "slowprov/proof.hpp"

struct sp_ordinal {
  slowprov::Ordinal v;
};
struct sp_formula {
  slowprov::modal::Formula v;
};
struct sp_model {
  slowprov::modal::KripkeModel v;
};
struct sp_decision {
  slowprov::modal::DecisionOutcome v;
};
struct sp_slow {
  slowprov::fgh::SlowFunctions v;
};
struct sp_iter {
  slowprov::iter::IterExpr v;
};

namespace {

using slowprov::Natural;
using slowprov::Ordinal;
namespace fgh = slowprov::fgh;
namespace modal = slowprov::modal;
namespace iter = slowprov::iter;

thread_local std::string g_error;
thread_local long g_error_pos = -1;

sp_status fail(sp_status s, const std::string& msg, long pos = -1) {
  g_error = msg;
  g_error_pos = pos;
  return s;
}

template <typename F>
sp_status guard(F&& body) {
  try {
    body();
    return SP_OK;
  } catch (const slowprov::OrdinalParseError& e) {
    return fail(SP_ERR_PARSE, e.what(), static_cast<long>(e.position()));
  } catch (const modal::FormulaParseError& e) {
    return fail(SP_ERR_PARSE, e.what(), static_cast<long>(e.position()));
  } catch (const iter::IterParseError& e) {
    return fail(SP_ERR_PARSE, e.what(), static_cast<long>(e.position()));
  } catch (const modal::ModelFileError& e) {
    return fail(SP_ERR_MODEL_INVALID, e.what());
  } catch (const modal::SemanticsMismatch& e) {
    return fail(SP_ERR_SEMANTICS, e.what());
  } catch (const fgh::Undecided& e) {
    return fail(SP_ERR_UNDECIDED, e.what());
  } catch (const slowprov::OrdinalError& e) {
    return fail(SP_ERR_DOMAIN, e.what());
  } catch (const slowprov::oracles::HardCapExceeded& e) {
    return fail(SP_ERR_BUDGET, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(SP_ERR_INVALID_ARG, e.what());
  } catch (const std::length_error& e) {
    return fail(SP_ERR_INVALID_ARG, e.what());
  } catch (const std::exception& e) {
    return fail(SP_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(SP_ERR_INTERNAL, "unknown error");
  }
}

#define SP_REQUIRE(cond)                                                \
  do {                                                                  \
    if (!(cond)) return fail(SP_ERR_INVALID_ARG, "null argument: " #cond); \
  } while (0)

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p == nullptr) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

Natural nat(const char* text) {
  if (text == nullptr || *text == '\0') throw std::invalid_argument("expected a natural number");
  for (const char* c = text; *c != '\0'; ++c) {
    if (*c < '0' || *c > '9') {
      throw std::invalid_argument(std::string("not a natural number: ") + text);
    }
  }
  return Natural(text);
}

fgh::EvalBudget budget_of(const sp_budget* b) {
  fgh::EvalBudget out = b == nullptr ? fgh::EvalBudget::desk()
                                     : fgh::EvalBudget{b->max_bit_length, b->max_steps};
  out.validate();
  return out;
}

std::uint64_t bits_of(const Natural& v) {
  return v == 0 ? 0 : static_cast<std::uint64_t>(mpz_sizeinbase(v.get_mpz_t(), 2));
}

void set_value(sp_fgh_result* out, sp_fgh_kind kind, const Natural& v, std::uint64_t steps,
               bool omit = false) {
  out->kind = kind;
  out->value = omit ? nullptr : dup(v.get_str());
  out->bit_length = bits_of(v);
  out->steps_used = steps;
}

void set_exceeded(sp_fgh_result* out, const fgh::Exceeded& e) {
  out->kind = SP_FGH_BUDGET;
  out->steps_used = e.steps_used;
  out->largest_bit_length = e.largest_bit_length;
  out->hit_bit_cap = e.limit == fgh::Exceeded::Limit::kBits ? 1 : 0;
}

void fill(sp_fgh_result* out, const fgh::EvalResult& r, bool omit = false) {
  if (const auto* v = std::get_if<fgh::Value>(&r)) {
    set_value(out, SP_FGH_VALUE, v->v, v->steps_used, omit);
  } else {
    set_exceeded(out, std::get<fgh::Exceeded>(r));
  }
}

void reset(sp_fgh_result* out) { *out = sp_fgh_result{SP_FGH_VALUE, nullptr, 0, 0, 0, 0}; }

modal::System system_of(sp_system s) {
  switch (s) {
    case SP_GL:
      return modal::System::kGL;
    case SP_GLT:
      return modal::System::kGLT;
    case SP_GL2:
      return modal::System::kGL2;
  }
  throw std::invalid_argument("unknown system");
}

modal::Semantics semantics_of(sp_system s) {
  switch (s) {
    case SP_GL:
      return modal::Semantics::kGL;
    case SP_GLT:
      return modal::Semantics::kGLT;
    case SP_GL2:
      return modal::Semantics::kGL2;
  }
  throw std::invalid_argument("unknown semantics");
}

}  // namespace

extern "C" {

SP_API const char* sp_last_error(void) { return g_error.c_str(); }
SP_API long sp_last_error_position(void) { return g_error_pos; }

SP_API const char* sp_status_name(sp_status s) {
  switch (s) {
    case SP_OK:
      return "OK";
    case SP_ERR_PARSE:
      return "PARSE";
    case SP_ERR_INVALID_ARG:
      return "INVALID_ARG";
    case SP_ERR_DOMAIN:
      return "DOMAIN";
    case SP_ERR_BUDGET:
      return "BUDGET";
    case SP_ERR_MODEL_INVALID:
      return "MODEL_INVALID";
    case SP_ERR_SEMANTICS:
      return "SEMANTICS";
    case SP_ERR_UNDECIDED:
      return "UNDECIDED";
    case SP_ERR_INTERNAL:
      return "INTERNAL";
  }
  return "UNKNOWN";
}

SP_API void sp_string_free(char* s) { std::free(s); }
SP_API const char* sp_version(void) { return "0.1.0"; }

// ---- ordinals ------------------------------------------------------------

SP_API sp_status sp_ordinal_parse(const char* text, sp_ordinal** out) {
  SP_REQUIRE(text != nullptr && out != nullptr);
  return guard([&] { *out = new sp_ordinal{slowprov::parse_ordinal(text)}; });
}

SP_API void sp_ordinal_free(sp_ordinal* a) { delete a; }

SP_API sp_status sp_ordinal_render(const sp_ordinal* a, char** out) {
  SP_REQUIRE(a != nullptr && out != nullptr);
  return guard([&] { *out = dup(slowprov::to_string(a->v)); });
}

SP_API sp_status sp_ordinal_compare(const sp_ordinal* a, const sp_ordinal* b, int* out) {
  SP_REQUIRE(a != nullptr && b != nullptr && out != nullptr);
  const auto c = slowprov::compare(a->v, b->v);
  *out = c < 0 ? -1 : (c > 0 ? 1 : 0);
  return SP_OK;
}

SP_API sp_status sp_ordinal_add(const sp_ordinal* a, const sp_ordinal* b, sp_ordinal** out) {
  SP_REQUIRE(a != nullptr && b != nullptr && out != nullptr);
  return guard([&] { *out = new sp_ordinal{slowprov::add(a->v, b->v)}; });
}

SP_API sp_status sp_ordinal_mul(const sp_ordinal* a, const sp_ordinal* b, sp_ordinal** out) {
  SP_REQUIRE(a != nullptr && b != nullptr && out != nullptr);
  return guard([&] { *out = new sp_ordinal{slowprov::mul(a->v, b->v)}; });
}

SP_API sp_status sp_ordinal_fundseq(const sp_ordinal* lambda, const char* n, sp_ordinal** out) {
  SP_REQUIRE(lambda != nullptr && out != nullptr);
  return guard([&] { *out = new sp_ordinal{slowprov::fund_seq(lambda->v, nat(n))}; });
}

SP_API sp_status sp_ordinal_stepdown(const sp_ordinal* a, const char* n, const sp_ordinal* target,
                                     uint64_t max_steps, sp_stepdown_outcome* outcome,
                                     uint64_t* steps, char** path) {
  SP_REQUIRE(a != nullptr && outcome != nullptr && steps != nullptr && path != nullptr);
  return guard([&] {
    const Ordinal t = target == nullptr ? Ordinal::zero() : target->v;
    const slowprov::PathResult r = slowprov::stepdown_path(a->v, nat(n), t, max_steps);
    std::string text;
    for (std::size_t i = 0; i < r.path.size(); ++i) {
      if (i > 0) text += ',';
      text += slowprov::to_string(r.path[i]);
    }
    switch (r.outcome) {
      case slowprov::PathResult::Outcome::kReached:
        *outcome = SP_STEPDOWN_REACHED;
        break;
      case slowprov::PathResult::Outcome::kNotOnPath:
        *outcome = SP_STEPDOWN_NOT_ON_PATH;
        break;
      case slowprov::PathResult::Outcome::kStepBudgetExceeded:
        *outcome = SP_STEPDOWN_BUDGET;
        break;
    }
    *steps = r.steps();
    *path = dup(text);
  });
}

// ---- fast-growing hierarchy ----------------------------------------------

SP_API sp_budget sp_budget_desk(void) {
  const fgh::EvalBudget b = fgh::EvalBudget::desk();
  return sp_budget{b.max_bit_length, b.max_steps};
}

SP_API void sp_fgh_result_clear(sp_fgh_result* r) {
  if (r == nullptr) return;
  std::free(r->value);
  reset(r);
}

SP_API sp_status sp_fgh_eval(const sp_ordinal* alpha, const char* n, const sp_budget* budget,
                             int flags, sp_fgh_result* out) {
  SP_REQUIRE(alpha != nullptr && out != nullptr);
  reset(out);
  return guard([&] {
    const auto mode =
        (flags & SP_FGH_RAW) != 0 ? fgh::Unfolding::kRaw : fgh::Unfolding::kAccelerated;
    fill(out, fgh::eval_F(alpha->v, nat(n), budget_of(budget), mode),
         (flags & SP_FGH_OMIT_VALUE) != 0);
  });
}

SP_API sp_status sp_fgh_eval_iter(const sp_ordinal* alpha, const char* i, const char* n,
                                  const sp_budget* budget, sp_fgh_result* out) {
  SP_REQUIRE(alpha != nullptr && out != nullptr);
  reset(out);
  return guard([&] { fill(out, fgh::eval_F_iter(alpha->v, nat(i), nat(n), budget_of(budget))); });
}

SP_API sp_status sp_fgh_compare_to(const sp_ordinal* alpha, const char* n, const char* threshold,
                                   const sp_budget* budget, sp_fgh_result* out) {
  SP_REQUIRE(alpha != nullptr && out != nullptr);
  reset(out);
  return guard([&] {
    const fgh::ThresholdResult r =
        fgh::compare_F_to(alpha->v, nat(n), nat(threshold), budget_of(budget));
    if (const auto* le = std::get_if<fgh::LessEqual>(&r)) {
      set_value(out, SP_FGH_LE, le->v, 0);
    } else if (std::holds_alternative<fgh::Greater>(r)) {
      out->kind = SP_FGH_GT;
    } else {
      set_exceeded(out, std::get<fgh::Exceeded>(r));
    }
  });
}

SP_API sp_status sp_fgh_shifted(const char* z, const char* x, const sp_budget* budget,
                                sp_fgh_result* out) {
  SP_REQUIRE(out != nullptr);
  reset(out);
  return guard([&] { fill(out, fgh::eval_F_shifted(nat(z), nat(x), budget_of(budget))); });
}

SP_API sp_status sp_slow_new(const sp_budget* budget, sp_slow** out) {
  SP_REQUIRE(out != nullptr);
  return guard([&] { *out = new sp_slow{fgh::SlowFunctions(budget_of(budget))}; });
}

SP_API void sp_slow_free(sp_slow* s) { delete s; }

SP_API sp_status sp_slow_l(sp_slow* s, uint64_t n, uint64_t* out, uint64_t* undecided_m) {
  SP_REQUIRE(s != nullptr && out != nullptr);
  try {
    *out = s->v.l(n);
    return SP_OK;
  } catch (const fgh::Undecided& e) {
    if (undecided_m != nullptr) *undecided_m = e.m();
    return fail(SP_ERR_UNDECIDED, e.what());
  } catch (...) {
    return guard([] { throw; });
  }
}

SP_API sp_status sp_slow_r(sp_slow* s, uint64_t n, sp_fgh_result* out) {
  SP_REQUIRE(s != nullptr && out != nullptr);
  reset(out);
  return guard([&] { fill(out, s->v.r(n)); });
}

// ---- modal logic ---------------------------------------------------------

SP_API sp_status sp_system_from_name(const char* name, sp_system* out) {
  SP_REQUIRE(name != nullptr && out != nullptr);
  std::string s(name);
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (s == "gl") {
    *out = SP_GL;
  } else if (s == "glt") {
    *out = SP_GLT;
  } else if (s == "gl2") {
    *out = SP_GL2;
  } else {
    return fail(SP_ERR_INVALID_ARG, "unknown system: " + std::string(name));
  }
  return SP_OK;
}

SP_API sp_status sp_formula_parse(const char* text, sp_formula** out) {
  SP_REQUIRE(text != nullptr && out != nullptr);
  return guard([&] { *out = new sp_formula{modal::parse_formula(text)}; });
}

SP_API void sp_formula_free(sp_formula* f) { delete f; }

SP_API sp_status sp_formula_render(const sp_formula* f, char** out) {
  SP_REQUIRE(f != nullptr && out != nullptr);
  return guard([&] { *out = dup(modal::render(f->v)); });
}

SP_API sp_status sp_model_load_json(const char* text, sp_model** out) {
  SP_REQUIRE(text != nullptr && out != nullptr);
  return guard([&] { *out = new sp_model{modal::load_model_json(text)}; });
}

SP_API sp_status sp_model_load_file(const char* path, sp_model** out) {
  SP_REQUIRE(path != nullptr && out != nullptr);
  std::ifstream in(path);
  if (!in) return fail(SP_ERR_MODEL_INVALID, std::string("cannot read model file: ") + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return sp_model_load_json(ss.str().c_str(), out);
}

SP_API void sp_model_free(sp_model* m) { delete m; }

SP_API sp_status sp_model_dump_json(const sp_model* m, char** out) {
  SP_REQUIRE(m != nullptr && out != nullptr);
  return guard([&] { *out = dup(modal::dump_model_json(m->v, 2)); });
}

SP_API size_t sp_model_world_count(const sp_model* m) { return m == nullptr ? 0 : m->v.size(); }

SP_API sp_status sp_model_validate(const sp_model* m, const sp_formula* f, int* condition,
                                   char** message) {
  SP_REQUIRE(m != nullptr && f != nullptr && condition != nullptr);
  return guard([&] {
    const modal::Diagnostic d = modal::validate_model(m->v, f->v);
    *condition = d.condition;
    if (message != nullptr) *message = dup(d.ok() ? "ok" : d.message);
  });
}

SP_API sp_status sp_model_eval(const sp_model* m, const char* world, const sp_formula* f,
                               sp_system semantics, int* out) {
  SP_REQUIRE(m != nullptr && world != nullptr && f != nullptr && out != nullptr);
  return guard([&] {
    const auto w = m->v.index_of(world);
    if (!w) throw std::invalid_argument(std::string("unknown world: ") + world);
    *out = modal::eval(m->v, *w, f->v, semantics_of(semantics)) ? 1 : 0;
  });
}

SP_API sp_limits sp_limits_default(void) {
  const modal::DecideLimits d;
  return sp_limits{d.max_model_size, d.max_proof_depth, d.max_work};
}

SP_API sp_status sp_decide(sp_system system, const sp_formula* f, const sp_limits* limits,
                           sp_decision** out) {
  SP_REQUIRE(f != nullptr && out != nullptr);
  return guard([&] {
    modal::DecideLimits l;
    if (limits != nullptr) {
      if (limits->max_model_size == 0 || limits->max_proof_depth == 0 || limits->max_work == 0) {
        throw std::invalid_argument("decision limits must be positive");
      }
      l.max_model_size = limits->max_model_size;
      l.max_proof_depth = limits->max_proof_depth;
      l.max_work = limits->max_work;
    }
    *out = new sp_decision{modal::decide(system_of(system), f->v, l)};
  });
}

SP_API void sp_decision_free(sp_decision* d) { delete d; }

SP_API sp_verdict sp_decision_verdict(const sp_decision* d) {
  if (d == nullptr) return SP_INCONCLUSIVE;
  switch (d->v.index()) {
    case 0:
      return SP_THEOREM;
    case 1:
      return SP_COUNTERMODEL;
    default:
      return SP_INCONCLUSIVE;
  }
}

SP_API sp_status sp_decision_proof_json(const sp_decision* d, char** out) {
  SP_REQUIRE(d != nullptr && out != nullptr);
  const auto* t = std::get_if<modal::Theorem>(&d->v);
  if (t == nullptr || !t->proof) return fail(SP_ERR_INVALID_ARG, "decision carries no proof");
  return guard([&] { *out = dup(modal::dump_proof_json(*t->proof, 2)); });
}

SP_API sp_status sp_decision_certificate(const sp_decision* d, char** out) {
  SP_REQUIRE(d != nullptr && out != nullptr);
  const auto* t = std::get_if<modal::Theorem>(&d->v);
  if (t == nullptr) return fail(SP_ERR_INVALID_ARG, "decision is not a theorem");
  return guard([&] { *out = dup(t->proof ? "proof" : t->certificate); });
}

SP_API sp_status sp_decision_countermodel(const sp_decision* d, sp_model** model, char** world) {
  SP_REQUIRE(d != nullptr && model != nullptr && world != nullptr);
  const auto* c = std::get_if<modal::Countermodel>(&d->v);
  if (c == nullptr) return fail(SP_ERR_INVALID_ARG, "decision is not a countermodel");
  return guard([&] {
    *world = dup(c->model.worlds.at(c->world));
    *model = new sp_model{c->model};
  });
}

SP_API sp_status sp_decision_inconclusive(const sp_decision* d, size_t* bound, char** reason) {
  SP_REQUIRE(d != nullptr && bound != nullptr);
  const auto* i = std::get_if<modal::Inconclusive>(&d->v);
  if (i == nullptr) return fail(SP_ERR_INVALID_ARG, "decision is not inconclusive");
  return guard([&] {
    *bound = static_cast<size_t>(i->bound);
    if (reason != nullptr) *reason = dup(i->reason);
  });
}

SP_API sp_status sp_proof_check_json(const char* text, int* ok, size_t* line, char** reason) {
  SP_REQUIRE(text != nullptr && ok != nullptr && line != nullptr && reason != nullptr);
  modal::ProofObject p;
  try {
    p = modal::parse_proof_json(text);
  } catch (const modal::FormulaParseError& e) {
    return fail(SP_ERR_PARSE, e.what(), static_cast<long>(e.position()));
  } catch (const std::exception& e) {
    return fail(SP_ERR_PARSE, std::string("invalid proof document: ") + e.what());
  }
  return guard([&] {
    const modal::CheckResult r = modal::check_proof(p);
    *ok = r.ok ? 1 : 0;
    *line = r.line;
    *reason = dup(r.reason);
  });
}

// ---- iterated provability ------------------------------------------------

SP_API sp_status sp_iter_parse(const char* text, sp_iter** out) {
  SP_REQUIRE(text != nullptr && out != nullptr);
  return guard([&] { *out = new sp_iter{iter::parse_iter(text)}; });
}

SP_API void sp_iter_free(sp_iter* e) { delete e; }

SP_API sp_status sp_iter_render(const sp_iter* e, char** out) {
  SP_REQUIRE(e != nullptr && out != nullptr);
  return guard([&] { *out = dup(iter::render_iter(e->v)); });
}

SP_API sp_status sp_iter_normalize(const sp_iter* e, int box_absorbs_s1, int strategy,
                                   sp_iter** out) {
  SP_REQUIRE(e != nullptr && out != nullptr);
  if (strategy != 0 && strategy != 1) return fail(SP_ERR_INVALID_ARG, "unknown strategy");
  return guard([&] {
    const iter::NormalizeOptions opts{box_absorbs_s1 != 0};
    *out = new sp_iter{iter::normalize(e->v, opts,
                                       strategy == 0 ? iter::Strategy::kInnermostFirst
                                                     : iter::Strategy::kOutermostFirst)};
  });
}

SP_API sp_status sp_iter_entails(const sp_iter* a, const sp_iter* b, int box_absorbs_s1, int* out) {
  SP_REQUIRE(a != nullptr && b != nullptr && out != nullptr);
  return guard([&] {
    const iter::NormalizeOptions opts{box_absorbs_s1 != 0};
    *out = iter::entails(a->v, b->v, opts) == iter::Entailment::kYes ? 1 : 0;
  });
}

// ---- reference oracles ---------------------------------------------------

SP_API sp_status sp_oracle_F(const sp_ordinal* alpha, const char* n, char** out) {
  SP_REQUIRE(alpha != nullptr && out != nullptr);
  return guard([&] { *out = dup(slowprov::oracles::oracle_F(alpha->v, nat(n)).get_str()); });
}

SP_API sp_status sp_oracle_count_frames(size_t size, uint64_t* out) {
  SP_REQUIRE(out != nullptr);
  return guard([&] {
    if (size == 0 || size > 8) throw std::invalid_argument("frame size must be in 1..8");
    slowprov::oracles::FrameIterator it(size);
    modal::KripkeModel m;
    std::uint64_t count = 0;
    while (it.next(m)) ++count;
    *out = count;
  });
}

SP_API sp_status sp_oracle_count_a_sound(size_t size, const sp_formula* f, size_t var_limit,
                                         uint64_t* out) {
  SP_REQUIRE(f != nullptr && out != nullptr);
  return guard([&] {
    if (size == 0 || size > 8) throw std::invalid_argument("frame size must be in 1..8");
    std::uint64_t count = 0;
    for (const modal::KripkeModel& frame : slowprov::oracles::enumerate_tree_frames(size)) {
      count += slowprov::oracles::enumerate_a_sound_extensions(frame, f->v, var_limit).size();
    }
    *out = count;
  });
}

SP_API sp_status sp_random_a_sound_model(const sp_formula* f, size_t max_size, uint64_t seed,
                                         sp_model** out) {
  SP_REQUIRE(f != nullptr && out != nullptr);
  return guard([&] {
    std::mt19937_64 rng(seed);
    *out = new sp_model{modal::random_a_sound_model(f->v, max_size, rng)};
  });
}

}  // extern "C"
