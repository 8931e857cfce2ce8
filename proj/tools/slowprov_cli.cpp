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

// Command-line front end. Talks to the library through the C API only.

#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "slowprov/slowprov.h"

namespace {

using json = nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitParse = 2;
constexpr int kExitBudget = 3;
constexpr int kExitModel = 4;

struct GlobalConfig {
  std::uint64_t bitcap = 0;
  std::uint64_t stepcap = 0;
  std::size_t model_size = 0;
  std::size_t proof_depth = 0;
  std::uint64_t seed = 1;
  bool json = false;
  bool strict = false;
  bool bits = false;
};

// Failure carrying the exit code.
struct CliFailure {
  int code;
  std::string message;
};

int exit_code_for(sp_status s) {
  switch (s) {
    case SP_ERR_PARSE:
      return kExitParse;
    case SP_ERR_MODEL_INVALID:
      return kExitModel;
    case SP_ERR_BUDGET:
    case SP_ERR_UNDECIDED:
      return kExitBudget;
    default:
      return kExitError;
  }
}

void check(sp_status s) {
  if (s == SP_OK) return;
  std::string msg = sp_last_error();
  throw CliFailure{exit_code_for(s), std::string(sp_status_name(s)) + ": " + msg};
}

// Owning wrappers for C handles and strings.
template <typename T, void (*Free)(T*)>
struct Handle {
  T* p = nullptr;
  Handle() = default;
  Handle(const Handle&) = delete;
  Handle& operator=(const Handle&) = delete;
  ~Handle() { Free(p); }
  T** out() { return &p; }
  T* get() const { return p; }
};

using Ord = Handle<sp_ordinal, sp_ordinal_free>;
using Form = Handle<sp_formula, sp_formula_free>;
using Model = Handle<sp_model, sp_model_free>;
using Decision = Handle<sp_decision, sp_decision_free>;
using Slow = Handle<sp_slow, sp_slow_free>;
using Iter = Handle<sp_iter, sp_iter_free>;

std::string take(char* s) {
  std::string out = s == nullptr ? "" : s;
  sp_string_free(s);
  return out;
}

struct FghResult {
  sp_fgh_result r{};
  ~FghResult() { sp_fgh_result_clear(&r); }
};

class Cli {
 public:
  explicit Cli(const GlobalConfig& cfg) : cfg_(cfg) {}

  int emit(const json& record, const std::string& plain, int code = kExitOk) const {
    if (cfg_.json) {
      std::cout << record.dump() << "\n";
    } else {
      std::cout << plain << "\n";
    }
    return code;
  }

  sp_budget budget() const {
    sp_budget b = sp_budget_desk();
    if (cfg_.bitcap != 0) b.max_bit_length = cfg_.bitcap;
    if (cfg_.stepcap != 0) b.max_steps = cfg_.stepcap;
    return b;
  }

  sp_limits limits() const {
    sp_limits l = sp_limits_default();
    if (cfg_.model_size != 0) l.max_model_size = cfg_.model_size;
    if (cfg_.proof_depth != 0) l.max_proof_depth = cfg_.proof_depth;
    return l;
  }

  static void ord(const std::string& text, Ord& out) { check(sp_ordinal_parse(text.c_str(), out.out())); }
  static std::string render(const Ord& a) {
    char* s = nullptr;
    check(sp_ordinal_render(a.get(), &s));
    return take(s);
  }

  // ---- ord ----

  int ord_cmp(const std::string& a_text, const std::string& b_text) const {
    Ord a, b;
    ord(a_text, a);
    ord(b_text, b);
    int c = 0;
    check(sp_ordinal_compare(a.get(), b.get(), &c));
    const std::string v = c < 0 ? "LT" : (c > 0 ? "GT" : "EQ");
    return emit({{"command", "ord cmp"}, {"result", v}}, v);
  }

  int ord_binary(const std::string& name, const std::string& a_text, const std::string& b_text) const {
    Ord a, b, r;
    ord(a_text, a);
    ord(b_text, b);
    check(name == "add" ? sp_ordinal_add(a.get(), b.get(), r.out())
                        : sp_ordinal_mul(a.get(), b.get(), r.out()));
    const std::string v = render(r);
    return emit({{"command", "ord " + name}, {"result", v}}, v);
  }

  int ord_fundseq(const std::string& l_text, const std::string& n) const {
    Ord l, r;
    ord(l_text, l);
    check(sp_ordinal_fundseq(l.get(), n.c_str(), r.out()));
    const std::string v = render(r);
    return emit({{"command", "ord fundseq"}, {"result", v}}, v);
  }

  int ord_stepdown(const std::string& a_text, const std::string& n, const std::string& target_text,
                   std::uint64_t max_steps) const {
    Ord a, t;
    ord(a_text, a);
    ord(target_text, t);
    sp_stepdown_outcome outcome{};
    std::uint64_t steps = 0;
    char* path = nullptr;
    check(sp_ordinal_stepdown(a.get(), n.c_str(), t.get(), max_steps, &outcome, &steps, &path));
    const std::string p = take(path);
    const char* name = outcome == SP_STEPDOWN_REACHED      ? "REACHED"
                       : outcome == SP_STEPDOWN_NOT_ON_PATH ? "NOT_ON_PATH"
                                                            : "BUDGET";
    json rec{{"command", "ord stepdown"}, {"result", name}, {"steps", steps}, {"path", json::array()}};
    std::stringstream ss(p);
    for (std::string item; std::getline(ss, item, ',');) rec["path"].push_back(item);
    const int code = outcome == SP_STEPDOWN_BUDGET && cfg_.strict ? kExitBudget : kExitOk;
    return emit(rec, std::string(name) + " r=" + std::to_string(steps) + ": " + p, code);
  }

  // ---- fgh ----

  int fgh_report(const std::string& command, const sp_fgh_result& r) const {
    json rec{{"command", command}};
    std::string plain;
    int code = kExitOk;
    switch (r.kind) {
      case SP_FGH_VALUE:
      case SP_FGH_LE:
        rec["result"] = r.kind == SP_FGH_VALUE ? "VALUE" : "LE";
        rec["bits"] = r.bit_length;
        if (!cfg_.bits) rec["value"] = r.value;
        plain = cfg_.bits ? "bits=" + std::to_string(r.bit_length) : std::string(r.value);
        if (r.kind == SP_FGH_LE) plain = "LE " + plain;
        break;
      case SP_FGH_GT:
        rec["result"] = "GT";
        plain = "GT";
        break;
      case SP_FGH_BUDGET:
        rec["result"] = "BUDGET";
        rec["limit"] = r.hit_bit_cap != 0 ? "bits" : "steps";
        rec["steps_used"] = r.steps_used;
        rec["largest_bit_length"] = r.largest_bit_length;
        plain = "BUDGET";
        std::cerr << "budget exhausted (" << (r.hit_bit_cap != 0 ? "bit cap" : "step cap")
                  << ", steps=" << r.steps_used << ", largest bits=" << r.largest_bit_length
                  << ")\n";
        if (cfg_.strict) code = kExitBudget;
        break;
    }
    return emit(rec, plain, code);
  }

  int fgh_eval(const std::string& a_text, const std::string& n, bool raw) const {
    Ord a;
    ord(a_text, a);
    const sp_budget b = budget();
    FghResult r;
    const int flags = (raw ? SP_FGH_RAW : 0) | (cfg_.bits ? SP_FGH_OMIT_VALUE : 0);
    check(sp_fgh_eval(a.get(), n.c_str(), &b, flags, &r.r));
    return fgh_report("fgh eval", r.r);
  }

  int fgh_iter(const std::string& a_text, const std::string& i, const std::string& n) const {
    Ord a;
    ord(a_text, a);
    const sp_budget b = budget();
    FghResult r;
    check(sp_fgh_eval_iter(a.get(), i.c_str(), n.c_str(), &b, &r.r));
    return fgh_report("fgh iter", r.r);
  }

  int fgh_cmpto(const std::string& a_text, const std::string& n, const std::string& t) const {
    Ord a;
    ord(a_text, a);
    const sp_budget b = budget();
    FghResult r;
    check(sp_fgh_compare_to(a.get(), n.c_str(), t.c_str(), &b, &r.r));
    return fgh_report("fgh cmpto", r.r);
  }

  int fgh_shift(const std::string& z, const std::string& x) const {
    const sp_budget b = budget();
    FghResult r;
    check(sp_fgh_shifted(z.c_str(), x.c_str(), &b, &r.r));
    return fgh_report("fgh shift", r.r);
  }

  int undecided(const std::string& command, std::uint64_t n, std::uint64_t m) const {
    std::cerr << "membership test for m=" << m << " ran out of budget\n";
    return emit({{"command", command}, {"result", "UNDECIDED"}, {"n", n}, {"m", m}},
                "UNDECIDED m=" + std::to_string(m), cfg_.strict ? kExitBudget : kExitOk);
  }

  int fgh_l(std::uint64_t n) const {
    const sp_budget b = budget();
    Slow s;
    check(sp_slow_new(&b, s.out()));
    std::uint64_t v = 0;
    std::uint64_t m = 0;
    const sp_status st = sp_slow_l(s.get(), n, &v, &m);
    if (st == SP_ERR_UNDECIDED) return undecided("fgh l", n, m);
    check(st);
    return emit({{"command", "fgh l"}, {"result", "VALUE"}, {"value", v}}, std::to_string(v));
  }

  int fgh_r(std::uint64_t n) const {
    const sp_budget b = budget();
    Slow s;
    check(sp_slow_new(&b, s.out()));
    std::uint64_t l = 0;
    std::uint64_t m = 0;
    const sp_status st = sp_slow_l(s.get(), n, &l, &m);
    if (st == SP_ERR_UNDECIDED) return undecided("fgh r", n, m);
    check(st);
    FghResult r;
    check(sp_slow_r(s.get(), n, &r.r));
    return fgh_report("fgh r", r.r);
  }

  // ---- modal ----

  static void formula(const std::string& text, Form& out) {
    check(sp_formula_parse(text.c_str(), out.out()));
  }

  static sp_system system(const std::string& name) {
    sp_system s{};
    check(sp_system_from_name(name.c_str(), &s));
    return s;
  }

  static void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw CliFailure{kExitError, "cannot write " + path};
    out << text << "\n";
  }

  int modal_decide(const std::string& sys, const std::string& text, const std::string& proof_out,
                   const std::string& model_out) const {
    Form f;
    formula(text, f);
    const sp_limits l = limits();
    Decision d;
    check(sp_decide(system(sys), f.get(), &l, d.out()));
    json rec{{"command", "modal decide"}, {"system", sys}};
    switch (sp_decision_verdict(d.get())) {
      case SP_THEOREM: {
        rec["result"] = "THEOREM";
        char* cert = nullptr;
        check(sp_decision_certificate(d.get(), &cert));
        const std::string c = take(cert);
        if (c == "proof") {
          char* proof = nullptr;
          check(sp_decision_proof_json(d.get(), &proof));
          const std::string p = take(proof);
          rec["proof"] = json::parse(p);
          if (!proof_out.empty()) write_file(proof_out, p);
        } else {
          rec["certificate"] = c;
        }
        return emit(rec, "THEOREM");
      }
      case SP_COUNTERMODEL: {
        Model m;
        char* world = nullptr;
        check(sp_decision_countermodel(d.get(), m.out(), &world));
        const std::string w = take(world);
        char* dump = nullptr;
        check(sp_model_dump_json(m.get(), &dump));
        const std::string model = take(dump);
        if (!model_out.empty()) write_file(model_out, model);
        rec["result"] = "COUNTERMODEL";
        rec["world"] = w;
        rec["model"] = json::parse(model);
        return emit(rec, "COUNTERMODEL\nworld=" + w + "\n" + model);
      }
      case SP_INCONCLUSIVE: {
        std::size_t bound = 0;
        char* reason = nullptr;
        check(sp_decision_inconclusive(d.get(), &bound, &reason));
        const std::string why = take(reason);
        std::cerr << why << "\n";
        rec["result"] = "INCONCLUSIVE";
        rec["bound"] = bound;
        rec["reason"] = why;
        return emit(rec, "INCONCLUSIVE bound=" + std::to_string(bound),
                    cfg_.strict ? kExitBudget : kExitOk);
      }
    }
    return kExitError;
  }

  static void load_model(const std::string& path, Model& out) {
    check(sp_model_load_file(path.c_str(), out.out()));
  }

  int modal_eval(const std::string& path, const std::string& world, const std::string& text,
                 const std::string& sem) const {
    Model m;
    load_model(path, m);
    Form f;
    formula(text, f);
    int v = 0;
    check(sp_model_eval(m.get(), world.c_str(), f.get(), system(sem), &v));
    return emit({{"command", "modal eval"}, {"result", v != 0}}, v != 0 ? "true" : "false");
  }

  int modal_checkmodel(const std::string& path, const std::string& text) const {
    Model m;
    load_model(path, m);
    Form f;
    formula(text, f);
    int condition = 0;
    char* message = nullptr;
    check(sp_model_validate(m.get(), f.get(), &condition, &message));
    const std::string msg = take(message);
    if (condition == 0) return emit({{"command", "modal checkmodel"}, {"result", "OK"}}, "OK");
    return emit({{"command", "modal checkmodel"},
                 {"result", "VIOLATION"},
                 {"condition", condition},
                 {"message", msg}},
                "VIOLATION condition=" + std::to_string(condition) + ": " + msg, kExitModel);
  }

  int modal_checkproof(const std::string& path) const {
    std::ifstream in(path);
    if (!in) throw CliFailure{kExitError, "cannot read " + path};
    std::stringstream ss;
    ss << in.rdbuf();
    int ok = 0;
    std::size_t line = 0;
    char* reason = nullptr;
    check(sp_proof_check_json(ss.str().c_str(), &ok, &line, &reason));
    const std::string why = take(reason);
    if (ok != 0) return emit({{"command", "modal checkproof"}, {"result", "OK"}}, "OK");
    return emit({{"command", "modal checkproof"}, {"result", "ERROR"}, {"line", line}, {"reason", why}},
                "ERROR line=" + std::to_string(line) + " " + why, kExitError);
  }

  // ---- iter ----

  static void iter_expr(const std::string& text, Iter& out) {
    check(sp_iter_parse(text.c_str(), out.out()));
  }

  int iter_normalize(const std::string& text, bool absorb, const std::string& strategy) const {
    Iter e, n;
    iter_expr(text, e);
    check(sp_iter_normalize(e.get(), absorb ? 1 : 0, strategy == "outer" ? 1 : 0, n.out()));
    char* s = nullptr;
    check(sp_iter_render(n.get(), &s));
    const std::string v = take(s);
    return emit({{"command", "iter normalize"}, {"result", v}}, v);
  }

  int iter_entails(const std::string& a_text, const std::string& b_text, bool absorb) const {
    Iter a, b;
    iter_expr(a_text, a);
    iter_expr(b_text, b);
    int v = 0;
    check(sp_iter_entails(a.get(), b.get(), absorb ? 1 : 0, &v));
    const std::string r = v != 0 ? "YES" : "UNKNOWN";
    return emit({{"command", "iter entails"}, {"result", r}}, r);
  }

  // ---- dev ----

  int dev_oracle(const std::string& a_text, const std::string& n) const {
    Ord a;
    ord(a_text, a);
    char* v = nullptr;
    check(sp_oracle_F(a.get(), n.c_str(), &v));
    const std::string s = take(v);
    return emit({{"command", "dev oracle"}, {"result", s}}, s);
  }

  int dev_frames(std::size_t size) const {
    std::uint64_t count = 0;
    check(sp_oracle_count_frames(size, &count));
    return emit({{"command", "dev frames"}, {"result", count}}, std::to_string(count));
  }

  int dev_asound(std::size_t size, const std::string& text, std::size_t vars) const {
    Form f;
    formula(text, f);
    std::uint64_t count = 0;
    check(sp_oracle_count_a_sound(size, f.get(), vars, &count));
    return emit({{"command", "dev asound"}, {"result", count}}, std::to_string(count));
  }

  int dev_random(const std::string& text, std::size_t size) const {
    Form f;
    formula(text, f);
    Model m;
    check(sp_random_a_sound_model(f.get(), size, cfg_.seed, m.out()));
    char* dump = nullptr;
    check(sp_model_dump_json(m.get(), &dump));
    const std::string model = take(dump);
    return emit({{"command", "dev random"}, {"model", json::parse(model)}}, model);
  }

 private:
  const GlobalConfig& cfg_;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"slowprov: ordinals, fast-growing functions, provability logics"};
  app.require_subcommand(1);
  app.fallthrough();
  GlobalConfig cfg;

  app.add_option("--bitcap", cfg.bitcap, "cap on the bit length of intermediate values")
      ->envname("SLOWPROV_BITCAP")
      ->check(CLI::PositiveNumber);
  app.add_option("--stepcap", cfg.stepcap, "cap on elementary unfolding steps")
      ->envname("SLOWPROV_STEPCAP")
      ->check(CLI::PositiveNumber);
  app.add_option("--model-size", cfg.model_size, "largest countermodel size searched")
      ->envname("SLOWPROV_MODELSIZE")
      ->check(CLI::PositiveNumber);
  app.add_option("--proof-depth", cfg.proof_depth, "deepest proof search")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "seed for randomized commands");
  app.add_flag("--json", cfg.json, "one JSON record per invocation");
  app.add_flag("--strict", cfg.strict, "exit 3 when a budget or search bound is exhausted");
  app.add_flag("--bits", cfg.bits, "print bit lengths instead of values");

  Cli cli(cfg);
  std::function<int()> action;
  auto bind = [&](CLI::App* sub, std::function<int()> fn) {
    sub->fallthrough();
    sub->callback([&action, fn] { action = fn; });
  };

  // ord
  auto* ord = app.add_subcommand("ord", "ordinal arithmetic below e0");
  ord->require_subcommand(1);
  ord->fallthrough();
  std::string a, b, n, t;
  std::uint64_t max_steps = 1'000'000;
  auto* cmp = ord->add_subcommand("cmp", "compare two ordinals");
  cmp->add_option("A", a)->required();
  cmp->add_option("B", b)->required();
  bind(cmp, [&] { return cli.ord_cmp(a, b); });
  for (const char* name : {"add", "mul"}) {
    auto* sub = ord->add_subcommand(name, std::string(name == std::string("add") ? "sum" : "product"));
    sub->add_option("A", a)->required();
    sub->add_option("B", b)->required();
    const std::string op = name;
    bind(sub, [&, op] { return cli.ord_binary(op, a, b); });
  }
  auto* fund = ord->add_subcommand("fundseq", "fundamental sequence L[N]");
  fund->add_option("L", a)->required();
  fund->add_option("N", n)->required();
  bind(fund, [&] { return cli.ord_fundseq(a, n); });
  auto* step = ord->add_subcommand("stepdown", "follow the N-stepdown path from A");
  step->add_option("A", a)->required();
  step->add_option("N", n)->required();
  t = "0";
  step->add_option("--target", t, "ordinal to reach")->capture_default_str();
  step->add_option("--max-steps", max_steps, "step budget")->capture_default_str()->check(CLI::PositiveNumber);
  bind(step, [&] { return cli.ord_stepdown(a, n, t, max_steps); });

  // fgh
  auto* fgh = app.add_subcommand("fgh", "fast-growing hierarchy");
  fgh->require_subcommand(1);
  fgh->fallthrough();
  bool raw = false;
  std::string i;
  std::uint64_t k = 0;
  auto* eval = fgh->add_subcommand("eval", "F_A(N)");
  eval->add_option("A", a)->required();
  eval->add_option("N", n)->required();
  eval->add_flag("--raw", raw, "unfold F_0 and F_1 step by step");
  bind(eval, [&] { return cli.fgh_eval(a, n, raw); });
  auto* iter_cmd = fgh->add_subcommand("iter", "I-fold composition F_A^I(N)");
  iter_cmd->add_option("A", a)->required();
  iter_cmd->add_option("I", i)->required();
  iter_cmd->add_option("N", n)->required();
  bind(iter_cmd, [&] { return cli.fgh_iter(a, i, n); });
  auto* cmpto = fgh->add_subcommand("cmpto", "compare F_A(N) with T, stopping early");
  cmpto->add_option("A", a)->required();
  cmpto->add_option("N", n)->required();
  cmpto->add_option("T", t)->required();
  bind(cmpto, [&] { return cli.fgh_cmpto(a, n, t); });
  auto* shift = fgh->add_subcommand("shift", "F_e0(X monus Z)");
  shift->add_option("Z", a)->required();
  shift->add_option("X", b)->required();
  bind(shift, [&] { return cli.fgh_shift(a, b); });
  auto* l_cmd = fgh->add_subcommand("l", "the slow function l");
  l_cmd->add_option("N", k)->required();
  bind(l_cmd, [&] { return cli.fgh_l(k); });
  auto* r_cmd = fgh->add_subcommand("r", "the function r");
  r_cmd->add_option("N", k)->required();
  bind(r_cmd, [&] { return cli.fgh_r(k); });

  // modal
  auto* modal = app.add_subcommand("modal", "provability logics GL, GLT, GL2");
  modal->require_subcommand(1);
  modal->fallthrough();
  std::string sys, formula, file, world, sem = "glt", proof_out, model_out;
  auto* decide = modal->add_subcommand("decide", "decide a formula");
  decide->add_option("SYSTEM", sys)->required()->check(CLI::IsMember({"gl", "glt", "gl2"}, CLI::ignore_case));
  decide->add_option("FORMULA", formula)->required();
  decide->add_option("--proof-out", proof_out, "write the proof here");
  decide->add_option("--model-out", model_out, "write the countermodel here");
  bind(decide, [&] { return cli.modal_decide(sys, formula, proof_out, model_out); });
  auto* meval = modal->add_subcommand("eval", "truth of a formula at a world");
  meval->add_option("MODELFILE", file)->required();
  meval->add_option("WORLD", world)->required();
  meval->add_option("FORMULA", formula)->required();
  meval->add_option("--sem", sem, "gl, glt or gl2")
      ->capture_default_str()
      ->check(CLI::IsMember({"gl", "glt", "gl2"}, CLI::ignore_case));
  bind(meval, [&] { return cli.modal_eval(file, world, formula, sem); });
  auto* cm = modal->add_subcommand("checkmodel", "check the A-sound model conditions");
  cm->add_option("MODELFILE", file)->required();
  cm->add_option("FORMULA", formula)->required();
  bind(cm, [&] { return cli.modal_checkmodel(file, formula); });
  auto* cp = modal->add_subcommand("checkproof", "check a Hilbert proof");
  cp->add_option("PROOFFILE", file)->required();
  bind(cp, [&] { return cli.modal_checkproof(file); });

  // iter
  auto* iter = app.add_subcommand("iter", "iterated provability calculus");
  iter->require_subcommand(1);
  iter->fallthrough();
  bool absorb = false;
  std::string strategy = "inner";
  auto* norm = iter->add_subcommand("normalize", "normal form");
  norm->add_option("EXPR", a)->required();
  norm->add_flag("--box-absorbs-s1", absorb, "drop S1 powers directly below B");
  norm->add_option("--strategy", strategy, "inner or outer")
      ->capture_default_str()
      ->check(CLI::IsMember({"inner", "outer"}));
  bind(norm, [&] { return cli.iter_normalize(a, absorb, strategy); });
  auto* ent = iter->add_subcommand("entails", "conservative entailment");
  ent->add_option("E1", a)->required();
  ent->add_option("E2", b)->required();
  ent->add_flag("--box-absorbs-s1", absorb, "drop S1 powers directly below B");
  bind(ent, [&] { return cli.iter_entails(a, b, absorb); });

  // dev
  auto* dev = app.add_subcommand("dev", "reference oracles");
  dev->require_subcommand(1);
  dev->fallthrough();
  std::size_t size = 3;
  std::size_t vars = 1;
  auto* oracle = dev->add_subcommand("oracle", "F_A(N) by direct recursion");
  oracle->add_option("A", a)->required();
  oracle->add_option("N", n)->required();
  bind(oracle, [&] { return cli.dev_oracle(a, n); });
  auto* frames = dev->add_subcommand("frames", "count tree frames of a size");
  frames->add_option("SIZE", size)->required();
  bind(frames, [&] { return cli.dev_frames(size); });
  auto* asound = dev->add_subcommand("asound", "count A-sound models of a size");
  asound->add_option("SIZE", size)->required();
  asound->add_option("FORMULA", formula)->required();
  asound->add_option("--vars", vars, "variable limit")->capture_default_str();
  bind(asound, [&] { return cli.dev_asound(size, formula, vars); });
  auto* random = dev->add_subcommand("random", "random A-sound model");
  random->add_option("FORMULA", formula)->required();
  random->add_option("--size", size, "largest size")->capture_default_str();
  bind(random, [&] { return cli.dev_random(formula, size); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitParse;
  }
  try {
    return action ? action() : kExitError;
  } catch (const CliFailure& f) {
    std::cerr << "error: " << f.message << "\n";
    return f.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
}
