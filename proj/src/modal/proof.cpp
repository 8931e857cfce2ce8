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

#include <array>
#include <map>
#include <unordered_map>

#include "json.hpp"
#include "slowprov/proof.hpp"

namespace slowprov::modal {

namespace {

struct RuleInfo {
  Rule rule;
  const char* name;
};

constexpr std::array<RuleInfo, 13> kRules{{
    {Rule::kTaut, "Taut"},
    {Rule::kAxKTri, "AxK_tri"},
    {Rule::kAxLTri, "AxL_tri"},
    {Rule::kAxKBox, "AxK_box"},
    {Rule::kAxLBox, "AxL_box"},
    {Rule::kAxT1, "AxT1"},
    {Rule::kAxT2, "AxT2"},
    {Rule::kAxT3, "AxT3"},
    {Rule::kAxT4, "AxT4"},
    {Rule::kAx2, "Ax2"},
    {Rule::kMP, "MP"},
    {Rule::kNecTri, "Nec_tri"},
    {Rule::kNecBox, "Nec_box"},
}};

const char* schema_text(Rule r) {
  switch (r) {
    case Rule::kAxKTri:
      return "[.](A -> B) -> [.]A -> [.]B";
    case Rule::kAxLTri:
      return "[.]([.]A -> A) -> [.]A";
    case Rule::kAxKBox:
      return "[](A -> B) -> []A -> []B";
    case Rule::kAxLBox:
      return "[]([]A -> A) -> []A";
    case Rule::kAxT1:
      return "[.]A -> []A";
    case Rule::kAxT2:
      return "[]A -> [.][]A";
    case Rule::kAxT3:
      return "[]A -> [][.]A";
    case Rule::kAxT4:
      return "[][.]A -> []A";
    case Rule::kAx2:
      return "[]A <-> [.][.]A";
    default:
      return nullptr;
  }
}

const Formula& schema(Rule r) {
  static const auto* table = [] {
    auto* t = new std::map<Rule, Formula>();
    for (const RuleInfo& info : kRules) {
      if (const char* s = schema_text(info.rule)) (*t)[info.rule] = parse_formula(s);
    }
    return t;
  }();
  return table->at(r);
}

bool match(const Formula& pattern, const Formula& f, std::map<std::string, Formula>& binding) {
  if (pattern.op() == Op::kVar) {
    auto [it, inserted] = binding.emplace(pattern.name(), f);
    return inserted || it->second == f;
  }
  if (pattern.op() != f.op()) return false;
  if (pattern.is_unary()) return match(pattern.lhs(), f.lhs(), binding);
  if (pattern.is_binary()) {
    return match(pattern.lhs(), f.lhs(), binding) && match(pattern.rhs(), f.rhs(), binding);
  }
  return true;
}

bool in_system(System s, Rule r) {
  switch (r) {
    case Rule::kTaut:
    case Rule::kMP:
    case Rule::kAxKBox:
      return true;
    case Rule::kAxLBox:
    case Rule::kNecBox:
      return s == System::kGL;
    case Rule::kAxKTri:
    case Rule::kAxLTri:
    case Rule::kNecTri:
      return s != System::kGL;
    case Rule::kAxT1:
    case Rule::kAxT2:
    case Rule::kAxT3:
    case Rule::kAxT4:
      return s == System::kGLT;
    case Rule::kAx2:
      return s == System::kGL2;
  }
  return false;
}

void collect_atoms(const Formula& f, std::vector<Formula>& atoms,
                   std::unordered_map<Formula, std::size_t, FormulaHash>& index) {
  if (f.op() == Op::kVar || f.is_modal()) {
    if (index.emplace(f, atoms.size()).second) atoms.push_back(f);
    return;
  }
  if (f.is_unary()) collect_atoms(f.lhs(), atoms, index);
  if (f.is_binary()) {
    collect_atoms(f.lhs(), atoms, index);
    collect_atoms(f.rhs(), atoms, index);
  }
}

// Evaluates the boolean skeleton over 64 assignments at once.
std::uint64_t eval_block(const Formula& f,
                         const std::unordered_map<Formula, std::size_t, FormulaHash>& index,
                         const std::vector<std::uint64_t>& atom_bits) {
  switch (f.op()) {
    case Op::kBot:
      return 0;
    case Op::kTop:
      return ~std::uint64_t{0};
    case Op::kNot:
      return ~eval_block(f.lhs(), index, atom_bits);
    case Op::kAnd:
      return eval_block(f.lhs(), index, atom_bits) & eval_block(f.rhs(), index, atom_bits);
    case Op::kOr:
      return eval_block(f.lhs(), index, atom_bits) | eval_block(f.rhs(), index, atom_bits);
    case Op::kImplies:
      return ~eval_block(f.lhs(), index, atom_bits) | eval_block(f.rhs(), index, atom_bits);
    case Op::kIff:
      return ~(eval_block(f.lhs(), index, atom_bits) ^ eval_block(f.rhs(), index, atom_bits));
    default:
      return atom_bits[index.at(f)];
  }
}

constexpr std::size_t kMaxTautAtoms = 26;

}  // namespace

const char* rule_name(Rule r) {
  for (const RuleInfo& info : kRules) {
    if (info.rule == r) return info.name;
  }
  return "?";
}

std::optional<Rule> rule_from_name(std::string_view name) {
  for (const RuleInfo& info : kRules) {
    if (name == info.name) return info.rule;
  }
  return std::nullopt;
}

const char* system_name(System s) {
  switch (s) {
    case System::kGL:
      return "GL";
    case System::kGLT:
      return "GLT";
    case System::kGL2:
      return "GL2";
  }
  return "?";
}

std::optional<System> system_from_name(std::string_view name) {
  if (name == "GL" || name == "gl") return System::kGL;
  if (name == "GLT" || name == "glt") return System::kGLT;
  if (name == "GL2" || name == "gl2") return System::kGL2;
  return std::nullopt;
}

bool is_tautology(const Formula& input) {
  const Formula f = desugar(input);
  std::vector<Formula> atoms;
  std::unordered_map<Formula, std::size_t, FormulaHash> index;
  collect_atoms(f, atoms, index);
  const std::size_t k = atoms.size();
  if (k > kMaxTautAtoms) throw std::length_error("too many atoms for a truth table");

  static constexpr std::array<std::uint64_t, 6> kPatterns{
      0xAAAAAAAAAAAAAAAAULL, 0xCCCCCCCCCCCCCCCCULL, 0xF0F0F0F0F0F0F0F0ULL,
      0xFF00FF00FF00FF00ULL, 0xFFFF0000FFFF0000ULL, 0xFFFFFFFF00000000ULL};
  const std::uint64_t blocks = k <= 6 ? 1 : (std::uint64_t{1} << (k - 6));
  std::uint64_t used = k >= 6 ? ~std::uint64_t{0} : ((std::uint64_t{1} << (std::uint64_t{1} << k)) - 1);
  std::vector<std::uint64_t> bits(k);
  for (std::uint64_t b = 0; b < blocks; ++b) {
    for (std::size_t i = 0; i < k; ++i) {
      bits[i] = i < 6 ? kPatterns[i] : (((b >> (i - 6)) & 1U) ? ~std::uint64_t{0} : 0);
    }
    if ((~eval_block(f, index, bits) & used) != 0) return false;
  }
  return true;
}

CheckResult check_proof(const ProofObject& p) {
  std::vector<Formula> desugared;
  desugared.reserve(p.lines.size());
  for (std::size_t i = 0; i < p.lines.size(); ++i) {
    const ProofLine& line = p.lines[i];
    auto error = [i](std::string reason) { return CheckResult{false, i + 1, std::move(reason)}; };
    if (line.formula.is_null()) return error("missing formula");
    const Formula f = desugar(line.formula);
    desugared.push_back(f);

    if (p.system == System::kGL &&
        (contains_op(f, Op::kTriangle) || contains_op(f, Op::kNabla))) {
      return error("[.] is not in the language of GL");
    }
    if (line.rule == Rule::kNecBox && p.system != System::kGL) {
      return error("rule not primitive: Nec_box (derive it from Nec_tri and AxT1)");
    }
    if (!in_system(p.system, line.rule)) {
      return error(std::string("rule ") + rule_name(line.rule) + " is not available in " +
                   system_name(p.system));
    }

    const std::size_t want_refs =
        line.rule == Rule::kMP ? 2 : (line.rule == Rule::kNecTri || line.rule == Rule::kNecBox);
    if (line.refs.size() != want_refs) {
      return error(std::string(rule_name(line.rule)) + " expects " + std::to_string(want_refs) +
                   " reference(s)");
    }
    for (std::size_t r : line.refs) {
      if (r >= i) return error("reference to line " + std::to_string(r + 1) + " is not earlier");
    }

    switch (line.rule) {
      case Rule::kTaut: {
        bool taut = false;
        try {
          taut = is_tautology(f);
        } catch (const std::length_error&) {
          return error("too many atoms to truth-table");
        }
        if (!taut) return error("not a tautology");
        break;
      }
      case Rule::kMP: {
        const Formula& a = desugared[line.refs[0]];
        const Formula& b = desugared[line.refs[1]];
        const bool fwd = b.op() == Op::kImplies && b.lhs() == a && b.rhs() == f;
        const bool rev = a.op() == Op::kImplies && a.lhs() == b && a.rhs() == f;
        if (!fwd && !rev) return error("MP mismatch");
        break;
      }
      case Rule::kNecTri:
        if (!(f == Formula::tri(desugared[line.refs[0]]))) return error("Nec_tri mismatch");
        break;
      case Rule::kNecBox:
        if (!(f == Formula::box(desugared[line.refs[0]]))) return error("Nec_box mismatch");
        break;
      default: {
        std::map<std::string, Formula> binding;
        if (!match(schema(line.rule), f, binding)) {
          return error(std::string("not an instance of ") + rule_name(line.rule));
        }
      }
    }
  }
  return CheckResult{};
}

ProofObject parse_proof_json(std::string_view text) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("proof is not JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("lines") || !doc["lines"].is_array()) {
    throw std::invalid_argument("proof must be an object with a 'lines' list");
  }
  ProofObject p;
  const std::string sys = doc.value("system", std::string("GLT"));
  auto s = system_from_name(sys);
  if (!s) throw std::invalid_argument("unknown system '" + sys + "'");
  p.system = *s;
  std::size_t n = 0;
  for (const json& l : doc["lines"]) {
    ++n;
    const std::string where = "line " + std::to_string(n) + ": ";
    if (!l.is_object() || !l.contains("formula") || !l.contains("rule")) {
      throw std::invalid_argument(where + "needs 'formula' and 'rule'");
    }
    ProofLine line;
    try {
      line.formula = parse_formula(l["formula"].get<std::string>());
    } catch (const FormulaParseError& e) {
      throw std::invalid_argument(where + e.what());
    }
    auto r = rule_from_name(l["rule"].get<std::string>());
    if (!r) throw std::invalid_argument(where + "unknown rule '" + l["rule"].get<std::string>() + "'");
    line.rule = *r;
    if (l.contains("refs")) {
      for (const json& ref : l["refs"]) {
        if (!ref.is_number_integer() || ref.get<long long>() < 1) {
          throw std::invalid_argument(where + "refs are positive line numbers");
        }
        line.refs.push_back(static_cast<std::size_t>(ref.get<long long>() - 1));
      }
    }
    p.lines.push_back(std::move(line));
  }
  return p;
}

std::string dump_proof_json(const ProofObject& p, int indent) {
  using nlohmann::json;
  json lines = json::array();
  for (const ProofLine& l : p.lines) {
    json j;
    j["formula"] = render(l.formula);
    j["rule"] = rule_name(l.rule);
    if (!l.refs.empty()) {
      json refs = json::array();
      for (std::size_t r : l.refs) refs.push_back(r + 1);
      j["refs"] = refs;
    }
    lines.push_back(j);
  }
  json doc;
  doc["system"] = system_name(p.system);
  doc["lines"] = lines;
  return doc.dump(indent);
}

}  // namespace slowprov::modal
