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

#include <set>

#include "json.hpp"
#include "slowprov/model.hpp"

namespace slowprov::modal {

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& msg) { throw ModelFileError("invalid model: " + msg); }

std::size_t world_ref(const KripkeModel& m, const json& j, const char* where) {
  if (!j.is_string()) bad(std::string(where) + ": world names must be strings");
  auto idx = m.index_of(j.get<std::string>());
  if (!idx) bad(std::string(where) + ": unknown world '" + j.get<std::string>() + "'");
  return *idx;
}

std::vector<WorldSet> read_relation(const KripkeModel& m, const json& doc, const char* key,
                                    bool required) {
  std::vector<WorldSet> rel(m.size(), 0);
  if (!doc.contains(key)) {
    if (required) bad(std::string("missing field '") + key + "'");
    return rel;
  }
  const json& pairs = doc.at(key);
  if (!pairs.is_array()) bad(std::string(key) + " must be a list of pairs");
  for (const json& p : pairs) {
    if (!p.is_array() || p.size() != 2) bad(std::string(key) + " entries must be pairs");
    rel[world_ref(m, p[0], key)] |= bit(world_ref(m, p[1], key));
  }
  return rel;
}

}  // namespace

KripkeModel load_model_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    bad(std::string("not JSON: ") + e.what());
  }
  if (!doc.is_object()) bad("document must be an object");

  KripkeModel m;
  if (!doc.contains("worlds") || !doc["worlds"].is_array()) bad("missing list 'worlds'");
  std::set<std::string> seen;
  for (const json& w : doc["worlds"]) {
    if (!w.is_string()) bad("world names must be strings");
    const std::string name = w.get<std::string>();
    if (!seen.insert(name).second) bad("duplicate world '" + name + "'");
    m.worlds.push_back(name);
  }
  if (m.worlds.empty()) bad("worlds must be nonempty");
  if (m.worlds.size() > kMaxWorlds) bad("at most 64 worlds are supported");
  if (!doc.contains("root")) bad("missing field 'root'");
  m.root = world_ref(m, doc["root"], "root");
  m.prec = read_relation(m, doc, "prec", true);
  m.prec_r = read_relation(m, doc, "precR", false);

  if (doc.contains("val")) {
    const json& val = doc["val"];
    if (!val.is_object()) bad("val must map variables to lists of worlds");
    for (const auto& [name, ws] : val.items()) {
      if (!ws.is_array()) bad("val entry '" + name + "' must be a list");
      WorldSet s = 0;
      for (const json& w : ws) s |= bit(world_ref(m, w, "val"));
      m.val[name] = s;
    }
  }

  Diagnostic d = validate_frame(m);
  if (!d.ok()) bad("condition " + std::to_string(d.condition) + ": " + d.message);
  return m;
}

std::string dump_model_json(const KripkeModel& m, int indent) {
  json doc;
  doc["worlds"] = m.worlds;
  doc["root"] = m.worlds.at(m.root);
  auto pairs = [&m](const std::vector<WorldSet>& rel) {
    json out = json::array();
    for (std::size_t a = 0; a < m.size(); ++a) {
      for (std::size_t b = 0; b < m.size(); ++b) {
        if (has(rel[a], b)) out.push_back({m.worlds[a], m.worlds[b]});
      }
    }
    return out;
  };
  doc["prec"] = pairs(m.prec);
  doc["precR"] = pairs(m.prec_r);
  json val = json::object();
  for (const auto& [name, s] : m.val) {
    json ws = json::array();
    for (std::size_t w = 0; w < m.size(); ++w) {
      if (has(s, w)) ws.push_back(m.worlds[w]);
    }
    val[name] = ws;
  }
  doc["val"] = val;
  return doc.dump(indent);
}

}  // namespace slowprov::modal
