// Copyright 2026 The Binder Authors
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

#include "binder/io.hpp"

#include <glob.h>

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "json.hpp"

#include "binder/bdp.hpp"
#include "binder/obliqueness.hpp"
#include "binder/reverse.hpp"

namespace binder {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void fail_schema(const std::string& key, const std::string& msg) {
  throw ParseError("E-SCHEMA", msg, key);
}

[[noreturn]] void fail_enum(const std::string& key, const std::string& token) {
  throw ParseError("E-ENUM", "unknown token \"" + token + "\"", key);
}

void require_keys(const Json& obj, const std::string& path,
                  std::initializer_list<const char*> allowed) {
  for (const auto& item : obj.items()) {
    bool known = false;
    for (const char* k : allowed) {
      if (item.key() == k) {
        known = true;
        break;
      }
    }
    if (!known) fail_schema(path + "/" + item.key(), "unknown key");
  }
}

const Json* find_member(const Json& obj, const char* key) {
  auto it = obj.find(key);
  return it == obj.end() ? nullptr : &*it;
}

const Json& require_member(const Json& obj, const std::string& path,
                           const char* key) {
  const Json* m = find_member(obj, key);
  if (m == nullptr) fail_schema(path + "/" + key, "missing required key");
  return *m;
}

int64_t as_int(const Json& v, const std::string& path) {
  if (!v.is_number_integer()) fail_schema(path, "expected an integer");
  return v.get<int64_t>();
}

NodeId as_node_id(const Json& v, const std::string& path) {
  int64_t n = as_int(v, path);
  if (n < 1 || n > INT32_MAX) fail_schema(path, "node id out of range");
  return static_cast<NodeId>(n);
}

MarkerId as_marker_id(const Json& v, const std::string& path) {
  int64_t n = as_int(v, path);
  if (n < 0 || n > INT32_MAX) fail_schema(path, "marker id out of range");
  return static_cast<MarkerId>(n);
}

bool as_bool(const Json& v, const std::string& path) {
  if (!v.is_boolean()) fail_schema(path, "expected a boolean");
  return v.get<bool>();
}

std::string as_string(const Json& v, const std::string& path) {
  if (!v.is_string()) fail_schema(path, "expected a string");
  return v.get<std::string>();
}

const Json& as_array(const Json& v, const std::string& path) {
  if (!v.is_array()) fail_schema(path, "expected an array");
  return v;
}

const Json& as_object(const Json& v, const std::string& path) {
  if (!v.is_object()) fail_schema(path, "expected an object");
  return v;
}

std::vector<MarkerId> as_marker_list(const Json& v, const std::string& path) {
  std::vector<MarkerId> out;
  const Json& arr = as_array(v, path);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    out.push_back(as_marker_id(arr[i], path + "/" + std::to_string(i)));
  }
  return out;
}

// Enum tokens. Parse and serialization must agree; the to_string overloads
// in the model are the single source for the shared ones.

Category category_from(const std::string& s, const std::string& path) {
  if (s == "sentence") return Category::kSentence;
  if (s == "phrase") return Category::kPhrase;
  if (s == "word") return Category::kWord;
  fail_enum(path, s);
}

AnaphorType anaphor_type_from(const std::string& s, const std::string& path) {
  if (s == "short-reflexive") return AnaphorType::kShortReflexive;
  if (s == "long-reflexive") return AnaphorType::kLongReflexive;
  if (s == "pronoun") return AnaphorType::kPronoun;
  if (s == "non-pronoun") return AnaphorType::kNonPronoun;
  if (s == "none") return AnaphorType::kNone;
  fail_enum(path, s);
}

Number number_from(const std::string& s, const std::string& path) {
  if (s == "singular") return Number::kSingular;
  if (s == "plural") return Number::kPlural;
  if (s == "unspecified") return Number::kUnspecified;
  fail_enum(path, s);
}

LocalityMode locality_from(const std::string& s, const std::string& path) {
  if (s == "immediate") return LocalityMode::kImmediate;
  if (s == "first-finite") return LocalityMode::kFirstFinite;
  if (s == "first-indicative") return LocalityMode::kFirstIndicative;
  if (s == "upstairs") return LocalityMode::kUpstairs;
  fail_enum(path, s);
}

OrderKind order_from(const std::string& s, const std::string& path) {
  if (s == "linear") return OrderKind::kLinear;
  if (s == "subject-only") return OrderKind::kSubjectOnly;
  fail_enum(path, s);
}

Finiteness finiteness_from(const std::string& s, const std::string& path) {
  if (s == "finite") return Finiteness::kFinite;
  if (s == "nonfinite") return Finiteness::kNonfinite;
  fail_enum(path, s);
}

const char* to_token(Finiteness f) {
  return f == Finiteness::kFinite ? "finite" : "nonfinite";
}

Mood mood_from(const std::string& s, const std::string& path) {
  if (s == "indicative") return Mood::kIndicative;
  if (s == "subjunctive") return Mood::kSubjunctive;
  if (s == "other") return Mood::kOther;
  fail_enum(path, s);
}

const char* to_token(Mood m) {
  switch (m) {
    case Mood::kIndicative: return "indicative";
    case Mood::kSubjunctive: return "subjunctive";
    default: return "other";
  }
}

ReshuffleMode reshuffle_from(const std::string& s, const std::string& path) {
  if (s == "none") return ReshuffleMode::kNone;
  if (s == "upstairs") return ReshuffleMode::kUpstairs;
  fail_enum(path, s);
}

const char* to_token(ReshuffleMode m) {
  return m == ReshuffleMode::kUpstairs ? "upstairs" : "none";
}

LinkType link_type_from(const std::string& s, const std::string& path) {
  LinkType t;
  if (!link_type_from_string(s, &t)) fail_enum(path, s);
  return t;
}

// ---- document parsing ----

Slot parse_slot(const Json& j, const std::string& path) {
  as_object(j, path);
  require_keys(j, path, {"node", "gf"});
  Slot s;
  s.node = as_node_id(require_member(j, path, "node"), path + "/node");
  if (const Json* gf = find_member(j, "gf")) {
    s.gf = as_string(*gf, path + "/gf");
  }
  return s;
}

NPInfo parse_np(const Json& j, const std::string& path) {
  as_object(j, path);
  require_keys(j, path,
               {"type", "r_mark", "var", "quantificational", "trace", "number",
                "locality"});
  NPInfo np;
  if (const Json* t = find_member(j, "type")) {
    np.anaphor_type = anaphor_type_from(as_string(*t, path + "/type"),
                                        path + "/type");
  }
  if (const Json* r = find_member(j, "r_mark")) {
    np.r_mark = as_marker_id(*r, path + "/r_mark");
  }
  if (const Json* v = find_member(j, "var")) {
    np.var = as_marker_id(*v, path + "/var");
  }
  if (const Json* q = find_member(j, "quantificational")) {
    np.quantificational = as_bool(*q, path + "/quantificational");
  }
  if (const Json* t = find_member(j, "trace")) {
    np.trace = as_bool(*t, path + "/trace");
  }
  if (const Json* n = find_member(j, "number")) {
    np.number = number_from(as_string(*n, path + "/number"), path + "/number");
    if (np.quantificational) {
      fail_schema(path + "/number",
                  "quantificational nominals fix their marker numbers");
    }
  }
  if (const Json* l = find_member(j, "locality")) {
    np.locality =
        locality_from(as_string(*l, path + "/locality"), path + "/locality");
  }
  return np;
}

ArgStructure parse_pred(const Json& j, const std::string& path) {
  as_object(j, path);
  require_keys(j, path, {"slots", "order", "binding_base"});
  ArgStructure a;
  const Json& slots = as_array(require_member(j, path, "slots"),
                               path + "/slots");
  for (std::size_t i = 0; i < slots.size(); ++i) {
    a.slots.push_back(parse_slot(slots[i], path + "/slots/" +
                                               std::to_string(i)));
  }
  if (const Json* o = find_member(j, "order")) {
    a.order_kind = order_from(as_string(*o, path + "/order"), path + "/order");
  }
  if (const Json* b = find_member(j, "binding_base")) {
    const Json& base = as_array(*b, path + "/binding_base");
    std::vector<Slot> bb;
    for (std::size_t i = 0; i < base.size(); ++i) {
      bb.push_back(parse_slot(base[i], path + "/binding_base/" +
                                           std::to_string(i)));
    }
    a.binding_base = std::move(bb);
  }
  return a;
}

NodeId parse_node(const Json& j, const std::string& path,
                  std::vector<Node>& out) {
  as_object(j, path);
  require_keys(j, path,
               {"id", "cat", "finiteness", "mood", "head", "spec", "np",
                "pred", "daughters"});
  Node n;
  n.id = as_node_id(require_member(j, path, "id"), path + "/id");
  n.category = category_from(as_string(require_member(j, path, "cat"),
                                       path + "/cat"),
                             path + "/cat");
  if (const Json* f = find_member(j, "finiteness")) {
    n.finiteness = finiteness_from(as_string(*f, path + "/finiteness"),
                                   path + "/finiteness");
  }
  if (const Json* m = find_member(j, "mood")) {
    n.mood = mood_from(as_string(*m, path + "/mood"), path + "/mood");
  }
  if (const Json* h = find_member(j, "head")) {
    n.head = as_node_id(*h, path + "/head");
  }
  if (const Json* s = find_member(j, "spec")) {
    n.spec_daughter = as_node_id(*s, path + "/spec");
  }
  if (const Json* np = find_member(j, "np")) {
    n.np = parse_np(*np, path + "/np");
  }
  if (const Json* p = find_member(j, "pred")) {
    n.predicator = parse_pred(*p, path + "/pred");
  }
  NodeId id = n.id;
  std::size_t slot = out.size();
  out.emplace_back();
  if (const Json* ds = find_member(j, "daughters")) {
    const Json& arr = as_array(*ds, path + "/daughters");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      n.daughters.push_back(
          parse_node(arr[i], path + "/daughters/" + std::to_string(i), out));
    }
  }
  out[slot] = std::move(n);
  return id;
}

AnaphoricLink parse_link(const Json& j, const std::string& path) {
  as_object(j, path);
  require_keys(j, path, {"anaphor", "antecedents", "type"});
  AnaphoricLink link;
  link.anaphor = as_marker_id(require_member(j, path, "anaphor"),
                              path + "/anaphor");
  link.antecedents = as_marker_list(require_member(j, path, "antecedents"),
                                    path + "/antecedents");
  if (const Json* t = find_member(j, "type")) {
    link.type = link_type_from(as_string(*t, path + "/type"), path + "/type");
  }
  if (link.type == LinkType::kSplit && link.antecedents.size() < 2) {
    fail_schema(path + "/antecedents", "split links need two antecedents");
  }
  if (link.type != LinkType::kSplit && link.antecedents.size() != 1) {
    fail_schema(path + "/antecedents",
                "non-split links take exactly one antecedent");
  }
  return link;
}

void parse_expected(const Json& j, const std::string& path, Document& doc) {
  as_object(j, path);
  require_keys(j, path, {"antec", "lists", "judgments", "resolutions"});
  if (const Json* a = find_member(j, "antec")) {
    const Json& arr = as_array(*a, path + "/antec");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      std::string p = path + "/antec/" + std::to_string(i);
      as_object(arr[i], p);
      require_keys(arr[i], p,
                   {"anaphor", "antec", "ordered", "exempt", "reshuffled"});
      ExpectedAntec e;
      e.anaphor = as_marker_id(require_member(arr[i], p, "anaphor"),
                               p + "/anaphor");
      e.antec = as_marker_list(require_member(arr[i], p, "antec"),
                               p + "/antec");
      if (const Json* o = find_member(arr[i], "ordered")) {
        e.ordered = as_bool(*o, p + "/ordered");
      }
      if (const Json* x = find_member(arr[i], "exempt")) {
        e.exempt = as_bool(*x, p + "/exempt");
      }
      if (const Json* r = find_member(arr[i], "reshuffled")) {
        e.reshuffled = as_bool(*r, p + "/reshuffled");
      }
      doc.expected_antec.push_back(std::move(e));
    }
  }
  if (const Json* l = find_member(j, "lists")) {
    const Json& arr = as_array(*l, path + "/lists");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      std::string p = path + "/lists/" + std::to_string(i);
      as_object(arr[i], p);
      require_keys(arr[i], p, {"node", "list_a", "list_z", "list_u",
                               "list_lu"});
      ExpectedLists e;
      e.node = as_node_id(require_member(arr[i], p, "node"), p + "/node");
      if (const Json* v = find_member(arr[i], "list_a")) {
        e.list_a = as_marker_list(*v, p + "/list_a");
      }
      if (const Json* v = find_member(arr[i], "list_z")) {
        e.list_z = as_marker_list(*v, p + "/list_z");
      }
      if (const Json* v = find_member(arr[i], "list_u")) {
        e.list_u = as_marker_list(*v, p + "/list_u");
      }
      if (const Json* v = find_member(arr[i], "list_lu")) {
        e.list_lu = as_marker_list(*v, p + "/list_lu");
      }
      doc.expected_lists.push_back(std::move(e));
    }
  }
  if (const Json* q = find_member(j, "judgments")) {
    const Json& arr = as_array(*q, path + "/judgments");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      std::string p = path + "/judgments/" + std::to_string(i);
      as_object(arr[i], p);
      require_keys(arr[i], p, {"anaphor", "antecedents", "type", "ok"});
      ExpectedJudgment e;
      e.anaphor = as_marker_id(require_member(arr[i], p, "anaphor"),
                               p + "/anaphor");
      e.antecedents = as_marker_list(require_member(arr[i], p, "antecedents"),
                                     p + "/antecedents");
      if (const Json* t = find_member(arr[i], "type")) {
        e.type = link_type_from(as_string(*t, p + "/type"), p + "/type");
      }
      if (const Json* ok = find_member(arr[i], "ok")) {
        e.ok = as_bool(*ok, p + "/ok");
      }
      if (e.type == LinkType::kSplit && e.antecedents.size() < 2) {
        fail_schema(p + "/antecedents", "split links need two antecedents");
      }
      if (e.type != LinkType::kSplit && e.antecedents.size() != 1) {
        fail_schema(p + "/antecedents",
                    "non-split links take exactly one antecedent");
      }
      doc.expected_judgments.push_back(std::move(e));
    }
  }
  if (const Json* r = find_member(j, "resolutions")) {
    const Json& arr = as_array(*r, path + "/resolutions");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      std::string p = path + "/resolutions/" + std::to_string(i);
      as_object(arr[i], p);
      require_keys(arr[i], p, {"links", "violations"});
      ExpectedResolution e;
      const Json& links = as_array(require_member(arr[i], p, "links"),
                                   p + "/links");
      for (std::size_t k = 0; k < links.size(); ++k) {
        e.links.push_back(
            parse_link(links[k], p + "/links/" + std::to_string(k)));
      }
      if (const Json* v = find_member(arr[i], "violations")) {
        const Json& vs = as_array(*v, p + "/violations");
        std::vector<std::pair<std::string, MarkerId>> expected;
        for (std::size_t k = 0; k < vs.size(); ++k) {
          std::string vp = p + "/violations/" + std::to_string(k);
          as_object(vs[k], vp);
          require_keys(vs[k], vp, {"principle", "marker"});
          expected.emplace_back(
              as_string(require_member(vs[k], vp, "principle"),
                        vp + "/principle"),
              as_marker_id(require_member(vs[k], vp, "marker"),
                           vp + "/marker"));
        }
        e.violations = std::move(expected);
      }
      doc.expected_resolutions.push_back(std::move(e));
    }
  }
}

std::pair<int, int> line_col(const std::string& text, std::size_t byte) {
  int line = 1;
  int col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

// ---- document serialization ----

Json slot_json(const Slot& s) {
  Json j;
  j["node"] = s.node;
  if (!s.gf.empty()) j["gf"] = s.gf;
  return j;
}

Json node_json(const Document& doc,
               const std::unordered_map<NodeId, const Node*>& index,
               NodeId id) {
  const Node& n = *index.at(id);
  Json j;
  j["id"] = n.id;
  j["cat"] = to_string(n.category);
  if (n.finiteness != Finiteness::kUnspecified) {
    j["finiteness"] = to_token(n.finiteness);
  }
  if (n.mood != Mood::kUnspecified) j["mood"] = to_token(n.mood);
  if (n.head != kNoNode) j["head"] = n.head;
  if (n.spec_daughter != kNoNode) j["spec"] = n.spec_daughter;
  if (n.np) {
    Json np;
    if (n.np->anaphor_type != AnaphorType::kNone) {
      np["type"] = to_string(n.np->anaphor_type);
    }
    if (n.np->r_mark) np["r_mark"] = *n.np->r_mark;
    if (n.np->var) np["var"] = *n.np->var;
    if (n.np->quantificational) np["quantificational"] = true;
    if (n.np->trace) np["trace"] = true;
    if (n.np->number != Number::kUnspecified) {
      np["number"] = to_string(n.np->number);
    }
    if (n.np->locality) np["locality"] = to_string(*n.np->locality);
    j["np"] = std::move(np);
  }
  if (n.predicator) {
    Json pred;
    Json slots = Json::array();
    for (const Slot& s : n.predicator->slots) slots.push_back(slot_json(s));
    pred["slots"] = std::move(slots);
    if (n.predicator->order_kind != OrderKind::kLinear) {
      pred["order"] = to_string(n.predicator->order_kind);
    }
    if (n.predicator->binding_base) {
      Json base = Json::array();
      for (const Slot& s : *n.predicator->binding_base) {
        base.push_back(slot_json(s));
      }
      pred["binding_base"] = std::move(base);
    }
    j["pred"] = std::move(pred);
  }
  if (!n.daughters.empty()) {
    Json ds = Json::array();
    for (NodeId d : n.daughters) ds.push_back(node_json(doc, index, d));
    j["daughters"] = std::move(ds);
  }
  return j;
}

Json link_json(const AnaphoricLink& link) {
  Json j;
  j["anaphor"] = link.anaphor;
  j["antecedents"] = link.antecedents;
  if (link.type != LinkType::kCoreference) j["type"] = to_string(link.type);
  return j;
}

}  // namespace

ParseError::ParseError(std::string code, const std::string& message,
                       std::string key, int line, int column)
    : std::runtime_error(
          code + ": " + message +
          (key.empty() ? "" : " at " + key) +
          (line > 0 ? " (line " + std::to_string(line) + ", column " +
                          std::to_string(column) + ")"
                    : "")),
      code_(std::move(code)),
      key_(std::move(key)),
      line_(line),
      column_(column) {}

bool operator==(const AnaphoricLink& a, const AnaphoricLink& b) {
  return a.anaphor == b.anaphor && a.antecedents == b.antecedents &&
         a.type == b.type;
}

bool operator==(const ExpectedResolution& a, const ExpectedResolution& b) {
  return a.links == b.links && a.violations == b.violations;
}

Document parse_document_text(const std::string& text,
                             const std::string& origin) {
  if (text.find_first_not_of(" \t\r\n") == std::string::npos) {
    throw ParseError("E-EMPTY", origin + " is empty");
  }
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    auto [line, col] = line_col(text, e.byte > 0 ? e.byte - 1 : 0);
    throw ParseError("E-PARSE", e.what(), origin, line, col);
  }
  if (!j.is_object()) fail_schema("/", "document must be an object");
  require_keys(j, "",
               {"binder-schema", "id", "lang", "context_markers", "sentences",
                "expected"});
  const Json& schema = require_member(j, "", "binder-schema");
  if (!schema.is_number_integer() || schema.get<int64_t>() != 1) {
    fail_schema("/binder-schema", "expected schema version 1");
  }

  Document doc;
  if (const Json* id = find_member(j, "id")) {
    doc.id = as_string(*id, "/id");
  }

  const Json& lang = require_member(j, "", "lang");
  if (lang.is_string()) {
    std::string name = lang.get<std::string>();
    std::optional<LangParams> found = lookup_language(name);
    if (!found) fail_enum("/lang", name);
    doc.lang = *found;
    doc.lang_by_name = true;
  } else if (lang.is_object()) {
    require_keys(lang, "/lang", {"name", "locality", "reshuffle"});
    doc.lang_by_name = false;
    doc.lang.name = as_string(require_member(lang, "/lang", "name"),
                              "/lang/name");
    if (const Json* l = find_member(lang, "locality")) {
      doc.lang.locality_mode =
          locality_from(as_string(*l, "/lang/locality"), "/lang/locality");
    }
    if (const Json* r = find_member(lang, "reshuffle")) {
      doc.lang.reshuffle =
          reshuffle_from(as_string(*r, "/lang/reshuffle"), "/lang/reshuffle");
    }
  } else {
    fail_schema("/lang", "expected a language name or object");
  }

  if (const Json* ctx = find_member(j, "context_markers")) {
    const Json& arr = as_array(*ctx, "/context_markers");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      std::string p = "/context_markers/" + std::to_string(i);
      Marker m;
      m.kind = MarkerKind::kContext;
      if (arr[i].is_object()) {
        require_keys(arr[i], p, {"id", "number"});
        m.id = as_marker_id(require_member(arr[i], p, "id"), p + "/id");
        if (const Json* n = find_member(arr[i], "number")) {
          m.number = number_from(as_string(*n, p + "/number"), p + "/number");
        }
      } else {
        m.id = as_marker_id(arr[i], p);
      }
      doc.context_markers.push_back(m);
    }
  }

  const Json& sentences = as_array(require_member(j, "", "sentences"),
                                   "/sentences");
  if (sentences.empty()) fail_schema("/sentences", "no sentences");
  for (std::size_t i = 0; i < sentences.size(); ++i) {
    doc.sentence_roots.push_back(parse_node(
        sentences[i], "/sentences/" + std::to_string(i), doc.nodes));
  }

  if (const Json* expected = find_member(j, "expected")) {
    parse_expected(*expected, "/expected", doc);
  }
  return doc;
}

Document parse_document(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("E-IO", "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_document_text(buf.str(), path);
}

std::string serialize(const Document& doc) {
  Json j;
  j["binder-schema"] = 1;
  if (!doc.id.empty()) j["id"] = doc.id;
  if (doc.lang_by_name) {
    j["lang"] = doc.lang.name;
  } else {
    Json lang;
    lang["name"] = doc.lang.name;
    lang["locality"] = to_string(doc.lang.locality_mode);
    lang["reshuffle"] = to_token(doc.lang.reshuffle);
    j["lang"] = std::move(lang);
  }
  if (!doc.context_markers.empty()) {
    Json arr = Json::array();
    for (const Marker& m : doc.context_markers) {
      if (m.number == Number::kUnspecified) {
        arr.push_back(m.id);
      } else {
        Json obj;
        obj["id"] = m.id;
        obj["number"] = to_string(m.number);
        arr.push_back(std::move(obj));
      }
    }
    j["context_markers"] = std::move(arr);
  }
  std::unordered_map<NodeId, const Node*> index;
  for (const Node& n : doc.nodes) index.emplace(n.id, &n);
  Json sentences = Json::array();
  for (NodeId root : doc.sentence_roots) {
    sentences.push_back(node_json(doc, index, root));
  }
  j["sentences"] = std::move(sentences);

  if (doc.has_expected()) {
    Json expected;
    if (!doc.expected_antec.empty()) {
      Json arr = Json::array();
      for (const ExpectedAntec& e : doc.expected_antec) {
        Json obj;
        obj["anaphor"] = e.anaphor;
        obj["antec"] = e.antec;
        if (!e.ordered) obj["ordered"] = false;
        if (e.exempt) obj["exempt"] = *e.exempt;
        if (e.reshuffled) obj["reshuffled"] = *e.reshuffled;
        arr.push_back(std::move(obj));
      }
      expected["antec"] = std::move(arr);
    }
    if (!doc.expected_lists.empty()) {
      Json arr = Json::array();
      for (const ExpectedLists& e : doc.expected_lists) {
        Json obj;
        obj["node"] = e.node;
        if (e.list_a) obj["list_a"] = *e.list_a;
        if (e.list_z) obj["list_z"] = *e.list_z;
        if (e.list_u) obj["list_u"] = *e.list_u;
        if (e.list_lu) obj["list_lu"] = *e.list_lu;
        arr.push_back(std::move(obj));
      }
      expected["lists"] = std::move(arr);
    }
    if (!doc.expected_judgments.empty()) {
      Json arr = Json::array();
      for (const ExpectedJudgment& e : doc.expected_judgments) {
        Json obj;
        obj["anaphor"] = e.anaphor;
        obj["antecedents"] = e.antecedents;
        if (e.type != LinkType::kCoreference) obj["type"] = to_string(e.type);
        obj["ok"] = e.ok;
        arr.push_back(std::move(obj));
      }
      expected["judgments"] = std::move(arr);
    }
    if (!doc.expected_resolutions.empty()) {
      Json arr = Json::array();
      for (const ExpectedResolution& e : doc.expected_resolutions) {
        Json obj;
        Json links = Json::array();
        for (const AnaphoricLink& link : e.links) {
          links.push_back(link_json(link));
        }
        obj["links"] = std::move(links);
        if (e.violations) {
          Json vs = Json::array();
          for (const auto& [principle, marker] : *e.violations) {
            Json v;
            v["principle"] = principle;
            v["marker"] = marker;
            vs.push_back(std::move(v));
          }
          obj["violations"] = std::move(vs);
        }
        arr.push_back(std::move(obj));
      }
      expected["resolutions"] = std::move(arr);
    }
    j["expected"] = std::move(expected);
  }
  return j.dump(2) + "\n";
}

Discourse to_discourse(const Document& doc,
                       const std::optional<LangParams>& lang_override) {
  Discourse d = Discourse::build(doc.nodes, doc.sentence_roots,
                                 doc.context_markers,
                                 lang_override.value_or(doc.lang));
  ValidationReport report = validate_discourse(d);
  if (!report.ok()) {
    std::string msg;
    for (const Violation& v : report.violations) {
      if (!msg.empty()) msg += "; ";
      msg += v.code + " " + v.message;
    }
    throw ParseError("E-VALID", msg);
  }
  return d;
}

JudgmentResult evaluate_judgment(const ExpectedJudgment& judgment,
                                 const Discourse& d,
                                 const std::vector<AntecReport>& reports,
                                 bool reverse_ran) {
  const Marker* anaphor = d.find_marker(judgment.anaphor);
  if (anaphor == nullptr) {
    throw std::invalid_argument("unknown marker " +
                                std::to_string(judgment.anaphor));
  }
  const AntecReport* report = nullptr;
  for (const AntecReport& r : reports) {
    if (r.anaphor == judgment.anaphor) {
      report = &r;
      break;
    }
  }
  if (report == nullptr) {
    return {false, "marker " + std::to_string(judgment.anaphor) +
                       " is not a reported anaphor"};
  }
  std::vector<MarkerId> candidates =
      reverse_ran ? admissible(*report) : report->antec;
  std::unordered_set<MarkerId> candidate_set(candidates.begin(),
                                             candidates.end());

  if (judgment.type == LinkType::kSplit &&
      anaphor->number == Number::kSingular) {
    return {false, "split antecedents need a plural anaphor"};
  }

  for (MarkerId named : judgment.antecedents) {
    const Marker* am = d.find_marker(named);
    if (am == nullptr) {
      throw std::invalid_argument("unknown marker " + std::to_string(named));
    }
    // Construe the named marker per the link type: a quantificational NP
    // serves bound anaphora through its var and e-type anaphora through its
    // r-mark.
    MarkerId construed = named;
    if (judgment.type == LinkType::kBound &&
        am->kind == MarkerKind::kRMark && am->quantificational &&
        am->source != kNoNode) {
      const Node& src = d.node(am->source);
      if (src.np && src.np->var) construed = *src.np->var;
    } else if (judgment.type == LinkType::kEType &&
               am->kind == MarkerKind::kVar && am->source != kNoNode) {
      const Node& src = d.node(am->source);
      if (src.np && src.np->r_mark) construed = *src.np->r_mark;
    }
    const Marker& cm = d.marker(construed);

    if (judgment.type != LinkType::kSplit &&
        anaphor->number != Number::kUnspecified &&
        cm.number != Number::kUnspecified && anaphor->number != cm.number) {
      return {false, "number mismatch with marker " +
                         std::to_string(construed)};
    }
    if (!report->exempt && candidate_set.count(construed) == 0) {
      return {false, "marker " + std::to_string(construed) +
                         " is not an admissible antecedent of " +
                         std::to_string(judgment.anaphor)};
    }
  }
  return {true, ""};
}

namespace {

std::string marker_list_text(const std::vector<MarkerId>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += " ";
    out += std::to_string(v[i]);
  }
  return out + "]";
}

bool same_as_set(const std::vector<MarkerId>& a,
                 const std::vector<MarkerId>& b) {
  std::vector<MarkerId> x = a;
  std::vector<MarkerId> y = b;
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  return x == y;
}

}  // namespace

CheckOutcome run_check(const Document& doc, const CheckOptions& options) {
  Discourse d = to_discourse(doc, options.lang_override);

  auto require_known = [&](MarkerId m, const char* where) {
    if (d.find_marker(m) == nullptr) {
      throw ParseError("E-SCHEMA", std::string(where) +
                                       " references unknown marker " +
                                       std::to_string(m));
    }
  };
  for (const ExpectedAntec& e : doc.expected_antec) {
    require_known(e.anaphor, "expected antec block");
    for (MarkerId m : e.antec) require_known(m, "expected antec block");
  }
  for (const ExpectedLists& e : doc.expected_lists) {
    if (!d.has_node(e.node)) {
      throw ParseError("E-SCHEMA", "expected lists block references unknown "
                                   "node " + std::to_string(e.node));
    }
  }
  for (const ExpectedJudgment& e : doc.expected_judgments) {
    require_known(e.anaphor, "expected judgment");
    for (MarkerId m : e.antecedents) require_known(m, "expected judgment");
  }
  for (const ExpectedResolution& e : doc.expected_resolutions) {
    for (const AnaphoricLink& link : e.links) {
      require_known(link.anaphor, "expected resolution");
      for (MarkerId m : link.antecedents) {
        require_known(m, "expected resolution");
      }
    }
  }

  FrameIndex idx = build_frame_index(d);
  OCommandGraph g = build_ocommand_graph(d, idx, d.lang());
  BindMap lists = propagate(d, idx, g);
  std::vector<AntecReport> reports = apply_binding(d, d.lang(), idx, g, lists);
  if (options.reverse) reports = filter_reports(reports, d, g);

  CheckOutcome out;
  auto note = [&](const std::string& bucket) {
    out.by_principle[bucket].checked += 1;
  };
  auto mismatch = [&](const std::string& bucket, const std::string& text) {
    out.by_principle[bucket].failed += 1;
    out.mismatches.push_back(text);
  };

  std::unordered_map<MarkerId, const AntecReport*> by_anaphor;
  for (const AntecReport& r : reports) by_anaphor.emplace(r.anaphor, &r);
  auto bucket_for = [&](MarkerId anaphor) -> std::string {
    auto it = by_anaphor.find(anaphor);
    if (it == by_anaphor.end()) return "unknown";
    return to_string(it->second->principle);
  };

  static const BindLists kEmptyLists;
  auto lists_of = [&](NodeId n) -> const BindLists& {
    auto it = lists.find(n);
    return it == lists.end() ? kEmptyLists : it->second;
  };

  for (const ExpectedLists& e : doc.expected_lists) {
    const BindLists& bl = lists_of(e.node);
    auto compare = [&](const char* name,
                       const std::optional<std::vector<MarkerId>>& want,
                       const std::vector<MarkerId>& got) {
      if (!want) return;
      note("lists");
      if (*want != got) {
        mismatch("lists", "node " + std::to_string(e.node) + " " + name +
                              ": expected " + marker_list_text(*want) +
                              ", got " + marker_list_text(got));
      }
    };
    compare("list_a", e.list_a, bl.list_a);
    compare("list_z", e.list_z, bl.list_z);
    compare("list_u", e.list_u, bl.list_u);
    compare("list_lu", e.list_lu, bl.list_lu);
  }

  for (const ExpectedAntec& e : doc.expected_antec) {
    std::string bucket = bucket_for(e.anaphor);
    note(bucket);
    auto it = by_anaphor.find(e.anaphor);
    if (it == by_anaphor.end()) {
      mismatch(bucket, "marker " + std::to_string(e.anaphor) +
                           " has no antecedent report");
      continue;
    }
    const AntecReport& r = *it->second;
    bool equal = e.ordered ? e.antec == r.antec : same_as_set(e.antec, r.antec);
    if (!equal) {
      mismatch(bucket, "anaphor " + std::to_string(e.anaphor) +
                           " antec: expected " + marker_list_text(e.antec) +
                           ", got " + marker_list_text(r.antec));
    }
    if (e.exempt && *e.exempt != r.exempt) {
      mismatch(bucket, "anaphor " + std::to_string(e.anaphor) +
                           " exempt: expected " +
                           (*e.exempt ? "true" : "false") + ", got " +
                           (r.exempt ? "true" : "false"));
    }
    if (e.reshuffled && *e.reshuffled != r.reshuffled) {
      mismatch(bucket, "anaphor " + std::to_string(e.anaphor) +
                           " reshuffled: expected " +
                           (*e.reshuffled ? "true" : "false") + ", got " +
                           (r.reshuffled ? "true" : "false"));
    }
  }

  std::vector<JudgmentResult> judgment_results;
  judgment_results.reserve(doc.expected_judgments.size());
  for (const ExpectedJudgment& e : doc.expected_judgments) {
    std::string bucket = bucket_for(e.anaphor);
    note(bucket);
    JudgmentResult jr = evaluate_judgment(e, d, reports, options.reverse);
    judgment_results.push_back(jr);
    if (jr.ok != e.ok) {
      std::string text = "judgment anaphor " + std::to_string(e.anaphor) +
                         " -> " + marker_list_text(e.antecedents) + " (" +
                         to_string(e.type) + "): expected " +
                         (e.ok ? "ok" : "bad") + ", got " +
                         (jr.ok ? "ok" : "bad");
      if (!jr.reason.empty()) text += " (" + jr.reason + ")";
      mismatch(bucket, text);
    }
  }

  std::vector<std::vector<ResolutionViolation>> resolution_results;
  if (options.transitivity) {
    for (std::size_t i = 0; i < doc.expected_resolutions.size(); ++i) {
      const ExpectedResolution& e = doc.expected_resolutions[i];
      note("resolution");
      std::vector<ResolutionViolation> got =
          check_resolution(e.links, reports, d, g);
      resolution_results.push_back(got);
      std::vector<std::pair<std::string, MarkerId>> got_pairs;
      got_pairs.reserve(got.size());
      for (const ResolutionViolation& v : got) {
        got_pairs.emplace_back(v.principle, v.marker);
      }
      std::sort(got_pairs.begin(), got_pairs.end());
      if (e.violations) {
        std::vector<std::pair<std::string, MarkerId>> want = *e.violations;
        std::sort(want.begin(), want.end());
        if (want != got_pairs) {
          std::string text = "resolution " + std::to_string(i) +
                             " violations: expected {";
          for (const auto& [p, m] : want) {
            text += " " + p + ":" + std::to_string(m);
          }
          text += " }, got {";
          for (const auto& [p, m] : got_pairs) {
            text += " " + p + ":" + std::to_string(m);
          }
          text += " }";
          mismatch("resolution", text);
        }
      } else if (!got.empty()) {
        std::string text = "resolution " + std::to_string(i) +
                           " raised unexpected violations:";
        for (const auto& [p, m] : got_pairs) {
          text += " " + p + ":" + std::to_string(m);
        }
        mismatch("resolution", text);
      }
    }
  }

  out.exit_code = out.mismatches.empty() ? 0 : 2;

  if (options.json) {
    Json rep;
    rep["binder-schema"] = 1;
    if (!doc.id.empty()) rep["id"] = doc.id;
    rep["lang"] = d.lang().name;
    rep["status"] = out.mismatches.empty() ? "pass" : "mismatch";
    Json anaphors = Json::array();
    for (const AntecReport& r : reports) {
      Json a;
      a["anaphor"] = r.anaphor;
      a["node"] = r.anaphor_node;
      a["principle"] = to_string(r.principle);
      a["antec"] = r.antec;
      a["exempt"] = r.exempt;
      a["reshuffled"] = r.reshuffled;
      if (options.reverse) {
        Json removed = Json::array();
        for (const auto& [marker, constraint] : r.removed) {
          Json item;
          item["marker"] = marker;
          item["constraint"] = std::string(1, constraint);
          removed.push_back(std::move(item));
        }
        a["removed"] = std::move(removed);
        a["admissible"] = admissible(r);
      }
      anaphors.push_back(std::move(a));
    }
    rep["anaphors"] = std::move(anaphors);
    if (options.dump_lists) {
      Json all = Json::object();
      for (NodeId n : d.preorder()) {
        const BindLists& bl = lists_of(n);
        Json item;
        item["list_a"] = bl.list_a;
        item["list_z"] = bl.list_z;
        item["list_u"] = bl.list_u;
        item["list_lu"] = bl.list_lu;
        all[std::to_string(n)] = std::move(item);
      }
      rep["lists"] = std::move(all);
    }
    if (!doc.expected_judgments.empty()) {
      Json arr = Json::array();
      for (std::size_t i = 0; i < doc.expected_judgments.size(); ++i) {
        const ExpectedJudgment& e = doc.expected_judgments[i];
        Json item;
        item["anaphor"] = e.anaphor;
        item["antecedents"] = e.antecedents;
        item["type"] = to_string(e.type);
        item["ok"] = judgment_results[i].ok;
        item["expected"] = e.ok;
        if (!judgment_results[i].reason.empty()) {
          item["reason"] = judgment_results[i].reason;
        }
        arr.push_back(std::move(item));
      }
      rep["judgments"] = std::move(arr);
    }
    if (options.transitivity && !resolution_results.empty()) {
      Json arr = Json::array();
      for (const std::vector<ResolutionViolation>& vs : resolution_results) {
        Json item;
        Json violations = Json::array();
        for (const ResolutionViolation& v : vs) {
          Json vj;
          vj["principle"] = v.principle;
          vj["marker"] = v.marker;
          if (v.antecedent != kNoMarker) vj["antecedent"] = v.antecedent;
          vj["message"] = v.message;
          violations.push_back(std::move(vj));
        }
        item["violations"] = std::move(violations);
        arr.push_back(std::move(item));
      }
      rep["resolutions"] = std::move(arr);
    }
    rep["mismatches"] = out.mismatches;
    out.report = rep.dump(2) + "\n";
  } else {
    std::ostringstream text;
    text << "doc " << (doc.id.empty() ? "-" : doc.id) << " lang "
         << d.lang().name << " status "
         << (out.mismatches.empty() ? "pass" : "mismatch") << "\n";
    for (const AntecReport& r : reports) {
      text << "anaphor " << r.anaphor << " node " << r.anaphor_node
           << " principle " << to_string(r.principle) << " antec "
           << marker_list_text(r.antec) << " exempt "
           << (r.exempt ? "yes" : "no");
      if (r.reshuffled) text << " reshuffled yes";
      if (options.reverse && !r.removed.empty()) {
        text << " removed [";
        for (std::size_t i = 0; i < r.removed.size(); ++i) {
          if (i) text << " ";
          text << r.removed[i].first << ":" << r.removed[i].second;
        }
        text << "]";
      }
      text << "\n";
    }
    if (options.dump_lists) {
      for (NodeId n : d.preorder()) {
        const BindLists& bl = lists_of(n);
        text << "lists node " << n << " a " << marker_list_text(bl.list_a)
             << " z " << marker_list_text(bl.list_z) << " u "
             << marker_list_text(bl.list_u) << " lu "
             << marker_list_text(bl.list_lu) << "\n";
      }
    }
    for (const std::string& m : out.mismatches) {
      text << "mismatch " << m << "\n";
    }
    out.report = text.str();
  }
  return out;
}

std::vector<std::string> expand_glob(const std::string& pattern) {
  ::glob_t matches{};
  int rc = ::glob(pattern.c_str(), 0, nullptr, &matches);
  std::vector<std::string> out;
  if (rc == 0) {
    for (std::size_t i = 0; i < matches.gl_pathc; ++i) {
      out.emplace_back(matches.gl_pathv[i]);
    }
  }
  ::globfree(&matches);
  if (rc == GLOB_NOMATCH || out.empty()) {
    throw ParseError("E-NOFILES", "no files match \"" + pattern + "\"");
  }
  if (rc != 0) {
    throw ParseError("E-IO", "cannot expand \"" + pattern + "\"");
  }
  std::sort(out.begin(), out.end());
  return out;
}

CorpusOutcome run_corpus(const std::vector<std::string>& paths,
                         const CheckOptions& options) {
  if (paths.empty()) {
    throw ParseError("E-NOFILES", "no corpus files given");
  }
  std::vector<std::string> sorted = paths;
  std::sort(sorted.begin(), sorted.end());

  CorpusOutcome out;
  out.files = static_cast<int>(sorted.size());
  bool input_error = false;
  bool mismatch = false;
  struct FileResult {
    std::string path;
    std::string status;
    std::vector<std::string> details;
  };
  std::vector<FileResult> results;
  for (const std::string& path : sorted) {
    FileResult fr;
    fr.path = path;
    try {
      Document doc = parse_document(path);
      CheckOutcome c = run_check(doc, options);
      std::string lang = options.lang_override ? options.lang_override->name
                                               : doc.lang.name;
      for (const auto& [bucket, tally] : c.by_principle) {
        out.by_principle[bucket].checked += tally.checked;
        out.by_principle[bucket].failed += tally.failed;
        out.by_language[lang].checked += tally.checked;
        out.by_language[lang].failed += tally.failed;
      }
      if (c.exit_code == 0) {
        fr.status = "pass";
      } else {
        fr.status = "mismatch";
        fr.details = c.mismatches;
        mismatch = true;
        out.failed_files += 1;
      }
    } catch (const ParseError& e) {
      fr.status = "error";
      fr.details.push_back(e.what());
      input_error = true;
      out.failed_files += 1;
    }
    results.push_back(std::move(fr));
  }
  out.exit_code = input_error ? 1 : (mismatch ? 2 : 0);

  if (options.json) {
    Json j;
    j["binder-schema"] = 1;
    j["files"] = out.files;
    j["failed"] = out.failed_files;
    Json per_principle = Json::object();
    for (const auto& [bucket, tally] : out.by_principle) {
      Json t;
      t["checked"] = tally.checked;
      t["failed"] = tally.failed;
      per_principle[bucket] = std::move(t);
    }
    j["by_principle"] = std::move(per_principle);
    Json per_language = Json::object();
    for (const auto& [lang, tally] : out.by_language) {
      Json t;
      t["checked"] = tally.checked;
      t["failed"] = tally.failed;
      per_language[lang] = std::move(t);
    }
    j["by_language"] = std::move(per_language);
    Json rs = Json::array();
    for (const FileResult& fr : results) {
      Json r;
      r["path"] = fr.path;
      r["status"] = fr.status;
      if (!fr.details.empty()) r["details"] = fr.details;
      rs.push_back(std::move(r));
    }
    j["results"] = std::move(rs);
    out.summary = j.dump(2) + "\n";
  } else {
    std::ostringstream text;
    text << "corpus: " << out.files << " files, " << out.failed_files
         << " failed\n";
    for (const auto& [bucket, tally] : out.by_principle) {
      text << "principle " << bucket << ": " << tally.checked << " checked, "
           << tally.failed << " failed\n";
    }
    for (const auto& [lang, tally] : out.by_language) {
      text << "language " << lang << ": " << tally.checked << " checked, "
           << tally.failed << " failed\n";
    }
    for (const FileResult& fr : results) {
      text << fr.status << " " << fr.path << "\n";
      for (const std::string& dtl : fr.details) {
        text << "  " << dtl << "\n";
      }
    }
    out.summary = text.str();
  }
  return out;
}

CorpusOutcome run_corpus_glob(const std::string& pattern,
                              const CheckOptions& options) {
  return run_corpus(expand_glob(pattern), options);
}

}  // namespace binder
