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

#include "binder/model.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace binder {

std::optional<LangParams> lookup_language(const std::string& name) {
  // Registry of per-language binding parameters: how far a long-distance
  // reflexive's search extends and whether an o-bottom reflexive may retry
  // one predicator upstairs before being declared exempt.
  if (name == "english") {
    return LangParams{name, LocalityMode::kImmediate, ReshuffleMode::kNone};
  }
  if (name == "norwegian") {
    return LangParams{name, LocalityMode::kImmediate, ReshuffleMode::kNone};
  }
  if (name == "toba-batak") {
    return LangParams{name, LocalityMode::kImmediate, ReshuffleMode::kNone};
  }
  if (name == "icelandic") {
    return LangParams{name, LocalityMode::kFirstIndicative, ReshuffleMode::kNone};
  }
  if (name == "greek") {
    return LangParams{name, LocalityMode::kUpstairs, ReshuffleMode::kNone};
  }
  if (name == "german") {
    return LangParams{name, LocalityMode::kImmediate, ReshuffleMode::kUpstairs};
  }
  if (name == "portuguese") {
    return LangParams{name, LocalityMode::kImmediate, ReshuffleMode::kUpstairs};
  }
  return std::nullopt;
}

Discourse Discourse::build(std::vector<Node> nodes,
                           std::vector<NodeId> sentence_roots,
                           std::vector<Marker> context_markers,
                           LangParams lang) {
  Discourse d;
  d.lang_ = std::move(lang);
  d.sentences_ = std::move(sentence_roots);
  d.context_markers_ = std::move(context_markers);

  NodeId max_id = 0;
  for (const Node& n : nodes) max_id = std::max(max_id, n.id);
  d.ctx_ = max_id + 1;
  d.root_ = max_id + 2;

  Node ctx;
  ctx.id = d.ctx_;
  ctx.category = Category::kCtx;

  Node root;
  root.id = d.root_;
  root.category = Category::kDiscourse;
  root.head = d.ctx_;
  root.daughters.push_back(d.ctx_);
  for (NodeId s : d.sentences_) root.daughters.push_back(s);

  d.nodes_ = std::move(nodes);
  d.nodes_.push_back(std::move(ctx));
  d.nodes_.push_back(std::move(root));

  for (size_t i = 0; i < d.nodes_.size(); ++i) {
    d.index_.emplace(d.nodes_[i].id, i);
  }

  // Preorder walk from the root; records parents as a side effect.
  std::vector<NodeId> stack{d.root_};
  d.parent_[d.root_] = kNoNode;
  std::unordered_set<NodeId> seen;
  while (!stack.empty()) {
    NodeId cur = stack.back();
    stack.pop_back();
    if (!seen.insert(cur).second) continue;  // guard against cycles
    d.preorder_.push_back(cur);
    const Node* n = d.find(cur);
    if (!n) continue;
    // Push daughters reversed so they pop left-to-right.
    for (auto it = n->daughters.rbegin(); it != n->daughters.rend(); ++it) {
      if (!d.parent_.count(*it)) d.parent_[*it] = cur;
      stack.push_back(*it);
    }
  }

  for (const Marker& m : d.context_markers_) {
    d.markers_.emplace(m.id, m);
  }
  for (NodeId id : d.preorder_) {
    const Node* n = d.find(id);
    if (!n || !n->np || n->np->trace) continue;
    const NPInfo& np = *n->np;
    if (np.var) {
      Marker vm;
      vm.id = *np.var;
      vm.kind = MarkerKind::kVar;
      vm.number = Number::kSingular;
      vm.source = id;
      vm.quantificational = true;
      if (d.markers_.emplace(vm.id, vm).second) d.introduced_.push_back(vm.id);
    }
    if (np.r_mark) {
      Marker rm;
      rm.id = *np.r_mark;
      rm.kind = MarkerKind::kRMark;
      rm.number = np.quantificational ? Number::kPlural : np.number;
      rm.source = id;
      rm.quantificational = np.quantificational;
      if (d.markers_.emplace(rm.id, rm).second) d.introduced_.push_back(rm.id);
    }
  }
  return d;
}

const Node* Discourse::find(NodeId id) const {
  auto it = index_.find(id);
  return it == index_.end() ? nullptr : &nodes_[it->second];
}

const Node& Discourse::node(NodeId id) const {
  const Node* n = find(id);
  if (!n) throw std::out_of_range("unknown node id " + std::to_string(id));
  return *n;
}

NodeId Discourse::parent(NodeId id) const {
  auto it = parent_.find(id);
  return it == parent_.end() ? kNoNode : it->second;
}

const Marker* Discourse::find_marker(MarkerId id) const {
  auto it = markers_.find(id);
  return it == markers_.end() ? nullptr : &it->second;
}

const Marker& Discourse::marker(MarkerId id) const {
  const Marker* m = find_marker(id);
  if (!m) throw std::out_of_range("unknown marker id " + std::to_string(id));
  return *m;
}

std::vector<MarkerId> Discourse::mentioned_markers(const Node& n) {
  std::vector<MarkerId> out;
  if (!n.np) return out;
  if (n.np->var) out.push_back(*n.np->var);
  if (n.np->r_mark) out.push_back(*n.np->r_mark);
  return out;
}

bool Discourse::is_ancestor_or_self(NodeId anc, NodeId desc) const {
  for (NodeId cur = desc; cur != kNoNode; cur = parent(cur)) {
    if (cur == anc) return true;
  }
  return false;
}

namespace {

void add(ValidationReport& r, std::string code, std::string msg) {
  r.violations.push_back({std::move(code), std::move(msg)});
}

std::string nid(NodeId id) { return "node " + std::to_string(id); }

}  // namespace

ValidationReport validate_discourse(const Discourse& d) {
  ValidationReport r;

  if (d.sentences().empty()) {
    add(r, "E-EMPTY", "discourse has no sentences");
  }

  std::unordered_set<NodeId> reachable(d.preorder().begin(),
                                       d.preorder().end());
  std::unordered_set<NodeId> daughter_of;
  for (NodeId id : d.preorder()) {
    const Node& n = d.node(id);
    for (NodeId dtr : n.daughters) {
      if (!d.has_node(dtr)) {
        add(r, "E-DANGLING", nid(id) + " lists unknown daughter " +
                                 std::to_string(dtr));
        continue;
      }
      if (!daughter_of.insert(dtr).second) {
        add(r, "E-SHARED", nid(dtr) + " has more than one mother");
      }
      if (d.parent(dtr) != id) {
        add(r, "E-CYCLE", nid(dtr) + " closes a cycle under " + nid(id));
      }
    }
    if (n.head != kNoNode) {
      if (std::find(n.daughters.begin(), n.daughters.end(), n.head) ==
          n.daughters.end()) {
        add(r, "E-HEAD", nid(id) + " head " + std::to_string(n.head) +
                             " is not a daughter");
      }
    }
    if (n.spec_daughter != kNoNode) {
      if (std::find(n.daughters.begin(), n.daughters.end(), n.spec_daughter) ==
          n.daughters.end()) {
        add(r, "E-SPEC", nid(id) + " spec " + std::to_string(n.spec_daughter) +
                             " is not a daughter");
      }
      if (n.spec_daughter == n.head) {
        add(r, "E-SPEC", nid(id) + " spec coincides with head");
      }
    }
    if (n.predicator) {
      const ArgStructure& as = *n.predicator;
      if (as.slots.empty()) {
        add(r, "E-SLOTS", nid(id) + " predicator has no slots");
      }
      for (const Slot& s : as.slots) {
        if (!d.has_node(s.node)) {
          add(r, "E-SLOT-REF", nid(id) + " slot points at unknown node " +
                                   std::to_string(s.node));
        }
      }
      if (as.binding_base) {
        if (as.binding_base->size() != as.slots.size()) {
          add(r, "E-BASE", nid(id) + " binding base arity differs from slots");
        }
        std::unordered_set<NodeId> surface, base;
        for (const Slot& s : as.slots) surface.insert(s.node);
        for (const Slot& s : *as.binding_base) base.insert(s.node);
        if (surface != base) {
          add(r, "E-BASE",
              nid(id) + " binding base covers different nodes than slots");
        }
      }
    }
    if (n.np) {
      const NPInfo& np = *n.np;
      if (np.quantificational != np.var.has_value()) {
        add(r, "E-QUANT", nid(id) +
                              " quantificational flag and var presence "
                              "disagree");
      }
      if (!np.r_mark && !np.var) {
        add(r, "E-NP", nid(id) + " nominal mentions no marker");
      }
      if (np.trace && np.anaphor_type != AnaphorType::kNone) {
        // A trace shares its filler's markers; binding constraints are
        // evaluated at the filler, never at the trace.
        add(r, "E-TRACE", nid(id) + " trace carries an anaphor type");
      }
    }
  }

  // Marker discipline: every mentioned marker resolves; every non-context
  // marker is introduced exactly once (traces excepted); context markers are
  // not introduced by nominals.
  std::unordered_map<MarkerId, int> introductions;
  std::unordered_set<MarkerId> context_ids;
  for (const Marker& m : d.context_markers()) {
    if (!context_ids.insert(m.id).second) {
      add(r, "E-DUP-MARKER",
          "context marker " + std::to_string(m.id) + " repeated");
    }
  }
  for (NodeId id : d.preorder()) {
    const Node& n = d.node(id);
    if (!n.np) continue;
    for (MarkerId m : Discourse::mentioned_markers(n)) {
      if (!n.np->trace) {
        if (context_ids.count(m)) {
          add(r, "E-DUP-MARKER", nid(id) + " reintroduces context marker " +
                                     std::to_string(m));
        } else if (++introductions[m] > 1) {
          add(r, "E-DUP-MARKER",
              nid(id) + " reintroduces marker " + std::to_string(m));
        }
      } else if (!d.find_marker(m)) {
        add(r, "E-UNKNOWN-MARKER",
            nid(id) + " trace mentions unknown marker " + std::to_string(m));
      }
    }
  }

  for (NodeId s : d.sentences()) {
    if (!reachable.count(s)) {
      add(r, "E-DANGLING", "sentence root " + std::to_string(s) + " unknown");
    }
  }
  return r;
}

std::vector<Marker> all_markers(const Discourse& d) {
  std::vector<Marker> out;
  out.reserve(d.context_markers().size() + d.introduced_markers().size());
  for (const Marker& m : d.context_markers()) out.push_back(m);
  for (MarkerId id : d.introduced_markers()) out.push_back(d.marker(id));
  return out;
}

const char* to_string(AnaphorType t) {
  switch (t) {
    case AnaphorType::kShortReflexive: return "short-reflexive";
    case AnaphorType::kLongReflexive: return "long-reflexive";
    case AnaphorType::kPronoun: return "pronoun";
    case AnaphorType::kNonPronoun: return "non-pronoun";
    case AnaphorType::kNone: return "none";
  }
  return "?";
}

const char* to_string(Category c) {
  switch (c) {
    case Category::kDiscourse: return "discourse";
    case Category::kCtx: return "ctx";
    case Category::kSentence: return "sentence";
    case Category::kPhrase: return "phrase";
    case Category::kWord: return "word";
  }
  return "?";
}

const char* to_string(MarkerKind k) {
  switch (k) {
    case MarkerKind::kRMark: return "r-mark";
    case MarkerKind::kVar: return "var";
    case MarkerKind::kContext: return "context";
  }
  return "?";
}

const char* to_string(Number n) {
  switch (n) {
    case Number::kSingular: return "singular";
    case Number::kPlural: return "plural";
    case Number::kUnspecified: return "unspecified";
  }
  return "?";
}

const char* to_string(LocalityMode m) {
  switch (m) {
    case LocalityMode::kImmediate: return "immediate";
    case LocalityMode::kFirstFinite: return "first-finite";
    case LocalityMode::kFirstIndicative: return "first-indicative";
    case LocalityMode::kUpstairs: return "upstairs";
  }
  return "?";
}

const char* to_string(OrderKind k) {
  switch (k) {
    case OrderKind::kLinear: return "linear";
    case OrderKind::kSubjectOnly: return "subject-only";
  }
  return "?";
}

}  // namespace binder
