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

#ifndef BINDER_TESTS_BUILDER_HPP_
#define BINDER_TESTS_BUILDER_HPP_

#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "binder/model.hpp"

namespace binder::testutil {

// Registry lookup that asserts the language exists; test fixtures only use
// registered names.
inline LangParams lang_params(const std::string& name) {
  return *lookup_language(name);
}

// Assembles annotated discourse trees node by node. Ids are allocated
// sequentially unless a test pins them explicitly (golden fixtures pin
// marker ids). build() hands everything to Discourse::build, so the result
// carries the same invariants production inputs do.
class DiscourseBuilder {
 public:
  explicit DiscourseBuilder(NodeId first_node = 1, MarkerId first_marker = 101)
      : next_node_(first_node), next_marker_(first_marker) {}

  MarkerId ctx(Number num = Number::kUnspecified, MarkerId id = kNoMarker) {
    Marker m;
    m.id = id == kNoMarker ? next_marker_++ : id;
    m.kind = MarkerKind::kContext;
    m.number = num;
    m.source = kNoNode;
    ctx_markers_.push_back(m);
    return m.id;
  }

  // Word-level NP introducing one r-mark.
  NodeId np(AnaphorType type = AnaphorType::kNone,
            Number num = Number::kUnspecified, MarkerId mark = kNoMarker) {
    Node n = blank(Category::kWord);
    NPInfo info;
    info.anaphor_type = type;
    info.r_mark = mark == kNoMarker ? next_marker_++ : mark;
    info.number = num;
    n.np = info;
    return push(n);
  }

  // Quantificational NP: singular var plus plural r-mark.
  NodeId quant(MarkerId var = kNoMarker, MarkerId mark = kNoMarker) {
    Node n = blank(Category::kWord);
    NPInfo info;
    info.quantificational = true;
    info.var = var == kNoMarker ? next_marker_++ : var;
    info.r_mark = mark == kNoMarker ? next_marker_++ : mark;
    n.np = info;
    return push(n);
  }

  // Phrase NP with a Specifier daughter and a head noun: "Lee's friend".
  // The phrase introduces its own r-mark; the Spec keeps its own.
  NodeId possessed(NodeId spec, AnaphorType type = AnaphorType::kNone,
                   Number num = Number::kUnspecified,
                   MarkerId mark = kNoMarker) {
    NodeId noun = word();
    Node n = blank(Category::kPhrase);
    NPInfo info;
    info.anaphor_type = type;
    info.r_mark = mark == kNoMarker ? next_marker_++ : mark;
    info.number = num;
    n.np = info;
    n.daughters = {spec, noun};
    n.spec_daughter = spec;
    n.head = noun;
    return push(n);
  }

  // Phrase NP over explicit daughters, e.g. a picture noun with its PP
  // complement. Introduces its own r-mark.
  NodeId phrase_np(std::vector<NodeId> daughters, NodeId head,
                   Number num = Number::kUnspecified,
                   MarkerId mark = kNoMarker) {
    Node n = blank(Category::kPhrase);
    NPInfo info;
    info.r_mark = mark == kNoMarker ? next_marker_++ : mark;
    info.number = num;
    n.np = info;
    n.daughters = std::move(daughters);
    n.head = head;
    return push(n);
  }

  // Trace mentioning the filler NP's markers without introducing them.
  NodeId trace_of(NodeId filler) {
    const Node& f = node(filler);
    if (!f.np) throw std::logic_error("trace filler must be an NP");
    Node n = blank(Category::kWord);
    NPInfo info;
    info.trace = true;
    info.quantificational = f.np->quantificational;
    info.r_mark = f.np->r_mark;
    info.var = f.np->var;
    n.np = info;
    return push(n);
  }

  NodeId word() { return push(blank(Category::kWord)); }

  // Prepositional phrase: [P complement], head P. Slot groups look through
  // the preposition to an NP complement.
  NodeId pp(NodeId complement) {
    NodeId p = word();
    Node n = blank(Category::kPhrase);
    n.daughters = {p, complement};
    n.head = p;
    return push(n);
  }

  // Verb word carrying the subcategorisation frame. Slots reference the
  // argument nodes in obliqueness order (Subject first).
  NodeId verb(std::vector<NodeId> slots, OrderKind order = OrderKind::kLinear,
              std::optional<std::vector<NodeId>> binding_base = std::nullopt) {
    Node n = blank(Category::kWord);
    ArgStructure a;
    for (NodeId s : slots) a.slots.push_back(Slot{s, ""});
    a.order_kind = order;
    if (binding_base) {
      std::vector<Slot> base;
      for (NodeId s : *binding_base) base.push_back(Slot{s, ""});
      a.binding_base = std::move(base);
    }
    n.predicator = std::move(a);
    return push(n);
  }

  // Clause over the given daughters (document order). The head defaults to
  // the first predicator-bearing daughter.
  NodeId clause(std::vector<NodeId> daughters,
                Finiteness fin = Finiteness::kUnspecified,
                Mood mood = Mood::kUnspecified,
                Category cat = Category::kSentence, NodeId head = kNoNode) {
    Node n = blank(cat);
    n.daughters = daughters;
    n.finiteness = fin;
    n.mood = mood;
    if (head == kNoNode) {
      for (NodeId dtr : daughters) {
        if (node(dtr).predicator) {
          head = dtr;
          break;
        }
      }
    }
    n.head = head;
    return push(n);
  }

  MarkerId mark(NodeId id) const { return *node(id).np->r_mark; }
  MarkerId var(NodeId id) const { return *node(id).np->var; }

  Node& node(NodeId id) {
    return nodes_.at(static_cast<size_t>(id - first_node_id()));
  }
  const Node& node(NodeId id) const {
    return nodes_.at(static_cast<size_t>(id - first_node_id()));
  }

  Discourse build(std::vector<NodeId> sentence_roots,
                  LangParams lang = LangParams{}) const {
    return Discourse::build(nodes_, std::move(sentence_roots), ctx_markers_,
                            std::move(lang));
  }

  Discourse build(NodeId root, LangParams lang = LangParams{}) const {
    return build(std::vector<NodeId>{root}, std::move(lang));
  }

 private:
  NodeId first_node_id() const {
    return nodes_.empty() ? next_node_ : nodes_.front().id;
  }

  Node blank(Category cat) {
    Node n;
    n.id = 0;  // assigned by push
    n.category = cat;
    return n;
  }

  NodeId push(Node n) {
    const NodeId id = next_node_++;
    n.id = id;
    nodes_.push_back(std::move(n));
    return id;
  }

  NodeId next_node_;
  MarkerId next_marker_;
  std::vector<Node> nodes_;
  std::vector<Marker> ctx_markers_;
};

}  // namespace binder::testutil

#endif  // BINDER_TESTS_BUILDER_HPP_
