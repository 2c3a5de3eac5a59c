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

#ifndef BINDER_MODEL_HPP_
#define BINDER_MODEL_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace binder {

using MarkerId = int32_t;
using NodeId = int32_t;

inline constexpr NodeId kNoNode = -1;
inline constexpr MarkerId kNoMarker = -1;

enum class MarkerKind { kRMark, kVar, kContext };

enum class Number { kSingular, kPlural, kUnspecified };

// A discourse referent. Quantificational NPs introduce two (a plural
// e-marker in r_mark plus a singular v-marker in var); all other NPs and the
// non-linguistic context introduce one.
struct Marker {
  MarkerId id = 0;
  MarkerKind kind = MarkerKind::kRMark;
  Number number = Number::kUnspecified;
  NodeId source = kNoNode;  // kNoNode for context markers
  bool quantificational = false;

  bool operator==(const Marker&) const = default;
};

enum class AnaphorType {
  kShortReflexive,
  kLongReflexive,
  kPronoun,
  kNonPronoun,
  kNone,
};

enum class LocalityMode { kImmediate, kFirstFinite, kFirstIndicative, kUpstairs };

// Nominal annotation. A trace mentions markers introduced elsewhere (filler
// or relative-clause host) and contributes nothing of its own to LIST-LU.
struct NPInfo {
  AnaphorType anaphor_type = AnaphorType::kNone;
  std::optional<MarkerId> r_mark;
  std::optional<MarkerId> var;  // present iff quantificational
  bool quantificational = false;
  bool trace = false;
  // Number of the introduced r-mark. Quantificational NPs ignore it: their
  // r-mark is the plural sum and their var is singular.
  Number number = Number::kUnspecified;
  std::optional<LocalityMode> locality;  // per-item override

  bool operator==(const NPInfo&) const = default;
};

enum class Category { kDiscourse, kCtx, kSentence, kPhrase, kWord };

enum class Finiteness { kFinite, kNonfinite, kUnspecified };

enum class Mood { kIndicative, kSubjunctive, kOther, kUnspecified };

enum class OrderKind { kLinear, kSubjectOnly };

struct Slot {
  NodeId node = kNoNode;
  std::string gf;  // grammatical-function label, informational

  bool operator==(const Slot&) const = default;
};

// A predicator's subcategorisation frame. Slots are surface obliqueness
// order (Subject first). When a voice alternation borrows another voice's
// hierarchy, binding_base holds the base-order slots over the same nodes and
// all binding computations use it instead of the surface order.
struct ArgStructure {
  std::vector<Slot> slots;
  OrderKind order_kind = OrderKind::kLinear;
  std::optional<std::vector<Slot>> binding_base;

  const std::vector<Slot>& binding_slots() const {
    return binding_base ? *binding_base : slots;
  }

  bool operator==(const ArgStructure&) const = default;
};

struct Node {
  NodeId id = 0;
  Category category = Category::kPhrase;
  std::vector<NodeId> daughters;
  NodeId head = kNoNode;
  std::optional<NPInfo> np;
  std::optional<ArgStructure> predicator;
  Finiteness finiteness = Finiteness::kUnspecified;
  Mood mood = Mood::kUnspecified;
  NodeId spec_daughter = kNoNode;

  bool is_np() const { return np.has_value(); }

  bool operator==(const Node&) const = default;
};

enum class ReshuffleMode { kUpstairs, kNone };

struct LangParams {
  std::string name = "english";
  LocalityMode locality_mode = LocalityMode::kImmediate;
  ReshuffleMode reshuffle = ReshuffleMode::kNone;

  bool operator==(const LangParams&) const = default;
};

// Returns the registry entry for a known language name, if any.
std::optional<LangParams> lookup_language(const std::string& name);

// A validated, immutable annotated discourse: one synthetic discourse root
// with a ctx head daughter plus the sentence trees.
class Discourse {
 public:
  Discourse() = default;

  // Takes the sentence trees (each node uniquely identified), the context
  // markers, and the language. Synthesizes the discourse root and ctx nodes.
  // Node ids must be positive; the two synthetic nodes get the next free ids.
  static Discourse build(std::vector<Node> nodes,
                         std::vector<NodeId> sentence_roots,
                         std::vector<Marker> context_markers, LangParams lang);

  const LangParams& lang() const { return lang_; }
  NodeId root() const { return root_; }
  NodeId ctx_node() const { return ctx_; }
  const std::vector<NodeId>& sentences() const { return sentences_; }

  const Node* find(NodeId id) const;
  const Node& node(NodeId id) const;
  bool has_node(NodeId id) const { return find(id) != nullptr; }

  // All nodes in a stable order: root, ctx, then sentence subtrees in
  // document order (preorder).
  const std::vector<NodeId>& preorder() const { return preorder_; }

  NodeId parent(NodeId id) const;  // kNoNode for the root

  const Marker* find_marker(MarkerId id) const;
  const Marker& marker(MarkerId id) const;
  const std::vector<Marker>& context_markers() const { return context_markers_; }

  // Markers introduced by NPs (not traces), in document preorder; within a
  // quantificational NP the var precedes the r-mark.
  const std::vector<MarkerId>& introduced_markers() const {
    return introduced_;
  }

  // Marker ids mentioned by an NP node's annotation, var first. Traces
  // mention without introducing.
  static std::vector<MarkerId> mentioned_markers(const Node& n);

  bool is_ancestor_or_self(NodeId anc, NodeId desc) const;

 private:
  LangParams lang_;
  NodeId root_ = kNoNode;
  NodeId ctx_ = kNoNode;
  std::vector<NodeId> sentences_;
  std::vector<Node> nodes_;
  std::unordered_map<NodeId, size_t> index_;
  std::unordered_map<NodeId, NodeId> parent_;
  std::vector<NodeId> preorder_;
  std::vector<Marker> context_markers_;
  std::unordered_map<MarkerId, Marker> markers_;
  std::vector<MarkerId> introduced_;
};

struct Violation {
  std::string code;     // machine-readable, e.g. "E-DUP-MARKER"
  std::string message;  // human-readable, names offending node/marker ids
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

// Checks the structural invariants: unique ids, daughter acyclicity, slot
// references, var⇔quantificational, marker introduction/trace discipline,
// head/spec daughters, non-empty Text.
ValidationReport validate_discourse(const Discourse& d);

// Context markers first, then NP-introduced markers in document order.
std::vector<Marker> all_markers(const Discourse& d);

const char* to_string(AnaphorType t);
const char* to_string(Category c);
const char* to_string(MarkerKind k);
const char* to_string(Number n);
const char* to_string(LocalityMode m);
const char* to_string(OrderKind k);

}  // namespace binder

#endif  // BINDER_MODEL_HPP_
