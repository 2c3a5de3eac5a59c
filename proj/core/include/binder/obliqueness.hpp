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

#ifndef BINDER_OBLIQUENESS_HPP_
#define BINDER_OBLIQUENESS_HPP_

#include <cstdint>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "binder/model.hpp"

namespace binder {

// One predicator's argument frame resolved against the tree: for each
// binding slot, the markers realized at the slot position itself (group) and
// every marker inside the slot's subtree (closure). Groups look through one
// preposition level; clausal slots have empty groups.
struct SlotFrame {
  NodeId host = kNoNode;  // the node carrying the ArgStructure
  const ArgStructure* frag = nullptr;
  std::vector<std::vector<MarkerId>> groups;
  std::vector<std::vector<MarkerId>> closures;

  // True when slot i precedes slot j in the frame's obliqueness order.
  bool precedes(size_t i, size_t j) const {
    if (frag->order_kind == OrderKind::kSubjectOnly) return i == 0 && j > 0;
    return i < j;
  }
};

// All frames of a discourse plus reverse indices, built once per discourse.
struct FrameIndex {
  std::vector<SlotFrame> frames;
  // NP node -> (frame, slot) where the NP's markers sit in the slot group.
  // An NP realized in several frames (possessor of a relational noun that is
  // itself an argument) maps to the innermost one.
  std::unordered_map<NodeId, std::pair<size_t, size_t>> selecting_slot;
  // NP node -> list of (frame, slot) whose slot subtree contains the node,
  // innermost first.
  std::unordered_map<NodeId, std::vector<std::pair<size_t, size_t>>>
      containing_slots;
};

FrameIndex build_frame_index(const Discourse& d);

// Whether a node heads a clause-like constituent (its head chain reaches a
// predicator, or it is a sentence). Clausal slot fillers contribute no group
// markers; their contents are reached through closures only.
bool is_clausal(const Discourse& d, NodeId id);

// Result of a local-domain query. `found` is false when the anaphor is not
// selected by any predicator; callers must treat that case explicitly.
struct LocalDomain {
  bool found = false;
  std::vector<NodeId> nodes;       // slot nodes of the domain, in slot order
  std::vector<NodeId> predicators; // frame hosts contributing to the domain
};

// The strict partial order over markers and the local restriction used by
// resolution checking. Edges are encoded marker-id pairs.
class OCommandGraph {
 public:
  bool commands(MarkerId x, MarkerId y) const {
    return edges_.count(key(x, y)) != 0;
  }
  bool locally_commands(MarkerId x, MarkerId y) const {
    return local_edges_.count(key(x, y)) != 0;
  }

  const std::unordered_set<uint64_t>& edges() const { return edges_; }
  const std::unordered_set<uint64_t>& local_edges() const {
    return local_edges_;
  }
  const std::unordered_map<MarkerId, LocalDomain>& domains() const {
    return domains_;
  }

  static uint64_t key(MarkerId x, MarkerId y) {
    return (static_cast<uint64_t>(static_cast<uint32_t>(x)) << 32) |
           static_cast<uint32_t>(y);
  }

 private:
  friend OCommandGraph build_ocommand_graph(const Discourse& d,
                                            const FrameIndex& idx,
                                            const LangParams& p);
  std::unordered_set<uint64_t> edges_;
  std::unordered_set<uint64_t> local_edges_;
  std::unordered_map<MarkerId, LocalDomain> domains_;
};

OCommandGraph build_ocommand_graph(const Discourse& d, const FrameIndex& idx,
                                   const LangParams& p);
OCommandGraph build_ocommand_graph(const Discourse& d);

// The obliqueness order of one frame as explicit marker pairs (x before y),
// including the var-before-r-mark pairs contributed by quantificational
// slots. Pairs are deduplicated, slot order outermost.
std::vector<std::pair<MarkerId, MarkerId>> obliqueness_order(
    const Discourse& d, const ArgStructure& a);

// Convenience single-pair query; builds the graph, so prefer OCommandGraph
// for repeated queries.
bool o_command(MarkerId x, MarkerId y, const Discourse& d);

// The domain within which Principles A and Z search for antecedents of w
// (an anaphor NP node), per language mode. immediate: the directly selecting
// frame. first-finite / first-indicative: frames accumulated outward until
// the first clause with the closing feature. upstairs: only the frame one
// predicator up.
LocalDomain local_domain(NodeId w, const Discourse& d, const FrameIndex& idx,
                         const LangParams& p);
LocalDomain local_domain(NodeId w, const Discourse& d, const LangParams& p);

// True when no other marker in w's local obliqueness order commands w's
// marker (w is the least element of its frame).
bool is_o_bottom(NodeId w, const Discourse& d, const FrameIndex& idx);
bool is_o_bottom(NodeId w, const Discourse& d);

// Clause features seen by domain walks: the node's own values, else the
// nearest specified value down its head chain.
Finiteness clause_finiteness(const Discourse& d, NodeId clause);
Mood clause_mood(const Discourse& d, NodeId clause);

// The locality mode effective for anaphor node w (per-item override wins).
LocalityMode effective_locality(const Discourse& d, NodeId w,
                                const LangParams& p);

}  // namespace binder

#endif  // BINDER_OBLIQUENESS_HPP_
