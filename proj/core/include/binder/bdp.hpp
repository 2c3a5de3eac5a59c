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

#ifndef BINDER_BDP_HPP_
#define BINDER_BDP_HPP_

#include <unordered_map>
#include <vector>

#include "binder/model.hpp"
#include "binder/obliqueness.hpp"

namespace binder {

// The four binding lists of one node. list_z is segmented: z_offsets holds
// the start of each clause segment (outermost first) and z_clauses the node
// whose features close that segment off, so principle application can select
// a language-dependent window.
struct BindLists {
  std::vector<MarkerId> list_a;
  std::vector<MarkerId> list_z;
  std::vector<MarkerId> list_u;
  std::vector<MarkerId> list_lu;
  std::vector<int> z_offsets;
  std::vector<NodeId> z_clauses;
};

using BindMap = std::unordered_map<NodeId, BindLists>;

// The markers a frame contributes to LIST-A: slot groups concatenated in
// binding order, a quantificational slot yielding its var immediately before
// its r-mark.
std::vector<MarkerId> lexical_arg_lists(const Discourse& d,
                                        const ArgStructure& a);

// Propagates all four lists over every node:
//  - list_lu collects marker contributions bottom-up and becomes list_u at
//    the discourse root, which percolates back down; inside an NP with a
//    Specifier, the Spec daughter drops the head's LIST-A members and the
//    head daughter drops the Spec's (and the host's) markers, blocking
//    self-reference loops;
//  - list_a is shared between a frame host, its argument positions (through
//    one preposition level and into traces) and its projections;
//  - list_z restarts at each top-level sentence, grows by the local LIST-A
//    at every embedded sentence, and at the head of a specified nominal is
//    rebuilt from the commanders of the Specifier's marker.
BindMap propagate(const Discourse& d);
BindMap propagate(const Discourse& d, const FrameIndex& idx,
                  const OCommandGraph& g);

// The node whose lists govern an anaphor NP: the NP itself when it occupies
// an argument position, its trace when it is a dislocated filler.
NodeId reading_node(const Discourse& d, const FrameIndex& idx, NodeId w);

// The sub-range of list_z visible to a long-distance reflexive at the given
// reading node under a locality mode. Returns {start, end} indices into
// list_z; an empty range means no accessible window (upstairs mode at the
// top clause).
struct ZWindow {
  int begin = 0;
  int end = 0;
  std::vector<NodeId> clauses;  // clause nodes of the selected segments
  bool empty() const { return begin >= end; }
};
ZWindow select_z_window(const Discourse& d, const BindLists& bl,
                        LocalityMode mode);

}  // namespace binder

#endif  // BINDER_BDP_HPP_
