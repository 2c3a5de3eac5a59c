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

#ifndef BINDER_PRINCIPLES_HPP_
#define BINDER_PRINCIPLES_HPP_

#include <vector>

#include "binder/bdp.hpp"
#include "binder/model.hpp"
#include "binder/obliqueness.hpp"

namespace binder {

// Which relational constraint governs an anaphor.
enum class Principle { kA, kZ, kB, kC };
const char* to_string(Principle p);

// The admissible-antecedent list of one anaphor. `removed` is filled by the
// reverse-constraint filter with the markers it dropped and the constraint
// ('E' or 'V') responsible.
struct AntecReport {
  MarkerId anaphor = 0;
  NodeId anaphor_node = kNoNode;
  Principle principle = Principle::kA;
  std::vector<MarkerId> antec;
  bool exempt = false;
  bool reshuffled = false;
  std::vector<NodeId> domain_nodes;
  std::vector<std::pair<MarkerId, char>> removed;
};

// A' for a reflexive: the o-commanders of w inside its local LIST-A, order
// preserved. Throws std::invalid_argument when w is not in the list.
std::vector<MarkerId> principle_a(const Discourse& d, const OCommandGraph& g,
                                  const std::vector<MarkerId>& list_a,
                                  MarkerId w);

// Z' for a long-distance reflexive over the (windowed) LIST-Z; same contract.
std::vector<MarkerId> principle_z(const Discourse& d, const OCommandGraph& g,
                                  const std::vector<MarkerId>& list_z,
                                  MarkerId w);

// B for a pronoun: LIST-U minus its local o-commanders and itself, LIST-U
// order preserved. Throws when w is not in list_u.
std::vector<MarkerId> principle_b(const Discourse& d, const OCommandGraph& g,
                                  const std::vector<MarkerId>& list_u,
                                  const std::vector<MarkerId>& list_a,
                                  MarkerId w);

// C for a non-pronoun: LIST-U minus all its o-commanders and itself.
std::vector<MarkerId> principle_c(const Discourse& d, const OCommandGraph& g,
                                  const std::vector<MarkerId>& list_u,
                                  const std::vector<MarkerId>& list_z,
                                  MarkerId w);

// For a reflexive with no commander in its own frame: the commanders
// available one predicator upstairs, in that frame's obliqueness order.
// Empty when there is no upstairs frame (exemption follows).
std::vector<MarkerId> reshuffle(NodeId w, const Discourse& d,
                                const FrameIndex& idx);

// Runs the applicable principle over every anaphor-typed NP, in document
// order. O-bottom reflexives try reshuffling when the language allows it and
// are marked exempt when still empty.
std::vector<AntecReport> apply_binding(const Discourse& d,
                                       const LangParams& p);
std::vector<AntecReport> apply_binding(const Discourse& d,
                                       const LangParams& p,
                                       const FrameIndex& idx,
                                       const OCommandGraph& g,
                                       const BindMap& lists);

}  // namespace binder

#endif  // BINDER_PRINCIPLES_HPP_
