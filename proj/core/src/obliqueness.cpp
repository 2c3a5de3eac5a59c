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

#include "binder/obliqueness.hpp"

#include <algorithm>

namespace binder {

namespace {

// Collects every marker mentioned by NPs in the subtree rooted at id,
// preorder. Trace mentions count: a filler's markers occupy its trace's
// position for command purposes.
void collect_closure(const Discourse& d, NodeId id,
                     std::vector<MarkerId>& out) {
  std::vector<NodeId> stack{id};
  while (!stack.empty()) {
    NodeId cur = stack.back();
    stack.pop_back();
    const Node* n = d.find(cur);
    if (!n) continue;
    if (n->np) {
      for (MarkerId m : Discourse::mentioned_markers(*n)) out.push_back(m);
    }
    for (auto it = n->daughters.rbegin(); it != n->daughters.rend(); ++it) {
      stack.push_back(*it);
    }
  }
}

// Markers realized at a slot position: the filler NP's own markers, or the
// markers of the NP complement one preposition level down. Clausal fillers
// contribute nothing here.
std::vector<MarkerId> slot_group(const Discourse& d, NodeId id) {
  const Node* n = d.find(id);
  if (!n) return {};
  if (n->np) return Discourse::mentioned_markers(*n);
  if (is_clausal(d, id)) return {};
  std::vector<MarkerId> out;
  for (NodeId dtr : n->daughters) {
    const Node* dn = d.find(dtr);
    if (dn && dn->np) {
      for (MarkerId m : Discourse::mentioned_markers(*dn)) out.push_back(m);
    }
  }
  return out;
}

}  // namespace

bool is_clausal(const Discourse& d, NodeId id) {
  for (NodeId cur = id; cur != kNoNode;) {
    const Node* n = d.find(cur);
    if (!n) return false;
    if (n->category == Category::kSentence) return true;
    if (n->predicator) return true;
    if (n->np) return false;  // nominal frames do not make a clause
    cur = n->head;
  }
  return false;
}

FrameIndex build_frame_index(const Discourse& d) {
  FrameIndex idx;
  for (NodeId id : d.preorder()) {
    const Node& n = d.node(id);
    if (!n.predicator) continue;
    SlotFrame f;
    f.host = id;
    f.frag = &*n.predicator;
    const std::vector<Slot>& slots = f.frag->binding_slots();
    f.groups.reserve(slots.size());
    f.closures.reserve(slots.size());
    for (const Slot& s : slots) {
      f.groups.push_back(slot_group(d, s.node));
      std::vector<MarkerId> closure;
      collect_closure(d, s.node, closure);
      f.closures.push_back(std::move(closure));
    }
    idx.frames.push_back(std::move(f));
  }

  // Reverse indices. Frames are in preorder, so the innermost frame claiming
  // an NP overwrites outer ones in selecting_slot only if the NP sits in its
  // slot group; containing_slots keeps all, innermost first after a sort.
  for (size_t fi = 0; fi < idx.frames.size(); ++fi) {
    const SlotFrame& f = idx.frames[fi];
    const std::vector<Slot>& slots = f.frag->binding_slots();
    for (size_t si = 0; si < slots.size(); ++si) {
      NodeId sn = slots[si].node;
      const Node* n = d.find(sn);
      if (!n) continue;
      std::vector<NodeId> bearers;
      if (n->np) {
        bearers.push_back(sn);
      } else if (!is_clausal(d, sn)) {
        for (NodeId dtr : n->daughters) {
          const Node* dn = d.find(dtr);
          if (dn && dn->np) bearers.push_back(dtr);
        }
      }
      for (NodeId b : bearers) {
        // Innermost frame wins: later frames are deeper in preorder.
        idx.selecting_slot[b] = {fi, si};
      }
      // Containment: every NP node inside the slot subtree.
      std::vector<NodeId> stack{sn};
      while (!stack.empty()) {
        NodeId cur = stack.back();
        stack.pop_back();
        const Node* cn = d.find(cur);
        if (!cn) continue;
        if (cn->np) idx.containing_slots[cur].push_back({fi, si});
        for (NodeId dtr : cn->daughters) stack.push_back(dtr);
      }
    }
  }
  // containing_slots entries were appended outermost-first (frames are in
  // preorder); flip to innermost-first.
  for (auto& [node, v] : idx.containing_slots) {
    std::reverse(v.begin(), v.end());
  }
  return idx;
}

std::vector<std::pair<MarkerId, MarkerId>> obliqueness_order(
    const Discourse& d, const ArgStructure& a) {
  std::vector<std::pair<MarkerId, MarkerId>> out;
  const std::vector<Slot>& slots = a.binding_slots();
  std::vector<std::vector<MarkerId>> groups;
  groups.reserve(slots.size());
  for (const Slot& s : slots) groups.push_back(slot_group(d, s.node));

  auto push = [&out](MarkerId x, MarkerId y) {
    if (x == y) return;
    auto p = std::make_pair(x, y);
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
  };

  for (size_t i = 0; i < groups.size(); ++i) {
    // var precedes the r-mark it abstracts over within one group.
    for (size_t a1 = 0; a1 + 1 < groups[i].size(); ++a1) {
      const Marker* m = d.find_marker(groups[i][a1]);
      const Marker* nm = d.find_marker(groups[i][a1 + 1]);
      if (m && nm && m->kind == MarkerKind::kVar && m->source == nm->source) {
        push(m->id, nm->id);
      }
    }
    for (size_t j = 0; j < groups.size(); ++j) {
      bool prec = a.order_kind == OrderKind::kSubjectOnly ? (i == 0 && j > 0)
                                                          : i < j;
      if (!prec) continue;
      for (MarkerId x : groups[i]) {
        for (MarkerId y : groups[j]) push(x, y);
      }
    }
  }
  return out;
}

OCommandGraph build_ocommand_graph(const Discourse& d, const FrameIndex& idx,
                                   const LangParams& p) {
  OCommandGraph g;
  for (const SlotFrame& f : idx.frames) {
    const size_t n = f.groups.size();
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = 0; j < n; ++j) {
        if (!f.precedes(i, j)) continue;
        for (MarkerId x : f.groups[i]) {
          for (MarkerId y : f.closures[j]) {
            if (x != y) g.edges_.insert(OCommandGraph::key(x, y));
          }
          for (MarkerId y : f.groups[j]) {
            if (x != y) g.local_edges_.insert(OCommandGraph::key(x, y));
          }
        }
      }
    }
  }
  // A quantificational NP's var sits immediately before its r-mark in the
  // obliqueness order, so the var commands the r-mark.
  for (const Marker& m : all_markers(d)) {
    if (m.kind != MarkerKind::kVar || m.source == kNoNode) continue;
    const Node* src = d.find(m.source);
    if (src && src->np && src->np->r_mark) {
      g.edges_.insert(OCommandGraph::key(m.id, *src->np->r_mark));
      g.local_edges_.insert(OCommandGraph::key(m.id, *src->np->r_mark));
    }
  }
  // Local edges are a restriction of the global relation.
  for (uint64_t e : g.local_edges_) g.edges_.insert(e);

  for (NodeId id : d.preorder()) {
    const Node& n = d.node(id);
    if (!n.np || n.np->trace) continue;
    if (n.np->anaphor_type == AnaphorType::kNone) continue;
    if (n.np->r_mark) {
      g.domains_[*n.np->r_mark] = local_domain(id, d, idx, p);
    }
  }
  return g;
}

OCommandGraph build_ocommand_graph(const Discourse& d) {
  return build_ocommand_graph(d, build_frame_index(d), d.lang());
}

bool o_command(MarkerId x, MarkerId y, const Discourse& d) {
  return build_ocommand_graph(d).commands(x, y);
}

Finiteness clause_finiteness(const Discourse& d, NodeId clause) {
  for (NodeId cur = clause; cur != kNoNode;) {
    const Node* n = d.find(cur);
    if (!n) break;
    if (n->finiteness != Finiteness::kUnspecified) return n->finiteness;
    cur = n->head;
  }
  return Finiteness::kUnspecified;
}

Mood clause_mood(const Discourse& d, NodeId clause) {
  for (NodeId cur = clause; cur != kNoNode;) {
    const Node* n = d.find(cur);
    if (!n) break;
    if (n->mood != Mood::kUnspecified) return n->mood;
    cur = n->head;
  }
  return Mood::kUnspecified;
}

LocalityMode effective_locality(const Discourse& d, NodeId w,
                                const LangParams& p) {
  const Node* n = d.find(w);
  if (n && n->np && n->np->locality) return *n->np->locality;
  return p.locality_mode;
}

namespace {

// The chain of frames selecting w: first the frame whose slot group realizes
// w directly (if any), then outward every frame whose slot subtree contains
// w, innermost first.
std::vector<std::pair<size_t, size_t>> frame_chain(const FrameIndex& idx,
                                                   NodeId w) {
  std::vector<std::pair<size_t, size_t>> chain;
  auto cit = idx.containing_slots.find(w);
  if (cit != idx.containing_slots.end()) chain = cit->second;
  auto sit = idx.selecting_slot.find(w);
  if (sit != idx.selecting_slot.end()) {
    // Make sure the directly selecting frame leads the chain.
    auto pos = std::find(chain.begin(), chain.end(), sit->second);
    if (pos != chain.end()) chain.erase(pos);
    chain.insert(chain.begin(), sit->second);
  }
  return chain;
}

// The clause whose features close off a frame: the nearest clausal ancestor
// of the frame host (or the host itself).
NodeId frame_clause(const Discourse& d, NodeId host) {
  for (NodeId cur = host; cur != kNoNode; cur = d.parent(cur)) {
    const Node* n = d.find(cur);
    if (n && (n->category == Category::kSentence ||
              (n->predicator && cur == host))) {
      if (n->category == Category::kSentence) return cur;
    }
  }
  return host;
}

void append_frame(const FrameIndex& idx, size_t fi, LocalDomain& dom) {
  const SlotFrame& f = idx.frames[fi];
  dom.predicators.push_back(f.host);
  for (const Slot& s : f.frag->binding_slots()) dom.nodes.push_back(s.node);
}

}  // namespace

LocalDomain local_domain(NodeId w, const Discourse& d, const FrameIndex& idx,
                         const LangParams& p) {
  LocalDomain dom;
  std::vector<std::pair<size_t, size_t>> chain = frame_chain(idx, w);
  auto sit = idx.selecting_slot.find(w);
  bool directly_selected =
      sit != idx.selecting_slot.end() && !chain.empty() &&
      chain.front() == sit->second;
  if (chain.empty()) return dom;

  LocalityMode mode = effective_locality(d, w, p);
  switch (mode) {
    case LocalityMode::kImmediate: {
      if (!directly_selected) return dom;
      dom.found = true;
      append_frame(idx, chain[0].first, dom);
      return dom;
    }
    case LocalityMode::kFirstFinite:
    case LocalityMode::kFirstIndicative: {
      if (!directly_selected) return dom;
      dom.found = true;
      for (size_t k = 0; k < chain.size(); ++k) {
        append_frame(idx, chain[k].first, dom);
        NodeId clause = frame_clause(d, idx.frames[chain[k].first].host);
        bool transparent;
        if (mode == LocalityMode::kFirstFinite) {
          transparent = clause_finiteness(d, clause) == Finiteness::kNonfinite;
        } else {
          transparent = clause_mood(d, clause) == Mood::kSubjunctive ||
                        clause_finiteness(d, clause) == Finiteness::kNonfinite;
        }
        if (!transparent) break;
      }
      return dom;
    }
    case LocalityMode::kUpstairs: {
      // The domain is the immediately upward frame only, skipping the
      // directly selecting one.
      size_t start = directly_selected ? 1 : 0;
      if (chain.size() <= start) return dom;
      dom.found = true;
      append_frame(idx, chain[start].first, dom);
      return dom;
    }
  }
  return dom;
}

LocalDomain local_domain(NodeId w, const Discourse& d, const LangParams& p) {
  return local_domain(w, d, build_frame_index(d), p);
}

bool is_o_bottom(NodeId w, const Discourse& d, const FrameIndex& idx) {
  const Node* n = d.find(w);
  if (!n || !n->np) return true;
  std::vector<MarkerId> own = Discourse::mentioned_markers(*n);
  if (own.empty()) return true;
  MarkerId wm = own.back();  // the r-mark

  auto sit = idx.selecting_slot.find(w);
  if (sit == idx.selecting_slot.end()) return true;
  const SlotFrame& f = idx.frames[sit->second.first];
  size_t wj = sit->second.second;
  for (size_t i = 0; i < f.groups.size(); ++i) {
    if (!f.precedes(i, wj)) continue;
    for (MarkerId x : f.groups[i]) {
      if (std::find(own.begin(), own.end(), x) == own.end()) return false;
    }
  }
  return true;
}

bool is_o_bottom(NodeId w, const Discourse& d) {
  return is_o_bottom(w, d, build_frame_index(d));
}

}  // namespace binder
