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

#include "binder/bdp.hpp"

#include <algorithm>
#include <unordered_set>

namespace binder {

namespace {

std::vector<MarkerId> slot_group_markers(const Discourse& d, NodeId id) {
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

void append_unique(std::vector<MarkerId>& dst, const std::vector<MarkerId>& src) {
  for (MarkerId m : src) {
    if (std::find(dst.begin(), dst.end(), m) == dst.end()) dst.push_back(m);
  }
}

std::vector<MarkerId> remove_members(const std::vector<MarkerId>& from,
                                     const std::unordered_set<MarkerId>& drop) {
  std::vector<MarkerId> out;
  out.reserve(from.size());
  for (MarkerId m : from) {
    if (!drop.count(m)) out.push_back(m);
  }
  return out;
}

}  // namespace

std::vector<MarkerId> lexical_arg_lists(const Discourse& d,
                                        const ArgStructure& a) {
  std::vector<MarkerId> out;
  for (const Slot& s : a.binding_slots()) {
    append_unique(out, slot_group_markers(d, s.node));
  }
  return out;
}

NodeId reading_node(const Discourse& d, const FrameIndex& idx, NodeId w) {
  if (idx.selecting_slot.count(w) || idx.containing_slots.count(w)) return w;
  // Dislocated filler: its lists live at the trace mentioning its markers.
  const Node* n = d.find(w);
  if (!n || !n->np) return w;
  std::vector<MarkerId> own = Discourse::mentioned_markers(*n);
  for (NodeId id : d.preorder()) {
    const Node& t = d.node(id);
    if (!t.np || !t.np->trace) continue;
    for (MarkerId m : Discourse::mentioned_markers(t)) {
      if (std::find(own.begin(), own.end(), m) != own.end()) return id;
    }
  }
  return w;
}

BindMap propagate(const Discourse& d, const FrameIndex& idx,
                  const OCommandGraph& g) {
  BindMap m;
  for (NodeId id : d.preorder()) m[id];

  // LIST-A, argument sharing: each frame assigns its list to the host and to
  // every argument realization (slot node, its nominal inside a preposition
  // phrase, traces included). Outer frames run first and win shared nodes.
  for (const SlotFrame& f : idx.frames) {
    std::vector<MarkerId> a = lexical_arg_lists(d, *f.frag);
    auto assign = [&m, &a](NodeId id) {
      BindLists& bl = m[id];
      if (bl.list_a.empty()) bl.list_a = a;
    };
    assign(f.host);
    for (const Slot& s : f.frag->slots) {
      // A clausal argument keeps the list of the frame it hosts; only
      // nominal and oblique realizations share the selecting frame's list.
      if (is_clausal(d, s.node)) continue;
      assign(s.node);
      const Node* sn = d.find(s.node);
      if (sn && !sn->np) {
        for (NodeId dtr : sn->daughters) {
          const Node* dn = d.find(dtr);
          if (dn && dn->np) assign(dtr);
        }
      }
    }
  }
  // Projection sharing, children before parents: a phrase inherits its
  // head's list, a specified nominal its Specifier's.
  const std::vector<NodeId>& pre = d.preorder();
  for (auto it = pre.rbegin(); it != pre.rend(); ++it) {
    const Node& n = d.node(*it);
    BindLists& bl = m[*it];
    if (!bl.list_a.empty()) continue;
    if (n.np && n.spec_daughter != kNoNode &&
        !m[n.spec_daughter].list_a.empty()) {
      bl.list_a = m[n.spec_daughter].list_a;
    } else if (n.head != kNoNode && !m[n.head].list_a.empty()) {
      bl.list_a = m[n.head].list_a;
    }
  }
  // Spec daughters of frame-less nominals share the host's list.
  for (NodeId id : pre) {
    const Node& n = d.node(id);
    if (n.np && n.spec_daughter != kNoNode &&
        m[n.spec_daughter].list_a.empty()) {
      m[n.spec_daughter].list_a = m[id].list_a;
    }
  }

  // LIST-LU bottom-up. An NP contributes its own markers after its
  // Specifier's contribution (the determiner position); traces contribute
  // nothing of their own.
  for (auto it = pre.rbegin(); it != pre.rend(); ++it) {
    const Node& n = d.node(*it);
    BindLists& bl = m[*it];
    if (n.category == Category::kCtx) {
      for (const Marker& cm : d.context_markers()) bl.list_lu.push_back(cm.id);
      continue;
    }
    std::vector<MarkerId> own;
    if (n.np && !n.np->trace) own = Discourse::mentioned_markers(n);
    if (n.np && n.spec_daughter != kNoNode) {
      for (MarkerId x : m[n.spec_daughter].list_lu) bl.list_lu.push_back(x);
      for (MarkerId x : own) bl.list_lu.push_back(x);
      for (NodeId dtr : n.daughters) {
        if (dtr == n.spec_daughter) continue;
        for (MarkerId x : m[dtr].list_lu) bl.list_lu.push_back(x);
      }
    } else {
      for (MarkerId x : own) bl.list_lu.push_back(x);
      for (NodeId dtr : n.daughters) {
        for (MarkerId x : m[dtr].list_lu) bl.list_lu.push_back(x);
      }
    }
  }

  // LIST-U: the root adopts its LIST-LU and the value percolates down. At a
  // specified NP the Spec daughter loses the head's LIST-A members (minus
  // its own markers) and the head daughter loses the Spec's and the host's
  // markers.
  m[d.root()].list_u = m[d.root()].list_lu;
  for (NodeId id : pre) {
    const Node& n = d.node(id);
    const BindLists& bl = m[id];
    bool np_with_spec = n.np && n.spec_daughter != kNoNode;
    for (NodeId dtr : n.daughters) {
      if (!np_with_spec) {
        m[dtr].list_u = bl.list_u;
        continue;
      }
      if (dtr == n.spec_daughter) {
        std::unordered_set<MarkerId> drop;
        if (n.head != kNoNode) {
          for (MarkerId x : m[n.head].list_a) drop.insert(x);
        }
        const Node* s = d.find(dtr);
        if (s && s->np) {
          for (MarkerId x : Discourse::mentioned_markers(*s)) drop.erase(x);
        }
        m[dtr].list_u = remove_members(bl.list_u, drop);
      } else if (dtr == n.head) {
        std::unordered_set<MarkerId> drop;
        const Node* s = d.find(n.spec_daughter);
        if (s && s->np) {
          for (MarkerId x : Discourse::mentioned_markers(*s)) drop.insert(x);
        }
        for (MarkerId x : Discourse::mentioned_markers(n)) drop.insert(x);
        m[dtr].list_u = remove_members(bl.list_u, drop);
      } else {
        m[dtr].list_u = bl.list_u;
      }
    }
  }

  // LIST-Z top-down: reset at top-level sentences, extended at embedded
  // sentences, rebuilt from the Specifier's commanders at specified nominal
  // heads, inherited everywhere else.
  for (NodeId id : pre) {
    const Node& n = d.node(id);
    const BindLists& bl = m[id];
    for (NodeId dtr : n.daughters) {
      const Node* dn = d.find(dtr);
      if (!dn) continue;
      BindLists& db = m[dtr];
      bool text_daughter = id == d.root() && dn->category != Category::kCtx;
      if (text_daughter) {
        db.list_z = db.list_a;
        db.z_offsets = {0};
        db.z_clauses = {dtr};
      } else if (dn->category == Category::kSentence) {
        db.list_z = bl.list_z;
        db.z_offsets = bl.z_offsets;
        db.z_clauses = bl.z_clauses;
        db.z_offsets.push_back(static_cast<int>(db.list_z.size()));
        db.z_clauses.push_back(dtr);
        append_unique(db.list_z, db.list_a);
      } else if (n.np && dtr == n.head && n.spec_daughter != kNoNode) {
        const Node* s = d.find(n.spec_daughter);
        MarkerId anchor = 0;
        bool have_anchor = false;
        if (s && s->np) {
          if (s->np->var) {
            anchor = *s->np->var;
            have_anchor = true;
          } else if (s->np->r_mark) {
            anchor = *s->np->r_mark;
            have_anchor = true;
          }
        }
        std::vector<MarkerId> commanders;
        if (have_anchor) {
          for (MarkerId x : bl.list_z) {
            if (g.commands(x, anchor)) commanders.push_back(x);
          }
        }
        db.list_z = commanders;
        db.z_offsets = {0, static_cast<int>(commanders.size())};
        db.z_clauses = {id, dtr};
        append_unique(db.list_z, db.list_a);
      } else {
        db.list_z = bl.list_z;
        db.z_offsets = bl.z_offsets;
        db.z_clauses = bl.z_clauses;
      }
    }
  }
  return m;
}

BindMap propagate(const Discourse& d) {
  FrameIndex idx = build_frame_index(d);
  OCommandGraph g = build_ocommand_graph(d, idx, d.lang());
  return propagate(d, idx, g);
}

ZWindow select_z_window(const Discourse& d, const BindLists& bl,
                        LocalityMode mode) {
  ZWindow w;
  w.end = static_cast<int>(bl.list_z.size());
  if (bl.z_offsets.empty()) return w;
  size_t k = bl.z_offsets.size() - 1;  // the anaphor's own segment

  switch (mode) {
    case LocalityMode::kImmediate:
      w.begin = 0;
      w.clauses = bl.z_clauses;
      return w;
    case LocalityMode::kFirstFinite:
    case LocalityMode::kFirstIndicative: {
      size_t start = k;
      while (start > 0) {
        NodeId clause = bl.z_clauses[start];
        bool transparent;
        if (mode == LocalityMode::kFirstFinite) {
          transparent = clause_finiteness(d, clause) == Finiteness::kNonfinite;
        } else {
          transparent = clause_mood(d, clause) == Mood::kSubjunctive ||
                        clause_finiteness(d, clause) == Finiteness::kNonfinite;
        }
        if (!transparent) break;
        --start;
      }
      w.begin = bl.z_offsets[start];
      w.clauses.assign(bl.z_clauses.begin() + start, bl.z_clauses.end());
      return w;
    }
    case LocalityMode::kUpstairs: {
      if (k == 0) {
        w.begin = w.end = 0;  // no parent segment
        return w;
      }
      w.begin = bl.z_offsets[k - 1];
      w.end = bl.z_offsets[k];
      w.clauses = {bl.z_clauses[k - 1]};
      return w;
    }
  }
  return w;
}

}  // namespace binder
