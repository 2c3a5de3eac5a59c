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

#include "binder/principles.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace binder {

const char* to_string(Principle p) {
  switch (p) {
    case Principle::kA: return "A";
    case Principle::kZ: return "Z";
    case Principle::kB: return "B";
    case Principle::kC: return "C";
  }
  return "?";
}

namespace {

void require_member(const std::vector<MarkerId>& list, MarkerId w,
                    const char* which) {
  if (std::find(list.begin(), list.end(), w) == list.end()) {
    throw std::invalid_argument(std::string("marker ") + std::to_string(w) +
                                " not in " + which);
  }
}

// Markers the anaphor's own NP mentions; never admissible for it.
std::unordered_set<MarkerId> own_markers(const Discourse& d, MarkerId w) {
  std::unordered_set<MarkerId> own{w};
  const Marker* m = d.find_marker(w);
  if (m && m->source != kNoNode) {
    const Node* n = d.find(m->source);
    if (n && n->np) {
      for (MarkerId x : Discourse::mentioned_markers(*n)) own.insert(x);
    }
  }
  return own;
}

std::vector<MarkerId> commanders_in(const Discourse& d, const OCommandGraph& g,
                                    const std::vector<MarkerId>& list,
                                    MarkerId w) {
  std::unordered_set<MarkerId> own = own_markers(d, w);
  std::vector<MarkerId> out;
  std::unordered_set<MarkerId> seen;
  for (MarkerId x : list) {
    if (own.count(x) || !g.commands(x, w)) continue;
    if (seen.insert(x).second) out.push_back(x);
  }
  return out;
}

std::vector<MarkerId> subtract(const Discourse& d,
                               const std::vector<MarkerId>& universe,
                               const std::vector<MarkerId>& commanders,
                               MarkerId w) {
  std::unordered_set<MarkerId> drop(commanders.begin(), commanders.end());
  for (MarkerId x : own_markers(d, w)) drop.insert(x);
  std::vector<MarkerId> out;
  std::unordered_set<MarkerId> seen;
  for (MarkerId x : universe) {
    if (drop.count(x)) continue;
    if (seen.insert(x).second) out.push_back(x);
  }
  return out;
}

}  // namespace

std::vector<MarkerId> principle_a(const Discourse& d, const OCommandGraph& g,
                                  const std::vector<MarkerId>& list_a,
                                  MarkerId w) {
  require_member(list_a, w, "LIST-A");
  return commanders_in(d, g, list_a, w);
}

std::vector<MarkerId> principle_z(const Discourse& d, const OCommandGraph& g,
                                  const std::vector<MarkerId>& list_z,
                                  MarkerId w) {
  require_member(list_z, w, "LIST-Z");
  return commanders_in(d, g, list_z, w);
}

std::vector<MarkerId> principle_b(const Discourse& d, const OCommandGraph& g,
                                  const std::vector<MarkerId>& list_u,
                                  const std::vector<MarkerId>& list_a,
                                  MarkerId w) {
  require_member(list_u, w, "LIST-U");
  return subtract(d, list_u, commanders_in(d, g, list_a, w), w);
}

std::vector<MarkerId> principle_c(const Discourse& d, const OCommandGraph& g,
                                  const std::vector<MarkerId>& list_u,
                                  const std::vector<MarkerId>& list_z,
                                  MarkerId w) {
  require_member(list_u, w, "LIST-U");
  return subtract(d, list_u, commanders_in(d, g, list_z, w), w);
}

std::vector<MarkerId> reshuffle(NodeId w, const Discourse& d,
                                const FrameIndex& idx) {
  const Node* n = d.find(w);
  if (!n || !n->np) return {};
  std::vector<MarkerId> own = Discourse::mentioned_markers(*n);

  auto cit = idx.containing_slots.find(w);
  if (cit == idx.containing_slots.end() || cit->second.empty()) return {};
  const auto& chain = cit->second;
  auto sit = idx.selecting_slot.find(w);
  size_t up = 0;
  if (sit != idx.selecting_slot.end() && chain.front() == sit->second) up = 1;
  if (chain.size() <= up) return {};

  const SlotFrame& f = idx.frames[chain[up].first];
  size_t host_slot = chain[up].second;
  std::vector<MarkerId> out;
  for (size_t i = 0; i < f.groups.size(); ++i) {
    if (!f.precedes(i, host_slot)) continue;
    for (MarkerId x : f.groups[i]) {
      if (std::find(own.begin(), own.end(), x) != own.end()) continue;
      if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
    }
  }
  return out;
}

namespace {

Principle principle_for(AnaphorType t) {
  switch (t) {
    case AnaphorType::kShortReflexive: return Principle::kA;
    case AnaphorType::kLongReflexive: return Principle::kZ;
    case AnaphorType::kPronoun: return Principle::kB;
    default: return Principle::kC;
  }
}

}  // namespace

std::vector<AntecReport> apply_binding(const Discourse& d,
                                       const LangParams& p,
                                       const FrameIndex& idx,
                                       const OCommandGraph& g,
                                       const BindMap& lists) {
  std::vector<AntecReport> reports;
  for (NodeId id : d.preorder()) {
    const Node& n = d.node(id);
    if (!n.np || n.np->trace) continue;
    if (n.np->anaphor_type == AnaphorType::kNone) continue;
    if (!n.np->r_mark) continue;
    MarkerId w = *n.np->r_mark;

    AntecReport r;
    r.anaphor = w;
    r.anaphor_node = id;
    r.principle = principle_for(n.np->anaphor_type);

    NodeId rn = reading_node(d, idx, id);
    auto lit = lists.find(rn);
    static const BindLists kEmpty;
    const BindLists& bl = lit == lists.end() ? kEmpty : lit->second;

    LocalDomain dom = local_domain(id, d, idx, p);
    if (dom.found) r.domain_nodes = dom.nodes;

    switch (r.principle) {
      case Principle::kA:
        r.antec = principle_a(d, g, bl.list_a, w);
        break;
      case Principle::kZ: {
        LocalityMode mode = effective_locality(d, id, p);
        if (mode == LocalityMode::kUpstairs) {
          // The accessible zone is the frame one predicator up; the strict
          // list operation does not apply since w is outside that zone.
          ZWindow zw = select_z_window(d, bl, mode);
          std::vector<MarkerId> window(bl.list_z.begin() + zw.begin,
                                       bl.list_z.begin() + zw.end);
          r.antec = commanders_in(d, g, window, w);
          r.domain_nodes = zw.clauses;
        } else {
          ZWindow zw = select_z_window(d, bl, mode);
          std::vector<MarkerId> window(bl.list_z.begin() + zw.begin,
                                       bl.list_z.begin() + zw.end);
          r.antec = principle_z(d, g, window, w);
          r.domain_nodes = zw.clauses;
        }
        break;
      }
      case Principle::kB:
        r.antec = principle_b(d, g, bl.list_u, bl.list_a, w);
        break;
      case Principle::kC:
        r.antec = principle_c(d, g, bl.list_u, bl.list_z, w);
        break;
    }

    if ((r.principle == Principle::kA || r.principle == Principle::kZ) &&
        r.antec.empty()) {
      if (p.reshuffle == ReshuffleMode::kUpstairs) {
        std::vector<MarkerId> rs = reshuffle(id, d, idx);
        if (!rs.empty()) {
          r.antec = std::move(rs);
          r.reshuffled = true;
          auto cit = idx.containing_slots.find(id);
          size_t up = 0;
          if (cit != idx.containing_slots.end()) {
            auto sit = idx.selecting_slot.find(id);
            if (sit != idx.selecting_slot.end() &&
                cit->second.front() == sit->second) {
              up = 1;
            }
            if (cit->second.size() > up) {
              const SlotFrame& f = idx.frames[cit->second[up].first];
              r.domain_nodes.clear();
              for (const Slot& s : f.frag->binding_slots()) {
                r.domain_nodes.push_back(s.node);
              }
            }
          }
        }
      }
      r.exempt = r.antec.empty();
    }
    reports.push_back(std::move(r));
  }
  return reports;
}

std::vector<AntecReport> apply_binding(const Discourse& d,
                                       const LangParams& p) {
  FrameIndex idx = build_frame_index(d);
  OCommandGraph g = build_ocommand_graph(d, idx, p);
  BindMap lists = propagate(d, idx, g);
  return apply_binding(d, p, idx, g, lists);
}

}  // namespace binder
