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

#include "binder/transitivity.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace binder {

namespace {

// Index of every marker in document order, for deterministic output.
std::unordered_map<MarkerId, std::size_t> marker_positions(const Discourse& d) {
  std::unordered_map<MarkerId, std::size_t> pos;
  std::size_t i = 0;
  for (const Marker& m : all_markers(d)) pos.emplace(m.id, i++);
  return pos;
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
};

void require_link_markers(const std::vector<AnaphoricLink>& links,
                          const Discourse& d) {
  for (const AnaphoricLink& link : links) {
    if (d.find_marker(link.anaphor) == nullptr) {
      throw std::invalid_argument("link references unknown marker " +
                                  std::to_string(link.anaphor));
    }
    for (MarkerId m : link.antecedents) {
      if (d.find_marker(m) == nullptr) {
        throw std::invalid_argument("link references unknown marker " +
                                    std::to_string(m));
      }
    }
  }
}

// Strongly connected components of the anaphor-to-antecedent digraph,
// iterative Tarjan. Returns a component id per node.
std::vector<std::size_t> strongly_connected(
    std::size_t n, const std::vector<std::vector<std::size_t>>& adj) {
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(n, kUnset);
  std::vector<std::size_t> lowlink(n, 0);
  std::vector<std::size_t> component(n, kUnset);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::size_t next_index = 0;
  std::size_t next_component = 0;

  struct Frame {
    std::size_t node;
    std::size_t next_edge;
  };

  for (std::size_t start = 0; start < n; ++start) {
    if (index[start] != kUnset) continue;
    std::vector<Frame> work;
    work.push_back({start, 0});
    index[start] = lowlink[start] = next_index++;
    stack.push_back(start);
    on_stack[start] = true;
    while (!work.empty()) {
      Frame& frame = work.back();
      std::size_t v = frame.node;
      if (frame.next_edge < adj[v].size()) {
        std::size_t w = adj[v][frame.next_edge++];
        if (index[w] == kUnset) {
          index[w] = lowlink[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = true;
          work.push_back({w, 0});
        } else if (on_stack[w]) {
          lowlink[v] = std::min(lowlink[v], index[w]);
        }
      } else {
        if (lowlink[v] == index[v]) {
          std::size_t member;
          do {
            member = stack.back();
            stack.pop_back();
            on_stack[member] = false;
            component[member] = next_component;
          } while (member != v);
          ++next_component;
        }
        work.pop_back();
        if (!work.empty()) {
          std::size_t parent = work.back().node;
          lowlink[parent] = std::min(lowlink[parent], lowlink[v]);
        }
      }
    }
  }
  return component;
}

}  // namespace

const char* to_string(LinkType t) {
  switch (t) {
    case LinkType::kCoreference:
      return "coreference";
    case LinkType::kSplit:
      return "split";
    case LinkType::kBridging:
      return "bridging";
    case LinkType::kEType:
      return "e-type";
    case LinkType::kBound:
      return "bound";
  }
  return "coreference";
}

bool link_type_from_string(std::string_view text, LinkType* out) {
  if (text == "coreference") {
    *out = LinkType::kCoreference;
  } else if (text == "split") {
    *out = LinkType::kSplit;
  } else if (text == "bridging") {
    *out = LinkType::kBridging;
  } else if (text == "e-type") {
    *out = LinkType::kEType;
  } else if (text == "bound") {
    *out = LinkType::kBound;
  } else {
    return false;
  }
  return true;
}

std::vector<std::vector<MarkerId>> coref_closure(
    const std::vector<AnaphoricLink>& links, const Discourse& d) {
  std::vector<MarkerId> order;
  for (const Marker& m : all_markers(d)) order.push_back(m.id);
  std::unordered_map<MarkerId, std::size_t> pos = marker_positions(d);
  UnionFind uf(order.size());
  for (const AnaphoricLink& link : links) {
    if (link.type != LinkType::kCoreference) continue;
    auto a = pos.find(link.anaphor);
    if (a == pos.end()) continue;
    for (MarkerId m : link.antecedents) {
      auto b = pos.find(m);
      if (b != pos.end()) uf.unite(a->second, b->second);
    }
  }
  std::unordered_map<std::size_t, std::size_t> class_of_root;
  std::vector<std::vector<MarkerId>> classes;
  for (std::size_t i = 0; i < order.size(); ++i) {
    std::size_t root = uf.find(i);
    auto [it, inserted] = class_of_root.emplace(root, classes.size());
    if (inserted) classes.emplace_back();
    classes[it->second].push_back(order[i]);
  }
  return classes;
}

std::vector<ResolutionViolation> check_resolution(
    const std::vector<AnaphoricLink>& links,
    const std::vector<AntecReport>& reports, const Discourse& d,
    const OCommandGraph& g) {
  require_link_markers(links, d);

  std::unordered_map<MarkerId, const AntecReport*> report_of;
  for (const AntecReport& r : reports) report_of.emplace(r.anaphor, &r);

  std::vector<ResolutionViolation> out;
  for (const std::vector<MarkerId>& cls : coref_closure(links, d)) {
    if (cls.size() < 2) continue;
    for (MarkerId y : cls) {
      auto it = report_of.find(y);
      if (it == report_of.end()) continue;
      Principle p = it->second->principle;
      if (p != Principle::kB && p != Principle::kC) continue;
      for (MarkerId x : cls) {
        if (x == y) continue;
        if (p == Principle::kB && g.locally_commands(x, y)) {
          out.push_back({"B", y, x,
                         "coreferent " + std::to_string(x) +
                             " locally commands pronoun " + std::to_string(y)});
        } else if (p == Principle::kC && g.commands(x, y)) {
          out.push_back({"C", y, x,
                         "coreferent " + std::to_string(x) +
                             " commands non-pronoun " + std::to_string(y)});
        }
      }
    }
  }

  // Dependency cycles: collect the link digraph and flag every strongly
  // connected component that a non-coreference link runs through.
  std::vector<MarkerId> nodes;
  std::unordered_map<MarkerId, std::size_t> node_index;
  auto intern = [&](MarkerId m) {
    auto [it, inserted] = node_index.emplace(m, nodes.size());
    if (inserted) nodes.push_back(m);
    return it->second;
  };
  struct Edge {
    std::size_t from;
    std::size_t to;
    bool coref;
  };
  std::vector<Edge> edges;
  for (const AnaphoricLink& link : links) {
    std::size_t from = intern(link.anaphor);
    for (MarkerId m : link.antecedents) {
      edges.push_back({from, intern(m), link.type == LinkType::kCoreference});
    }
  }
  std::vector<std::vector<std::size_t>> adj(nodes.size());
  for (const Edge& e : edges) adj[e.from].push_back(e.to);
  std::vector<std::size_t> component = strongly_connected(nodes.size(), adj);

  std::unordered_set<std::size_t> looping;
  for (const Edge& e : edges) {
    if (!e.coref && component[e.from] == component[e.to]) {
      looping.insert(component[e.from]);
    }
  }
  if (!looping.empty()) {
    std::unordered_map<MarkerId, std::size_t> pos = marker_positions(d);
    std::vector<std::vector<MarkerId>> members(
        *std::max_element(component.begin(), component.end()) + 1);
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      members[component[i]].push_back(nodes[i]);
    }
    std::vector<std::size_t> ordered(looping.begin(), looping.end());
    for (std::vector<MarkerId>& m : members) {
      std::sort(m.begin(), m.end(),
                [&](MarkerId a, MarkerId b) { return pos[a] < pos[b]; });
    }
    std::sort(ordered.begin(), ordered.end(), [&](std::size_t a, std::size_t b) {
      return pos[members[a].front()] < pos[members[b].front()];
    });
    for (std::size_t c : ordered) {
      std::string text = "markers";
      for (MarkerId m : members[c]) text += " " + std::to_string(m);
      text += " are the sole antecedents of each other";
      out.push_back({"loop", members[c].front(), kNoMarker, text});
    }
  }
  return out;
}

std::vector<ResolutionViolation> check_resolution(
    const std::vector<AnaphoricLink>& links,
    const std::vector<AntecReport>& reports, const Discourse& d) {
  return check_resolution(links, reports, d, build_ocommand_graph(d));
}

std::vector<AntecReport> augment_reports(
    const std::vector<AntecReport>& reports,
    const std::vector<AnaphoricLink>& links, const Discourse& d) {
  std::vector<std::vector<MarkerId>> classes = coref_closure(links, d);
  std::unordered_map<MarkerId, std::size_t> class_of;
  for (std::size_t c = 0; c < classes.size(); ++c) {
    for (MarkerId m : classes[c]) class_of.emplace(m, c);
  }
  std::vector<AntecReport> out = reports;
  for (AntecReport& report : out) {
    auto it = class_of.find(report.anaphor);
    if (it == class_of.end()) continue;
    std::unordered_set<MarkerId> present(report.antec.begin(),
                                         report.antec.end());
    for (MarkerId m : classes[it->second]) {
      if (m == report.anaphor || present.count(m) > 0) continue;
      report.antec.push_back(m);
      present.insert(m);
    }
  }
  return out;
}

std::vector<PluralCandidate> pluralize_candidates(
    const std::vector<MarkerId>& antec, const Discourse& d, std::size_t cap) {
  if (antec.size() > cap) {
    throw std::invalid_argument("pluralisation over " + std::to_string(cap) +
                                " candidates");
  }
  std::vector<PluralCandidate> out;
  if (antec.empty()) return out;
  for (MarkerId m : antec) {
    const Marker* marker = d.find_marker(m);
    if (marker == nullptr) {
      throw std::invalid_argument("unknown marker " + std::to_string(m));
    }
    out.push_back({{m}, marker->number});
  }
  // Sums of each size, positions in lexicographic order.
  std::size_t n = antec.size();
  for (std::size_t size = 2; size <= n; ++size) {
    std::vector<std::size_t> pick(size);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
      PluralCandidate sum;
      sum.number = Number::kPlural;
      sum.members.reserve(size);
      for (std::size_t i : pick) sum.members.push_back(antec[i]);
      out.push_back(std::move(sum));
      std::size_t k = size;
      while (k > 0 && pick[k - 1] == n - size + (k - 1)) --k;
      if (k == 0) break;
      ++pick[k - 1];
      for (std::size_t j = k; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return out;
}

}  // namespace binder
