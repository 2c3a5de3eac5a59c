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

#include "binder/reverse.hpp"

#include <stdexcept>
#include <string>
#include <unordered_set>

namespace binder {

namespace {

const Marker& require_marker(MarkerId m, const Discourse& d) {
  const Marker* found = d.find_marker(m);
  if (found == nullptr) {
    throw std::invalid_argument("unknown marker " + std::to_string(m));
  }
  return *found;
}

}  // namespace

MarkerKindView marker_kind_view(MarkerId m, const Discourse& d) {
  const Marker& marker = require_marker(m, d);
  MarkerKindView view;
  view.marker = m;
  view.is_v_marker = marker.kind == MarkerKind::kVar;
  view.is_e_marker =
      marker.kind == MarkerKind::kRMark && marker.quantificational;
  return view;
}

bool reverse_admissible(MarkerId antecedent, MarkerId anaphor,
                        const Discourse& d, const OCommandGraph& g) {
  MarkerKindView view = marker_kind_view(antecedent, d);
  require_marker(anaphor, d);
  if (view.is_e_marker) return !g.commands(antecedent, anaphor);
  if (view.is_v_marker) return g.commands(antecedent, anaphor);
  return true;
}

bool reverse_admissible(MarkerId antecedent, MarkerId anaphor,
                        const Discourse& d) {
  return reverse_admissible(antecedent, anaphor, d, build_ocommand_graph(d));
}

std::vector<AntecReport> filter_reports(const std::vector<AntecReport>& reports,
                                        const Discourse& d,
                                        const OCommandGraph& g) {
  std::vector<AntecReport> out = reports;
  for (AntecReport& report : out) {
    report.removed.clear();
    for (MarkerId candidate : report.antec) {
      MarkerKindView view = marker_kind_view(candidate, d);
      if (view.is_e_marker && g.commands(candidate, report.anaphor)) {
        report.removed.emplace_back(candidate, 'E');
      } else if (view.is_v_marker && !g.commands(candidate, report.anaphor)) {
        report.removed.emplace_back(candidate, 'V');
      }
    }
  }
  return out;
}

std::vector<AntecReport> filter_reports(const std::vector<AntecReport>& reports,
                                        const Discourse& d) {
  return filter_reports(reports, d, build_ocommand_graph(d));
}

std::vector<MarkerId> admissible(const AntecReport& report) {
  std::unordered_set<MarkerId> dropped;
  for (const auto& [marker, constraint] : report.removed) {
    (void)constraint;
    dropped.insert(marker);
  }
  std::vector<MarkerId> out;
  out.reserve(report.antec.size());
  for (MarkerId m : report.antec) {
    if (dropped.count(m) == 0) out.push_back(m);
  }
  return out;
}

}  // namespace binder
