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

#ifndef BINDER_REVERSE_HPP_
#define BINDER_REVERSE_HPP_

#include <vector>

#include "binder/model.hpp"
#include "binder/obliqueness.hpp"
#include "binder/principles.hpp"

namespace binder {

// How a marker behaves as an antecedent. A quantificational NP splits its
// anaphors between its two markers: the plural e-marker serves links it does
// not command, the singular v-marker serves links it commands. At most one
// of the two flags is set; plain referential markers have neither.
struct MarkerKindView {
  MarkerId marker = 0;
  bool is_e_marker = false;
  bool is_v_marker = false;
};

// Classifies `m`. Throws std::invalid_argument when `m` is not in `d`.
MarkerKindView marker_kind_view(MarkerId m, const Discourse& d);

// True when `antecedent` may serve `anaphor`: e-markers must not command the
// anaphor, v-markers must, anything else always qualifies. Throws
// std::invalid_argument when either marker is not in `d`.
bool reverse_admissible(MarkerId antecedent, MarkerId anaphor,
                        const Discourse& d);
bool reverse_admissible(MarkerId antecedent, MarkerId anaphor,
                        const Discourse& d, const OCommandGraph& g);

// Annotates each report with the candidates the antecedent-side constraints
// exclude, tagging each removal 'E' or 'V'. The `antec` list itself is left
// intact so the forward result stays readable; `admissible` gives the
// surviving set. Never touches the exempt flag, never adds markers.
std::vector<AntecReport> filter_reports(const std::vector<AntecReport>& reports,
                                        const Discourse& d);
std::vector<AntecReport> filter_reports(const std::vector<AntecReport>& reports,
                                        const Discourse& d,
                                        const OCommandGraph& g);

// `antec` minus the markers recorded in `removed`, order preserved.
std::vector<MarkerId> admissible(const AntecReport& report);

}  // namespace binder

#endif  // BINDER_REVERSE_HPP_
