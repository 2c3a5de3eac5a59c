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

#ifndef BINDER_TRANSITIVITY_HPP_
#define BINDER_TRANSITIVITY_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "binder/model.hpp"
#include "binder/obliqueness.hpp"
#include "binder/principles.hpp"

namespace binder {

// Semantic type of a proposed anaphoric link. Only coreference links are
// transitive; the other types never merge referents.
enum class LinkType { kCoreference, kSplit, kBridging, kEType, kBound };
const char* to_string(LinkType t);
bool link_type_from_string(std::string_view text, LinkType* out);

// One resolved link: the anaphor's marker and its chosen antecedent
// marker(s). Split links carry two or more antecedents; every other type
// carries exactly one.
struct AnaphoricLink {
  MarkerId anaphor = 0;
  std::vector<MarkerId> antecedents;
  LinkType type = LinkType::kCoreference;
};

// A resolution rejected by the validator. `principle` is "B", "C", or
// "loop"; `antecedent` is the offending commander for B/C and kNoMarker for
// loops.
struct ResolutionViolation {
  std::string principle;
  MarkerId marker = 0;
  MarkerId antecedent = kNoMarker;
  std::string message;
};

// Equivalence classes over all markers of `d` induced by the coreference
// links alone. Classes and their members follow the document marker order;
// unlinked markers form singleton classes.
std::vector<std::vector<MarkerId>> coref_closure(
    const std::vector<AnaphoricLink>& links, const Discourse& d);

// Validates a proposed resolution. Within each coreference class, a marker
// that locally commands a pronoun class-mate triggers a "B" violation and a
// marker that commands a non-pronoun class-mate triggers a "C" violation
// (the class-mate must be a reported anaphor). Independently, any dependency
// cycle through at least one non-coreference link is reported as a "loop":
// such anaphors would be the sole antecedents of each other. Throws
// std::invalid_argument when a link references an unknown marker.
std::vector<ResolutionViolation> check_resolution(
    const std::vector<AnaphoricLink>& links,
    const std::vector<AntecReport>& reports, const Discourse& d);
std::vector<ResolutionViolation> check_resolution(
    const std::vector<AnaphoricLink>& links,
    const std::vector<AntecReport>& reports, const Discourse& d,
    const OCommandGraph& g);

// Grows each anaphor's candidate list with its coreference class-mates:
// once two markers corefer, each admissible antecedent of one is admissible
// for the other. Appended class-mates follow the document marker order; the
// anaphor itself is never added.
std::vector<AntecReport> augment_reports(
    const std::vector<AntecReport>& reports,
    const std::vector<AnaphoricLink>& links, const Discourse& d);

// A candidate antecedent for a plural anaphor: either one original marker
// or an i-sum of several. Sums are plural; atoms keep their own number.
struct PluralCandidate {
  std::vector<MarkerId> members;
  Number number = Number::kUnspecified;
  bool composite() const { return members.size() > 1; }
};

// Closes `antec` under pluralisation: every non-empty subset, atoms first,
// then sums by size and position, 2^n - 1 candidates in total. Throws
// std::invalid_argument when `antec` has more than `cap` members.
std::vector<PluralCandidate> pluralize_candidates(
    const std::vector<MarkerId>& antec, const Discourse& d,
    std::size_t cap = 16);

}  // namespace binder

#endif  // BINDER_TRANSITIVITY_HPP_
