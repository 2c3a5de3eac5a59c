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

#include <gtest/gtest.h>

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "binder/model.hpp"
#include "binder/obliqueness.hpp"
#include "binder/principles.hpp"
#include "builder.hpp"

namespace binder {
namespace {

using testutil::DiscourseBuilder;
using testutil::lang_params;

// "[<Det> captain who knows <Det> sailor] thinks Mary loves <him/them>".
// Either NP can be quantificational; the relative clause hangs off the
// captain NP and contains a trace of it.
struct RelativeFixture {
  MarkerId cap_var = 11, cap_mark = 12;
  MarkerId sail_var = 21, sail_mark = 22;
  MarkerId mary = 31, w = 41;
  Discourse d;

  RelativeFixture(bool captain_quant, bool sailor_quant,
                  Number anaphor_number = Number::kPlural) {
    DiscourseBuilder b;
    NodeId cap_np =
        captain_quant ? b.quant(cap_var, cap_mark)
                      : b.np(AnaphorType::kNone, Number::kSingular, cap_mark);
    NodeId noun_w = b.word();
    NodeId tr = b.trace_of(cap_np);
    NodeId sail_np =
        sailor_quant ? b.quant(sail_var, sail_mark)
                     : b.np(AnaphorType::kNone, Number::kSingular, sail_mark);
    NodeId knows_v = b.verb({tr, sail_np});
    NodeId rel_s = b.clause({tr, knows_v, sail_np});
    b.node(cap_np).category = Category::kPhrase;
    b.node(cap_np).daughters = {noun_w, rel_s};
    b.node(cap_np).head = noun_w;

    NodeId mary_np = b.np(AnaphorType::kNone, Number::kSingular, mary);
    NodeId w_np = b.np(AnaphorType::kPronoun, anaphor_number, w);
    NodeId loves_v = b.verb({mary_np, w_np});
    NodeId emb = b.clause({mary_np, loves_v, w_np});
    NodeId thinks_v = b.verb({cap_np, emb});
    NodeId s = b.clause({cap_np, thinks_v, emb});
    d = b.build(s);
  }
};

const AntecReport* report_for(const std::vector<AntecReport>& rs, MarkerId w) {
  for (const AntecReport& r : rs) {
    if (r.anaphor == w) return &r;
  }
  return nullptr;
}

TEST(Reverse, MarkerKindsSplitQuantifierMarkers) {
  RelativeFixture f(true, false);
  MarkerKindView v = marker_kind_view(f.cap_var, f.d);
  EXPECT_TRUE(v.is_v_marker);
  EXPECT_FALSE(v.is_e_marker);
  MarkerKindView e = marker_kind_view(f.cap_mark, f.d);
  EXPECT_TRUE(e.is_e_marker);
  EXPECT_FALSE(e.is_v_marker);
  MarkerKindView plain = marker_kind_view(f.sail_mark, f.d);
  EXPECT_FALSE(plain.is_e_marker);
  EXPECT_FALSE(plain.is_v_marker);
  EXPECT_THROW(marker_kind_view(999, f.d), std::invalid_argument);
}

TEST(Reverse, ContextMarkersActAsPlainAntecedents) {
  DiscourseBuilder b;
  MarkerId x = b.ctx();
  NodeId he = b.np(AnaphorType::kPronoun, Number::kSingular);
  NodeId v = b.verb({he});
  Discourse d = b.build(b.clause({he, v}));
  MarkerKindView view = marker_kind_view(x, d);
  EXPECT_FALSE(view.is_e_marker);
  EXPECT_FALSE(view.is_v_marker);
  EXPECT_TRUE(reverse_admissible(x, b.mark(he), d));
}

TEST(Reverse, EMarkerServesOnlyUncommandedAnaphors) {
  // Commanding quantifier: its plural marker may not serve the pronoun.
  RelativeFixture commanding(true, false);
  EXPECT_FALSE(reverse_admissible(commanding.cap_mark, commanding.w,
                                  commanding.d));
  // Embedded quantifier: no command, so the plural marker qualifies.
  RelativeFixture embedded(false, true);
  EXPECT_TRUE(reverse_admissible(embedded.sail_mark, embedded.w, embedded.d));
}

TEST(Reverse, VMarkerServesOnlyCommandedAnaphors) {
  RelativeFixture commanding(true, false, Number::kSingular);
  EXPECT_TRUE(reverse_admissible(commanding.cap_var, commanding.w,
                                 commanding.d));
  RelativeFixture embedded(false, true, Number::kSingular);
  EXPECT_FALSE(reverse_admissible(embedded.sail_var, embedded.w, embedded.d));
}

TEST(Reverse, FilterAnnotatesWithoutMutatingForwardResults) {
  RelativeFixture f(true, true);
  std::vector<AntecReport> forward = apply_binding(f.d, lang_params("english"));
  const AntecReport* before = report_for(forward, f.w);
  ASSERT_NE(before, nullptr);
  EXPECT_EQ(before->antec, (std::vector<MarkerId>{f.cap_var, f.cap_mark,
                                                  f.sail_var, f.sail_mark}));

  std::vector<AntecReport> filtered = filter_reports(forward, f.d);
  const AntecReport* after = report_for(filtered, f.w);
  ASSERT_NE(after, nullptr);
  EXPECT_EQ(after->antec, before->antec);
  EXPECT_EQ(after->exempt, before->exempt);

  // The commanding quantifier loses its e-marker, the embedded one its var.
  std::vector<std::pair<MarkerId, char>> expected{{f.cap_mark, 'E'},
                                                  {f.sail_var, 'V'}};
  EXPECT_EQ(after->removed, expected);
  EXPECT_EQ(admissible(*after),
            (std::vector<MarkerId>{f.cap_var, f.sail_mark}));
}

TEST(Reverse, FilterIsIdempotent) {
  RelativeFixture f(true, true);
  std::vector<AntecReport> once =
      filter_reports(apply_binding(f.d, lang_params("english")), f.d);
  std::vector<AntecReport> twice = filter_reports(once, f.d);
  ASSERT_EQ(once.size(), twice.size());
  for (size_t i = 0; i < once.size(); ++i) {
    EXPECT_EQ(once[i].removed, twice[i].removed);
    EXPECT_EQ(once[i].antec, twice[i].antec);
  }
}

TEST(Reverse, PlainReferentialCandidatesAlwaysSurvive) {
  RelativeFixture f(false, false);
  std::vector<AntecReport> filtered =
      filter_reports(apply_binding(f.d, lang_params("english")), f.d);
  const AntecReport* r = report_for(filtered, f.w);
  ASSERT_NE(r, nullptr);
  EXPECT_TRUE(r->removed.empty());
  EXPECT_EQ(admissible(*r), r->antec);
}

TEST(Reverse, ExemptReportsPassThroughUntouched) {
  // A least-oblique reflexive yields an exempt, empty report; the filter
  // must not invent candidates or clear the flag.
  DiscourseBuilder b;
  NodeId self = b.np(AnaphorType::kShortReflexive, Number::kSingular, 61);
  NodeId john = b.np(AnaphorType::kNone, Number::kSingular, 62);
  NodeId v = b.verb({self, john});
  Discourse d = b.build(b.clause({self, v, john}));
  std::vector<AntecReport> filtered =
      filter_reports(apply_binding(d, lang_params("english")), d);
  const AntecReport* r = report_for(filtered, 61);
  ASSERT_NE(r, nullptr);
  EXPECT_TRUE(r->exempt);
  EXPECT_TRUE(r->antec.empty());
  EXPECT_TRUE(r->removed.empty());
  EXPECT_TRUE(admissible(*r).empty());
}

TEST(Reverse, CrossoverConfigurationRemovesTheVariable) {
  // "[The captain who knows him] thinks Mary loves every sailor": the
  // variable of the object quantifier does not command the pronoun inside
  // the subject, so it is struck from the pronoun's candidates.
  DiscourseBuilder b;
  MarkerId cap = 71, him = 72, sv = 73, sm = 74, mary = 75;
  NodeId cap_np = b.np(AnaphorType::kNone, Number::kSingular, cap);
  NodeId noun_w = b.word();
  NodeId tr = b.trace_of(cap_np);
  NodeId him_np = b.np(AnaphorType::kPronoun, Number::kSingular, him);
  NodeId knows_v = b.verb({tr, him_np});
  NodeId rel_s = b.clause({tr, knows_v, him_np});
  b.node(cap_np).category = Category::kPhrase;
  b.node(cap_np).daughters = {noun_w, rel_s};
  b.node(cap_np).head = noun_w;

  NodeId mary_np = b.np(AnaphorType::kNone, Number::kSingular, mary);
  NodeId sailor_np = b.quant(sv, sm);
  NodeId loves_v = b.verb({mary_np, sailor_np});
  NodeId emb = b.clause({mary_np, loves_v, sailor_np});
  NodeId thinks_v = b.verb({cap_np, emb});
  Discourse d = b.build(b.clause({cap_np, thinks_v, emb}));

  std::vector<AntecReport> filtered =
      filter_reports(apply_binding(d, lang_params("english")), d);
  const AntecReport* r = report_for(filtered, him);
  ASSERT_NE(r, nullptr);
  // Forward Principle B keeps the variable; the reverse side removes it.
  EXPECT_NE(std::find(r->antec.begin(), r->antec.end(), sv), r->antec.end());
  ASSERT_EQ(r->removed.size(), 1u);
  EXPECT_EQ(r->removed[0], (std::pair<MarkerId, char>{sv, 'V'}));
  std::vector<MarkerId> kept = admissible(*r);
  EXPECT_EQ(std::find(kept.begin(), kept.end(), sv), kept.end());
  EXPECT_NE(std::find(kept.begin(), kept.end(), sm), kept.end());
}

}  // namespace
}  // namespace binder
