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

#include <gtest/gtest.h>

#include <algorithm>
#include <utility>
#include <vector>

#include "binder/model.hpp"
#include "builder.hpp"
#include "oracle.hpp"

namespace binder {
namespace {

using testutil::DiscourseBuilder;

// "[[John's friend] said that [[Peter's brother] presented [Martin's cousin]
// to him]]": the canonical multi-clause command configuration.
struct PresentedFixture {
  DiscourseBuilder b;
  NodeId john, friend_np, peter, brother_np, martin, cousin_np, him, pphim;
  NodeId embedded, matrix;
  Discourse d;

  PresentedFixture() {
    john = b.np();
    friend_np = b.possessed(john);
    peter = b.np();
    brother_np = b.possessed(peter);
    martin = b.np();
    cousin_np = b.possessed(martin);
    him = b.np(AnaphorType::kPronoun);
    pphim = b.pp(him);
    NodeId present_v = b.verb({brother_np, cousin_np, pphim});
    embedded = b.clause({brother_np, present_v, cousin_np, pphim},
                        Finiteness::kFinite, Mood::kIndicative);
    NodeId said_v = b.verb({friend_np, embedded});
    matrix = b.clause({friend_np, said_v, embedded}, Finiteness::kFinite,
                      Mood::kIndicative);
    d = b.build(matrix);
  }
};

TEST(ObliquenessTest, MultiClauseCommandFacts) {
  PresentedFixture f;
  OCommandGraph g = build_ocommand_graph(f.d);
  MarkerId friend_m = f.b.mark(f.friend_np);
  MarkerId john_m = f.b.mark(f.john);
  MarkerId brother_m = f.b.mark(f.brother_np);
  MarkerId peter_m = f.b.mark(f.peter);
  MarkerId cousin_m = f.b.mark(f.cousin_np);
  MarkerId martin_m = f.b.mark(f.martin);
  MarkerId him_m = f.b.mark(f.him);

  // The matrix subject commands everything in the embedded clause.
  EXPECT_TRUE(g.commands(friend_m, brother_m));
  EXPECT_TRUE(g.commands(friend_m, peter_m));
  EXPECT_TRUE(g.commands(friend_m, cousin_m));
  EXPECT_TRUE(g.commands(friend_m, martin_m));
  EXPECT_TRUE(g.commands(friend_m, him_m));

  // The embedded subject commands its co-arguments (locally) and the
  // possessor inside one of them (non-locally).
  EXPECT_TRUE(g.locally_commands(brother_m, cousin_m));
  EXPECT_TRUE(g.locally_commands(brother_m, him_m));
  EXPECT_TRUE(g.commands(brother_m, martin_m));
  EXPECT_FALSE(g.locally_commands(brother_m, martin_m));

  // Embedded possessors and the most oblique argument command nothing.
  for (MarkerId x : {john_m, peter_m, martin_m, him_m}) {
    for (MarkerId y : {friend_m, john_m, brother_m, peter_m, cousin_m,
                       martin_m, him_m}) {
      EXPECT_FALSE(g.commands(x, y))
          << x << " should not command " << y;
    }
  }

  // The matrix subject does not command its own possessor.
  EXPECT_FALSE(g.commands(friend_m, john_m));
  // Command is not local across clauses.
  EXPECT_FALSE(g.locally_commands(friend_m, him_m));
}

TEST(ObliquenessTest, GraphAgreesWithBruteForceOracle) {
  PresentedFixture f;
  OCommandGraph g = build_ocommand_graph(f.d);
  std::vector<Marker> all = all_markers(f.d);
  for (const Marker& x : all) {
    for (const Marker& y : all) {
      EXPECT_EQ(g.commands(x.id, y.id),
                testutil::oracle_commands(f.d, x.id, y.id))
          << "commands(" << x.id << ", " << y.id << ")";
      EXPECT_EQ(g.locally_commands(x.id, y.id),
                testutil::oracle_locally_commands(f.d, x.id, y.id))
          << "local(" << x.id << ", " << y.id << ")";
    }
  }
}

TEST(ObliquenessTest, SubjectOnlyOrderLeavesNonSubjectsIncomparable) {
  // fortalte(Lars, Jon, om seg): non-linear frame.
  DiscourseBuilder b;
  NodeId lars = b.np();
  NodeId jon = b.np();
  NodeId seg = b.np(AnaphorType::kShortReflexive);
  NodeId ppseg = b.pp(seg);
  NodeId v = b.verb({lars, jon, ppseg}, OrderKind::kSubjectOnly);
  NodeId s = b.clause({lars, v, jon, ppseg});
  Discourse d = b.build(s, *lookup_language("norwegian"));
  OCommandGraph g = build_ocommand_graph(d);

  EXPECT_TRUE(g.commands(b.mark(lars), b.mark(jon)));
  EXPECT_TRUE(g.commands(b.mark(lars), b.mark(seg)));
  EXPECT_FALSE(g.commands(b.mark(jon), b.mark(seg)));
  EXPECT_FALSE(g.commands(b.mark(seg), b.mark(jon)));
}

TEST(ObliquenessTest, ObliquenessOrderListsQuantPairAdjacently) {
  DiscourseBuilder b;
  NodeId q = b.quant();
  NodeId obj = b.np();
  NodeId v = b.verb({q, obj});
  NodeId s = b.clause({q, v, obj});
  Discourse d = b.build(s);

  auto pairs = obliqueness_order(d, *d.node(v).predicator);
  auto has = [&pairs](MarkerId x, MarkerId y) {
    return std::find(pairs.begin(), pairs.end(), std::make_pair(x, y)) !=
           pairs.end();
  };
  EXPECT_TRUE(has(b.var(q), b.mark(q)));
  EXPECT_TRUE(has(b.var(q), b.mark(obj)));
  EXPECT_TRUE(has(b.mark(q), b.mark(obj)));
  EXPECT_FALSE(has(b.mark(obj), b.var(q)));
}

TEST(ObliquenessTest, PrepositionIsTransparentOneLevel) {
  // talk(Peter, John, about himself): the PP complement is group-visible.
  DiscourseBuilder b;
  NodeId peter = b.np();
  NodeId john = b.np();
  NodeId himself = b.np(AnaphorType::kShortReflexive);
  NodeId pp = b.pp(himself);
  NodeId v = b.verb({peter, john, pp});
  NodeId s = b.clause({peter, v, john, pp});
  Discourse d = b.build(s);
  OCommandGraph g = build_ocommand_graph(d);

  EXPECT_TRUE(g.locally_commands(b.mark(peter), b.mark(himself)));
  EXPECT_TRUE(g.locally_commands(b.mark(john), b.mark(himself)));
}

TEST(ObliquenessTest, ClausalSlotHasNoGroupMarkers) {
  // say(John, [Peter left]): Peter is commanded, but not locally.
  DiscourseBuilder b;
  NodeId john = b.np();
  NodeId peter = b.np();
  NodeId leave_v = b.verb({peter});
  NodeId emb = b.clause({peter, leave_v});
  NodeId say_v = b.verb({john, emb});
  NodeId s = b.clause({john, say_v, emb});
  Discourse d = b.build(s);
  OCommandGraph g = build_ocommand_graph(d);

  EXPECT_TRUE(g.commands(b.mark(john), b.mark(peter)));
  EXPECT_FALSE(g.locally_commands(b.mark(john), b.mark(peter)));
}

TEST(ObliquenessTest, TraceCarriesFillerIntoItsSlot) {
  // "About himself, Peter didn't talk to John": fronted PP, trace in the
  // oblique slot. Binding facts must match the unmarked order.
  DiscourseBuilder b;
  NodeId himself = b.np(AnaphorType::kShortReflexive);
  NodeId fronted = b.pp(himself);
  NodeId peter = b.np();
  NodeId john = b.np();
  NodeId tr = b.trace_of(himself);
  NodeId v = b.verb({peter, john, tr});
  NodeId s = b.clause({fronted, peter, v, john, tr});
  Discourse d = b.build(s);
  OCommandGraph g = build_ocommand_graph(d);

  EXPECT_TRUE(g.locally_commands(b.mark(peter), b.mark(himself)));
  EXPECT_TRUE(g.locally_commands(b.mark(john), b.mark(himself)));
  EXPECT_FALSE(g.commands(b.mark(himself), b.mark(john)));
}

TEST(ObliquenessTest, BindingBaseOverridesSurfaceOrder) {
  // Voice alternation borrowing the base hierarchy: surface subject
  // reflexive, surface object antecedent, base order object-first.
  DiscourseBuilder b;
  NodeId himself = b.np(AnaphorType::kShortReflexive);
  NodeId john = b.np();
  NodeId v = b.verb({himself, john}, OrderKind::kLinear,
                    std::vector<NodeId>{john, himself});
  NodeId s = b.clause({himself, v, john});
  Discourse d = b.build(s, *lookup_language("toba-batak"));
  OCommandGraph g = build_ocommand_graph(d);

  EXPECT_TRUE(g.locally_commands(b.mark(john), b.mark(himself)));
  EXPECT_FALSE(g.commands(b.mark(himself), b.mark(john)));
}

TEST(ObliquenessTest, OBottomDetection) {
  DiscourseBuilder b;
  NodeId subj = b.np(AnaphorType::kShortReflexive);
  NodeId obj = b.np(AnaphorType::kShortReflexive);
  NodeId v = b.verb({subj, obj});
  NodeId s = b.clause({subj, v, obj});
  Discourse d = b.build(s);

  EXPECT_TRUE(is_o_bottom(subj, d));
  EXPECT_FALSE(is_o_bottom(obj, d));
}

// Icelandic-style locality: the domain widens over non-indicative clauses.
struct IcelandicFixture {
  DiscourseBuilder b;
  NodeId jon, maria, sig, emb, matrix;
  Discourse d;

  explicit IcelandicFixture(Mood embedded_mood) {
    jon = b.np();
    maria = b.np();
    sig = b.np(AnaphorType::kShortReflexive);
    NodeId love_v = b.verb({maria, sig});
    emb = b.clause({maria, love_v, sig}, Finiteness::kFinite, embedded_mood);
    NodeId say_v = b.verb({jon, emb});
    matrix = b.clause({jon, say_v, emb}, Finiteness::kFinite,
                      Mood::kIndicative);
    d = b.build(matrix, *lookup_language("icelandic"));
  }
};

TEST(ObliquenessTest, IndicativeClauseClosesLocalDomain) {
  IcelandicFixture f(Mood::kIndicative);
  LocalDomain dom = local_domain(f.sig, f.d, f.d.lang());
  ASSERT_TRUE(dom.found);
  // Only the embedded frame's slots.
  EXPECT_EQ(std::count(dom.nodes.begin(), dom.nodes.end(), f.maria), 1);
  EXPECT_EQ(std::count(dom.nodes.begin(), dom.nodes.end(), f.jon), 0);
}

TEST(ObliquenessTest, SubjunctiveClauseWidensLocalDomain) {
  IcelandicFixture f(Mood::kSubjunctive);
  LocalDomain dom = local_domain(f.sig, f.d, f.d.lang());
  ASSERT_TRUE(dom.found);
  EXPECT_EQ(std::count(dom.nodes.begin(), dom.nodes.end(), f.maria), 1);
  EXPECT_EQ(std::count(dom.nodes.begin(), dom.nodes.end(), f.jon), 1);
}

TEST(ObliquenessTest, ClauseFeatureQueriesFollowHeadChain) {
  IcelandicFixture f(Mood::kSubjunctive);
  EXPECT_EQ(clause_mood(f.d, f.emb), Mood::kSubjunctive);
  EXPECT_EQ(clause_mood(f.d, f.matrix), Mood::kIndicative);
  EXPECT_EQ(clause_finiteness(f.d, f.emb), Finiteness::kFinite);
}

TEST(ObliquenessTest, PerItemLocalityOverrideWins) {
  DiscourseBuilder b;
  NodeId subj = b.np();
  NodeId refl = b.np(AnaphorType::kShortReflexive);
  b.node(refl).np->locality = LocalityMode::kUpstairs;
  NodeId v = b.verb({subj, refl});
  NodeId s = b.clause({subj, v, refl});
  Discourse d = b.build(s);

  EXPECT_EQ(effective_locality(d, refl, d.lang()), LocalityMode::kUpstairs);
  EXPECT_EQ(effective_locality(d, subj, d.lang()), LocalityMode::kImmediate);
}

TEST(ObliquenessTest, IsClausalChecks) {
  DiscourseBuilder b;
  NodeId np = b.np();
  NodeId obj = b.np();
  NodeId ppobj = b.pp(obj);
  NodeId v = b.verb({np, ppobj});
  NodeId s = b.clause({np, v, ppobj});
  Discourse d = b.build(s);

  EXPECT_TRUE(is_clausal(d, s));
  EXPECT_TRUE(is_clausal(d, v));
  EXPECT_FALSE(is_clausal(d, np));
  EXPECT_FALSE(is_clausal(d, ppobj));
}

}  // namespace
}  // namespace binder
