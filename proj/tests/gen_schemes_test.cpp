// Copyright 2026 The wreathgen Authors
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

#include "wf/gen_schemes.hpp"

#include "gtest/gtest.h"
#include "wf/error.hpp"

using namespace wf;

namespace {

Permutation cyc(const char *text, std::size_t n) { return parse_permutation(text, n); }

PermGroup a5() { return PermGroup(5, {cyc("(1 2 3 4 5)", 5), cyc("(1 2 3)", 5)}); }

TowerSpec a5_tower(std::size_t n, Action action = Action::exp) {
  std::vector<LevelSpec> levels;
  for (std::size_t k = 0; k < n; ++k) levels.push_back(LevelSpec{"A5", a5(), action});
  return TowerSpec(std::move(levels));
}

const BigCount kA5Wr = checked_pow(60, 6).value();

SchemeOptions lab() {
  SchemeOptions o;
  o.strict = false;
  return o;
}

}  // namespace

TEST(hypotheses, non_regular_witnesses) {
  const auto w = check_non_regular(a5());
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->fixed, 1u);
  EXPECT_TRUE(w->holds());
  EXPECT_TRUE(a5().contains(w->certificate));
  EXPECT_FALSE(check_non_regular(PermGroup(5, {cyc("(1 2 3 4 5)", 5)})).has_value());
}

TEST(hypotheses, both_phrasings_agree_on_transitive_groups) {
  const std::vector<PermGroup> corpus{
      a5(),
      PermGroup(5, {cyc("(1 2 3 4 5)", 5)}),
      PermGroup(4, {cyc("(1 2)(3 4)", 4), cyc("(1 3)(2 4)", 4)}),
      PermGroup(4, {cyc("(1 2 3 4)", 4), cyc("(1 3)", 4)}),
      PermGroup(3, {cyc("(1 2 3)", 3), cyc("(1 2)", 3)}),
      PermGroup(6, {cyc("(1 2 3 4 5 6)", 6)}),
      PermGroup(7, {cyc("(1 2 3 4 5 6 7)", 7), cyc("(2 3 5)(4 7 6)", 7)}),
  };
  for (const auto &g : corpus) {
    ASSERT_TRUE(is_transitive(g));
    const bool regular = g.order() == BigCount(g.degree());
    EXPECT_EQ(check_non_regular(g).has_value(), !regular) << g.degree();
  }
}

TEST(hypotheses, exponentiation_witness) {
  for (const auto &b : {a5(), PermGroup(2, {cyc("(1 2)", 2)}), PermGroup(3, {cyc("(1 2 3)", 3)})}) {
    const auto w = exponentiation_witness(3, b);
    ASSERT_TRUE(w.has_value());
    EXPECT_TRUE(w->holds());
    EXPECT_EQ(w->fixed, 1u);
    const auto g = build_exponentiation(PermGroup(3, {cyc("(1 2 3)", 3)}), b);
    EXPECT_TRUE(g.contains(w->certificate));
  }
}

TEST(hypotheses, stabilizers_distinct) {
  EXPECT_FALSE(equal_stabilizer_pair(a5()).has_value());
  // Blocks {1,2},{3,4}: St(1) = St(2).
  const PermGroup k4(4, {cyc("(1 2)(3 4)", 4), cyc("(1 3)(2 4)", 4)});
  EXPECT_EQ(equal_stabilizer_pair(k4), std::make_pair(Point{1}, Point{2}));
}

TEST(hypotheses, segal_pair_on_a5) {
  const auto s = find_segal_pair(a5());
  ASSERT_TRUE(s.has_value());
  EXPECT_TRUE(s->holds());
  EXPECT_EQ(s->sigma, cyc("(3 4 5)", 5));
  EXPECT_EQ(s->r, 3u);
  EXPECT_TRUE((SegalPair{cyc("(1 2 3 4 5)", 5), 1}).holds());
}

TEST(hypotheses, special_pair_search) {
  const auto p = find_special_pair(a5());
  ASSERT_TRUE(p.has_value());
  EXPECT_EQ(PermGroup(5, {p->a, p->b}).order(), 60);
  EXPECT_EQ(p->a.image(p->u), p->u);
  EXPECT_EQ(p->b.image(p->v), p->v);

  const auto q = find_special_pair(a5(), PairConstraints{{2}, {3}});
  ASSERT_TRUE(q.has_value());
  EXPECT_EQ(q->order_a, 3u);
  EXPECT_EQ(q->order_b, 2u);
  EXPECT_FALSE(find_special_pair(a5(), PairConstraints{{2, 3}, {}}).has_value());
}

TEST(dgen, depth_one_is_level_generators) {
  const auto r = build_dgen(a5_tower(1), 1);
  EXPECT_EQ(r.generators.size(), 2u);
  EXPECT_TRUE(verify_generation(r).passed());
}

TEST(dgen, a5_depth_two) {
  const auto r = build_dgen(a5_tower(2), 2);
  EXPECT_EQ(r.generators.size(), 4u);
  ASSERT_TRUE(r.generators.flat.has_value());
  EXPECT_EQ(r.generators.flat->front().degree(), 3125u);
  const auto v = verify_generation(r);
  EXPECT_EQ(v.computed, kA5Wr);
  EXPECT_TRUE(v.passed());
  // Projection of each beta kills its only base factor.
  for (std::size_t j = 2; j < 4; ++j)
    EXPECT_TRUE(level_projection(r.tower, 2, r.generators.elements[j]).is_identity());
}

TEST(dgen, projection_compatibility_between_depths) {
  const auto r3 = build_dgen(a5_tower(3), 3);
  const auto r2 = build_dgen(a5_tower(3), 2);
  ASSERT_EQ(r3.generators.size(), r2.generators.size());
  for (std::size_t i = 0; i < r3.generators.size(); ++i)
    EXPECT_EQ(level_projection(r3.tower, 3, r3.generators.elements[i]), r2.generators.elements[i]);
  EXPECT_FALSE(r3.generators.flat.has_value());
}

TEST(dgen, commutator_collapses_to_two_entries) {
  // Level k = 1 of the A5 tower: sigma = t with 1^t = 2, beta' = alpha at 1.
  const auto r = build_dgen(a5_tower(2), 2);
  const Tower &t = r.tower;
  const auto tr = Orbit(t.group(1), 1).transversal(2);
  const Element sigma = t.embed(tr, 1, 2);
  for (const auto &alpha : t.group(2).generators()) {
    const Element beta = t.base_element(2, 1, alpha);
    const Element gamma = commutator(sigma, beta);
    const Element expected =
        WreathElement(t.level(2).shape, {{1, alpha}, {2, alpha.inverse()}}, Permutation(5));
    EXPECT_EQ(gamma, expected);
  }
}

TEST(dgen, conjugated_commutator_identity) {
  // s fixes 1 and sends 2 to r != 2; then [(l1,d1,..), (l2,d2,..)^s] = ([l1,l2],e,..).
  const auto r = build_dgen(a5_tower(2), 2);
  const Tower &t = r.tower;
  const auto w = *r.hypotheses.levels[0].witness;
  ASSERT_EQ(w.fixed, 1u);
  const Element mu = t.embed(w.certificate, 1, 2);
  const auto shape = t.level(2).shape;
  const auto l1 = cyc("(1 2 3)", 5), l2 = cyc("(2 4 5)", 5);
  const auto d1 = cyc("(1 5)(2 3)", 5), d2 = cyc("(1 4 3)", 5);
  const Element x = WreathElement(shape, {{1, l1}, {2, d1}}, Permutation(5));
  const Element y = WreathElement(shape, {{1, l2}, {2, d2}}, Permutation(5));
  EXPECT_EQ(commutator(x, conjugate(y, mu)), t.base_element(2, 1, commutator(l1, l2)));
}

TEST(threegen, a5_depth_two_and_negative_controls) {
  const auto r = build_threegen(a5_tower(2), 2);
  EXPECT_EQ(r.generators.size(), 3u);
  EXPECT_TRUE(verify_generation(r).passed());
  for (const auto &o : drop_one_orders(r)) EXPECT_LT(o, kA5Wr);
  EXPECT_EQ(build_threegen(a5_tower(1), 1).generators.size(), 2u);
}

TEST(special, a5_depth_two_power_identities_and_controls) {
  const auto r = build_special(a5_tower(2), 2);
  EXPECT_EQ(r.generators.size(), 2u);
  EXPECT_TRUE(verify_generation(r).passed());
  const auto pw = check_power_identities(r);
  EXPECT_TRUE(pw.first);
  EXPECT_TRUE(pw.second);
  for (const auto &o : drop_one_orders(r)) EXPECT_LT(o, kA5Wr);
  // The cross-coprimality pattern is recorded.
  ASSERT_EQ(r.hypotheses.coprime.size(), 2u);
  EXPECT_TRUE(r.hypotheses.coprime[0][1]);
  EXPECT_TRUE(r.hypotheses.coprime[1][0]);
}

TEST(special, power_identities_hold_structurally_at_depth_three) {
  const auto r = build_special(a5_tower(3), 3);
  const auto pw = check_power_identities(r);
  EXPECT_TRUE(pw.first);
  EXPECT_TRUE(pw.second);
}

TEST(special, cyclic_level_rejected_at_gate) {
  const TowerSpec spec({LevelSpec{"C5", PermGroup(5, {cyc("(1 2 3 4 5)", 5)}), Action::exp}});
  EXPECT_THROW(build_special(spec, 1), HypothesisError);
  EXPECT_THROW(build_dgen(spec, 1), HypothesisError);
}

TEST(relabel, witness_moved_to_first_two_points) {
  // St(1) = <(3 4)> fixes 2, so the witness is (1, 3).
  const PermGroup g(4, {cyc("(1 3)(2 4)", 4), cyc("(1 2)", 4)});
  const TowerSpec spec({LevelSpec{"D", g, Action::exp}, LevelSpec{"D", g, Action::exp}});
  const auto r = build_dgen(spec, 2, lab());
  const auto &h = r.hypotheses.levels[0];
  ASSERT_TRUE(h.relabel.has_value());
  ASSERT_TRUE(h.witness.has_value());
  EXPECT_EQ(h.witness->fixed, 1u);
  EXPECT_EQ(h.witness->moved, 2u);
  EXPECT_TRUE(h.witness->holds());
  EXPECT_TRUE(r.tower.group(1).contains(h.witness->certificate));
}

TEST(theoremB, stride_one_matches_dgen) {
  const auto b = build_theoremB(a5_tower(2));
  const auto d = build_dgen(a5_tower(2), 2);
  ASSERT_EQ(b.generators.size(), d.generators.size());
  EXPECT_EQ(*b.generators.flat, *d.generators.flat);
}

TEST(theoremB, single_h_group) {
  // Positions {2}: H1 = A5 exp A5 on 3125 points.
  std::vector<LevelSpec> levels(2, LevelSpec{"A5", a5(), Action::exp});
  const TowerSpec spec(levels, std::vector<std::size_t>{2});
  const auto r = build_theoremB(spec);
  EXPECT_LE(r.generators.size(), 2u * 2u * 2u);
  EXPECT_EQ(r.generators.count_bound, 8u);
  EXPECT_TRUE(verify_generation(r).passed());
  EXPECT_TRUE(r.hypotheses.levels[0].witness->holds());
}

TEST(theoremB, lab_mode_count_bookkeeping) {
  const PermGroup c2(2, {cyc("(1 2)", 2)});
  const PermGroup s3(3, {cyc("(1 2)", 3), cyc("(1 2 3)", 3)});
  std::vector<LevelSpec> levels{{"C2", c2, Action::exp}, {"S3", s3, Action::perm},
                                {"S3", s3, Action::exp}};
  const TowerSpec spec(levels);
  EXPECT_THROW(build_theoremB(spec), HypothesisError);
  const auto r = build_theoremB(spec, lab());
  EXPECT_EQ(r.generators.count_bound, 2u * 2u * 2u);
  EXPECT_LE(r.generators.size(), r.generators.count_bound);
}
