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

#include "wf/tower.hpp"

#include <random>

#include "gtest/gtest.h"
#include "oracle.hpp"
#include "wf/error.hpp"

using namespace wf;

namespace {

Permutation cyc(const char *text, std::size_t n) { return parse_permutation(text, n); }

PermGroup a5() { return PermGroup(5, {cyc("(1 2 3 4 5)", 5), cyc("(1 2 3)", 5)}); }
PermGroup c2() { return PermGroup(2, {cyc("(1 2)", 2)}); }

TowerSpec uniform(const PermGroup &g, std::vector<Action> actions) {
  std::vector<LevelSpec> levels;
  for (std::size_t k = 0; k < actions.size(); ++k)
    levels.push_back(LevelSpec{"S" + std::to_string(k + 1), g, actions[k]});
  return TowerSpec(std::move(levels));
}

BigCount pow60(unsigned e) { return checked_pow(60, e).value(); }

Element random_level_element(const Tower &t, std::size_t k, std::mt19937_64 &rng) {
  if (k == 1) return oracle::random_word(5, t.group(1).generators(), 9, rng);
  const auto &shape = t.level(k).shape;
  WreathElement::Base base;
  const auto n = shape->outer_degree_u64();
  const auto &gens = t.group(k).generators();
  for (std::uint64_t p = 1; p <= n; ++p)
    if (rng() % 3 == 0) base[p] = oracle::random_word(t.level(k).group_degree, gens, 7, rng);
  return WreathElement(shape, std::move(base), random_level_element(t, k - 1, rng));
}

}  // namespace

TEST(tower_spec, exp_positions_and_stride) {
  using A = Action;
  EXPECT_EQ(uniform(c2(), {A::exp, A::exp, A::exp}).exp_positions(),
            (std::vector<std::size_t>{1, 2, 3}));
  EXPECT_EQ(uniform(c2(), {A::exp, A::exp, A::exp}).stride(), 1u);
  const auto mixed = uniform(c2(), {A::exp, A::perm, A::exp});
  EXPECT_EQ(mixed.exp_positions(), (std::vector<std::size_t>{1, 3}));
  EXPECT_EQ(mixed.stride(), 2u);
  // A leading run counts as well.
  EXPECT_EQ(uniform(c2(), {A::perm, A::perm, A::exp}).stride(), 3u);

  std::vector<LevelSpec> levels(4, LevelSpec{"C2", c2(), A::exp});
  const TowerSpec explicit_pos(levels, std::vector<std::size_t>{2, 4});
  EXPECT_EQ(explicit_pos.action(3), A::perm);
  EXPECT_EQ(explicit_pos.stride(), 2u);
  EXPECT_THROW(TowerSpec(levels, std::vector<std::size_t>{3, 2}), Error);
  EXPECT_THROW(TowerSpec(levels, std::vector<std::size_t>{5}), Error);
}

TEST(tower, exp_recurrences_for_a5) {
  const auto spec = uniform(a5(), {Action::exp, Action::exp, Action::exp});
  const auto t = build_tower(spec, 3);
  EXPECT_EQ(t.level(1).degree, BigCount(5));
  EXPECT_EQ(t.level(2).degree, BigCount(3125));
  EXPECT_EQ(t.level(2).order, pow60(6));
  EXPECT_EQ(t.level(3).degree, checked_pow(5, 3125));
  EXPECT_EQ(t.level(3).order, pow60(3125) * pow60(6));
  ASSERT_TRUE(t.level(2).flattenable());
  EXPECT_EQ(t.level(2).flat->order(), pow60(6));
  EXPECT_FALSE(t.level(3).flattenable());
  EXPECT_THROW(t.flatten_at(3, t.identity(3)), DegreeOverflow);
}

TEST(tower, perm_recurrences_for_a5) {
  const auto spec = uniform(a5(), {Action::perm, Action::perm, Action::perm});
  const auto t = build_tower(spec, 3);
  EXPECT_EQ(t.level(2).degree, BigCount(25));
  EXPECT_EQ(t.level(3).degree, BigCount(125));
  ASSERT_TRUE(t.level(3).flattenable());
  EXPECT_EQ(t.level(3).order, pow60(31));
  EXPECT_EQ(t.level(3).flat->order(), pow60(31));
}

TEST(tower, intransitive_level_is_rejected_in_strict_mode) {
  const PermGroup bad(3, {cyc("(1 2)", 3)});
  const TowerSpec spec({LevelSpec{"C2", c2(), Action::exp}, LevelSpec{"X", bad, Action::exp}});
  EXPECT_THROW(build_tower(spec, 2), HypothesisError);
  TowerOptions lab;
  lab.strict = false;
  // |X|^2 * |C2|: X acts on the 3^2 points over level 1.
  EXPECT_EQ(build_tower(spec, 2, lab).level(2).order, BigCount(8));
}

TEST(tower, embedding_and_diagonal_points) {
  const auto spec = uniform(a5(), {Action::exp, Action::exp});
  const auto t = build_tower(spec, 2);
  const auto a = cyc("(1 2 3)", 5);
  const auto up = t.embed(a, 1, 2);
  EXPECT_EQ(level_projection(t, 2, up), Element(a));
  EXPECT_EQ(t.diagonal_point(2, 1), 1u);
  EXPECT_EQ(t.diagonal_point(1, 4), 4u);
  EXPECT_EQ(t.diagonal_point(2, 2), 782u);  // 1 + (5^5 - 1) / 4
  // Top elements only permute coordinates, so diagonals are fixed.
  for (std::uint32_t i = 1; i <= 5; ++i)
    EXPECT_EQ(point_image(up, t.diagonal_point(2, i)), t.diagonal_point(2, i));
}

TEST(tower, projection_is_a_homomorphism) {
  const auto spec = uniform(a5(), {Action::exp, Action::exp, Action::exp});
  const auto t = build_tower(spec, 3);
  std::mt19937_64 rng(29);
  for (int i = 0; i < 200; ++i) {
    const auto x = random_level_element(t, 3, rng);
    const auto y = random_level_element(t, 3, rng);
    ASSERT_EQ(level_projection(t, 3, multiply(x, y)),
              multiply(level_projection(t, 3, x), level_projection(t, 3, y)));
    ASSERT_EQ(level_projection(t, 3, invert(x)), invert(level_projection(t, 3, x)));
  }
  EXPECT_THROW(level_projection(t, 3, Element(cyc("(1 2 3)", 5))), Error);
}

TEST(regroup, c2_toy) {
  const auto spec = uniform(c2(), {Action::exp, Action::perm, Action::exp});
  const auto r = regroup_mixed(spec);
  ASSERT_EQ(r.h.size(), 2u);
  EXPECT_EQ(r.h[0].order, BigCount(2));
  EXPECT_EQ(r.h[1].first_level, 2u);
  EXPECT_EQ(r.h[1].degree, BigCount(4));
  EXPECT_EQ(r.h[1].order, BigCount(8));
  const auto &c = r.comparisons.back();
  EXPECT_EQ(c.h_degree, BigCount(16));
  EXPECT_EQ(c.h_order, BigCount(128));
  EXPECT_TRUE(c.degree_match);
  EXPECT_TRUE(c.order_match);
  ASSERT_TRUE(c.conjugacy_check.has_value());
  EXPECT_TRUE(*c.conjugacy_check);
  EXPECT_TRUE(r.passed());
  // Closure oracle for the 16-point group.
  const auto g = build_tower(spec, 3);
  EXPECT_EQ(oracle::closure(16, g.level(3).flat->generators()).size(), 128u);
}

TEST(regroup, a5_stride_two) {
  const auto spec = uniform(a5(), {Action::exp, Action::perm, Action::exp});
  const auto r = regroup_mixed(spec);
  ASSERT_EQ(r.h.size(), 2u);
  EXPECT_EQ(r.h[1].degree, BigCount(3125));
  EXPECT_EQ(r.h[1].order, pow60(6));
  EXPECT_EQ(r.comparisons[1].h_degree, checked_pow(5, 25));
  EXPECT_TRUE(r.passed());
  EXPECT_FALSE(r.comparisons[1].conjugacy_check.has_value());
}

TEST(regroup, trailing_perm_level_is_rejected) {
  EXPECT_THROW(regroup_mixed(uniform(c2(), {Action::exp, Action::exp, Action::perm})),
               ShapeMismatch);
}

TEST(regroup, regrouped_spec_is_all_exp) {
  const auto r = regroup_mixed(uniform(c2(), {Action::exp, Action::perm, Action::exp}));
  const auto h = regrouped_spec(r);
  EXPECT_EQ(h.size(), 2u);
  EXPECT_EQ(h.exp_positions(), (std::vector<std::size_t>{1, 2}));
  EXPECT_EQ(build_tower(h, 2).level(2).order, BigCount(128));
}
