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

#include "wf/permutation.hpp"

#include <random>

#include "gtest/gtest.h"
#include "oracle.hpp"
#include "wf/error.hpp"

using namespace wf;

namespace {

Permutation cyc(const char *text, std::size_t n) { return parse_permutation(text, n); }

}  // namespace

TEST(permutation, identity_and_inverse) {
  const Permutation id(5);
  EXPECT_TRUE(id.is_identity());
  for (Point x = 1; x <= 5; ++x) EXPECT_EQ(id.image(x), x);
  const auto p = cyc("(1 4 2)(3 5)", 5);
  EXPECT_EQ(p * p.inverse(), id);
  EXPECT_EQ(p.inverse() * p, id);
}

TEST(permutation, compose_examples) {
  const auto p = cyc("(1 2 3 4 5)", 5);
  EXPECT_EQ(compose(Permutation(5), p), p);

  const auto c = cyc("(1 2 3)", 5);
  EXPECT_EQ(c * c, cyc("(1 3 2)", 5));

  // Hand-evaluated point by point: 1->1, 2->4, 3->3, 4->5, 5->2.
  const auto r = cyc("(1 2 3 4 5)", 5) * cyc("(1 2)(3 4)", 5);
  const std::vector<Point> expected{1, 4, 3, 5, 2};
  for (Point x = 1; x <= 5; ++x) EXPECT_EQ(r.image(x), expected[x - 1]) << "point " << x;
}

TEST(permutation, compose_degree_mismatch_throws) {
  EXPECT_THROW(compose(Permutation(3), Permutation(4)), DegreeMismatch);
}

TEST(permutation, right_action_axiom) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const auto p = oracle::random_permutation(9, rng);
    const auto q = oracle::random_permutation(9, rng);
    const auto pq = p * q;
    for (Point x = 1; x <= 9; ++x) ASSERT_EQ(pq.image(x), q.image(p.image(x)));
  }
}

TEST(permutation, order_and_power) {
  const auto p = cyc("(1 2 3)(4 5)", 6);
  EXPECT_EQ(p.order(), 6);
  EXPECT_TRUE(p.pow(6).is_identity());
  EXPECT_EQ(p.pow(-1), p.inverse());
  EXPECT_EQ(p.pow(7), p);
  EXPECT_EQ(p.fixed_points(), (std::vector<Point>{6}));
}

TEST(permutation, parse_examples) {
  const auto t = parse_permutation("[2,1,3]");
  EXPECT_EQ(t.degree(), 3u);
  EXPECT_EQ(t, cyc("(1 2)", 3));

  const auto p = parse_permutation("(1 2 3)(4 5)", 5);
  EXPECT_EQ(format_permutation(p, PermStyle::images), "[2,3,1,5,4]");
  EXPECT_EQ(format_permutation(Permutation(4), PermStyle::cycles), "()");
  EXPECT_EQ(parse_permutation("()", 4), Permutation(4));
  EXPECT_EQ(format_permutation(p, PermStyle::cycles), "(1 2 3)(4 5)");
}

TEST(permutation, parse_errors_report_position) {
  EXPECT_THROW(parse_permutation("[2,2,3]"), ParseError);
  EXPECT_THROW(parse_permutation("[1,2,4]"), ParseError);
  EXPECT_THROW(parse_permutation("(1 2)(2 3)", 3), ParseError);
  EXPECT_THROW(parse_permutation("(1 7)", 5), ParseError);
  EXPECT_THROW(parse_permutation("(1 2", 5), ParseError);
  EXPECT_THROW(parse_permutation("(1 2)", std::nullopt), ParseError);
  EXPECT_THROW(parse_permutation("1 2"), ParseError);
  try {
    parse_permutation("[1,2,2]");
    FAIL();
  } catch (const ParseError &e) {
    EXPECT_EQ(e.position(), 5u);
  }
  try {
    parse_permutation("(1 2)(3 x)", 5);
    FAIL();
  } catch (const ParseError &e) {
    EXPECT_EQ(e.position(), 8u);
  }
}

TEST(permutation, format_parse_round_trip) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + trial % 12;
    const auto p = oracle::random_permutation(n, rng);
    EXPECT_EQ(parse_permutation(format_permutation(p, PermStyle::images)), p);
    EXPECT_EQ(parse_permutation(format_permutation(p, PermStyle::cycles), n), p);
  }
}

TEST(permutation, commutator_and_conjugate) {
  const auto x = cyc("(1 2 3)", 4);
  const auto y = cyc("(2 3 4)", 4);
  EXPECT_EQ(commutator(x, y), x.inverse() * y.inverse() * x * y);
  EXPECT_EQ(conjugate(x, y), y.inverse() * x * y);
  // Conjugation relabels cycles: (1 2 3)^y = (1^y 2^y 3^y).
  EXPECT_EQ(conjugate(x, y), cyc("(1 3 4)", 4));
}
