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

#ifndef WF_WREATH_HPP
#define WF_WREATH_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "wf/bigcount.hpp"
#include "wf/perm_group.hpp"
#include "wf/permutation.hpp"

namespace wf {

/// Default cap on the degree of any flattened group.
inline constexpr std::uint64_t kDefaultDegreeCap = 1'000'000;

enum class Action { exp, perm };
std::string to_string(Action a);
Action parse_action(const std::string &s);

/**
 * Lexicographic codec between {1..m}^n and {1..m^n}. Coordinate 1 is the most
 * significant, so rank((1,...,1)) = 1 and rank((m,...,m)) = m^n.
 */
class TupleCodec {
 public:
  /// Throws DegreeOverflow if m^n does not fit 64 bits.
  TupleCodec(std::uint32_t m, std::uint64_t n);

  std::uint32_t alphabet() const noexcept { return m_; }
  std::uint64_t length() const noexcept { return n_; }
  std::uint64_t size() const noexcept { return size_; }

  std::uint64_t rank(std::span<const std::uint32_t> t) const;
  std::vector<std::uint32_t> unrank(std::uint64_t r) const;
  void unrank_into(std::uint64_t r, std::vector<std::uint32_t> &out) const;

  /// Rank of the diagonal tuple (i,...,i).
  std::uint64_t diagonal(std::uint32_t i) const;

 private:
  std::uint32_t m_;
  std::uint64_t n_;
  std::uint64_t size_;
};

/// t precedes u in the lexicographic order.
bool precedes(std::span<const std::uint32_t> t, std::span<const std::uint32_t> u);

class WreathShape;
using ShapePtr = std::shared_ptr<const WreathShape>;

/**
 * Shape of a (possibly iterated) wreath product A (action) B, where A is a
 * plain permutation group of degree m and B is either plain of degree n or
 * itself a wreath shape.
 */
class WreathShape {
 public:
  static ShapePtr make(Action action, std::uint32_t inner_degree, std::uint64_t outer_degree);
  static ShapePtr make(Action action, std::uint32_t inner_degree, ShapePtr outer);

  Action action() const noexcept { return action_; }
  std::uint32_t inner_degree() const noexcept { return inner_degree_; }
  /// Null when the outer group is plain.
  const ShapePtr &outer() const noexcept { return outer_; }

  /// Degree of the outer group; nullopt if unrepresentable.
  const std::optional<BigCount> &outer_degree() const noexcept { return outer_degree_; }
  const std::optional<BigCount> &degree() const noexcept { return degree_; }

  /// Outer degree as a machine word; throws DegreeOverflow otherwise.
  std::uint64_t outer_degree_u64() const;
  std::uint64_t degree_u64() const;

  std::size_t depth() const noexcept { return outer_ ? outer_->depth() + 1 : 1; }

  friend bool operator==(const WreathShape &a, const WreathShape &b);

 private:
  WreathShape() = default;
  Action action_ = Action::exp;
  std::uint32_t inner_degree_ = 1;
  ShapePtr outer_;
  std::optional<BigCount> outer_degree_;
  std::optional<BigCount> degree_;
};

class WreathElement;

/// Either a plain permutation or a structured wreath element.
class Element {
 public:
  Element(Permutation p) : v_(std::move(p)) {}  // NOLINT(google-explicit-constructor)
  Element(WreathElement w);                     // NOLINT(google-explicit-constructor)

  bool is_plain() const noexcept { return std::holds_alternative<Permutation>(v_); }
  const Permutation &plain() const { return std::get<Permutation>(v_); }
  const WreathElement &wreath() const { return *std::get<std::shared_ptr<const WreathElement>>(v_); }

  bool is_identity() const;

  friend bool operator==(const Element &a, const Element &b);

 private:
  std::variant<Permutation, std::shared_ptr<const WreathElement>> v_;
};

/**
 * Element (f, tau) of A (action) B: f is a sparse base tuple indexed by the
 * 1-based points of B (absent entries are the identity), tau is in B.
 */
class WreathElement {
 public:
  using Base = std::map<std::uint64_t, Permutation>;

  WreathElement(ShapePtr shape, Base base, Element top);

  static WreathElement identity(ShapePtr shape);
  /// Pure base element with `a` at coordinate `position`.
  static WreathElement base_at(ShapePtr shape, std::uint64_t position, const Permutation &a);
  static WreathElement top_only(ShapePtr shape, Element top);

  const ShapePtr &shape() const noexcept { return shape_; }
  const Base &base() const noexcept { return base_; }
  const Element &top() const noexcept { return top_; }
  /// Entry at a 1-based coordinate (identity when absent).
  Permutation base_entry(std::uint64_t k) const;

  bool is_identity() const;

  friend bool operator==(const WreathElement &a, const WreathElement &b);

 private:
  ShapePtr shape_;
  Base base_;
  Element top_;
};

/// Identity of the outer group of `shape`.
Element identity_top(const WreathShape &shape);

/// h[k] = f[k] * g[k^tau], top tau * rho.
WreathElement multiply(const WreathElement &a, const WreathElement &b);
WreathElement invert(const WreathElement &w);
Element multiply(const Element &a, const Element &b);
Element invert(const Element &w);
Element power(const Element &w, long long e);
/// [x, y] = x^-1 y^-1 x y.
Element commutator(const Element &x, const Element &y);
/// x^y = y^-1 x y.
Element conjugate(const Element &x, const Element &y);

/// Image of a 1-based point under a plain or structured element.
std::uint64_t point_image(const Element &g, std::uint64_t point);

/// Product action on a tuple of length n over {1..m}: base acts coordinatewise,
/// then the top moves coordinate k to k^tau.
std::vector<std::uint32_t> exp_point_action(const WreathElement &w,
                                            std::span<const std::uint32_t> t);

/// Imprimitive action on (i, j), coded as m*(j-1)+i.
std::uint64_t perm_point_action(const WreathElement &w, std::uint64_t point);

/// The permutation of the flattened points. Throws DegreeOverflow above `cap`.
Permutation flatten(const Element &w, std::uint64_t cap = kDefaultDegreeCap);

/// The top component (inverse-system projection).
inline const Element &project_top(const WreathElement &w) { return w.top(); }

/// |A|^n * |B|.
BigCount wreath_order(const BigCount &inner_order, std::uint64_t n, const BigCount &outer_order);

struct WreathOptions {
  std::uint64_t cap = kDefaultDegreeCap;
  /// Require a transitive outer group (one embedded copy of A's generators).
  bool strict = true;
  /// Verify the chain order against |A|^n * |B|.
  bool verify = false;
};

/// Structured generators of A (action) B: gens of A at coordinate 1 plus
/// top-embedded gens of B (A at every coordinate when B is intransitive and
/// strict mode is off).
std::vector<WreathElement> wreath_generators(const PermGroup &a, const PermGroup &b,
                                             Action action, const WreathOptions &opt = {});

/// A exponentiated by B, acting on {1..m}^n (degree m^n).
PermGroup build_exponentiation(const PermGroup &a, const PermGroup &b,
                               const WreathOptions &opt = {});
/// Permutational wreath product on m*n points.
PermGroup build_perm_wreath(const PermGroup &a, const PermGroup &b,
                            const WreathOptions &opt = {});

/**
 * Point bijection from the points of A exp (B wr C), i.e. tuples of length
 * n2*n3, to those of (A exp B) exp C, i.e. n3-tuples of n2-tuples. Block c
 * holds the coordinates (i, c) of the imprimitive coding.
 */
Permutation kaluzhnin_bijection(std::uint32_t n1, std::uint32_t n2, std::uint32_t n3,
                                std::uint64_t cap = kDefaultDegreeCap);

struct KaluzhninReport {
  std::uint64_t degree = 0;
  BigCount left_order;
  BigCount right_order;
  std::vector<bool> generator_in_right;
  /// First failing generator and the first point its sifted residue moves.
  std::optional<std::pair<std::size_t, Point>> counterexample;
  bool passed = false;
};

/// Conjugates each generator of A exp (B wr C) by the bijection and checks
/// membership in (A exp B) exp C, and equality of orders.
KaluzhninReport kaluzhnin_check(const PermGroup &a, const PermGroup &b, const PermGroup &c,
                                std::uint64_t cap = kDefaultDegreeCap);

}  // namespace wf

#endif  // WF_WREATH_HPP
