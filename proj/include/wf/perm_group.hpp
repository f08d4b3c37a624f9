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

#ifndef WF_PERM_GROUP_HPP
#define WF_PERM_GROUP_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <vector>

#include "wf/bigcount.hpp"
#include "wf/permutation.hpp"

namespace wf {

/**
 * Base and strong generating set built by deterministic Schreier-Sims.
 *
 * Transversals are Schreier vectors over the strong generators. Levels whose
 * orbit fits the explicit-cache budget additionally keep u and u^-1 tables;
 * the cache only changes cost, never results.
 *
 * The structure is incremental: add_generator() extends a complete chain to
 * one for the enlarged group. Base points are appended as the smallest point
 * moved by a residue.
 */
class StabilizerChain {
 public:
  /// Total explicit transversal entries (u and u^-1 combined) kept per chain.
  static constexpr std::size_t kDefaultCacheBudget = std::size_t{1} << 26;

  explicit StabilizerChain(std::size_t degree, std::span<const Point> base_prefix = {},
                           std::size_t cache_budget = kDefaultCacheBudget);

  /// Adds g (degree must match). Returns false if g was already a member.
  bool add_generator(const Permutation &g);

  std::size_t degree() const noexcept { return degree_; }
  std::size_t length() const noexcept { return levels_.size(); }

  /// 1-based base points.
  std::vector<Point> base() const;
  std::vector<std::size_t> orbit_lengths() const;
  BigCount order() const;

  bool contains(const Permutation &g) const;

  /// Sifts g; returns the residue and the level where sifting stopped
  /// (== length() when it passed every level).
  std::pair<Permutation, std::size_t> sift(const Permutation &g) const;

  const std::vector<Permutation> &strong_generators() const noexcept { return strong_; }

  /// Strong generators fixing the first `level` base points (generators of
  /// the level-th stabilizer in the chain).
  std::vector<Permutation> level_generators(std::size_t level) const;

  /// 1-based orbit of the level's base point, in discovery order.
  std::vector<Point> level_orbit(std::size_t level) const;

  /// u with base^u = y (1-based y in the level's orbit).
  Permutation transversal(std::size_t level, Point y) const;

 private:
  struct Level {
    Point base = 0;                         // 0-based
    std::vector<std::uint32_t> gens;        // indices into strong_
    std::vector<std::int32_t> backptr;      // per point: -2 absent, -1 root, else strong index
    std::vector<std::uint32_t> orbit_index; // per point: position in orbit
    std::vector<Point> orbit;
    bool cached = false;
    std::vector<std::vector<Point>> u;      // per orbit position, when cached
    std::vector<std::vector<Point>> u_inv;
    std::vector<std::vector<bool>> checked; // [gen position][orbit position]
  };

  void push_level(Point base0);
  void add_strong(const std::vector<Point> &h, std::size_t first_level, std::size_t last_level);
  void extend_orbit(std::size_t level, std::size_t first_new_gen);
  void run(std::size_t start);
  std::size_t sift_in_place(std::vector<Point> &h, std::size_t from) const;
  void transversal_into(std::size_t level, Point y0, std::vector<Point> &out) const;
  void apply_transversal_inverse(std::size_t level, Point y0, std::vector<Point> &h) const;

  std::size_t degree_;
  std::size_t cache_budget_;
  std::size_t cache_used_ = 0;
  std::vector<Permutation> strong_;
  std::vector<Permutation> strong_inv_;
  std::vector<Level> levels_;
};

/**
 * A permutation group given by generators, with a lazily built stabilizer
 * chain shared between copies.
 */
class PermGroup {
 public:
  PermGroup() : PermGroup(1, {}) {}
  PermGroup(std::size_t degree, std::vector<Permutation> generators);

  static PermGroup trivial(std::size_t degree) { return PermGroup(degree, {}); }

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Permutation> &generators() const noexcept { return generators_; }

  const StabilizerChain &chain() const;
  BigCount order() const { return chain().order(); }
  bool contains(const Permutation &g) const;

 private:
  struct Lazy {
    std::once_flag once;
    std::unique_ptr<StabilizerChain> chain;
  };
  std::size_t degree_;
  std::vector<Permutation> generators_;
  std::shared_ptr<Lazy> lazy_;
};

/// Chain with a forced base prefix (1-based points).
StabilizerChain build_chain(const PermGroup &g, std::span<const Point> base_prefix = {});

/// Orbit of a point with a Schreier-vector transversal.
class Orbit {
 public:
  Orbit(const PermGroup &g, Point x);

  Point root() const noexcept { return root_; }
  /// 1-based points in discovery order.
  const std::vector<Point> &points() const noexcept { return points_; }
  std::size_t size() const noexcept { return points_.size(); }
  bool contains(Point y) const;
  /// t with root^t = y.
  Permutation transversal(Point y) const;

 private:
  Point root_;
  std::vector<Permutation> gens_;
  std::vector<Permutation> gens_inv_;
  std::vector<std::int32_t> backptr_;
  std::vector<Point> points_;
};

inline Orbit orbit(const PermGroup &g, Point x) { return Orbit(g, x); }

/// Generators of St_G(x): the strong generators below x in a chain based at x.
std::vector<Permutation> stabilizer_generators(const PermGroup &g, Point x);
inline PermGroup stabilizer(const PermGroup &g, Point x) {
  return PermGroup(g.degree(), stabilizer_generators(g, x));
}

bool is_transitive(const PermGroup &g);

/// Normal closure of `elements` in g.
PermGroup normal_closure(const PermGroup &g, std::span<const Permutation> elements);
PermGroup derived_subgroup(const PermGroup &g);
bool is_perfect(const PermGroup &g);

/// All elements, sorted by image table. Throws BudgetExceeded above `cap`.
std::vector<Permutation> enumerate_elements(const PermGroup &g, std::uint64_t cap = 100000);

/// True iff the permutations generate exactly `target` (equal order, all in target).
bool generates(const PermGroup &target, std::span<const Permutation> elements);

}  // namespace wf

#endif  // WF_PERM_GROUP_HPP
