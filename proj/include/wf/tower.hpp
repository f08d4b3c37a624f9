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

#ifndef WF_TOWER_HPP
#define WF_TOWER_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "wf/bigcount.hpp"
#include "wf/perm_group.hpp"
#include "wf/wreath.hpp"

namespace wf {

struct LevelSpec {
  std::string name;
  PermGroup group;
  /// How this level acts on the tower below it; ignored for level 1 except
  /// that `exp` there marks level 1 as an exp position.
  Action action = Action::exp;
};

/**
 * Declarative tower: G_1 = S_1 and G_k = S_k (action_k) G_{k-1}.
 *
 * Exp positions {k_n} either come from the action tags (every k >= 2 tagged
 * exp, plus 1 when level 1 is tagged exp) or are given explicitly, in which
 * case they override the tags.
 */
class TowerSpec {
 public:
  explicit TowerSpec(std::vector<LevelSpec> levels,
                     std::optional<std::vector<std::size_t>> exp_positions = std::nullopt);

  const std::vector<LevelSpec> &levels() const noexcept { return levels_; }
  std::size_t size() const noexcept { return levels_.size(); }
  const LevelSpec &level(std::size_t k) const { return levels_.at(k - 1); }

  /// Action used to build level k >= 2.
  Action action(std::size_t k) const;
  /// Strictly increasing, 1-based.
  const std::vector<std::size_t> &exp_positions() const noexcept { return exp_positions_; }
  /// max(k_1, k_{n+1} - k_n): the longest run of levels folded into one H_i.
  std::size_t stride() const;
  /// Restriction to the first `depth` levels.
  TowerSpec truncated(std::size_t depth) const;

 private:
  std::vector<LevelSpec> levels_;
  std::vector<std::size_t> exp_positions_;
};

struct TowerOptions {
  std::uint64_t cap = kDefaultDegreeCap;
  /// Strict mode enforces transitivity of every level group.
  bool strict = true;
  /// Largest degree at which regrouping compares the flattened groups by
  /// chain computations; above it only degrees and orders are compared.
  std::uint64_t check_cap = 10000;
};

struct TowerLevel {
  std::size_t index = 1;
  Action action = Action::exp;
  std::uint32_t group_degree = 1;
  BigCount group_order;
  /// nullopt when unrepresentable.
  std::optional<BigCount> degree;
  std::optional<BigCount> order;
  /// Structured shape (null for level 1).
  ShapePtr shape;
  std::optional<PermGroup> flat;
  bool flattenable() const noexcept { return flat.has_value(); }
};

class Tower {
 public:
  Tower(TowerSpec spec, std::vector<TowerLevel> levels, TowerOptions options)
      : spec_(std::move(spec)), levels_(std::move(levels)), options_(options) {}

  const TowerSpec &spec() const noexcept { return spec_; }
  std::size_t depth() const noexcept { return levels_.size(); }
  const TowerLevel &level(std::size_t k) const { return levels_.at(k - 1); }
  const PermGroup &group(std::size_t k) const { return spec_.level(k).group; }
  const TowerOptions &options() const noexcept { return options_; }

  Element identity(std::size_t k) const;
  /// Pure base element of level k >= 2: `a` at the 1-based coordinate `position`.
  Element base_element(std::size_t k, std::uint64_t position, const Permutation &a) const;
  /// Embeds a level-`from` element into level `to` >= from as a top factor.
  Element embed(const Element &x, std::size_t from, std::size_t to) const;
  /// Rank of the diagonal point (i,...,i) of level k (k = 1: the point i).
  std::uint64_t diagonal_point(std::size_t k, std::uint32_t i) const;
  /// Flattened form of a level-k element (k must be flattenable).
  Permutation flatten_at(std::size_t k, const Element &x) const;

 private:
  TowerSpec spec_;
  std::vector<TowerLevel> levels_;
  TowerOptions options_;
};

/// Realizes levels 1..depth. Theoretical degrees and orders are computed for
/// every level; levels above the cap are kept structured only.
Tower build_tower(const TowerSpec &spec, std::size_t depth, const TowerOptions &opt = {});

/// The level-(k-1) image of a structured level-k element.
Element level_projection(const Tower &tower, std::size_t k, const Element &x);

struct HGroup {
  std::size_t index = 1;
  /// Levels folded into this group: first_level..last_level (= k_i).
  std::size_t first_level = 1;
  std::size_t last_level = 1;
  std::optional<BigCount> degree;
  std::optional<BigCount> order;
  /// Ŝ^(k_i) exp S_{k_i - 1} exp ... exp S_{first_level}, when within the cap.
  std::optional<PermGroup> flat;
};

struct RegroupComparison {
  std::size_t n = 1;          ///< index into the H-sequence
  std::size_t tower_level = 1;  ///< k_n
  std::optional<BigCount> g_degree, g_order, h_degree, h_order;
  bool degree_match = false;
  bool order_match = false;
  /// Set when both sides were flattened within the check cap: the groups
  /// coincide on ranks.
  std::optional<bool> conjugacy_check;
  bool passed() const noexcept {
    return degree_match && order_match && conjugacy_check.value_or(true);
  }
};

struct Regrouping {
  std::vector<HGroup> h;
  std::vector<RegroupComparison> comparisons;
  bool passed() const;
};

/// H_i = Ŝ_{k_i}^{(k_{i-1}+1)} for every exp position k_i. Requires the last
/// level to be an exp position.
Regrouping regroup_mixed(const TowerSpec &spec, const TowerOptions &opt = {});

/// The H-sequence as an all-exp tower spec (requires every H_i flattenable).
TowerSpec regrouped_spec(const Regrouping &r);

}  // namespace wf

#endif  // WF_TOWER_HPP
