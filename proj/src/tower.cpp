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

#include <algorithm>

#include "wf/error.hpp"

namespace wf {

// ---------------------------------------------------------------------------
// TowerSpec

TowerSpec::TowerSpec(std::vector<LevelSpec> levels,
                     std::optional<std::vector<std::size_t>> exp_positions)
    : levels_(std::move(levels)) {
  if (levels_.empty()) throw Error("a tower needs at least one level");
  if (exp_positions) {
    const auto &pos = *exp_positions;
    for (std::size_t i = 0; i < pos.size(); ++i) {
      if (pos[i] < 1 || pos[i] > levels_.size())
        throw Error("exp position " + std::to_string(pos[i]) + " out of range 1.." +
                    std::to_string(levels_.size()));
      if (i && pos[i] <= pos[i - 1]) throw Error("exp positions must be strictly increasing");
    }
    for (std::size_t k = 1; k <= levels_.size(); ++k) {
      const bool is_exp = std::find(pos.begin(), pos.end(), k) != pos.end();
      levels_[k - 1].action = is_exp ? Action::exp : Action::perm;
    }
  }
  for (std::size_t k = 1; k <= levels_.size(); ++k)
    if (levels_[k - 1].action == Action::exp) exp_positions_.push_back(k);
}

Action TowerSpec::action(std::size_t k) const { return level(k).action; }

std::size_t TowerSpec::stride() const {
  std::size_t prev = 0, best = 0;
  for (auto k : exp_positions_) {
    best = std::max(best, k - prev);
    prev = k;
  }
  return best;
}

TowerSpec TowerSpec::truncated(std::size_t depth) const {
  if (depth < 1 || depth > levels_.size())
    throw Error("depth " + std::to_string(depth) + " out of range 1.." +
                std::to_string(levels_.size()));
  return TowerSpec({levels_.begin(), levels_.begin() + static_cast<std::ptrdiff_t>(depth)});
}

// ---------------------------------------------------------------------------
// Tower

Element Tower::identity(std::size_t k) const {
  if (k == 1) return Permutation(level(1).group_degree);
  return WreathElement::identity(level(k).shape);
}

Element Tower::base_element(std::size_t k, std::uint64_t position, const Permutation &a) const {
  if (k < 2) throw Error("base elements live at levels >= 2");
  return WreathElement::base_at(level(k).shape, position, a);
}

Element Tower::embed(const Element &x, std::size_t from, std::size_t to) const {
  if (from > to) throw Error("cannot embed a level-" + std::to_string(from) +
                             " element into level " + std::to_string(to));
  Element cur = x;
  for (std::size_t l = from + 1; l <= to; ++l) cur = WreathElement::top_only(level(l).shape, cur);
  return cur;
}

std::uint64_t Tower::diagonal_point(std::size_t k, std::uint32_t i) const {
  const auto &lev = level(k);
  if (i < 1 || i > lev.group_degree) throw Error("diagonal entry out of range");
  if (k == 1) return i;
  if (lev.action != Action::exp) throw Error("diagonal points are defined for exp levels");
  const TupleCodec codec(lev.group_degree, lev.shape->outer_degree_u64());
  return codec.diagonal(i);
}

Permutation Tower::flatten_at(std::size_t k, const Element &x) const {
  if (!level(k).flattenable())
    throw DegreeOverflow("degree overflow: level " + std::to_string(k) + " is not flattenable");
  return flatten(x, options_.cap);
}

Tower build_tower(const TowerSpec &spec, std::size_t depth, const TowerOptions &opt) {
  if (depth < 1 || depth > spec.size())
    throw Error("depth " + std::to_string(depth) + " out of range 1.." +
                std::to_string(spec.size()));
  std::vector<TowerLevel> levels;
  WreathOptions wopt;
  wopt.cap = opt.cap;
  wopt.strict = opt.strict;
  for (std::size_t k = 1; k <= depth; ++k) {
    const PermGroup &s = spec.level(k).group;
    if (opt.strict && !is_transitive(s))
      throw HypothesisError(k, "transitive", "group '" + spec.level(k).name + "' is not transitive");
    TowerLevel lev;
    lev.index = k;
    lev.action = k == 1 ? Action::exp : spec.action(k);
    lev.group_degree = static_cast<std::uint32_t>(s.degree());
    lev.group_order = s.order();
    if (k == 1) {
      lev.degree = BigCount(s.degree());
      lev.order = lev.group_order;
      if (s.degree() <= opt.cap) lev.flat = s;
    } else {
      const TowerLevel &prev = levels.back();
      lev.shape = k == 2 ? WreathShape::make(lev.action, lev.group_degree, prev.group_degree)
                         : WreathShape::make(lev.action, lev.group_degree, prev.shape);
      lev.degree = lev.shape->degree();
      if (prev.degree && prev.order) {
        if (auto p = checked_pow(lev.group_order, *prev.degree)) lev.order = *p * *prev.order;
      }
      if (prev.flat && lev.degree && *lev.degree <= opt.cap) {
        lev.flat = lev.action == Action::exp ? build_exponentiation(s, *prev.flat, wopt)
                                             : build_perm_wreath(s, *prev.flat, wopt);
      }
    }
    levels.push_back(std::move(lev));
  }
  return Tower(spec.truncated(depth), std::move(levels), opt);
}

Element level_projection(const Tower &tower, std::size_t k, const Element &x) {
  if (k < 2 || k > tower.depth())
    throw Error("projection needs 2 <= k <= depth, got k = " + std::to_string(k));
  if (x.is_plain())
    throw Error("level " + std::to_string(k) +
                " element is flat; keep the structured form to project it");
  if (!(*x.wreath().shape() == *tower.level(k).shape))
    throw ShapeMismatch("element does not belong to level " + std::to_string(k));
  return project_top(x.wreath());
}

// ---------------------------------------------------------------------------
// Regrouping

bool Regrouping::passed() const {
  return std::all_of(comparisons.begin(), comparisons.end(),
                     [](const RegroupComparison &c) { return c.passed(); });
}

Regrouping regroup_mixed(const TowerSpec &spec, const TowerOptions &opt) {
  const auto &pos = spec.exp_positions();
  if (pos.empty())
    throw ShapeMismatch("regrouping needs at least one exp position");
  if (pos.back() != spec.size())
    throw ShapeMismatch("level " + std::to_string(spec.size()) +
                        " is not an exp position; trailing perm levels have no H counterpart");
  WreathOptions wopt;
  wopt.cap = opt.cap;
  wopt.strict = opt.strict;

  Regrouping out;
  std::size_t prev = 0;
  for (std::size_t i = 0; i < pos.size(); ++i) {
    HGroup h;
    h.index = i + 1;
    h.first_level = prev + 1;
    h.last_level = pos[i];
    const PermGroup &top = spec.level(h.last_level).group;
    h.degree = BigCount(top.degree());
    h.order = top.order();
    if (top.degree() <= opt.cap) h.flat = top;
    for (std::size_t j = h.last_level; j-- > h.first_level;) {
      const PermGroup &s = spec.level(j).group;
      const BigCount mj(s.degree());
      if (h.degree && h.order) {
        auto ord = checked_pow(*h.order, mj);
        h.order = ord ? std::optional<BigCount>(*ord * s.order()) : std::nullopt;
        h.degree = checked_pow(*h.degree, mj);
      }
      if (h.flat && h.degree && *h.degree <= opt.cap)
        h.flat = build_exponentiation(*h.flat, s, wopt);
      else
        h.flat.reset();
    }
    out.h.push_back(std::move(h));
    prev = pos[i];
  }

  const Tower g = build_tower(spec, spec.size(), opt);
  std::optional<BigCount> hdeg, hord;
  std::optional<PermGroup> hflat;
  for (std::size_t n = 0; n < out.h.size(); ++n) {
    const HGroup &h = out.h[n];
    if (n == 0) {
      hdeg = h.degree;
      hord = h.order;
      hflat = h.flat;
    } else {
      std::optional<BigCount> ndeg, nord;
      if (hdeg && h.degree && h.order && hord) {
        ndeg = checked_pow(*h.degree, *hdeg);
        if (auto p = checked_pow(*h.order, *hdeg)) nord = *p * *hord;
      }
      if (hflat && h.flat && ndeg && *ndeg <= opt.cap)
        hflat = build_exponentiation(*h.flat, *hflat, wopt);
      else
        hflat.reset();
      hdeg = ndeg;
      hord = nord;
    }
    RegroupComparison c;
    c.n = n + 1;
    c.tower_level = h.last_level;
    const TowerLevel &gl = g.level(h.last_level);
    c.g_degree = gl.degree;
    c.g_order = gl.order;
    c.h_degree = hdeg;
    c.h_order = hord;
    c.degree_match = hdeg && gl.degree && *hdeg == *gl.degree;
    c.order_match = hord && gl.order && *hord == *gl.order;
    if (hflat && gl.flat && hflat->degree() == gl.flat->degree() &&
        hflat->degree() <= opt.check_cap) {
      // Under the rank codings the rebracketing bijection is the identity on
      // points, so conjugacy reduces to equality of the two groups.
      bool ok = true;
      for (const auto &x : gl.flat->generators()) ok = ok && hflat->contains(x);
      ok = ok && hflat->order() == gl.flat->order();
      c.conjugacy_check = ok;
    }
    out.comparisons.push_back(std::move(c));
  }
  return out;
}

TowerSpec regrouped_spec(const Regrouping &r) {
  std::vector<LevelSpec> levels;
  for (const auto &h : r.h) {
    if (!h.flat)
      throw DegreeOverflow("degree overflow: H_" + std::to_string(h.index) +
                           " is not flattenable");
    levels.push_back(LevelSpec{"H" + std::to_string(h.index), *h.flat, Action::exp});
  }
  return TowerSpec(std::move(levels));
}

}  // namespace wf
