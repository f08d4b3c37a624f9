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

#include "wf/perm_group.hpp"

#include <algorithm>
#include <numeric>

#include "wf/error.hpp"

namespace wf {

namespace {

constexpr std::int32_t kAbsent = -2;
constexpr std::int32_t kRoot = -1;

bool is_identity_table(const std::vector<Point> &h) {
  for (std::size_t i = 0; i < h.size(); ++i)
    if (h[i] != i) return false;
  return true;
}

void check_degree(std::size_t expected, const Permutation &g) {
  if (g.degree() != expected)
    throw DegreeMismatch("permutation of degree " + std::to_string(g.degree()) +
                         " in a group of degree " + std::to_string(expected));
}

}  // namespace

// ---------------------------------------------------------------------------
// StabilizerChain

StabilizerChain::StabilizerChain(std::size_t degree, std::span<const Point> base_prefix,
                                 std::size_t cache_budget)
    : degree_(degree), cache_budget_(cache_budget) {
  if (degree == 0) throw Error("degree must be positive");
  for (Point b : base_prefix) {
    if (b < 1 || b > degree) throw Error("base point " + std::to_string(b) + " out of range");
    const Point b0 = b - 1;
    const bool dup = std::any_of(levels_.begin(), levels_.end(),
                                 [&](const Level &l) { return l.base == b0; });
    if (!dup) push_level(b0);
  }
}

void StabilizerChain::push_level(Point base0) {
  Level l;
  l.base = base0;
  l.backptr.assign(degree_, kAbsent);
  l.orbit_index.assign(degree_, 0);
  l.backptr[base0] = kRoot;
  l.orbit.push_back(base0);
  if (cache_used_ + 2 * degree_ <= cache_budget_) {
    l.cached = true;
    std::vector<Point> id(degree_);
    std::iota(id.begin(), id.end(), Point{0});
    l.u.push_back(id);
    l.u_inv.push_back(std::move(id));
    cache_used_ += 2 * degree_;
  }
  levels_.push_back(std::move(l));
}

void StabilizerChain::add_strong(const std::vector<Point> &h, std::size_t first_level,
                                 std::size_t last_level) {
  const auto idx = static_cast<std::uint32_t>(strong_.size());
  strong_.push_back(Permutation::unchecked(h));
  strong_inv_.push_back(strong_.back().inverse());
  for (std::size_t l = first_level; l <= last_level; ++l) {
    auto &lev = levels_[l];
    const std::size_t first_new = lev.gens.size();
    lev.gens.push_back(idx);
    lev.checked.emplace_back();
    extend_orbit(l, first_new);
  }
}

void StabilizerChain::extend_orbit(std::size_t level, std::size_t first_new_gen) {
  Level &lev = levels_[level];
  auto try_add = [&](std::size_t oi, std::uint32_t s) {
    const Point x = lev.orbit[oi];
    const Point y = strong_[s][x];
    if (lev.backptr[y] != kAbsent) return;
    lev.backptr[y] = static_cast<std::int32_t>(s);
    lev.orbit_index[y] = static_cast<std::uint32_t>(lev.orbit.size());
    lev.orbit.push_back(y);
    if (!lev.cached) return;
    if (cache_used_ + 2 * degree_ > cache_budget_) {
      cache_used_ -= 2 * degree_ * lev.u.size();
      lev.cached = false;
      std::vector<std::vector<Point>>().swap(lev.u);
      std::vector<std::vector<Point>>().swap(lev.u_inv);
      return;
    }
    const auto &s_img = strong_[s].images0();
    const auto &s_inv = strong_inv_[s].images0();
    std::vector<Point> u(degree_), ui(degree_);
    const auto &ux = lev.u[oi];
    const auto &uix = lev.u_inv[oi];
    for (std::size_t p = 0; p < degree_; ++p) {
      u[p] = s_img[ux[p]];
      ui[p] = uix[s_inv[p]];
    }
    lev.u.push_back(std::move(u));
    lev.u_inv.push_back(std::move(ui));
    cache_used_ += 2 * degree_;
  };

  const std::size_t old = lev.orbit.size();
  for (std::size_t oi = 0; oi < old; ++oi)
    for (std::size_t gp = first_new_gen; gp < lev.gens.size(); ++gp) try_add(oi, lev.gens[gp]);
  for (std::size_t oi = old; oi < lev.orbit.size(); ++oi)
    for (std::size_t gp = 0; gp < lev.gens.size(); ++gp) try_add(oi, lev.gens[gp]);
}

void StabilizerChain::transversal_into(std::size_t level, Point y0, std::vector<Point> &out) const {
  const Level &lev = levels_[level];
  if (lev.cached) {
    out = lev.u[lev.orbit_index[y0]];
    return;
  }
  std::vector<std::uint32_t> path;
  for (Point y = y0; lev.backptr[y] >= 0;) {
    const auto s = static_cast<std::uint32_t>(lev.backptr[y]);
    path.push_back(s);
    y = strong_inv_[s][y];
  }
  out.resize(degree_);
  std::iota(out.begin(), out.end(), Point{0});
  for (auto it = path.rbegin(); it != path.rend(); ++it) {
    const auto &s = strong_[*it];
    for (auto &p : out) p = s[p];
  }
}

void StabilizerChain::apply_transversal_inverse(std::size_t level, Point y0,
                                                std::vector<Point> &h) const {
  const Level &lev = levels_[level];
  if (lev.cached) {
    const auto &ui = lev.u_inv[lev.orbit_index[y0]];
    for (auto &p : h) p = ui[p];
    return;
  }
  for (Point y = y0; lev.backptr[y] >= 0;) {
    const auto &si = strong_inv_[static_cast<std::size_t>(lev.backptr[y])];
    for (auto &p : h) p = si[p];
    y = si[y];
  }
}

std::size_t StabilizerChain::sift_in_place(std::vector<Point> &h, std::size_t from) const {
  for (std::size_t l = from; l < levels_.size(); ++l) {
    const Point p = h[levels_[l].base];
    if (levels_[l].backptr[p] == kAbsent) return l;
    apply_transversal_inverse(l, p, h);
  }
  return levels_.size();
}

void StabilizerChain::run(std::size_t start) {
  std::vector<Point> u_beta;
  std::vector<Point> t;
  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(start);
  while (i >= 0) {
    const auto li = static_cast<std::size_t>(i);
    bool jumped = false;
    for (std::size_t oi = 0; oi < levels_[li].orbit.size() && !jumped; ++oi) {
      bool have_u = false;
      for (std::size_t gp = 0; gp < levels_[li].gens.size(); ++gp) {
        Level &lev = levels_[li];
        auto &chk = lev.checked[gp];
        if (chk.size() < lev.orbit.size()) chk.resize(lev.orbit.size(), false);
        if (chk[oi]) continue;
        chk[oi] = true;

        if (!have_u) {
          transversal_into(li, lev.orbit[oi], u_beta);
          have_u = true;
        }
        const auto &s = strong_[lev.gens[gp]];
        t.resize(degree_);
        for (std::size_t p = 0; p < degree_; ++p) t[p] = s[u_beta[p]];
        if (lev.cached) {
          const Point img = t[lev.base];
          if (t == lev.u[lev.orbit_index[img]]) continue;
        }
        const std::size_t drop = sift_in_place(t, li);
        if (drop == levels_.size() && is_identity_table(t)) continue;

        if (drop == levels_.size()) {
          Point moved = 0;
          while (t[moved] == moved) ++moved;
          push_level(moved);
        }
        add_strong(t, li + 1, drop);
        i = static_cast<std::ptrdiff_t>(drop);
        jumped = true;
        break;
      }
    }
    if (!jumped) --i;
  }
}

bool StabilizerChain::add_generator(const Permutation &g) {
  check_degree(degree_, g);
  std::vector<Point> h(g.images0().begin(), g.images0().end());
  const std::size_t drop = sift_in_place(h, 0);
  if (drop == levels_.size() && is_identity_table(h)) return false;
  if (drop == levels_.size()) {
    Point moved = 0;
    while (h[moved] == moved) ++moved;
    push_level(moved);
  }
  add_strong(h, 0, drop);
  run(drop);
  return true;
}

std::vector<Point> StabilizerChain::base() const {
  std::vector<Point> b;
  for (const auto &l : levels_) b.push_back(l.base + 1);
  return b;
}

std::vector<std::size_t> StabilizerChain::orbit_lengths() const {
  std::vector<std::size_t> out;
  for (const auto &l : levels_) out.push_back(l.orbit.size());
  return out;
}

BigCount StabilizerChain::order() const {
  BigCount r = 1;
  for (const auto &l : levels_) r *= l.orbit.size();
  return r;
}

std::pair<Permutation, std::size_t> StabilizerChain::sift(const Permutation &g) const {
  check_degree(degree_, g);
  std::vector<Point> h(g.images0().begin(), g.images0().end());
  const std::size_t drop = sift_in_place(h, 0);
  return {Permutation::unchecked(std::move(h)), drop};
}

bool StabilizerChain::contains(const Permutation &g) const {
  if (g.degree() != degree_) return false;
  std::vector<Point> h(g.images0().begin(), g.images0().end());
  return sift_in_place(h, 0) == levels_.size() && is_identity_table(h);
}

std::vector<Permutation> StabilizerChain::level_generators(std::size_t level) const {
  std::vector<Permutation> out;
  if (level >= levels_.size()) return out;
  for (auto s : levels_[level].gens) out.push_back(strong_[s]);
  return out;
}

std::vector<Point> StabilizerChain::level_orbit(std::size_t level) const {
  std::vector<Point> out;
  for (Point p : levels_.at(level).orbit) out.push_back(p + 1);
  return out;
}

Permutation StabilizerChain::transversal(std::size_t level, Point y) const {
  const Level &lev = levels_.at(level);
  if (y < 1 || y > degree_ || lev.backptr[y - 1] == kAbsent)
    throw Error("point " + std::to_string(y) + " is not in the basic orbit");
  std::vector<Point> out;
  transversal_into(level, y - 1, out);
  return Permutation::unchecked(std::move(out));
}

// ---------------------------------------------------------------------------
// PermGroup

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators)
    : degree_(degree), generators_(std::move(generators)), lazy_(std::make_shared<Lazy>()) {
  if (degree == 0) throw Error("degree must be positive");
  for (const auto &g : generators_) check_degree(degree_, g);
}

const StabilizerChain &PermGroup::chain() const {
  std::call_once(lazy_->once, [this] {
    auto c = std::make_unique<StabilizerChain>(degree_);
    for (const auto &g : generators_) c->add_generator(g);
    lazy_->chain = std::move(c);
  });
  return *lazy_->chain;
}

bool PermGroup::contains(const Permutation &g) const {
  if (g.degree() != degree_) return false;
  return chain().contains(g);
}

StabilizerChain build_chain(const PermGroup &g, std::span<const Point> base_prefix) {
  StabilizerChain c(g.degree(), base_prefix);
  for (const auto &x : g.generators()) c.add_generator(x);
  return c;
}

// ---------------------------------------------------------------------------
// Orbits and derived constructions

Orbit::Orbit(const PermGroup &g, Point x) : root_(x), gens_(g.generators()) {
  const std::size_t n = g.degree();
  if (x < 1 || x > n) throw Error("point " + std::to_string(x) + " out of range");
  for (const auto &s : gens_) gens_inv_.push_back(s.inverse());
  backptr_.assign(n, kAbsent);
  backptr_[x - 1] = kRoot;
  std::vector<Point> queue{x - 1};
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    for (std::size_t s = 0; s < gens_.size(); ++s) {
      const Point y = gens_[s][queue[qi]];
      if (backptr_[y] != kAbsent) continue;
      backptr_[y] = static_cast<std::int32_t>(s);
      queue.push_back(y);
    }
  }
  for (Point p : queue) points_.push_back(p + 1);
}

bool Orbit::contains(Point y) const {
  return y >= 1 && y <= backptr_.size() && backptr_[y - 1] != kAbsent;
}

Permutation Orbit::transversal(Point y) const {
  if (!contains(y)) throw Error("point " + std::to_string(y) + " is not in the orbit");
  std::vector<std::size_t> path;
  for (Point p = y - 1; backptr_[p] >= 0;) {
    const auto s = static_cast<std::size_t>(backptr_[p]);
    path.push_back(s);
    p = gens_inv_[s][p];
  }
  Permutation t(backptr_.size());
  for (auto it = path.rbegin(); it != path.rend(); ++it) t = t * gens_[*it];
  return t;
}

std::vector<Permutation> stabilizer_generators(const PermGroup &g, Point x) {
  const Point prefix[] = {x};
  const auto c = build_chain(g, prefix);
  return c.level_generators(1);
}

bool is_transitive(const PermGroup &g) { return Orbit(g, 1).size() == g.degree(); }

PermGroup normal_closure(const PermGroup &g, std::span<const Permutation> elements) {
  StabilizerChain c(g.degree());
  std::vector<Permutation> gens;
  for (const auto &e : elements)
    if (c.add_generator(e)) gens.push_back(e);
  std::vector<Permutation> conj_by_inv;
  for (const auto &s : g.generators()) conj_by_inv.push_back(s.inverse());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t s = 0; s < g.generators().size(); ++s) {
      Permutation x = conj_by_inv[s] * gens[i] * g.generators()[s];
      if (c.add_generator(x)) gens.push_back(std::move(x));
    }
  }
  return PermGroup(g.degree(), std::move(gens));
}

PermGroup derived_subgroup(const PermGroup &g) {
  std::vector<Permutation> comms;
  const auto &gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      auto c = commutator(gens[i], gens[j]);
      if (!c.is_identity()) comms.push_back(std::move(c));
    }
  return normal_closure(g, comms);
}

bool is_perfect(const PermGroup &g) { return derived_subgroup(g).order() == g.order(); }

std::vector<Permutation> enumerate_elements(const PermGroup &g, std::uint64_t cap) {
  const auto &c = g.chain();
  if (c.order() > cap)
    throw BudgetExceeded("group of order " + to_string(c.order()) +
                         " exceeds the enumeration cap " + std::to_string(cap));
  std::vector<Permutation> elems{Permutation(g.degree())};
  for (std::size_t l = c.length(); l-- > 0;) {
    std::vector<Permutation> reps;
    for (Point y : c.level_orbit(l)) reps.push_back(c.transversal(l, y));
    std::vector<Permutation> next;
    next.reserve(elems.size() * reps.size());
    for (const auto &h : elems)
      for (const auto &u : reps) next.push_back(h * u);
    elems = std::move(next);
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

bool generates(const PermGroup &target, std::span<const Permutation> elements) {
  for (const auto &e : elements)
    if (!target.contains(e)) return false;
  PermGroup h(target.degree(), {elements.begin(), elements.end()});
  return h.order() == target.order();
}

}  // namespace wf
