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

#include "wf/bounds.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "wf/error.hpp"

namespace wf {

// ---------------------------------------------------------------------------
// EulerianCache

EulerianCache EulerianCache::load(const std::string &path) {
  EulerianCache cache;
  std::ifstream in(path);
  if (!in) return cache;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    std::string id, count;
    unsigned k = 0;
    if (!(ss >> id >> k >> count))
      throw Error(path + ":" + std::to_string(lineno) + ": expected `group_id k count`");
    cache.put(id, k, BigCount(count));
  }
  return cache;
}

void EulerianCache::save(const std::string &path) const {
  std::ofstream out(path);
  if (!out) throw Error("cannot write cache file " + path);
  for (const auto &[key, count] : entries_)
    out << key.first << ' ' << key.second << ' ' << to_string(count) << '\n';
}

std::optional<BigCount> EulerianCache::get(const std::string &group_id, unsigned k) const {
  auto it = entries_.find({group_id, k});
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void EulerianCache::put(const std::string &group_id, unsigned k, const BigCount &count) {
  if (group_id.empty() || group_id.find_first_of(" \t\n") != std::string::npos)
    throw Error("cache group id must be a non-empty word");
  entries_[{group_id, k}] = count;
}

// ---------------------------------------------------------------------------
// Counting

namespace {

void count_tuples(const std::vector<Permutation> &elems, const BigCount &target, unsigned depth,
                  unsigned k, const StabilizerChain &chain, BigCount &total) {
  if (chain.order() == target) {
    // Every extension of a generating prefix generates.
    BigCount rest = 1;
    for (unsigned i = depth; i < k; ++i) rest *= elems.size();
    total += rest;
    return;
  }
  if (depth == k) return;
  for (const auto &e : elems) {
    StabilizerChain next = chain;
    next.add_generator(e);
    count_tuples(elems, target, depth + 1, k, next, total);
  }
}

}  // namespace

BigCount eulerian_count(const PermGroup &a, unsigned k, std::uint64_t budget) {
  const BigCount order = a.order();
  const BigCount work = checked_pow(order, k).value_or(BigCount(budget) + 1);
  if (work > budget)
    throw BudgetExceeded("budget exceeded: |A|^" + std::to_string(k) + " = " +
                         to_string(work) + " tuples, budget " + std::to_string(budget));
  const auto elems = enumerate_elements(a, budget);
  BigCount total = 0;
  count_tuples(elems, order, 0, k, StabilizerChain(a.degree()), total);
  return total;
}

BigCount eulerian_count(const PermGroup &a, unsigned k, const std::string &group_id,
                        EulerianCache &cache, std::uint64_t budget) {
  if (auto hit = cache.get(group_id, k)) return *hit;
  const BigCount c = eulerian_count(a, k, budget);
  cache.put(group_id, k, c);
  return c;
}

namespace {

BigCount counted(const PermGroup &a, unsigned k, std::uint64_t budget, EulerianCache *cache,
                 const std::string &group_id) {
  if (cache && !group_id.empty()) return eulerian_count(a, k, group_id, *cache, budget);
  return eulerian_count(a, k, budget);
}

}  // namespace

unsigned min_generators(const PermGroup &a, unsigned max_k, std::uint64_t budget) {
  if (a.order() == 1) return 0;
  for (unsigned k = 1; k <= max_k; ++k)
    if (eulerian_count(a, k, budget) > 0) return k;
  throw BudgetExceeded("budget exceeded: no generating tuple of length <= " +
                       std::to_string(max_k));
}

bool is_abelian(const PermGroup &a) {
  const auto &g = a.generators();
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j)
      if (g[i] * g[j] != g[j] * g[i]) return false;
  return true;
}

bool is_simple(const PermGroup &a, std::uint64_t cap) {
  const BigCount order = a.order();
  if (order == 1) return false;
  std::set<Permutation> covered;
  for (const auto &e : enumerate_elements(a, cap)) {
    if (e.is_identity() || covered.contains(e)) continue;
    const Permutation one[] = {e};
    if (normal_closure(a, one).order() != order) return false;
    // Conjugates generate the same normal closure.
    std::vector<Permutation> queue{e};
    covered.insert(e);
    for (std::size_t i = 0; i < queue.size(); ++i)
      for (const auto &g : a.generators()) {
        auto c = conjugate(queue[i], g);
        if (covered.insert(c).second) queue.push_back(std::move(c));
      }
  }
  return true;
}

BigCount count_automorphisms(const PermGroup &a, std::uint64_t cap) {
  if (a.order() > cap)
    throw BudgetExceeded("budget exceeded: automorphism count needs |A| <= " +
                         std::to_string(cap));
  const auto elems = enumerate_elements(a, cap);
  std::map<Permutation, std::size_t> index;
  for (std::size_t i = 0; i < elems.size(); ++i) index.emplace(elems[i], i);
  std::vector<Permutation> gens;
  for (const auto &g : a.generators())
    if (!g.is_identity()) gens.push_back(g);
  if (gens.empty()) return 1;

  std::vector<std::size_t> choice(gens.size(), 0);
  BigCount count = 0;
  const std::size_t n = elems.size();
  while (true) {
    bool orders_ok = true;
    for (std::size_t i = 0; i < gens.size() && orders_ok; ++i)
      orders_ok = elems[choice[i]].order_u64() == gens[i].order_u64();
    if (orders_ok) {
      // Walk the Cayley graph, defining phi(g * g_i) = phi(g) * x_i.
      std::vector<std::optional<std::size_t>> image(n);
      const std::size_t id = index.at(Permutation(a.degree()));
      image[id] = id;
      std::vector<std::size_t> queue{id};
      bool hom = true;
      for (std::size_t q = 0; q < queue.size() && hom; ++q) {
        const std::size_t g = queue[q];
        for (std::size_t i = 0; i < gens.size() && hom; ++i) {
          const std::size_t h = index.at(elems[g] * gens[i]);
          const std::size_t ph = index.at(elems[*image[g]] * elems[choice[i]]);
          if (!image[h]) {
            image[h] = ph;
            queue.push_back(h);
          } else if (*image[h] != ph) {
            hom = false;
          }
        }
      }
      if (hom) {
        std::vector<bool> hit(n, false);
        bool bijective = true;
        for (const auto &im : image) {
          if (!im || hit[*im]) {
            bijective = false;
            break;
          }
          hit[*im] = true;
        }
        if (bijective) count += 1;
      }
    }
    std::size_t pos = 0;
    while (pos < choice.size() && ++choice[pos] == n) choice[pos++] = 0;
    if (pos == choice.size()) break;
  }
  return count;
}

unsigned d_of_simple_power(const PermGroup &a, const BigCount &n_copies,
                           const BigCount &aut_order, unsigned max_k, std::uint64_t budget,
                           EulerianCache *cache, const std::string &group_id) {
  if (n_copies < 1) throw Error("N must be positive");
  if (aut_order < 1) throw Error("automorphism group order must be positive");
  for (unsigned k = 1; k <= max_k; ++k)
    if (n_copies * aut_order <= counted(a, k, budget, cache, group_id)) return k;
  throw BudgetExceeded("budget exceeded: d(A^N) > " + std::to_string(max_k));
}

BigCount max_copies(const PermGroup &a, unsigned k, const BigCount &aut_order,
                    std::uint64_t budget, EulerianCache *cache, const std::string &group_id) {
  return counted(a, k, budget, cache, group_id) / aut_order;
}

BoundReport lower_bound(const BoundInput &in, std::uint64_t budget, EulerianCache *cache) {
  if (is_abelian(in.a) || !is_simple(in.a))
    throw HypothesisError(0, "simple", "A must be a nonabelian simple group");
  if (!is_perfect(in.b)) throw HypothesisError(0, "perfect", "B must be perfect");
  const BigCount order_a = in.a.order();
  if (order_a <= 1000) {
    const auto f = factorial(static_cast<std::size_t>(to_u64(order_a).value()));
    if (f % in.aut_order != 0)
      throw Error("declared |Aut(A)| = " + to_string(in.aut_order) + " does not divide |A|!");
  }
  BoundReport r;
  r.n = in.b.degree();
  r.d_power = d_of_simple_power(in.a, in.n_copies, in.aut_order, 4, budget, cache, in.group_id);
  r.d_a = min_generators(in.a, 4, budget);
  r.d_b = in.d_b ? *in.d_b : min_generators(in.b, 4, budget);
  r.left = Rational(static_cast<long long>(r.d_power) - static_cast<long long>(r.d_a) - 1,
                    static_cast<long long>(r.n));
  r.value = std::max(r.left, Rational(r.d_b));
  return r;
}

// ---------------------------------------------------------------------------
// Row collisions

namespace {

void same_shape(const BlockElement &x, const BlockElement &y) {
  if (x.blocks() != y.blocks() || x.rows() != y.rows() || x.top.degree() != y.top.degree())
    throw ShapeMismatch("block elements of different shapes");
  if (x.top.degree() != x.blocks())
    throw ShapeMismatch("top degree " + std::to_string(x.top.degree()) + " but " +
                        std::to_string(x.blocks()) + " blocks");
}

}  // namespace

BlockElement multiply(const BlockElement &x, const BlockElement &y) {
  same_shape(x, y);
  BlockElement out;
  out.base.resize(x.blocks());
  for (std::size_t k = 0; k < x.blocks(); ++k) {
    const std::size_t tk = x.top[k];
    out.base[k].reserve(x.rows());
    for (std::size_t l = 0; l < x.rows(); ++l) out.base[k].push_back(x.base[k][l] * y.base[tk][l]);
  }
  out.top = x.top * y.top;
  return out;
}

BlockElement invert(const BlockElement &x) {
  same_shape(x, x);
  BlockElement out;
  out.base.resize(x.blocks());
  for (std::size_t k = 0; k < x.blocks(); ++k) {
    auto &dst = out.base[x.top[k]];
    for (std::size_t l = 0; l < x.rows(); ++l) dst.push_back(x.base[k][l].inverse());
  }
  out.top = x.top.inverse();
  return out;
}

std::optional<std::pair<std::size_t, std::size_t>> row_collision_witness(
    std::span<const BlockElement> elements) {
  if (elements.empty()) throw ShapeMismatch("no elements given");
  for (const auto &e : elements) same_shape(elements.front(), e);
  const std::size_t rows = elements.front().rows();
  std::map<std::vector<Permutation>, std::size_t> seen;
  for (std::size_t l = 0; l < rows; ++l) {
    std::vector<Permutation> row;
    for (const auto &e : elements)
      for (const auto &block : e.base) row.push_back(block[l]);
    auto [it, fresh] = seen.emplace(std::move(row), l);
    if (!fresh) return std::make_pair(it->second + 1, l + 1);
  }
  return std::nullopt;
}

bool rows_agree(const BlockElement &x, std::size_t l1, std::size_t l2) {
  if (l1 < 1 || l2 < 1 || l1 > x.rows() || l2 > x.rows()) throw Error("row index out of range");
  return std::all_of(x.base.begin(), x.base.end(),
                     [&](const auto &block) { return block[l1 - 1] == block[l2 - 1]; });
}

BlockElement random_block_word(std::span<const BlockElement> elements, std::size_t length,
                               std::mt19937_64 &rng) {
  if (elements.empty()) throw ShapeMismatch("no elements given");
  const auto &first = elements.front();
  BlockElement w;
  w.base.assign(first.blocks(), std::vector<Permutation>(first.rows(),
                                                         Permutation(first.base[0][0].degree())));
  w.top = Permutation(first.top.degree());
  std::uniform_int_distribution<std::size_t> pick(0, 2 * elements.size() - 1);
  for (std::size_t i = 0; i < length; ++i) {
    const auto k = pick(rng);
    w = multiply(w, k < elements.size() ? elements[k] : invert(elements[k - elements.size()]));
  }
  return w;
}

}  // namespace wf
