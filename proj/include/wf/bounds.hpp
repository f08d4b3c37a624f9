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

#ifndef WF_BOUNDS_HPP
#define WF_BOUNDS_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "wf/bigcount.hpp"
#include "wf/perm_group.hpp"

namespace wf {

inline constexpr std::uint64_t kDefaultTupleBudget = 10'000'000;

/// Plain-text cache of Eulerian counts, one `group_id k count` line each.
class EulerianCache {
 public:
  EulerianCache() = default;
  /// Missing files give an empty cache.
  static EulerianCache load(const std::string &path);
  void save(const std::string &path) const;

  std::optional<BigCount> get(const std::string &group_id, unsigned k) const;
  void put(const std::string &group_id, unsigned k, const BigCount &count);

 private:
  std::map<std::pair<std::string, unsigned>, BigCount> entries_;
};

/// Number of ordered k-tuples of elements generating A. Needs |A|^k <= budget.
BigCount eulerian_count(const PermGroup &a, unsigned k,
                        std::uint64_t budget = kDefaultTupleBudget);

/// Cached variant keyed by `group_id`.
BigCount eulerian_count(const PermGroup &a, unsigned k, const std::string &group_id,
                        EulerianCache &cache, std::uint64_t budget = kDefaultTupleBudget);

/// Smallest k with eulerian_count(a, k) > 0, searching k <= max_k.
unsigned min_generators(const PermGroup &a, unsigned max_k = 4,
                        std::uint64_t budget = kDefaultTupleBudget);

/// Normal closure of every nonidentity element is the whole group.
bool is_simple(const PermGroup &a, std::uint64_t cap = 100000);
bool is_abelian(const PermGroup &a);

/// Automorphisms of a small group, counted by testing which images of the
/// generators extend to homomorphisms.
BigCount count_automorphisms(const PermGroup &a, std::uint64_t cap = 120);

/// Minimal k with N <= eulerian_count(a, k) / aut_order (k <= max_k).
unsigned d_of_simple_power(const PermGroup &a, const BigCount &n_copies,
                           const BigCount &aut_order, unsigned max_k = 4,
                           std::uint64_t budget = kDefaultTupleBudget,
                           EulerianCache *cache = nullptr, const std::string &group_id = "");

/// Largest N with d(A^N) <= k, i.e. eulerian_count(a, k) / aut_order.
BigCount max_copies(const PermGroup &a, unsigned k, const BigCount &aut_order,
                    std::uint64_t budget = kDefaultTupleBudget, EulerianCache *cache = nullptr,
                    const std::string &group_id = "");

struct BoundInput {
  PermGroup a;
  BigCount n_copies = 1;
  PermGroup b;
  BigCount aut_order = 1;
  /// Declared d(B); searched exhaustively when absent.
  std::optional<unsigned> d_b;
  std::string group_id;
};

struct BoundReport {
  unsigned d_power = 0;  ///< d(A^N)
  unsigned d_a = 0;
  unsigned d_b = 0;
  std::size_t n = 1;  ///< degree of B
  Rational left;      ///< (d(A^N) - d(A) - 1) / n
  Rational value;     ///< max(left, d(B))
};

/// Checks the gates (A nonabelian simple, B perfect, aut_order divides |A|!)
/// and evaluates max{(d(A^N) - d(A) - 1)/n, d(B)}.
BoundReport lower_bound(const BoundInput &in, std::uint64_t budget = kDefaultTupleBudget,
                        EulerianCache *cache = nullptr);

/// Element of A^N wr B: base[j][l] is the entry of block j (of n) at row l
/// (of N); top acts on the blocks.
struct BlockElement {
  std::vector<std::vector<Permutation>> base;
  Permutation top;

  std::size_t blocks() const noexcept { return base.size(); }
  std::size_t rows() const noexcept { return base.empty() ? 0 : base.front().size(); }
};

BlockElement multiply(const BlockElement &x, const BlockElement &y);
BlockElement invert(const BlockElement &x);

/// Two equal rows (1-based, l1 < l2) of the N x nd matrix whose row l lists
/// every entry x^i_{jl}; nullopt when all rows differ.
std::optional<std::pair<std::size_t, std::size_t>> row_collision_witness(
    std::span<const BlockElement> elements);

/// Rows l1 and l2 agree in every block.
bool rows_agree(const BlockElement &x, std::size_t l1, std::size_t l2);

/// A random word of the given length in the elements and their inverses.
BlockElement random_block_word(std::span<const BlockElement> elements, std::size_t length,
                               std::mt19937_64 &rng);

}  // namespace wf

#endif  // WF_BOUNDS_HPP
