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

#ifndef WF_GEN_SCHEMES_HPP
#define WF_GEN_SCHEMES_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wf/bigcount.hpp"
#include "wf/perm_group.hpp"
#include "wf/tower.hpp"
#include "wf/wreath.hpp"

namespace wf {

enum class Scheme { dgen, threegen, special, theoremB };
std::string to_string(Scheme s);
Scheme parse_scheme(const std::string &s);

/// An element fixing `fixed` and moving `moved`, so St(fixed) != St(moved).
struct StabilizerWitness {
  Point fixed = 1;
  Point moved = 2;
  Permutation certificate;
  bool holds() const;
};

/// sigma in S and a point r with r^(sigma^2) != r.
struct SegalPair {
  Permutation sigma;
  Point r = 1;
  bool holds() const;
};

/// Generators a, b of S with u in fix(a), v in fix(b).
struct SpecialPair {
  Permutation a, b;
  Point u = 1, v = 1;
  std::uint64_t order_a = 1, order_b = 1;
};

/// Order constraints for find_special_pair: |a| must be coprime to every
/// entry of `a_coprime_to`, and likewise for b.
struct PairConstraints {
  std::vector<std::uint64_t> a_coprime_to;
  std::vector<std::uint64_t> b_coprime_to;
};

/// Some stabilizer St(i) moves a point j. For transitive groups this is the
/// same as the action not being regular.
std::optional<StabilizerWitness> check_non_regular(const PermGroup &s);

/// Witness for A exp B: x = (1,...,1) and y = (2,1,...,1), certified by a
/// top element moving coordinate 1. Needs m >= 2 and B nontrivial on 1.
std::optional<StabilizerWitness> exponentiation_witness(std::uint32_t m, const PermGroup &b);

/// First pair (i, j), i < j, with St(i) = St(j); nullopt when all differ.
std::optional<std::pair<Point, Point>> equal_stabilizer_pair(const PermGroup &s);

/// First hit over the sorted elements of S. Throws BudgetExceeded above `cap`.
std::optional<SegalPair> find_segal_pair(const PermGroup &s, std::uint64_t cap = 100000);

/// First admissible ordered pair over the sorted elements of S.
std::optional<SpecialPair> find_special_pair(const PermGroup &s, const PairConstraints &c = {},
                                             std::uint64_t cap = 100000);

struct LevelHypotheses {
  std::size_t level = 1;
  std::string name;
  bool transitive = false;
  bool perfect = false;
  /// Not (transitive and |S| = degree).
  bool non_regular = false;
  /// Some St(i) != St(j); certified by `witness`.
  std::optional<StabilizerWitness> witness;
  /// Filled when computed: nullopt inside means all stabilizers differ.
  std::optional<std::optional<std::pair<Point, Point>>> equal_pair;
  std::optional<SegalPair> segal;
  std::optional<SpecialPair> special;
  /// Point relabeling applied to move the witness to (1, 2), if any.
  std::optional<Permutation> relabel;
  std::vector<std::string> notes;

  bool stabilizers_differ() const { return witness.has_value(); }
  bool all_stabilizers_distinct() const { return equal_pair && !equal_pair->has_value(); }
};

struct HypothesisReport {
  std::vector<LevelHypotheses> levels;
  /// coprime[i][j]: gcd(|a_i|, |b_j|) = 1 for the chosen special pairs.
  std::vector<std::vector<bool>> coprime;
  std::vector<std::string> notes;
};

struct SchemeOptions {
  std::uint64_t cap = kDefaultDegreeCap;
  bool strict = true;
  /// Uniform generator count for levels >= 2; 0 picks the maximum.
  std::size_t d = 0;
  /// Search budget (group order) for Segal and special pairs.
  std::uint64_t search_cap = 100000;
  /// Pairs supplied by the caller, keyed by 1-based level.
  std::map<std::size_t, SegalPair> segal_pairs;
  std::map<std::size_t, SpecialPair> special_pairs;
};

struct GeneratorSet {
  Scheme scheme = Scheme::dgen;
  std::size_t depth = 1;
  std::vector<Element> elements;
  /// Present when the top level is flattenable.
  std::optional<std::vector<Permutation>> flat;
  std::size_t claimed_count = 0;
  /// Upper bound the count must respect (2md for theoremB, else claimed_count).
  std::size_t count_bound = 0;
  std::string claim;
  std::size_t size() const noexcept { return elements.size(); }
};

struct SchemeResult {
  Tower tower;
  HypothesisReport hypotheses;
  GeneratorSet generators;
};

/// Hypothesis report for levels 1..depth. Segal and special searches are only
/// run when `with_segal` / `with_special` are set.
HypothesisReport check_hypotheses(const TowerSpec &spec, std::size_t depth,
                                  const SchemeOptions &opt = {}, bool with_segal = false,
                                  bool with_special = false);

SchemeResult build_dgen(const TowerSpec &spec, std::size_t depth, const SchemeOptions &opt = {});
SchemeResult build_threegen(const TowerSpec &spec, std::size_t depth,
                            const SchemeOptions &opt = {});
SchemeResult build_special(const TowerSpec &spec, std::size_t depth,
                           const SchemeOptions &opt = {});
/// dgen over the regrouped H-sequence of a mixed spec (all of its levels).
SchemeResult build_theoremB(const TowerSpec &spec, const SchemeOptions &opt = {});

SchemeResult build_scheme(Scheme scheme, const TowerSpec &spec, std::size_t depth,
                          const SchemeOptions &opt = {});

/// beta_1^p = b_1^p and beta_2^q = a_1^q, compared as structured elements.
struct PowerIdentities {
  BigCount p, q;
  bool first = false;
  bool second = false;
};
PowerIdentities check_power_identities(const SchemeResult &special);

struct Verification {
  std::optional<BigCount> theoretical;
  std::optional<BigCount> computed;
  bool flattenable = false;
  bool passed() const { return flattenable && theoretical && computed && *theoretical == *computed; }
};
/// Chain order of the flattened generators against the theoretical order.
Verification verify_generation(const SchemeResult &r);

/// Chain orders of the sets obtained by dropping each generator in turn.
std::vector<BigCount> drop_one_orders(const SchemeResult &r);

}  // namespace wf

#endif  // WF_GEN_SCHEMES_HPP
