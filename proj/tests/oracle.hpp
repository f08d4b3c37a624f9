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

// Test-only oracles. These deliberately avoid the stabilizer chain: groups are
// enumerated by breadth-first closure over raw image tables.

#ifndef WF_TESTS_ORACLE_HPP
#define WF_TESTS_ORACLE_HPP

#include <cstdint>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "wf/permutation.hpp"

namespace wf::oracle {

using Table = std::vector<std::uint32_t>;

inline Table table_of(const Permutation &p) { return {p.images0().begin(), p.images0().end()}; }

inline Table mul(const Table &a, const Table &b) {
  Table r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = b[a[i]];
  return r;
}

/// Every element of <gens>, by closure under right multiplication.
inline std::set<Table> closure(std::size_t degree, const std::vector<Permutation> &gens,
                               std::size_t limit = 200000) {
  Table id(degree);
  for (std::size_t i = 0; i < degree; ++i) id[i] = static_cast<std::uint32_t>(i);
  std::set<Table> seen{id};
  std::vector<Table> queue{id};
  std::vector<Table> g;
  for (const auto &x : gens) g.push_back(table_of(x));
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    for (const auto &s : g) {
      Table y = mul(queue[qi], s);
      if (seen.insert(y).second) {
        queue.push_back(std::move(y));
        if (seen.size() > limit) throw std::runtime_error("closure limit exceeded");
      }
    }
  }
  return seen;
}

inline Permutation random_permutation(std::size_t degree, std::mt19937_64 &rng) {
  std::vector<Point> img(degree);
  for (std::size_t i = 0; i < degree; ++i) img[i] = static_cast<Point>(i);
  std::shuffle(img.begin(), img.end(), rng);
  return Permutation::from_images0(std::move(img));
}

/// A random word of the given length in gens and their inverses.
inline Permutation random_word(std::size_t degree, const std::vector<Permutation> &gens,
                               std::size_t length, std::mt19937_64 &rng) {
  Permutation w(degree);
  if (gens.empty()) return w;
  std::uniform_int_distribution<std::size_t> pick(0, 2 * gens.size() - 1);
  for (std::size_t i = 0; i < length; ++i) {
    const auto k = pick(rng);
    w = w * (k < gens.size() ? gens[k] : gens[k - gens.size()].inverse());
  }
  return w;
}

}  // namespace wf::oracle

#endif  // WF_TESTS_ORACLE_HPP
