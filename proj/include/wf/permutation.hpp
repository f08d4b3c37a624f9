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

#ifndef WF_PERMUTATION_HPP
#define WF_PERMUTATION_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wf/bigcount.hpp"

namespace wf {

using Point = std::uint32_t;

/**
 * A bijection of {1..degree}, stored as a 0-based image table.
 *
 * All actions are right actions: x^(pq) = (x^p)^q, so `p * q` applies p
 * first. Public point arguments are 1-based; operator[] is the raw 0-based
 * table access used by the algorithms.
 */
class Permutation {
 public:
  Permutation() = default;

  /// The identity of the given degree.
  explicit Permutation(std::size_t degree);

  /// From a 0-based image table; throws if it is not a bijection.
  static Permutation from_images0(std::vector<Point> images);
  /// From a 1-based image list; throws if it is not a bijection.
  static Permutation from_images1(std::span<const Point> images);
  /// Bypasses validation; the caller guarantees a bijection.
  static Permutation unchecked(std::vector<Point> images) noexcept;

  std::size_t degree() const noexcept { return images_.size(); }

  /// 0-based raw access.
  Point operator[](std::size_t i) const noexcept { return images_[i]; }
  std::span<const Point> images0() const noexcept { return images_; }

  /// Image of the 1-based point x.
  Point image(Point x) const;

  bool is_identity() const noexcept;
  std::optional<Point> first_moved0() const noexcept;

  Permutation inverse() const;
  Permutation pow(long long e) const;

  /// Element order as the lcm of cycle lengths.
  BigCount order() const;
  std::uint64_t order_u64() const;

  /// Sorted 1-based fixed points.
  std::vector<Point> fixed_points() const;

  /// Disjoint cycles of length > 1, each starting at its smallest point, 1-based.
  std::vector<std::vector<Point>> cycles() const;

  friend bool operator==(const Permutation &, const Permutation &) = default;
  friend auto operator<=>(const Permutation &, const Permutation &) = default;

 private:
  explicit Permutation(std::vector<Point> images) noexcept : images_(std::move(images)) {}
  std::vector<Point> images_;
};

/// x^(pq) = (x^p)^q. Throws DegreeMismatch on unequal degrees.
Permutation compose(const Permutation &p, const Permutation &q);
inline Permutation operator*(const Permutation &p, const Permutation &q) {
  return compose(p, q);
}

/// out := p * q without allocating when out already has the right size.
void compose_into(const Permutation &p, const Permutation &q, std::vector<Point> &out);

/// [x, y] = x^-1 y^-1 x y.
Permutation commutator(const Permutation &x, const Permutation &y);
/// x^y = y^-1 x y.
Permutation conjugate(const Permutation &x, const Permutation &y);

enum class PermStyle { images, cycles };

/// `[i1,...,in]` or disjoint cycles `(a b c)(d e)`; the identity in cycle form is `()`.
std::string format_permutation(const Permutation &p, PermStyle style);

/// Parses either format. Cycle notation requires a degree; an image list
/// carries its own (a supplied degree must then agree).
Permutation parse_permutation(std::string_view text,
                              std::optional<std::size_t> degree = std::nullopt);

struct PermutationHash {
  std::size_t operator()(const Permutation &p) const noexcept;
};

}  // namespace wf

#endif  // WF_PERMUTATION_HPP
