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

#include "wf/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "wf/error.hpp"

namespace wf {

namespace {

bool is_bijection(std::span<const Point> images) {
  std::vector<bool> seen(images.size(), false);
  for (Point y : images) {
    if (y >= images.size() || seen[y]) return false;
    seen[y] = true;
  }
  return true;
}

}  // namespace

Permutation::Permutation(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation Permutation::from_images0(std::vector<Point> images) {
  if (!is_bijection(images)) throw Error("image table is not a bijection");
  return Permutation(std::move(images));
}

Permutation Permutation::from_images1(std::span<const Point> images) {
  std::vector<Point> zero(images.size());
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (images[i] == 0) throw Error("image list is 1-based; found 0");
    zero[i] = images[i] - 1;
  }
  return from_images0(std::move(zero));
}

Permutation Permutation::unchecked(std::vector<Point> images) noexcept {
  return Permutation(std::move(images));
}

Point Permutation::image(Point x) const {
  if (x < 1 || x > images_.size())
    throw Error("point " + std::to_string(x) + " out of range 1.." +
                std::to_string(images_.size()));
  return images_[x - 1] + 1;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

std::optional<Point> Permutation::first_moved0() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return static_cast<Point>(i);
  return std::nullopt;
}

Permutation Permutation::inverse() const {
  std::vector<Point> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<Point>(i);
  return Permutation(std::move(inv));
}

Permutation Permutation::pow(long long e) const {
  Permutation base = e < 0 ? inverse() : *this;
  unsigned long long k = e < 0 ? static_cast<unsigned long long>(-(e + 1)) + 1
                               : static_cast<unsigned long long>(e);
  Permutation result(degree());
  while (k) {
    if (k & 1) result = result * base;
    base = base * base;
    k >>= 1;
  }
  return result;
}

BigCount Permutation::order() const {
  BigCount result = 1;
  for (const auto &c : cycles()) {
    BigCount len = c.size();
    result = result / boost::multiprecision::gcd(result, len) * len;
  }
  return result;
}

std::uint64_t Permutation::order_u64() const {
  auto o = to_u64(order());
  if (!o) throw Error("element order does not fit 64 bits");
  return *o;
}

std::vector<Point> Permutation::fixed_points() const {
  std::vector<Point> out;
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] == i) out.push_back(static_cast<Point>(i + 1));
  return out;
}

std::vector<std::vector<Point>> Permutation::cycles() const {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    std::vector<Point> cycle;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      cycle.push_back(static_cast<Point>(j + 1));
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

Permutation compose(const Permutation &p, const Permutation &q) {
  std::vector<Point> out;
  compose_into(p, q, out);
  return Permutation::unchecked(std::move(out));
}

void compose_into(const Permutation &p, const Permutation &q, std::vector<Point> &out) {
  if (p.degree() != q.degree())
    throw DegreeMismatch("compose: degrees " + std::to_string(p.degree()) + " and " +
                         std::to_string(q.degree()));
  out.resize(p.degree());
  const auto a = p.images0();
  const auto b = q.images0();
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = b[a[i]];
}

Permutation commutator(const Permutation &x, const Permutation &y) {
  return x.inverse() * y.inverse() * x * y;
}

Permutation conjugate(const Permutation &x, const Permutation &y) {
  return y.inverse() * x * y;
}

std::string format_permutation(const Permutation &p, PermStyle style) {
  std::string out;
  if (style == PermStyle::images) {
    out.push_back('[');
    for (std::size_t i = 0; i < p.degree(); ++i) {
      if (i) out.push_back(',');
      out += std::to_string(p[i] + 1);
    }
    out.push_back(']');
    return out;
  }
  const auto cs = p.cycles();
  if (cs.empty()) return "()";
  for (const auto &c : cs) {
    out.push_back('(');
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) out.push_back(' ');
      out += std::to_string(c[i]);
    }
    out.push_back(')');
  }
  return out;
}

namespace {

class Scanner {
 public:
  explicit Scanner(std::string_view s) : s_(s) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool done() const { return pos_ >= s_.size(); }
  char peek() const { return done() ? '\0' : s_[pos_]; }
  std::size_t pos() const { return pos_; }
  void advance() { ++pos_; }

  void expect(char c) {
    if (peek() != c) throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  std::uint64_t number() {
    const std::size_t start = pos_;
    std::uint64_t v = 0;
    while (!done() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + static_cast<std::uint64_t>(s_[pos_] - '0');
      if (v > 0xffffffffULL) throw ParseError("number too large", start);
      ++pos_;
    }
    if (pos_ == start) throw ParseError("expected a number", start);
    return v;
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

Permutation parse_image_list(Scanner &sc, std::optional<std::size_t> degree) {
  sc.expect('[');
  std::vector<Point> images;
  std::vector<std::size_t> positions;
  sc.skip_ws();
  if (sc.peek() != ']') {
    for (;;) {
      sc.skip_ws();
      positions.push_back(sc.pos());
      images.push_back(static_cast<Point>(sc.number()));
      sc.skip_ws();
      if (sc.peek() == ',') {
        sc.advance();
        continue;
      }
      break;
    }
  }
  sc.expect(']');
  sc.skip_ws();
  if (!sc.done()) throw ParseError("trailing characters", sc.pos());
  if (degree && *degree != images.size())
    throw ParseError("image list has length " + std::to_string(images.size()) +
                         " but degree is " + std::to_string(*degree),
                     0);
  std::vector<bool> seen(images.size() + 1, false);
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (images[i] < 1 || images[i] > images.size())
      throw ParseError("point " + std::to_string(images[i]) + " out of range", positions[i]);
    if (seen[images[i]])
      throw ParseError("repeated point " + std::to_string(images[i]), positions[i]);
    seen[images[i]] = true;
  }
  return Permutation::from_images1(images);
}

Permutation parse_cycles(Scanner &sc, std::optional<std::size_t> degree) {
  if (!degree) throw ParseError("cycle notation needs an explicit degree", 0);
  const std::size_t n = *degree;
  std::vector<Point> images(n);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(n, false);
  while (!sc.done()) {
    sc.expect('(');
    std::vector<Point> cycle;
    sc.skip_ws();
    while (sc.peek() != ')') {
      if (sc.done()) throw ParseError("unterminated cycle", sc.pos());
      const std::size_t at = sc.pos();
      const auto x = sc.number();
      if (x < 1 || x > n)
        throw ParseError("point " + std::to_string(x) + " out of range 1.." + std::to_string(n),
                         at);
      if (used[x - 1]) throw ParseError("repeated point " + std::to_string(x), at);
      used[x - 1] = true;
      cycle.push_back(static_cast<Point>(x - 1));
      sc.skip_ws();
      if (sc.peek() == ',') {
        sc.advance();
        sc.skip_ws();
      }
    }
    sc.expect(')');
    sc.skip_ws();
    for (std::size_t i = 0; i < cycle.size(); ++i)
      images[cycle[i]] = cycle[(i + 1) % cycle.size()];
  }
  return Permutation::unchecked(std::move(images));
}

}  // namespace

Permutation parse_permutation(std::string_view text, std::optional<std::size_t> degree) {
  Scanner sc(text);
  sc.skip_ws();
  if (sc.peek() == '[') return parse_image_list(sc, degree);
  if (sc.peek() == '(') return parse_cycles(sc, degree);
  throw ParseError("expected '[' or '('", sc.pos());
}

std::size_t PermutationHash::operator()(const Permutation &p) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (Point x : p.images0()) {
    h ^= x;
    h *= 1099511628211ULL;
  }
  return h;
}

std::optional<BigCount> checked_pow(const BigCount &base, const BigCount &exponent) {
  if (base <= 1 || exponent == 0) return base == 0 && exponent != 0 ? BigCount(0) : BigCount(1);
  const auto bits_base = msb(base) + 1;
  if (exponent > kMaxBigCountBits) return std::nullopt;
  const auto e = exponent.convert_to<std::uint64_t>();
  if (static_cast<std::uint64_t>(bits_base - 1) * e > kMaxBigCountBits) return std::nullopt;
  return boost::multiprecision::pow(base, static_cast<unsigned>(e));
}

std::optional<std::uint64_t> to_u64(const BigCount &x) {
  if (x < 0 || x > std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
  return x.convert_to<std::uint64_t>();
}

BigCount factorial(std::uint64_t n) {
  BigCount r = 1;
  for (std::uint64_t i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace wf
