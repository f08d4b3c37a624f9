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

#include "wf/wreath.hpp"

#include <algorithm>
#include <limits>

#include "wf/error.hpp"

namespace wf {

std::string to_string(Action a) { return a == Action::exp ? "exp" : "perm"; }

Action parse_action(const std::string &s) {
  if (s == "exp") return Action::exp;
  if (s == "perm") return Action::perm;
  throw Error("unknown action '" + s + "' (expected exp or perm)");
}

// ---------------------------------------------------------------------------
// TupleCodec

TupleCodec::TupleCodec(std::uint32_t m, std::uint64_t n) : m_(m), n_(n), size_(1) {
  if (m == 0) throw Error("tuple alphabet must be non-empty");
  for (std::uint64_t i = 0; i < n && m > 1; ++i) {
    if (size_ > std::numeric_limits<std::uint64_t>::max() / m)
      throw DegreeOverflow("degree overflow: " + std::to_string(m) + "^" + std::to_string(n) +
                           " does not fit 64 bits");
    size_ *= m;
  }
}

std::uint64_t TupleCodec::rank(std::span<const std::uint32_t> t) const {
  if (t.size() != n_) throw ShapeMismatch("tuple length " + std::to_string(t.size()) +
                                          ", expected " + std::to_string(n_));
  std::uint64_t acc = 0;
  for (auto x : t) {
    if (x < 1 || x > m_) throw Error("tuple entry " + std::to_string(x) + " out of range");
    acc = acc * m_ + (x - 1);
  }
  return acc + 1;
}

void TupleCodec::unrank_into(std::uint64_t r, std::vector<std::uint32_t> &out) const {
  if (r < 1 || r > size_) throw Error("rank " + std::to_string(r) + " out of range");
  out.resize(n_);
  std::uint64_t acc = r - 1;
  for (std::uint64_t k = n_; k-- > 0;) {
    out[k] = static_cast<std::uint32_t>(acc % m_) + 1;
    acc /= m_;
  }
}

std::vector<std::uint32_t> TupleCodec::unrank(std::uint64_t r) const {
  std::vector<std::uint32_t> out;
  unrank_into(r, out);
  return out;
}

std::uint64_t TupleCodec::diagonal(std::uint32_t i) const {
  std::vector<std::uint32_t> t(n_, i);
  return rank(t);
}

bool precedes(std::span<const std::uint32_t> t, std::span<const std::uint32_t> u) {
  return std::lexicographical_compare(t.begin(), t.end(), u.begin(), u.end());
}

// ---------------------------------------------------------------------------
// Shapes

namespace {

std::optional<BigCount> action_degree(Action action, std::uint32_t m,
                                      const std::optional<BigCount> &n) {
  if (!n) return std::nullopt;
  if (action == Action::perm) return BigCount(m) * *n;
  return checked_pow(BigCount(m), *n);
}

std::uint64_t require_u64(const std::optional<BigCount> &x, const char *what) {
  if (!x) throw DegreeOverflow(std::string("degree overflow: ") + what + " is unrepresentable");
  auto v = to_u64(*x);
  if (!v) throw DegreeOverflow(std::string("degree overflow: ") + what + " = " + x->str() +
                               " does not fit 64 bits");
  return *v;
}

}  // namespace

ShapePtr WreathShape::make(Action action, std::uint32_t inner_degree,
                           std::uint64_t outer_degree) {
  if (inner_degree == 0 || outer_degree == 0) throw Error("degrees must be positive");
  std::shared_ptr<WreathShape> s(new WreathShape());
  s->action_ = action;
  s->inner_degree_ = inner_degree;
  s->outer_degree_ = BigCount(outer_degree);
  s->degree_ = action_degree(action, inner_degree, s->outer_degree_);
  return s;
}

ShapePtr WreathShape::make(Action action, std::uint32_t inner_degree, ShapePtr outer) {
  if (!outer) throw Error("null outer shape");
  if (inner_degree == 0) throw Error("degrees must be positive");
  std::shared_ptr<WreathShape> s(new WreathShape());
  s->action_ = action;
  s->inner_degree_ = inner_degree;
  s->outer_degree_ = outer->degree();
  s->outer_ = std::move(outer);
  s->degree_ = action_degree(action, inner_degree, s->outer_degree_);
  return s;
}

std::uint64_t WreathShape::outer_degree_u64() const {
  return require_u64(outer_degree_, "outer degree");
}

std::uint64_t WreathShape::degree_u64() const { return require_u64(degree_, "degree"); }

bool operator==(const WreathShape &a, const WreathShape &b) {
  if (&a == &b) return true;
  if (a.action_ != b.action_ || a.inner_degree_ != b.inner_degree_) return false;
  if (static_cast<bool>(a.outer_) != static_cast<bool>(b.outer_)) return false;
  if (a.outer_) return *a.outer_ == *b.outer_;
  return a.outer_degree_ == b.outer_degree_;
}

// ---------------------------------------------------------------------------
// Elements

Element::Element(WreathElement w) : v_(std::make_shared<const WreathElement>(std::move(w))) {}

bool Element::is_identity() const {
  return is_plain() ? plain().is_identity() : wreath().is_identity();
}

bool operator==(const Element &a, const Element &b) {
  if (a.is_plain() != b.is_plain()) return false;
  if (a.is_plain()) return a.plain() == b.plain();
  return a.wreath() == b.wreath();
}

Element identity_top(const WreathShape &shape) {
  if (shape.outer()) return Element(WreathElement::identity(shape.outer()));
  return Element(Permutation(shape.outer_degree_u64()));
}

WreathElement::WreathElement(ShapePtr shape, Base base, Element top)
    : shape_(std::move(shape)), top_(std::move(top)) {
  if (!shape_) throw Error("null shape");
  if (shape_->outer()) {
    if (top_.is_plain() || !(*top_.wreath().shape() == *shape_->outer()))
      throw ShapeMismatch("top element does not match the outer shape");
  } else {
    if (!top_.is_plain() || top_.plain().degree() != shape_->outer_degree_u64())
      throw ShapeMismatch("top element must be a permutation of degree " +
                          shape_->outer_degree()->str());
  }
  if (!base.empty()) {
    const std::uint64_t n = shape_->outer_degree_u64();
    for (auto &[k, a] : base) {
      if (k < 1 || k > n) throw ShapeMismatch("base coordinate " + std::to_string(k) + " out of range");
      if (a.degree() != shape_->inner_degree())
        throw ShapeMismatch("base entry of degree " + std::to_string(a.degree()) +
                            ", expected " + std::to_string(shape_->inner_degree()));
    }
    std::erase_if(base, [](const auto &kv) { return kv.second.is_identity(); });
  }
  base_ = std::move(base);
}

WreathElement WreathElement::identity(ShapePtr shape) {
  Element top = identity_top(*shape);
  return WreathElement(std::move(shape), {}, std::move(top));
}

WreathElement WreathElement::base_at(ShapePtr shape, std::uint64_t position, const Permutation &a) {
  Element top = identity_top(*shape);
  Base b;
  b.emplace(position, a);
  return WreathElement(std::move(shape), std::move(b), std::move(top));
}

WreathElement WreathElement::top_only(ShapePtr shape, Element top) {
  return WreathElement(std::move(shape), {}, std::move(top));
}

Permutation WreathElement::base_entry(std::uint64_t k) const {
  auto it = base_.find(k);
  return it == base_.end() ? Permutation(shape_->inner_degree()) : it->second;
}

bool WreathElement::is_identity() const { return base_.empty() && top_.is_identity(); }

bool operator==(const WreathElement &a, const WreathElement &b) {
  return *a.shape_ == *b.shape_ && a.base_ == b.base_ && a.top_ == b.top_;
}

WreathElement multiply(const WreathElement &a, const WreathElement &b) {
  if (!(*a.shape() == *b.shape())) throw ShapeMismatch("multiply: shapes differ");
  Element top = multiply(a.top(), b.top());
  WreathElement::Base h;
  for (const auto &[k, f] : a.base()) {
    const std::uint64_t kt = point_image(a.top(), k);
    auto it = b.base().find(kt);
    h.emplace(k, it == b.base().end() ? f : f * it->second);
  }
  if (!b.base().empty()) {
    const Element tau_inv = invert(a.top());
    for (const auto &[kp, g] : b.base()) {
      const std::uint64_t k = point_image(tau_inv, kp);
      if (!a.base().contains(k)) h.emplace(k, g);
    }
  }
  return WreathElement(a.shape(), std::move(h), std::move(top));
}

WreathElement invert(const WreathElement &w) {
  WreathElement::Base h;
  for (const auto &[k, f] : w.base()) h.emplace(point_image(w.top(), k), f.inverse());
  return WreathElement(w.shape(), std::move(h), invert(w.top()));
}

Element multiply(const Element &a, const Element &b) {
  if (a.is_plain() != b.is_plain()) throw ShapeMismatch("multiply: plain vs structured");
  if (a.is_plain()) return a.plain() * b.plain();
  return multiply(a.wreath(), b.wreath());
}

Element invert(const Element &w) {
  if (w.is_plain()) return w.plain().inverse();
  return invert(w.wreath());
}

Element power(const Element &w, long long e) {
  Element base = e < 0 ? invert(w) : w;
  unsigned long long k = e < 0 ? static_cast<unsigned long long>(-(e + 1)) + 1
                               : static_cast<unsigned long long>(e);
  std::optional<Element> result;
  while (k) {
    if (k & 1) result = result ? multiply(*result, base) : base;
    k >>= 1;
    if (k) base = multiply(base, base);
  }
  if (result) return *result;
  if (w.is_plain()) return Permutation(w.plain().degree());
  return WreathElement::identity(w.wreath().shape());
}

Element commutator(const Element &x, const Element &y) {
  return multiply(multiply(invert(x), invert(y)), multiply(x, y));
}

Element conjugate(const Element &x, const Element &y) {
  return multiply(multiply(invert(y), x), y);
}

std::uint64_t point_image(const Element &g, std::uint64_t point) {
  if (g.is_plain()) {
    const auto &p = g.plain();
    if (point < 1 || point > p.degree()) throw Error("point out of range");
    return p[point - 1] + 1;
  }
  const WreathElement &w = g.wreath();
  if (w.shape()->action() == Action::perm) return perm_point_action(w, point);
  const TupleCodec codec(w.shape()->inner_degree(), w.shape()->outer_degree_u64());
  const auto t = codec.unrank(point);
  return codec.rank(exp_point_action(w, t));
}

namespace {

/// Images of every outer point under the top, 0-based.
std::vector<std::uint64_t> top_images(const Element &top, std::uint64_t n) {
  std::vector<std::uint64_t> out(n);
  if (top.is_plain()) {
    for (std::uint64_t k = 0; k < n; ++k) out[k] = top.plain()[k];
    return out;
  }
  const auto flat = flatten(top, std::numeric_limits<std::uint64_t>::max());
  for (std::uint64_t k = 0; k < n; ++k) out[k] = flat[k];
  return out;
}

}  // namespace

std::vector<std::uint32_t> exp_point_action(const WreathElement &w,
                                            std::span<const std::uint32_t> t) {
  const auto &shape = *w.shape();
  if (shape.action() != Action::exp) throw ShapeMismatch("exp_point_action on a perm element");
  const std::uint64_t n = shape.outer_degree_u64();
  if (t.size() != n) throw ShapeMismatch("tuple of length " + std::to_string(t.size()) +
                                         ", expected " + std::to_string(n));
  for (auto x : t)
    if (x < 1 || x > shape.inner_degree()) throw Error("tuple entry out of range");
  const auto tau = top_images(w.top(), n);
  std::vector<std::uint32_t> out(n);
  for (std::uint64_t k = 0; k < n; ++k) {
    std::uint32_t v = t[k];
    auto it = w.base().find(k + 1);
    if (it != w.base().end()) v = it->second[v - 1] + 1;
    out[tau[k]] = v;
  }
  return out;
}

std::uint64_t perm_point_action(const WreathElement &w, std::uint64_t point) {
  const auto &shape = *w.shape();
  if (shape.action() != Action::perm) throw ShapeMismatch("perm_point_action on an exp element");
  const std::uint64_t m = shape.inner_degree();
  const std::uint64_t n = shape.outer_degree_u64();
  if (point < 1 || point > m * n) throw Error("point out of range");
  const std::uint64_t j = (point - 1) / m + 1;
  std::uint64_t i = (point - 1) % m + 1;
  auto it = w.base().find(j);
  if (it != w.base().end()) i = it->second[i - 1] + 1;
  return m * (point_image(w.top(), j) - 1) + i;
}

Permutation flatten(const Element &g, std::uint64_t cap) {
  if (g.is_plain()) return g.plain();
  const WreathElement &w = g.wreath();
  const auto &shape = *w.shape();
  const std::uint64_t m = shape.inner_degree();
  if (!shape.degree())
    throw DegreeOverflow("degree overflow: flattened degree is unrepresentable");
  if (*shape.degree() > cap)
    throw DegreeOverflow("degree overflow: flattened degree " + shape.degree()->str() +
                         " exceeds cap " + std::to_string(cap));
  const std::uint64_t deg = shape.degree_u64();
  if (shape.action() == Action::exp && m == 1) return Permutation(1);
  const std::uint64_t n = shape.outer_degree_u64();
  const auto tau = top_images(w.top(), n);
  std::vector<const Permutation *> f(n, nullptr);
  for (const auto &[k, a] : w.base()) f[k - 1] = &a;

  std::vector<Point> images(deg);
  if (shape.action() == Action::perm) {
    for (std::uint64_t j = 0; j < n; ++j)
      for (std::uint64_t i = 0; i < m; ++i) {
        const std::uint64_t ii = f[j] ? (*f[j])[i] : i;
        images[j * m + i] = static_cast<Point>(tau[j] * m + ii);
      }
    return Permutation::unchecked(std::move(images));
  }
  // Odometer over tuples in rank order, digits 0-based.
  std::vector<std::uint32_t> t(n, 0), img(n);
  for (std::uint64_t r = 0; r < deg; ++r) {
    for (std::uint64_t k = 0; k < n; ++k) img[tau[k]] = f[k] ? (*f[k])[t[k]] : t[k];
    std::uint64_t acc = 0;
    for (std::uint64_t k = 0; k < n; ++k) acc = acc * m + img[k];
    images[r] = static_cast<Point>(acc);
    for (std::uint64_t k = n; k-- > 0;) {
      if (++t[k] < m) break;
      t[k] = 0;
    }
  }
  return Permutation::unchecked(std::move(images));
}

BigCount wreath_order(const BigCount &inner_order, std::uint64_t n, const BigCount &outer_order) {
  auto p = checked_pow(inner_order, BigCount(n));
  if (!p) throw DegreeOverflow("order |A|^n is unrepresentable");
  return *p * outer_order;
}

// ---------------------------------------------------------------------------
// Constructions

std::vector<WreathElement> wreath_generators(const PermGroup &a, const PermGroup &b,
                                             Action action, const WreathOptions &opt) {
  auto shape = WreathShape::make(action, static_cast<std::uint32_t>(a.degree()), b.degree());
  std::vector<WreathElement> gens;
  const bool transitive = is_transitive(b);
  if (!transitive && opt.strict)
    throw HypothesisError(0, "transitive", "outer group of degree " + std::to_string(b.degree()) +
                                               " is not transitive (strict mode)");
  const std::uint64_t coords = transitive ? 1 : b.degree();
  for (std::uint64_t k = 1; k <= coords; ++k)
    for (const auto &x : a.generators())
      if (!x.is_identity()) gens.push_back(WreathElement::base_at(shape, k, x));
  for (const auto &y : b.generators())
    if (!y.is_identity()) gens.push_back(WreathElement::top_only(shape, y));
  return gens;
}

namespace {

PermGroup build_wreath(const PermGroup &a, const PermGroup &b, Action action,
                       const WreathOptions &opt) {
  auto shape = WreathShape::make(action, static_cast<std::uint32_t>(a.degree()), b.degree());
  if (!shape->degree() || *shape->degree() > opt.cap)
    throw DegreeOverflow("degree overflow: " +
                         (shape->degree() ? shape->degree()->str() : std::string("unrepresentable")) +
                         (action == Action::exp ? " = m^n" : " = m*n") + " exceeds cap " +
                         std::to_string(opt.cap));
  const std::uint64_t deg = shape->degree_u64();
  std::vector<Permutation> flat;
  for (const auto &w : wreath_generators(a, b, action, opt)) flat.push_back(flatten(w, opt.cap));
  PermGroup g(deg, std::move(flat));
  if (opt.verify) {
    const auto expected = wreath_order(a.order(), b.degree(), b.order());
    if (g.order() != expected)
      throw Error("wreath order check failed: chain order " + g.order().str() + ", expected " +
                  expected.str());
  }
  return g;
}

}  // namespace

PermGroup build_exponentiation(const PermGroup &a, const PermGroup &b, const WreathOptions &opt) {
  return build_wreath(a, b, Action::exp, opt);
}

PermGroup build_perm_wreath(const PermGroup &a, const PermGroup &b, const WreathOptions &opt) {
  return build_wreath(a, b, Action::perm, opt);
}

Permutation kaluzhnin_bijection(std::uint32_t n1, std::uint32_t n2, std::uint32_t n3,
                                std::uint64_t cap) {
  const std::uint64_t len = std::uint64_t{n2} * n3;
  const TupleCodec left(n1, len);
  if (left.size() > cap)
    throw DegreeOverflow("degree overflow: " + std::to_string(n1) + "^" + std::to_string(len) +
                         " exceeds cap " + std::to_string(cap));
  const TupleCodec inner(n1, n2);
  const TupleCodec outer(static_cast<std::uint32_t>(inner.size()), n3);
  std::vector<Point> images(left.size());
  std::vector<std::uint32_t> t, blocks(n3);
  for (std::uint64_t r = 1; r <= left.size(); ++r) {
    left.unrank_into(r, t);
    for (std::uint32_t c = 0; c < n3; ++c)
      blocks[c] = static_cast<std::uint32_t>(
          inner.rank(std::span<const std::uint32_t>(t).subspan(std::size_t{c} * n2, n2)));
    images[r - 1] = static_cast<Point>(outer.rank(blocks) - 1);
  }
  return Permutation::from_images0(std::move(images));
}

KaluzhninReport kaluzhnin_check(const PermGroup &a, const PermGroup &b, const PermGroup &c,
                                std::uint64_t cap) {
  WreathOptions opt;
  opt.cap = cap;
  const PermGroup left = build_exponentiation(a, build_perm_wreath(b, c, opt), opt);
  const PermGroup right = build_exponentiation(build_exponentiation(a, b, opt), c, opt);
  const Permutation beta = kaluzhnin_bijection(static_cast<std::uint32_t>(a.degree()),
                                               static_cast<std::uint32_t>(b.degree()),
                                               static_cast<std::uint32_t>(c.degree()), cap);
  KaluzhninReport rep;
  rep.degree = left.degree();
  const Permutation beta_inv = beta.inverse();
  for (std::size_t i = 0; i < left.generators().size(); ++i) {
    const Permutation moved = beta_inv * left.generators()[i] * beta;
    const bool in = right.contains(moved);
    rep.generator_in_right.push_back(in);
    if (!in && !rep.counterexample) {
      const auto [residue, level] = right.chain().sift(moved);
      (void)level;
      const auto p = residue.first_moved0();
      rep.counterexample = {i, p ? *p + 1 : 0};
    }
  }
  rep.left_order = left.order();
  rep.right_order = right.order();
  rep.passed = !rep.counterexample && rep.left_order == rep.right_order;
  return rep;
}

}  // namespace wf
