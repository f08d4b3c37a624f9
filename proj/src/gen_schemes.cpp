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

#include "wf/gen_schemes.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>

#include "wf/error.hpp"

namespace wf {

std::string to_string(Scheme s) {
  switch (s) {
    case Scheme::dgen:
      return "dgen";
    case Scheme::threegen:
      return "threegen";
    case Scheme::special:
      return "special";
    case Scheme::theoremB:
      return "theoremB";
  }
  return "?";
}

Scheme parse_scheme(const std::string &s) {
  if (s == "dgen") return Scheme::dgen;
  if (s == "threegen") return Scheme::threegen;
  if (s == "special") return Scheme::special;
  if (s == "theoremB") return Scheme::theoremB;
  throw Error("unknown scheme '" + s + "' (expected dgen, threegen, special or theoremB)");
}

bool StabilizerWitness::holds() const {
  return fixed >= 1 && moved >= 1 && fixed <= certificate.degree() &&
         moved <= certificate.degree() && certificate.image(fixed) == fixed &&
         certificate.image(moved) != moved;
}

bool SegalPair::holds() const {
  return r >= 1 && r <= sigma.degree() && (sigma * sigma).image(r) != r;
}

// ---------------------------------------------------------------------------
// Searches

std::optional<StabilizerWitness> check_non_regular(const PermGroup &s) {
  // In a transitive group all point stabilizers are conjugate, so St(1)
  // already decides the question.
  const std::size_t last = is_transitive(s) ? 1 : s.degree();
  for (Point i = 1; i <= last; ++i) {
    for (const auto &g : stabilizer_generators(s, i)) {
      if (auto j = g.first_moved0()) return StabilizerWitness{i, *j + 1, g};
    }
  }
  return std::nullopt;
}

std::optional<StabilizerWitness> exponentiation_witness(std::uint32_t m, const PermGroup &b) {
  if (m < 2 || b.degree() < 2) return std::nullopt;
  const Permutation *mover = nullptr;
  for (const auto &g : b.generators())
    if (g.image(1) != 1) {
      mover = &g;
      break;
    }
  if (!mover) return std::nullopt;
  const auto shape = WreathShape::make(Action::exp, m, b.degree());
  const TupleCodec codec(m, b.degree());
  std::vector<std::uint32_t> y(b.degree(), 1);
  y[0] = 2;
  const Permutation cert = flatten(WreathElement::top_only(shape, *mover),
                                   std::numeric_limits<std::uint64_t>::max());
  return StabilizerWitness{static_cast<Point>(codec.diagonal(1)),
                           static_cast<Point>(codec.rank(y)), cert};
}

std::optional<std::pair<Point, Point>> equal_stabilizer_pair(const PermGroup &s) {
  const std::size_t n = s.degree();
  // fixes[i][j]: St(i) fixes j, i.e. St(i) <= St(j).
  std::vector<std::vector<bool>> fixes(n, std::vector<bool>(n, true));
  for (Point i = 1; i <= n; ++i)
    for (const auto &g : stabilizer_generators(s, i))
      for (Point j = 1; j <= n; ++j)
        if (g.image(j) != j) fixes[i - 1][j - 1] = false;
  for (Point i = 1; i <= n; ++i)
    for (Point j = i + 1; j <= n; ++j)
      if (fixes[i - 1][j - 1] && fixes[j - 1][i - 1]) return std::make_pair(i, j);
  return std::nullopt;
}

std::optional<SegalPair> find_segal_pair(const PermGroup &s, std::uint64_t cap) {
  for (const auto &sigma : enumerate_elements(s, cap)) {
    const auto sq = sigma * sigma;
    for (Point r = 1; r <= s.degree(); ++r)
      if (sq.image(r) != r) return SegalPair{sigma, r};
  }
  return std::nullopt;
}

namespace {

struct Candidate {
  const Permutation *p;
  std::uint64_t order;
  Point fixed;
};

bool coprime_to_all(std::uint64_t x, const std::vector<std::uint64_t> &ys) {
  return std::all_of(ys.begin(), ys.end(), [x](std::uint64_t y) { return std::gcd(x, y) == 1; });
}

/// Calls `fn` on admissible pairs in lexicographic order until it returns true.
bool for_each_special_pair(const PermGroup &s, const PairConstraints &c, std::uint64_t cap,
                           const std::function<bool(const SpecialPair &)> &fn) {
  const auto elems = enumerate_elements(s, cap);
  const BigCount target = s.order();
  std::vector<Candidate> as, bs;
  for (const auto &e : elems) {
    if (e.is_identity()) continue;
    const auto fp = e.fixed_points();
    if (fp.empty()) continue;
    const Candidate cand{&e, e.order_u64(), fp.front()};
    if (coprime_to_all(cand.order, c.a_coprime_to)) as.push_back(cand);
    if (coprime_to_all(cand.order, c.b_coprime_to)) bs.push_back(cand);
  }
  for (const auto &a : as)
    for (const auto &b : bs) {
      if (PermGroup(s.degree(), {*a.p, *b.p}).order() != target) continue;
      if (fn(SpecialPair{*a.p, *b.p, a.fixed, b.fixed, a.order, b.order})) return true;
    }
  return false;
}

}  // namespace

std::optional<SpecialPair> find_special_pair(const PermGroup &s, const PairConstraints &c,
                                             std::uint64_t cap) {
  std::optional<SpecialPair> out;
  for_each_special_pair(s, c, cap, [&](const SpecialPair &p) {
    out = p;
    return true;
  });
  return out;
}

// ---------------------------------------------------------------------------
// Hypotheses

namespace {

std::vector<Permutation> nonidentity(const PermGroup &g) {
  std::vector<Permutation> out;
  for (const auto &x : g.generators())
    if (!x.is_identity()) out.push_back(x);
  return out;
}

LevelHypotheses basic_hypotheses(std::size_t k, const LevelSpec &lev) {
  LevelHypotheses h;
  h.level = k;
  h.name = lev.name;
  h.transitive = is_transitive(lev.group);
  h.perfect = is_perfect(lev.group);
  h.non_regular = !(h.transitive && lev.group.order() == BigCount(lev.group.degree()));
  h.witness = check_non_regular(lev.group);
  return h;
}

void gate(bool ok, std::size_t level, const std::string &what, const std::string &detail) {
  if (!ok) throw HypothesisError(level, what, detail);
}

void gate_dgen(const LevelHypotheses &h) {
  gate(h.transitive, h.level, "transitive", "level group '" + h.name + "' is not transitive");
  gate(h.perfect, h.level, "perfect", "level group '" + h.name + "' is not perfect");
  gate(h.stabilizers_differ(), h.level, "non_regular",
       "all point stabilizers of '" + h.name + "' coincide");
}

/// pi with i -> 1 and j -> 2, the remaining points kept in increasing order.
Permutation relabeling(std::size_t n, Point i, Point j) {
  std::vector<Point> order{i, j};
  for (Point x = 1; x <= n; ++x)
    if (x != i && x != j) order.push_back(x);
  std::vector<Point> images(n);
  for (std::size_t t = 0; t < n; ++t) images[order[t] - 1] = static_cast<Point>(t);
  return Permutation::from_images0(std::move(images));
}

/// Conjugates level groups whose witness is not (1, 2).
TowerSpec relabeled(const TowerSpec &spec, std::size_t depth, HypothesisReport &report) {
  std::vector<LevelSpec> levels(spec.levels().begin(),
                                spec.levels().begin() + static_cast<std::ptrdiff_t>(depth));
  for (auto &h : report.levels) {
    if (!h.witness || (h.witness->fixed == 1 && h.witness->moved == 2)) continue;
    auto &lev = levels[h.level - 1];
    const auto pi = relabeling(lev.group.degree(), h.witness->fixed, h.witness->moved);
    std::vector<Permutation> gens;
    for (const auto &g : lev.group.generators()) gens.push_back(conjugate(g, pi));
    lev.group = PermGroup(lev.group.degree(), std::move(gens));
    h.notes.push_back("relabeled points " + std::to_string(h.witness->fixed) + "," +
                      std::to_string(h.witness->moved) + " to 1,2");
    h.witness = StabilizerWitness{1, 2, conjugate(h.witness->certificate, pi)};
    h.relabel = pi;
  }
  return TowerSpec(std::move(levels));
}

TowerOptions tower_options(const SchemeOptions &opt) {
  TowerOptions t;
  t.cap = opt.cap;
  t.strict = opt.strict;
  return t;
}

void attach_flat(const Tower &tower, GeneratorSet &gs) {
  const std::size_t n = tower.depth();
  if (!tower.level(n).flattenable()) return;
  std::vector<Permutation> flat;
  for (const auto &e : gs.elements) flat.push_back(tower.flatten_at(n, e));
  gs.flat = std::move(flat);
}

/// Pads or checks the per-level generator lists to a uniform length d.
std::vector<Permutation> padded(const PermGroup &g, std::size_t d) {
  auto gens = nonidentity(g);
  if (gens.empty()) gens.push_back(Permutation(g.degree()));
  while (gens.size() < d) gens.push_back(gens.back());
  return gens;
}

std::size_t uniform_d(const Tower &tower, std::size_t requested) {
  std::size_t d = 0;
  for (std::size_t k = 2; k <= tower.depth(); ++k)
    d = std::max(d, nonidentity(tower.group(k)).size());
  if (requested != 0) {
    if (requested < d)
      throw Error("declared d = " + std::to_string(requested) + " is below the " +
                  std::to_string(d) + " generators of some level");
    d = requested;
  }
  return d;
}

GeneratorSet dgen_core(const Tower &tower, std::size_t requested_d, Scheme scheme) {
  const std::size_t n = tower.depth();
  GeneratorSet gs;
  gs.scheme = scheme;
  gs.depth = n;
  const auto first = nonidentity(tower.group(1));
  for (const auto &a : first) gs.elements.push_back(tower.embed(a, 1, n));
  const std::size_t d = n >= 2 ? uniform_d(tower, requested_d) : 0;
  std::vector<std::vector<Permutation>> alpha(n + 1);
  for (std::size_t k = 2; k <= n; ++k) alpha[k] = padded(tower.group(k), d);
  for (std::size_t j = 0; j < d; ++j) {
    Element beta = tower.identity(n);
    for (std::size_t k = n; k >= 2; --k)
      beta = multiply(beta, tower.embed(tower.base_element(k, 1, alpha[k][j]), k, n));
    gs.elements.push_back(std::move(beta));
  }
  gs.claimed_count = d + first.size();
  gs.count_bound = gs.claimed_count;
  gs.claim = "d + d(S1) = " + std::to_string(d) + " + " + std::to_string(first.size());
  attach_flat(tower, gs);
  return gs;
}

void check_count(const GeneratorSet &gs) {
  if (gs.elements.size() != gs.claimed_count || gs.claimed_count > gs.count_bound)
    throw Error("generator count " + std::to_string(gs.elements.size()) +
                " does not match the claim " + gs.claim);
}

}  // namespace

HypothesisReport check_hypotheses(const TowerSpec &spec, std::size_t depth,
                                  const SchemeOptions &opt, bool with_segal, bool with_special) {
  if (depth < 1 || depth > spec.size()) throw Error("depth out of range");
  HypothesisReport report;
  for (std::size_t k = 1; k <= depth; ++k) {
    auto h = basic_hypotheses(k, spec.level(k));
    if (with_segal) {
      h.equal_pair = equal_stabilizer_pair(spec.level(k).group);
      if (auto it = opt.segal_pairs.find(k); it != opt.segal_pairs.end()) {
        if (!it->second.holds()) throw Error("supplied Segal pair for level " + std::to_string(k) +
                                             " does not satisfy r^(sigma^2) != r");
        h.segal = it->second;
        h.notes.push_back("Segal pair supplied");
      } else {
        h.segal = find_segal_pair(spec.level(k).group, opt.search_cap);
      }
    }
    report.levels.push_back(std::move(h));
  }
  if (with_special) {
    // Level-1 pairs are tried in order; downstream levels only depend on the
    // orders |a_1|, |b_1|, so their searches are memoized on that key.
    std::vector<std::map<std::pair<std::uint64_t, std::uint64_t>, std::optional<SpecialPair>>>
        memo(depth + 1);
    auto pair_at = [&](std::size_t k, std::uint64_t oa1, std::uint64_t ob1)
        -> std::optional<SpecialPair> {
      if (auto it = opt.special_pairs.find(k); it != opt.special_pairs.end()) {
        const auto &p = it->second;
        if (std::gcd(p.order_a, ob1) == 1 && std::gcd(p.order_b, oa1) == 1) return p;
        return std::nullopt;
      }
      const auto key = std::make_pair(oa1, ob1);
      auto it = memo[k].find(key);
      if (it == memo[k].end())
        it = memo[k]
                 .emplace(key, find_special_pair(spec.level(k).group, {{ob1}, {oa1}},
                                                 opt.search_cap))
                 .first;
      return it->second;
    };
    std::vector<SpecialPair> chosen;
    auto try_first = [&](const SpecialPair &p1) {
      std::vector<SpecialPair> out{p1};
      for (std::size_t k = 2; k <= depth; ++k) {
        auto p = pair_at(k, p1.order_a, p1.order_b);
        if (!p) return false;
        out.push_back(*p);
      }
      chosen = std::move(out);
      return true;
    };
    bool found = false;
    if (auto it = opt.special_pairs.find(1); it != opt.special_pairs.end())
      found = try_first(it->second);
    else
      found = for_each_special_pair(spec.level(1).group, {}, opt.search_cap, try_first);
    if (found) {
      for (std::size_t k = 1; k <= depth; ++k) report.levels[k - 1].special = chosen[k - 1];
      report.coprime.assign(depth, std::vector<bool>(depth));
      for (std::size_t i = 0; i < depth; ++i)
        for (std::size_t j = 0; j < depth; ++j)
          report.coprime[i][j] = std::gcd(chosen[i].order_a, chosen[j].order_b) == 1;
    } else {
      report.notes.push_back("no admissible special pairs with the cross-coprimality pattern");
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Schemes

SchemeResult build_dgen(const TowerSpec &spec, std::size_t depth, const SchemeOptions &opt) {
  auto report = check_hypotheses(spec, depth, opt);
  if (opt.strict)
    for (const auto &h : report.levels) gate_dgen(h);
  const auto rspec = relabeled(spec, depth, report);
  Tower tower = build_tower(rspec, depth, tower_options(opt));
  auto gs = dgen_core(tower, opt.d, Scheme::dgen);
  check_count(gs);
  return SchemeResult{std::move(tower), std::move(report), std::move(gs)};
}

SchemeResult build_threegen(const TowerSpec &spec, std::size_t depth, const SchemeOptions &opt) {
  auto report = check_hypotheses(spec, depth, opt, /*with_segal=*/true);
  for (const auto &h : report.levels) {
    if (opt.strict) {
      gate(h.transitive, h.level, "transitive", "level group '" + h.name + "' is not transitive");
      gate(h.perfect, h.level, "perfect", "level group '" + h.name + "' is not perfect");
      gate(nonidentity(spec.level(h.level).group).size() <= 2, h.level, "2-generated",
           "level group '" + h.name + "' is given with more than two generators");
      gate(h.all_stabilizers_distinct(), h.level, "stabilizers_distinct",
           h.equal_pair && *h.equal_pair
               ? "St(" + std::to_string((*h.equal_pair)->first) + ") = St(" +
                     std::to_string((*h.equal_pair)->second) + ")"
               : "not computed");
    }
    if (!h.segal)
      throw SearchFailure("level " + std::to_string(h.level) + ": no Segal element found");
  }
  Tower tower = build_tower(spec, depth, tower_options(opt));
  const std::size_t n = depth;
  GeneratorSet gs;
  gs.scheme = Scheme::threegen;
  gs.depth = n;
  const auto first = padded(tower.group(1), 2);
  for (std::size_t i = 0; i < 2 && i < first.size(); ++i)
    gs.elements.push_back(tower.embed(first[i], 1, n));
  if (n >= 2) {
    Element beta = tower.identity(n);
    for (std::size_t k = n - 1; k >= 1; --k) {
      const auto &seg = *report.levels[k - 1].segal;
      const auto alpha = padded(tower.group(k + 1), 2);
      const auto p1 = tower.diagonal_point(k, seg.sigma.image(seg.r));
      const auto p2 = tower.diagonal_point(k, seg.r);
      const WreathElement f(tower.level(k + 1).shape, {{p1, alpha[0]}, {p2, alpha[1]}},
                            identity_top(*tower.level(k + 1).shape));
      beta = multiply(beta, tower.embed(f, k + 1, n));
    }
    gs.elements.push_back(std::move(beta));
  }
  gs.claimed_count = n >= 2 ? 3 : 2;
  gs.count_bound = gs.claimed_count;
  gs.claim = n >= 2 ? "3" : "2 (depth 1)";
  attach_flat(tower, gs);
  check_count(gs);
  return SchemeResult{std::move(tower), std::move(report), std::move(gs)};
}

SchemeResult build_special(const TowerSpec &spec, std::size_t depth, const SchemeOptions &opt) {
  auto report = check_hypotheses(spec, depth, opt, false, /*with_special=*/true);
  for (const auto &h : report.levels) {
    if (!opt.strict) break;
    gate(h.transitive, h.level, "transitive", "level group '" + h.name + "' is not transitive");
    gate(h.perfect, h.level, "perfect", "level group '" + h.name + "' is not perfect");
  }
  if (!report.levels.front().special)
    throw SearchFailure("no admissible special pairs for levels 1.." + std::to_string(depth));
  report.notes.push_back("second commutator conjugates by the inverse of the diagonal element "
                         "carrying u to v");
  Tower tower = build_tower(spec, depth, tower_options(opt));
  const std::size_t n = depth;
  auto pair = [&](std::size_t k) -> const SpecialPair & { return *report.levels[k - 1].special; };

  auto make_beta = [&](bool first) {
    Element beta = tower.identity(n);
    for (std::size_t k = n - 1; k >= 2; --k) {
      const auto &pk = pair(k);
      const auto &next = pair(k + 1);
      const auto pos = tower.diagonal_point(k, first ? pk.u : pk.v);
      beta = multiply(beta, tower.embed(tower.base_element(k + 1, pos, first ? next.a : next.b),
                                        k + 1, n));
    }
    if (n >= 2) {
      const auto pos = first ? pair(1).v : pair(1).u;
      beta = multiply(beta, tower.embed(tower.base_element(2, pos, first ? pair(2).a : pair(2).b),
                                        2, n));
    }
    return multiply(beta, tower.embed(first ? pair(1).b : pair(1).a, 1, n));
  };
  GeneratorSet gs;
  gs.scheme = Scheme::special;
  gs.depth = n;
  gs.elements = {make_beta(true), make_beta(false)};
  gs.claimed_count = 2;
  gs.count_bound = 2;
  gs.claim = "2";
  attach_flat(tower, gs);
  check_count(gs);
  return SchemeResult{std::move(tower), std::move(report), std::move(gs)};
}

SchemeResult build_theoremB(const TowerSpec &spec, const SchemeOptions &opt) {
  const TowerOptions topt = tower_options(opt);
  const Regrouping r = regroup_mixed(spec, topt);
  std::size_t d = 0;
  for (const auto &lev : spec.levels()) d = std::max(d, nonidentity(lev.group).size());
  const std::size_t stride = spec.stride();

  HypothesisReport report;
  std::vector<LevelSpec> hlevels;
  for (const auto &h : r.h) {
    if (!h.flat)
      throw DegreeOverflow("degree overflow: H" + std::to_string(h.index) +
                           " exceeds the cap and cannot carry generators");
    LevelHypotheses lh;
    lh.level = h.index;
    lh.name = "H" + std::to_string(h.index);
    lh.transitive = true;
    lh.perfect = true;
    for (std::size_t j = h.first_level; j <= h.last_level; ++j) {
      lh.transitive = lh.transitive && is_transitive(spec.level(j).group);
      lh.perfect = lh.perfect && is_perfect(spec.level(j).group);
    }
    lh.notes.push_back("built from levels " + std::to_string(h.first_level) + ".." +
                       std::to_string(h.last_level) + "; perfectness read off those levels");
    if (h.last_level > h.first_level) {
      std::uint64_t inner = spec.level(h.last_level).group.degree();
      for (std::size_t j = h.last_level - 1; j > h.first_level; --j) {
        const auto p = checked_pow(BigCount(inner), spec.level(j).group.degree());
        inner = to_u64(*p).value();
      }
      lh.witness = exponentiation_witness(static_cast<std::uint32_t>(inner),
                                          spec.level(h.first_level).group);
      lh.non_regular = lh.witness.has_value();
      lh.notes.push_back("stabilizer witness from the exponentiation structure");
    } else {
      lh.witness = check_non_regular(*h.flat);
      lh.non_regular = !(lh.transitive && h.flat->order() == BigCount(h.flat->degree()));
    }
    if (lh.witness && !lh.witness->holds())
      throw Error("internal: stabilizer witness for " + lh.name + " does not check out");
    if (opt.strict) gate_dgen(lh);
    report.levels.push_back(std::move(lh));
    hlevels.push_back(LevelSpec{"H" + std::to_string(h.index), *h.flat, Action::exp});
  }
  const std::size_t n = hlevels.size();
  const auto rspec = relabeled(TowerSpec(std::move(hlevels)), n, report);
  Tower tower = build_tower(rspec, n, topt);
  auto gs = dgen_core(tower, 0, Scheme::theoremB);
  gs.count_bound = 2 * stride * d;
  gs.claim += " <= 2md = 2*" + std::to_string(stride) + "*" + std::to_string(d);
  report.notes.push_back("regrouped into " + std::to_string(n) + " groups, stride " +
                         std::to_string(stride));
  check_count(gs);
  return SchemeResult{std::move(tower), std::move(report), std::move(gs)};
}

SchemeResult build_scheme(Scheme scheme, const TowerSpec &spec, std::size_t depth,
                          const SchemeOptions &opt) {
  switch (scheme) {
    case Scheme::dgen:
      return build_dgen(spec, depth, opt);
    case Scheme::threegen:
      return build_threegen(spec, depth, opt);
    case Scheme::special:
      return build_special(spec, depth, opt);
    case Scheme::theoremB:
      return build_theoremB(spec.truncated(depth), opt);
  }
  throw Error("unknown scheme");
}

// ---------------------------------------------------------------------------
// Checks

namespace {

Element big_power(const Element &x, const BigCount &e, const Element &identity) {
  Element result = identity, base = x;
  BigCount k = e;
  while (k > 0) {
    if (k & 1) result = multiply(result, base);
    k >>= 1;
    if (k > 0) base = multiply(base, base);
  }
  return result;
}

}  // namespace

PowerIdentities check_power_identities(const SchemeResult &special) {
  if (special.generators.scheme != Scheme::special)
    throw Error("power identities apply to the special scheme only");
  const Tower &t = special.tower;
  const std::size_t n = t.depth();
  PowerIdentities out;
  out.p = 1;
  out.q = 1;
  for (std::size_t k = 2; k <= n; ++k) {
    const auto &pk = *special.hypotheses.levels[k - 1].special;
    out.p *= pk.order_a;
    out.q *= pk.order_b;
  }
  const auto &p1 = *special.hypotheses.levels[0].special;
  const Element id = t.identity(n);
  const auto &gens = special.generators.elements;
  out.first = big_power(gens[0], out.p, id) == t.embed(big_power(p1.b, out.p, Permutation(p1.b.degree())), 1, n);
  out.second = big_power(gens[1], out.q, id) == t.embed(big_power(p1.a, out.q, Permutation(p1.a.degree())), 1, n);
  return out;
}

Verification verify_generation(const SchemeResult &r) {
  Verification v;
  const auto &top = r.tower.level(r.tower.depth());
  v.theoretical = top.order;
  if (!r.generators.flat) return v;
  v.flattenable = true;
  const PermGroup g(to_u64(*top.degree).value(), *r.generators.flat);
  v.computed = g.order();
  return v;
}

std::vector<BigCount> drop_one_orders(const SchemeResult &r) {
  if (!r.generators.flat) throw DegreeOverflow("degree overflow: generators are not flattenable");
  const auto &flat = *r.generators.flat;
  const std::size_t deg = to_u64(*r.tower.level(r.tower.depth()).degree).value();
  std::vector<BigCount> out;
  for (std::size_t i = 0; i < flat.size(); ++i) {
    std::vector<Permutation> rest;
    for (std::size_t j = 0; j < flat.size(); ++j)
      if (j != i) rest.push_back(flat[j]);
    out.push_back(PermGroup(deg, std::move(rest)).order());
  }
  return out;
}

}  // namespace wf
