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

#include "wf/report.hpp"

#include "wf/error.hpp"

namespace wf {

json count_json(const std::optional<BigCount> &x) {
  return x ? json(to_string(*x)) : json(nullptr);
}

json count_json(const BigCount &x) { return to_string(x); }

json rational_json(const Rational &x) {
  return json{{"num", to_string(numerator(x))}, {"den", to_string(denominator(x))}};
}

json element_json(const Element &x) {
  if (x.is_plain()) return json{{"perm", format_permutation(x.plain(), PermStyle::images)}};
  const auto &w = x.wreath();
  const auto &shape = *w.shape();
  json base = json::array();
  for (const auto &[at, p] : w.base())
    base.push_back(json{{"at", at}, {"perm", format_permutation(p, PermStyle::images)}});
  return json{{"action", to_string(shape.action())},
              {"inner_degree", shape.inner_degree()},
              {"outer_degree", count_json(shape.outer_degree())},
              {"base", std::move(base)},
              {"top", element_json(w.top())}};
}

namespace {

[[noreturn]] void bad(const std::string &what) { throw Error("malformed element: " + what); }

Permutation perm_field(const json &j, std::optional<std::size_t> degree) {
  if (!j.is_object() || !j.contains("perm") || !j["perm"].is_string()) bad("missing \"perm\"");
  return parse_permutation(j["perm"].get<std::string>(), degree);
}

}  // namespace

Element element_from_json(const json &j) {
  if (!j.is_object()) bad("expected an object");
  if (j.contains("perm")) return perm_field(j, std::nullopt);
  for (const char *k : {"action", "inner_degree", "base", "top"})
    if (!j.contains(k)) bad(std::string("missing \"") + k + "\"");
  const Action action = parse_action(j["action"].get<std::string>());
  const auto inner = j["inner_degree"].get<std::uint32_t>();
  const Element top = element_from_json(j["top"]);
  const ShapePtr shape = top.is_plain()
                             ? WreathShape::make(action, inner, top.plain().degree())
                             : WreathShape::make(action, inner, top.wreath().shape());
  if (j.contains("outer_degree") && !j["outer_degree"].is_null() &&
      (!shape->outer_degree() || j["outer_degree"].get<std::string>() != to_string(*shape->outer_degree())))
    bad("outer_degree does not match the top element");
  WreathElement::Base base;
  if (!j["base"].is_array()) bad("\"base\" must be an array");
  for (const auto &e : j["base"]) {
    if (!e.contains("at")) bad("base entry without \"at\"");
    const auto at = e["at"].get<std::uint64_t>();
    if (!base.emplace(at, perm_field(e, inner)).second) bad("repeated base coordinate");
  }
  return WreathElement(shape, std::move(base), top);
}

json witness_json(const StabilizerWitness &w) {
  return json{{"fixed", w.fixed},
              {"moved", w.moved},
              {"certificate", format_permutation(w.certificate, PermStyle::cycles)}};
}

json level_hypotheses_json(const LevelHypotheses &h) {
  json j{{"level", h.level},
         {"name", h.name},
         {"transitive", h.transitive},
         {"perfect", h.perfect},
         {"non_regular", h.non_regular},
         {"stabilizers_differ", h.stabilizers_differ()},
         {"witness", h.witness ? witness_json(*h.witness) : json(nullptr)},
         {"notes", h.notes}};
  if (h.equal_pair) {
    j["all_stabilizers_distinct"] = h.all_stabilizers_distinct();
    j["equal_pair"] = *h.equal_pair ? json::array({(*h.equal_pair)->first, (*h.equal_pair)->second})
                                    : json(nullptr);
  }
  if (h.segal)
    j["segal"] = {{"sigma", format_permutation(h.segal->sigma, PermStyle::cycles)},
                  {"r", h.segal->r}};
  if (h.special)
    j["special"] = {{"a", format_permutation(h.special->a, PermStyle::cycles)},
                    {"b", format_permutation(h.special->b, PermStyle::cycles)},
                    {"u", h.special->u},
                    {"v", h.special->v},
                    {"order_a", h.special->order_a},
                    {"order_b", h.special->order_b}};
  if (h.relabel) j["relabel"] = format_permutation(*h.relabel, PermStyle::cycles);
  return j;
}

json hypotheses_json(const HypothesisReport &r) {
  json levels = json::array();
  for (const auto &h : r.levels) levels.push_back(level_hypotheses_json(h));
  json j{{"levels", std::move(levels)}, {"notes", r.notes}};
  if (!r.coprime.empty()) j["coprime"] = r.coprime;
  return j;
}

json generators_json(const GeneratorSet &g) {
  json structured = json::array();
  for (const auto &e : g.elements) structured.push_back(element_json(e));
  json j{{"scheme", to_string(g.scheme)},
         {"depth", g.depth},
         {"count", g.size()},
         {"claimed_count", g.claimed_count},
         {"count_bound", g.count_bound},
         {"claim", g.claim},
         {"structured", std::move(structured)},
         {"flat", nullptr}};
  if (g.flat) {
    json flat = json::array();
    for (const auto &p : *g.flat) flat.push_back(format_permutation(p, PermStyle::images));
    j["flat"] = std::move(flat);
  }
  return j;
}

json tower_json(const Tower &t) {
  json levels = json::array();
  for (std::size_t k = 1; k <= t.depth(); ++k) {
    const auto &lev = t.level(k);
    levels.push_back(json{{"level", k},
                          {"group", t.spec().level(k).name},
                          {"action", to_string(lev.action)},
                          {"group_degree", lev.group_degree},
                          {"group_order", count_json(lev.group_order)},
                          {"degree", count_json(lev.degree)},
                          {"order", count_json(lev.order)},
                          {"flattenable", lev.flattenable()}});
  }
  json pos = t.spec().exp_positions();
  return json{{"depth", t.depth()},
              {"exp_positions", std::move(pos)},
              {"stride", t.spec().stride()},
              {"levels", std::move(levels)}};
}

json regrouping_json(const Regrouping &r) {
  json hs = json::array();
  for (const auto &h : r.h)
    hs.push_back(json{{"index", h.index},
                      {"first_level", h.first_level},
                      {"last_level", h.last_level},
                      {"degree", count_json(h.degree)},
                      {"order", count_json(h.order)},
                      {"flattenable", h.flat.has_value()}});
  json cs = json::array();
  for (const auto &c : r.comparisons)
    cs.push_back(json{{"n", c.n},
                      {"tower_level", c.tower_level},
                      {"g_degree", count_json(c.g_degree)},
                      {"g_order", count_json(c.g_order)},
                      {"h_degree", count_json(c.h_degree)},
                      {"h_order", count_json(c.h_order)},
                      {"degree_match", c.degree_match},
                      {"order_match", c.order_match},
                      {"conjugacy_check", c.conjugacy_check ? json(*c.conjugacy_check) : json(nullptr)},
                      {"passed", c.passed()}});
  return json{{"h", std::move(hs)}, {"comparisons", std::move(cs)}, {"passed", r.passed()}};
}

json bound_json(const BoundReport &r) {
  return json{{"d_power", r.d_power}, {"d_a", r.d_a},         {"d_b", r.d_b},
              {"n", r.n},             {"left", rational_json(r.left)},
              {"value", rational_json(r.value)}};
}

}  // namespace wf
