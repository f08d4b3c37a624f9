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

#include "wf/config.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

namespace wf {

using nlohmann::json;

std::string to_string(Mode m) { return m == Mode::strict ? "strict" : "lab"; }

Mode parse_mode(const std::string &s) {
  if (s == "strict") return Mode::strict;
  if (s == "lab") return Mode::lab;
  throw Error("unknown mode '" + s + "' (expected strict or lab)");
}

const CatalogEntry &Config::group(const std::string &name) const {
  auto it = catalog.find(name);
  if (it == catalog.end()) throw Error("unknown group '" + name + "'");
  return it->second;
}

const TowerEntry &Config::tower(const std::string &name) const {
  for (const auto &t : towers)
    if (t.name == name) return t;
  throw Error("unknown tower '" + name + "'");
}

const RunEntry &Config::run(const std::string &name) const {
  for (const auto &r : runs)
    if (r.name == name) return r;
  throw Error("unknown run '" + name + "'");
}

std::string config_hash(const json &doc) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : doc.dump()) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

// ---------------------------------------------------------------------------
// Validation helpers. Every accessor takes the JSON pointer of the value.

std::string child(const std::string &ptr, const std::string &key) {
  std::string out = ptr + "/";
  for (char c : key) {
    if (c == '~') out += "~0";
    else if (c == '/') out += "~1";
    else out += c;
  }
  return out;
}

std::string child(const std::string &ptr, std::size_t i) { return ptr + "/" + std::to_string(i); }

const json &need_object(const json &v, const std::string &ptr) {
  if (!v.is_object()) throw ConfigError(ptr, "expected an object");
  return v;
}

const json &need_array(const json &v, const std::string &ptr) {
  if (!v.is_array()) throw ConfigError(ptr, "expected an array");
  return v;
}

void allow_keys(const json &obj, const std::string &ptr, std::initializer_list<const char *> keys) {
  std::set<std::string> ok(keys.begin(), keys.end());
  for (const auto &[k, _] : obj.items())
    if (!ok.contains(k)) throw ConfigError(child(ptr, k), "unknown key");
}

const json &field(const json &obj, const std::string &ptr, const char *key) {
  if (!obj.contains(key)) throw ConfigError(child(ptr, key), "missing required key");
  return obj.at(key);
}

std::string get_string(const json &v, const std::string &ptr) {
  if (!v.is_string()) throw ConfigError(ptr, "expected a string");
  return v.get<std::string>();
}

std::string get_name(const json &v, const std::string &ptr) {
  auto s = get_string(v, ptr);
  if (s.empty() || s.find_first_of(" \t\n/") != std::string::npos)
    throw ConfigError(ptr, "names must be non-empty and contain no spaces or '/'");
  return s;
}

std::uint64_t get_uint(const json &v, const std::string &ptr) {
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
    throw ConfigError(ptr, "expected a non-negative integer");
  return v.get<std::uint64_t>();
}

bool get_bool(const json &v, const std::string &ptr) {
  if (!v.is_boolean()) throw ConfigError(ptr, "expected true or false");
  return v.get<bool>();
}

/// Integers or decimal strings (for values beyond 64 bits).
BigCount get_count(const json &v, const std::string &ptr) {
  if (v.is_number_unsigned() || v.is_number_integer()) return BigCount(get_uint(v, ptr));
  const auto s = get_string(v, ptr);
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw ConfigError(ptr, "expected a decimal integer string");
  return BigCount(s);
}

Permutation get_perm(const json &v, const std::string &ptr, std::size_t degree) {
  const auto text = get_string(v, ptr);
  try {
    auto p = parse_permutation(text, degree);
    if (p.degree() != degree)
      throw ConfigError(ptr, "permutation has degree " + std::to_string(p.degree()) +
                                 ", expected " + std::to_string(degree));
    return p;
  } catch (const ParseError &e) {
    throw ConfigError(ptr, std::string("bad permutation: ") + e.what());
  }
}

// ---------------------------------------------------------------------------
// Catalog

CatalogEntry make_entry(const std::string &name, std::size_t degree,
                        const std::vector<const char *> &gens, const BigCount &order,
                        std::optional<BigCount> aut, std::optional<unsigned> d) {
  std::vector<Permutation> ps;
  for (const auto *g : gens) ps.push_back(parse_permutation(g, degree));
  CatalogEntry e{name, PermGroup(degree, std::move(ps)), order, aut, d, std::nullopt,
                 std::nullopt, true};
  if (e.group.order() != order)
    throw Error("built-in group " + name + " has order " + to_string(e.group.order()) +
                ", declared " + to_string(order));
  return e;
}

SpecialPair special_from(const Permutation &a, const Permutation &b, const PermGroup &g,
                         const std::string &ptr) {
  if (PermGroup(g.degree(), {a, b}).order() != g.order())
    throw ConfigError(ptr, "the special pair does not generate the group");
  const auto fa = a.fixed_points(), fb = b.fixed_points();
  if (fa.empty() || fb.empty()) throw ConfigError(ptr, "both special elements need fixed points");
  return SpecialPair{a, b, fa.front(), fb.front(), a.order_u64(), b.order_u64()};
}

CatalogEntry parse_catalog_entry(const json &v, const std::string &ptr) {
  need_object(v, ptr);
  allow_keys(v, ptr, {"name", "degree", "generators", "order", "aut_order", "d", "segal",
                      "special"});
  const auto name = get_name(field(v, ptr, "name"), child(ptr, "name"));
  const auto degree = get_uint(field(v, ptr, "degree"), child(ptr, "degree"));
  if (degree < 1 || degree > kDefaultDegreeCap)
    throw ConfigError(child(ptr, "degree"), "degree out of range");
  const auto gptr = child(ptr, "generators");
  const auto &gens = need_array(field(v, ptr, "generators"), gptr);
  std::vector<Permutation> ps;
  for (std::size_t i = 0; i < gens.size(); ++i) ps.push_back(get_perm(gens[i], child(gptr, i), degree));
  CatalogEntry e{name, PermGroup(degree, std::move(ps)), 0, std::nullopt, std::nullopt,
                 std::nullopt, std::nullopt, false};
  e.order = e.group.order();
  if (v.contains("order")) {
    const auto declared = get_count(v["order"], child(ptr, "order"));
    if (declared != e.order)
      throw ConfigError(child(ptr, "order"), "declared order " + to_string(declared) +
                                                 " but the generators give " + to_string(e.order));
  }
  if (v.contains("aut_order")) e.aut_order = get_count(v["aut_order"], child(ptr, "aut_order"));
  if (v.contains("d")) e.d = static_cast<unsigned>(get_uint(v["d"], child(ptr, "d")));
  if (v.contains("segal")) {
    const auto sp = child(ptr, "segal");
    const auto &s = need_object(v["segal"], sp);
    allow_keys(s, sp, {"sigma", "r"});
    SegalPair pair{get_perm(field(s, sp, "sigma"), child(sp, "sigma"), degree),
                   static_cast<Point>(get_uint(field(s, sp, "r"), child(sp, "r")))};
    if (!pair.holds() || !e.group.contains(pair.sigma))
      throw ConfigError(sp, "sigma must lie in the group and move r under its square");
    e.segal = pair;
  }
  if (v.contains("special")) {
    const auto sp = child(ptr, "special");
    const auto &s = need_object(v["special"], sp);
    allow_keys(s, sp, {"a", "b"});
    e.special = special_from(get_perm(field(s, sp, "a"), child(sp, "a"), degree),
                             get_perm(field(s, sp, "b"), child(sp, "b"), degree), e.group, sp);
  }
  return e;
}

TowerEntry parse_tower(const json &v, const std::string &ptr,
                       const std::map<std::string, CatalogEntry> &catalog) {
  need_object(v, ptr);
  allow_keys(v, ptr, {"name", "levels", "exp_positions"});
  TowerEntry t{get_name(field(v, ptr, "name"), child(ptr, "name")), {}, TowerSpec({LevelSpec{}})};
  const auto lptr = child(ptr, "levels");
  const auto &levels = need_array(field(v, ptr, "levels"), lptr);
  if (levels.empty()) throw ConfigError(lptr, "a tower needs at least one level");
  std::vector<LevelSpec> specs;
  for (std::size_t i = 0; i < levels.size(); ++i) {
    const auto p = child(lptr, i);
    std::string group;
    Action action = Action::exp;
    if (levels[i].is_string()) {
      group = get_string(levels[i], p);
    } else {
      need_object(levels[i], p);
      allow_keys(levels[i], p, {"group", "action"});
      group = get_string(field(levels[i], p, "group"), child(p, "group"));
      if (levels[i].contains("action")) {
        const auto a = get_string(levels[i]["action"], child(p, "action"));
        if (a != "exp" && a != "perm")
          throw ConfigError(child(p, "action"), "expected \"exp\" or \"perm\"");
        action = parse_action(a);
      }
    }
    auto it = catalog.find(group);
    if (it == catalog.end())
      throw ConfigError(levels[i].is_string() ? p : child(p, "group"),
                        "unknown group '" + group + "'");
    t.groups.push_back(group);
    specs.push_back(LevelSpec{group, it->second.group, action});
  }
  std::optional<std::vector<std::size_t>> positions;
  if (v.contains("exp_positions")) {
    const auto pp = child(ptr, "exp_positions");
    const auto &arr = need_array(v["exp_positions"], pp);
    positions.emplace();
    for (std::size_t i = 0; i < arr.size(); ++i) positions->push_back(get_uint(arr[i], child(pp, i)));
  }
  try {
    t.spec = TowerSpec(std::move(specs), positions);
  } catch (const Error &e) {
    throw ConfigError(positions ? child(ptr, "exp_positions") : ptr, e.what());
  }
  return t;
}

}  // namespace

std::map<std::string, CatalogEntry> builtin_catalog() {
  std::map<std::string, CatalogEntry> out;
  auto add = [&](CatalogEntry e) { out.emplace(e.name, std::move(e)); };
  add(make_entry("A5", 5, {"[2,3,4,5,1]", "[2,3,1,4,5]"}, 60, BigCount(120), 2));
  add(make_entry("C2", 2, {"[2,1]"}, 2, BigCount(1), 1));
  add(make_entry("C3", 3, {"[2,3,1]"}, 3, BigCount(2), 1));
  add(make_entry("S3", 3, {"[2,1,3]", "[2,3,1]"}, 6, BigCount(6), 2));
  add(make_entry("PSL27", 7, {"[2,3,4,5,6,7,1]", "[2,1,6,4,5,3,7]"}, 168, BigCount(336), 2));
  return out;
}

Config parse_config(const json &doc) {
  need_object(doc, "");
  allow_keys(doc, "", {"catalog", "towers", "runs", "iso", "bounds", "cache", "cap"});
  Config cfg;
  cfg.hash = config_hash(doc);
  cfg.catalog = builtin_catalog();
  if (doc.contains("cap")) {
    cfg.cap = get_uint(doc["cap"], "/cap");
    if (cfg.cap < 1) throw ConfigError("/cap", "cap must be positive");
  }
  if (doc.contains("cache")) cfg.cache = get_string(doc["cache"], "/cache");
  if (doc.contains("catalog")) {
    const auto &arr = need_array(doc["catalog"], "/catalog");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      auto e = parse_catalog_entry(arr[i], child("/catalog", i));
      auto it = cfg.catalog.find(e.name);
      if (it != cfg.catalog.end() && !it->second.builtin)
        throw ConfigError(child(child("/catalog", i), "name"), "duplicate group '" + e.name + "'");
      cfg.catalog.insert_or_assign(e.name, std::move(e));
    }
  }
  std::set<std::string> names;
  if (doc.contains("towers")) {
    const auto &arr = need_array(doc["towers"], "/towers");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      auto t = parse_tower(arr[i], child("/towers", i), cfg.catalog);
      if (!names.insert(t.name).second)
        throw ConfigError(child(child("/towers", i), "name"), "duplicate tower '" + t.name + "'");
      cfg.towers.push_back(std::move(t));
    }
  }
  names.clear();
  if (doc.contains("runs")) {
    const auto &arr = need_array(doc["runs"], "/runs");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const auto ptr = child("/runs", i);
      const auto &v = need_object(arr[i], ptr);
      allow_keys(v, ptr, {"name", "tower", "depth", "scheme", "mode", "negative_controls",
                          "power_identities"});
      RunEntry r;
      r.name = get_name(field(v, ptr, "name"), child(ptr, "name"));
      if (!names.insert(r.name).second)
        throw ConfigError(child(ptr, "name"), "duplicate run '" + r.name + "'");
      r.tower = get_string(field(v, ptr, "tower"), child(ptr, "tower"));
      const TowerEntry *tower = nullptr;
      for (const auto &t : cfg.towers)
        if (t.name == r.tower) tower = &t;
      if (!tower) throw ConfigError(child(ptr, "tower"), "unknown tower '" + r.tower + "'");
      r.depth = tower->spec.size();
      if (v.contains("depth")) {
        r.depth = get_uint(v["depth"], child(ptr, "depth"));
        if (r.depth < 1 || r.depth > tower->spec.size())
          throw ConfigError(child(ptr, "depth"), "depth must be in 1.." +
                                                     std::to_string(tower->spec.size()));
      }
      try {
        r.scheme = parse_scheme(get_string(field(v, ptr, "scheme"), child(ptr, "scheme")));
      } catch (const ConfigError &) {
        throw;
      } catch (const Error &e) {
        throw ConfigError(child(ptr, "scheme"), e.what());
      }
      if (v.contains("mode")) {
        try {
          r.mode = parse_mode(get_string(v["mode"], child(ptr, "mode")));
        } catch (const ConfigError &) {
          throw;
        } catch (const Error &e) {
          throw ConfigError(child(ptr, "mode"), e.what());
        }
      }
      if (v.contains("negative_controls"))
        r.negative_controls = get_bool(v["negative_controls"], child(ptr, "negative_controls"));
      if (v.contains("power_identities"))
        r.power_identities = get_bool(v["power_identities"], child(ptr, "power_identities"));
      cfg.runs.push_back(std::move(r));
    }
  }
  auto need_group = [&](const json &v, const std::string &ptr, const char *key) {
    auto s = get_string(field(v, ptr, key), child(ptr, key));
    if (!cfg.catalog.contains(s)) throw ConfigError(child(ptr, key), "unknown group '" + s + "'");
    return s;
  };
  names.clear();
  if (doc.contains("iso")) {
    const auto &arr = need_array(doc["iso"], "/iso");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const auto ptr = child("/iso", i);
      const auto &v = need_object(arr[i], ptr);
      allow_keys(v, ptr, {"name", "a", "b", "c"});
      IsoEntry e{get_name(field(v, ptr, "name"), child(ptr, "name")), need_group(v, ptr, "a"),
                 need_group(v, ptr, "b"), need_group(v, ptr, "c")};
      if (!names.insert(e.name).second)
        throw ConfigError(child(ptr, "name"), "duplicate iso check '" + e.name + "'");
      cfg.iso.push_back(std::move(e));
    }
  }
  names.clear();
  if (doc.contains("bounds")) {
    const auto &arr = need_array(doc["bounds"], "/bounds");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const auto ptr = child("/bounds", i);
      const auto &v = need_object(arr[i], ptr);
      allow_keys(v, ptr, {"name", "a", "n", "b", "against_run"});
      BoundEntry e;
      e.name = get_name(field(v, ptr, "name"), child(ptr, "name"));
      if (!names.insert(e.name).second)
        throw ConfigError(child(ptr, "name"), "duplicate bound '" + e.name + "'");
      e.a = need_group(v, ptr, "a");
      e.b = need_group(v, ptr, "b");
      if (v.contains("n")) {
        e.n_copies = get_count(v["n"], child(ptr, "n"));
        if (e.n_copies < 1) throw ConfigError(child(ptr, "n"), "N must be positive");
      }
      if (!cfg.group(e.a).aut_order)
        throw ConfigError(child(ptr, "a"), "group '" + e.a + "' has no aut_order in the catalog");
      if (v.contains("against_run")) {
        e.against_run = get_string(v["against_run"], child(ptr, "against_run"));
        bool found = false;
        for (const auto &r : cfg.runs) found = found || r.name == *e.against_run;
        if (!found)
          throw ConfigError(child(ptr, "against_run"), "unknown run '" + *e.against_run + "'");
      }
      cfg.bounds.push_back(std::move(e));
    }
  }
  return cfg;
}

Config load_config(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("", "cannot open config file " + path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error &e) {
    throw ConfigError("", std::string("invalid JSON: ") + e.what());
  }
  auto cfg = parse_config(doc);
  if (cfg.cache) {
    const std::filesystem::path cache(*cfg.cache);
    if (cache.is_relative())
      cfg.cache = (std::filesystem::path(path).parent_path() / cache).string();
  }
  return cfg;
}

}  // namespace wf
