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

#include "wf/commands.hpp"

#include <chrono>
#include <functional>
#include <sstream>

#include "wf/bounds.hpp"
#include "wf/error.hpp"
#include "wf/report.hpp"

namespace wf {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::uint64_t effective_cap(const Config &cfg, const CommandOptions &opt) {
  return opt.cap.value_or(cfg.cap);
}

json envelope(const std::string &command, const Config &cfg, const CommandOptions &opt) {
  return json{{"tool", "wf"},
              {"version", kToolVersion},
              {"config_hash", cfg.hash},
              {"command", command},
              {"cap", effective_cap(cfg, opt)},
              {"results", json::array()}};
}

std::string show(const std::optional<BigCount> &x) { return x ? to_string(*x) : "unrepresentable"; }

/// Long decimal strings are abbreviated for the terminal; reports keep them whole.
std::string abbreviate(std::string s) {
  if (s.size() <= 40) return s;
  return s.substr(0, 16) + "... (" + std::to_string(s.size()) + " digits)";
}

const char *yes_no(bool b) { return b ? "yes" : "no"; }

/// Entries of a config section, narrowed by the selector when given.
template <class T>
std::vector<const T *> select(const std::vector<T> &items, const CommandOptions &opt,
                              const char *section) {
  if (items.empty()) throw ConfigError(std::string("/") + section, "the config has no entries here");
  std::vector<const T *> out;
  for (const auto &x : items)
    if (!opt.selector || x.name == *opt.selector) out.push_back(&x);
  if (out.empty())
    throw ConfigError(std::string("/") + section, "no entry named '" + *opt.selector + "'");
  return out;
}

void finish(CommandOutput &out) {
  bool ok = true;
  for (const auto &r : out.report["results"])
    ok = ok && r.value("verdict", "FAIL") != "FAIL" && r.value("checks_verdict", "PASS") != "FAIL";
  out.report["verdict"] = ok ? "PASS" : "FAIL";
  out.exit_code = ok ? kExitPass : kExitFail;
}

SchemeOptions scheme_options(const Config &cfg, const RunEntry &run, std::uint64_t cap,
                             Mode mode) {
  SchemeOptions so;
  so.cap = cap;
  so.strict = mode == Mode::strict;
  const auto &tower = cfg.tower(run.tower);
  for (std::size_t k = 1; k <= tower.groups.size(); ++k) {
    const auto &entry = cfg.group(tower.groups[k - 1]);
    if (entry.segal) so.segal_pairs.emplace(k, *entry.segal);
    if (entry.special) so.special_pairs.emplace(k, *entry.special);
  }
  return so;
}

SchemeResult run_scheme(const Config &cfg, const RunEntry &run, const CommandOptions &opt) {
  const auto mode = opt.mode.value_or(run.mode);
  return build_scheme(run.scheme, cfg.tower(run.tower).spec, run.depth,
                      scheme_options(cfg, run, effective_cap(cfg, opt), mode));
}

json run_header(const RunEntry &run, Mode mode) {
  return json{{"name", run.name},
              {"tower", run.tower},
              {"scheme", to_string(run.scheme)},
              {"depth", run.depth},
              {"mode", to_string(mode)}};
}

/// Hypotheses of the dgen family that do not hold, as "level k: name".
std::vector<std::string> gate_failures(const HypothesisReport &h) {
  std::vector<std::string> out;
  for (const auto &l : h.levels) {
    const auto at = "level " + std::to_string(l.level) + ": ";
    if (!l.transitive) out.push_back(at + "transitive");
    if (!l.perfect) out.push_back(at + "perfect");
    if (!l.stabilizers_differ()) out.push_back(at + "non_regular");
  }
  return out;
}

std::string perm_text(const Permutation &p) { return format_permutation(p, PermStyle::cycles); }

}  // namespace

const std::vector<std::string> &command_names() {
  static const std::vector<std::string> names{"build", "gens",  "verify",
                                              "iso",   "bound", "hypotheses"};
  return names;
}

CommandOutput run_command(const std::string &command, const Config &cfg,
                          const CommandOptions &opt) {
  static const std::map<std::string, std::function<CommandOutput(const Config &,
                                                                 const CommandOptions &)>>
      table{{"build", cmd_build}, {"gens", cmd_gens},   {"verify", cmd_verify},
            {"iso", cmd_iso},     {"bound", cmd_bound}, {"hypotheses", cmd_hypotheses}};
  auto it = table.find(command);
  if (it == table.end()) throw ConfigError("", "unknown command '" + command + "'");
  return it->second(cfg, opt);
}

// ---------------------------------------------------------------------------
// build

CommandOutput cmd_build(const Config &cfg, const CommandOptions &opt) {
  CommandOutput out;
  out.report = envelope("build", cfg, opt);
  std::ostringstream text;
  const auto mode = opt.mode.value_or(Mode::strict);
  for (const auto *t : select(cfg.towers, opt, "towers")) {
    json r{{"name", t->name}, {"mode", to_string(mode)}};
    text << "tower " << t->name << '\n';
    const auto t0 = Clock::now();
    try {
      TowerOptions topt;
      topt.cap = effective_cap(cfg, opt);
      topt.strict = mode == Mode::strict;
      const Tower tower = build_tower(t->spec, t->spec.size(), topt);
      r["summary"] = tower_json(tower);
      r["verdict"] = "PASS";
      text << "  level  group       action  degree                order\n";
      for (std::size_t k = 1; k <= tower.depth(); ++k) {
        const auto &lev = tower.level(k);
        std::string deg = abbreviate(show(lev.degree));
        if (!lev.flattenable()) deg += " *";
        char line[160];
        std::snprintf(line, sizeof line, "  %-6zu %-11s %-7s %-21s %s\n", k,
                      t->spec.level(k).name.c_str(), to_string(lev.action).c_str(), deg.c_str(),
                      abbreviate(show(lev.order)).c_str());
        text << line;
        if (!lev.flattenable()) text << "  (* non-flattenable at cap " << topt.cap << ")\n";
      }
    } catch (const Error &e) {
      r["verdict"] = "FAIL";
      r["error"] = "tower '" + t->name + "': " + e.what();
      text << "  FAIL: " << e.what() << '\n';
    }
    r["timings_ms"] = {{"total", ms_since(t0)}};
    out.report["results"].push_back(std::move(r));
  }
  finish(out);
  out.text = text.str();
  return out;
}

// ---------------------------------------------------------------------------
// gens

CommandOutput cmd_gens(const Config &cfg, const CommandOptions &opt) {
  CommandOutput out;
  out.report = envelope("gens", cfg, opt);
  std::ostringstream text;
  for (const auto *run : select(cfg.runs, opt, "runs")) {
    const auto mode = opt.mode.value_or(run->mode);
    json r = run_header(*run, mode);
    const auto t0 = Clock::now();
    try {
      const auto res = run_scheme(cfg, *run, opt);
      r["hypotheses"] = hypotheses_json(res.hypotheses);
      r["generators"] = generators_json(res.generators);
      r["verdict"] = "PASS";
      text << "run " << run->name << ": " << res.generators.size() << " generators ("
           << to_string(run->scheme) << ", claim " << res.generators.claim << ")\n";
      if (res.generators.flat) {
        const auto &flat = *res.generators.flat;
        for (std::size_t i = 0; i < flat.size(); ++i) {
          if (flat[i].degree() <= 64)
            text << "  g" << i + 1 << " = " << perm_text(flat[i]) << '\n';
          else
            text << "  g" << i + 1 << ": degree " << flat[i].degree() << ", moves "
                 << flat[i].degree() - flat[i].fixed_points().size() << " points\n";
        }
      } else {
        text << "  top level is not flattenable; structured form only\n";
      }
    } catch (const Error &e) {
      r["verdict"] = "FAIL";
      r["error"] = "run '" + run->name + "': " + e.what();
      text << "run " << run->name << ": FAIL: " << e.what() << '\n';
    }
    r["timings_ms"] = {{"total", ms_since(t0)}};
    out.report["results"].push_back(std::move(r));
  }
  finish(out);
  out.text = text.str();
  return out;
}

// ---------------------------------------------------------------------------
// verify

CommandOutput cmd_verify(const Config &cfg, const CommandOptions &opt) {
  CommandOutput out;
  out.report = envelope("verify", cfg, opt);
  std::ostringstream text;
  for (const auto *run : select(cfg.runs, opt, "runs")) {
    const auto mode = opt.mode.value_or(run->mode);
    json r = run_header(*run, mode);
    json timings;
    const auto t0 = Clock::now();
    text << "run " << run->name << " (" << to_string(run->scheme) << " on " << run->tower
         << ", depth " << run->depth << ", " << to_string(mode) << "): ";
    try {
      const auto res = run_scheme(cfg, *run, opt);
      timings["build"] = ms_since(t0);
      r["hypotheses"] = hypotheses_json(res.hypotheses);
      r["generators"] = generators_json(res.generators);
      const auto failures = gate_failures(res.hypotheses);
      r["gates"] = {{"enforced", mode == Mode::strict},
                    {"status", mode == Mode::strict ? "PASS" : "SKIPPED"},
                    {"unmet", failures}};

      const auto t1 = Clock::now();
      const auto v = verify_generation(res);
      timings["chain"] = ms_since(t1);
      r["theoretical_order"] = count_json(v.theoretical);
      r["computed_order"] = count_json(v.computed);
      std::string verdict = !v.flattenable ? "SKIPPED" : v.passed() ? "PASS" : "FAIL";
      r["verdict"] = verdict;
      if (!v.flattenable) r["skip_reason"] = "non-flattenable";

      json checks = json::object();
      bool checks_ok = true;
      if (run->negative_controls) {
        json nc{{"status", "SKIPPED"}};
        if (v.flattenable && v.computed) {
          const auto t2 = Clock::now();
          const auto drops = drop_one_orders(res);
          timings["negative_controls"] = ms_since(t2);
          bool ok = true;
          json orders = json::array();
          for (const auto &o : drops) {
            orders.push_back(to_string(o));
            ok = ok && o < *v.computed;
          }
          nc = {{"status", ok ? "PASS" : "FAIL"}, {"drop_one_orders", std::move(orders)}};
          checks_ok = checks_ok && ok;
        }
        checks["negative_controls"] = std::move(nc);
      }
      if (run->power_identities) {
        if (run->scheme != Scheme::special) {
          checks["power_identities"] = {{"status", "SKIPPED"},
                                        {"reason", "only defined for the special scheme"}};
        } else {
          const auto t3 = Clock::now();
          const auto pi = check_power_identities(res);
          timings["power_identities"] = ms_since(t3);
          const bool ok = pi.first && pi.second;
          checks["power_identities"] = {{"status", ok ? "PASS" : "FAIL"},
                                        {"p", to_string(pi.p)},
                                        {"q", to_string(pi.q)},
                                        {"first", pi.first},
                                        {"second", pi.second}};
          checks_ok = checks_ok && ok;
        }
      }
      r["checks"] = std::move(checks);
      if (!r["checks"].empty()) r["checks_verdict"] = checks_ok ? "PASS" : "FAIL";
      text << verdict;
      if (v.computed) text << ", order " << abbreviate(to_string(*v.computed));
      text << " (theoretical " << abbreviate(show(v.theoretical)) << "), " << res.generators.size()
           << " generators";
      if (!failures.empty() && mode == Mode::lab)
        text << ", gates SKIPPED (" << failures.size() << " unmet)";
      for (const auto &[name, c] : r["checks"].items())
        text << ", " << name << " " << c["status"].get<std::string>();
      text << '\n';
    } catch (const Error &e) {
      r["verdict"] = "FAIL";
      r["error"] = "run '" + run->name + "': " + e.what();
      text << "FAIL: " << e.what() << '\n';
    }
    timings["total"] = ms_since(t0);
    r["timings_ms"] = std::move(timings);
    out.report["results"].push_back(std::move(r));
  }
  finish(out);
  out.text = text.str();
  return out;
}

// ---------------------------------------------------------------------------
// iso

CommandOutput cmd_iso(const Config &cfg, const CommandOptions &opt) {
  CommandOutput out;
  out.report = envelope("iso", cfg, opt);
  std::ostringstream text;
  const auto cap = effective_cap(cfg, opt);
  for (const auto *e : select(cfg.iso, opt, "iso")) {
    json r{{"name", e->name}, {"a", e->a}, {"b", e->b}, {"c", e->c}};
    const auto t0 = Clock::now();
    text << "iso " << e->name << " (" << e->a << ", " << e->b << ", " << e->c << "): ";
    try {
      const auto &a = cfg.group(e->a).group, &b = cfg.group(e->b).group,
                 &c = cfg.group(e->c).group;
      const auto rep = kaluzhnin_check(a, b, c, cap);
      r["degree"] = rep.degree;
      r["left_order"] = to_string(rep.left_order);
      r["right_order"] = to_string(rep.right_order);
      r["generator_in_right"] = rep.generator_in_right;
      if (rep.counterexample)
        r["counterexample"] = {{"generator", rep.counterexample->first + 1},
                               {"moved_point", rep.counterexample->second}};
      const auto bij = kaluzhnin_bijection(static_cast<std::uint32_t>(a.degree()),
                                           static_cast<std::uint32_t>(b.degree()),
                                           static_cast<std::uint32_t>(c.degree()), cap);
      r["certificate"] = {{"degree", bij.degree()},
                          {"bijection", format_permutation(bij, PermStyle::images)}};
      r["verdict"] = rep.passed ? "PASS" : "FAIL";
      text << (rep.passed ? "PASS" : "FAIL") << ", degree " << rep.degree << ", orders "
           << to_string(rep.left_order) << " / " << to_string(rep.right_order) << '\n';
    } catch (const DegreeOverflow &ex) {
      r["verdict"] = "SKIPPED";
      r["skip_reason"] = std::string("non-flattenable: ") + ex.what();
      text << "SKIPPED: " << ex.what() << '\n';
    } catch (const Error &ex) {
      r["verdict"] = "FAIL";
      r["error"] = "iso '" + e->name + "': " + ex.what();
      text << "FAIL: " << ex.what() << '\n';
    }
    r["timings_ms"] = {{"total", ms_since(t0)}};
    out.report["results"].push_back(std::move(r));
  }
  finish(out);
  out.text = text.str();
  return out;
}

// ---------------------------------------------------------------------------
// bound

CommandOutput cmd_bound(const Config &cfg, const CommandOptions &opt) {
  CommandOutput out;
  out.report = envelope("bound", cfg, opt);
  std::ostringstream text;
  EulerianCache cache = cfg.cache ? EulerianCache::load(*cfg.cache) : EulerianCache();
  for (const auto *e : select(cfg.bounds, opt, "bounds")) {
    json r{{"name", e->name}, {"a", e->a}, {"n", to_string(e->n_copies)}, {"b", e->b}};
    const auto t0 = Clock::now();
    text << "bound " << e->name << " (" << e->a << "^" << to_string(e->n_copies) << ", " << e->b
         << "): ";
    try {
      const auto &ea = cfg.group(e->a), &eb = cfg.group(e->b);
      BoundInput in{ea.group, e->n_copies, eb.group, *ea.aut_order, eb.d, e->a};
      const auto rep = lower_bound(in, kDefaultTupleBudget, &cache);
      r["report"] = bound_json(rep);
      std::string verdict = "PASS";
      text << "lower bound " << rep.value;
      if (e->against_run) {
        const auto &run = cfg.run(*e->against_run);
        const auto res = run_scheme(cfg, run, opt);
        const auto size = res.generators.size();
        const bool ok = Rational(size) >= rep.value;
        r["against_run"] = {{"run", run.name}, {"count", size}, {"satisfied", ok}};
        verdict = ok ? "PASS" : "FAIL";
        text << ", run " << run.name << " uses " << size << " generators";
      }
      r["verdict"] = verdict;
      text << ": " << verdict << '\n';
    } catch (const Error &ex) {
      r["verdict"] = "FAIL";
      r["error"] = "bound '" + e->name + "': " + ex.what();
      text << "FAIL: " << ex.what() << '\n';
    }
    r["timings_ms"] = {{"total", ms_since(t0)}};
    out.report["results"].push_back(std::move(r));
  }
  if (cfg.cache) cache.save(*cfg.cache);
  finish(out);
  out.text = text.str();
  return out;
}

// ---------------------------------------------------------------------------
// hypotheses

CommandOutput cmd_hypotheses(const Config &cfg, const CommandOptions &opt) {
  CommandOutput out;
  out.report = envelope("hypotheses", cfg, opt);
  std::ostringstream text;
  struct Target {
    std::string kind, name;
    TowerSpec spec;
  };
  std::vector<Target> targets;
  if (opt.selector && cfg.catalog.contains(*opt.selector)) {
    const auto &g = cfg.group(*opt.selector);
    targets.push_back({"group", g.name, TowerSpec({LevelSpec{g.name, g.group, Action::exp}})});
  } else if (!cfg.towers.empty() || opt.selector) {
    for (const auto *t : select(cfg.towers, opt, "towers")) targets.push_back({"tower", t->name, t->spec});
  } else {
    for (const auto &[name, g] : cfg.catalog)
      targets.push_back({"group", name, TowerSpec({LevelSpec{name, g.group, Action::exp}})});
  }
  for (const auto &t : targets) {
    json r{{"kind", t.kind}, {"name", t.name}};
    const auto t0 = Clock::now();
    text << t.kind << ' ' << t.name << '\n';
    try {
      SchemeOptions so;
      so.cap = effective_cap(cfg, opt);
      const auto rep = check_hypotheses(t.spec, t.spec.size(), so, true, true);
      r["hypotheses"] = hypotheses_json(rep);
      const auto failures = gate_failures(rep);
      r["unmet"] = failures;
      r["verdict"] = failures.empty() ? "PASS" : "FAIL";
      for (const auto &l : rep.levels) {
        text << "  level " << l.level << " " << l.name << ": transitive " << yes_no(l.transitive)
             << ", perfect " << yes_no(l.perfect) << ", non-regular " << yes_no(l.non_regular);
        if (l.witness)
          text << ", St(" << l.witness->fixed << ") != St(" << l.witness->moved << ") via "
               << perm_text(l.witness->certificate);
        if (l.equal_pair)
          text << ", stabilizers " << (l.all_stabilizers_distinct() ? "all distinct" : "not all distinct");
        if (l.segal) text << ", Segal " << perm_text(l.segal->sigma) << " r=" << l.segal->r;
        text << '\n';
      }
    } catch (const Error &e) {
      r["verdict"] = "FAIL";
      r["error"] = t.kind + " '" + t.name + "': " + e.what();
      text << "  FAIL: " << e.what() << '\n';
    }
    r["timings_ms"] = {{"total", ms_since(t0)}};
    out.report["results"].push_back(std::move(r));
  }
  finish(out);
  out.text = text.str();
  return out;
}

}  // namespace wf
