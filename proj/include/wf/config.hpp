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

#ifndef WF_CONFIG_HPP
#define WF_CONFIG_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "wf/bigcount.hpp"
#include "wf/error.hpp"
#include "wf/gen_schemes.hpp"
#include "wf/perm_group.hpp"
#include "wf/tower.hpp"

namespace wf {

/// A config problem, located by a JSON pointer into the config document.
class ConfigError : public Error {
 public:
  ConfigError(std::string pointer, const std::string &what)
      : Error((pointer.empty() ? std::string("/") : pointer) + ": " + what),
        pointer_(std::move(pointer)) {}
  const std::string &pointer() const noexcept { return pointer_; }

 private:
  std::string pointer_;
};

struct CatalogEntry {
  std::string name;
  PermGroup group;
  BigCount order;
  std::optional<BigCount> aut_order;
  std::optional<unsigned> d;
  std::optional<SegalPair> segal;
  std::optional<SpecialPair> special;
  bool builtin = false;
};

enum class Mode { strict, lab };
std::string to_string(Mode m);
Mode parse_mode(const std::string &s);

struct TowerEntry {
  std::string name;
  std::vector<std::string> groups;
  TowerSpec spec;
};

struct RunEntry {
  std::string name;
  std::string tower;
  std::size_t depth = 1;
  Scheme scheme = Scheme::dgen;
  Mode mode = Mode::strict;
  bool negative_controls = false;
  bool power_identities = false;
};

struct IsoEntry {
  std::string name;
  std::string a, b, c;
};

struct BoundEntry {
  std::string name;
  std::string a;
  BigCount n_copies = 1;
  std::string b;
  /// Optional run whose generator count must reach the bound.
  std::optional<std::string> against_run;
};

struct Config {
  std::map<std::string, CatalogEntry> catalog;
  std::vector<TowerEntry> towers;
  std::vector<RunEntry> runs;
  std::vector<IsoEntry> iso;
  std::vector<BoundEntry> bounds;
  std::optional<std::string> cache;
  std::uint64_t cap = kDefaultDegreeCap;
  std::string hash;

  const CatalogEntry &group(const std::string &name) const;
  const TowerEntry &tower(const std::string &name) const;
  const RunEntry &run(const std::string &name) const;
};

/// The shipped groups, each verified by chain order when built.
std::map<std::string, CatalogEntry> builtin_catalog();

/// Validates and resolves a config document. Throws ConfigError.
Config parse_config(const nlohmann::json &doc);
/// Relative cache paths resolve against the directory of the config file.
Config load_config(const std::string &path);

/// FNV-1a 64 of the compact dump, as 16 hex digits.
std::string config_hash(const nlohmann::json &doc);

}  // namespace wf

#endif  // WF_CONFIG_HPP
