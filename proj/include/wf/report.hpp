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

#ifndef WF_REPORT_HPP
#define WF_REPORT_HPP

#include <optional>
#include <string>

#include "json.hpp"
#include "wf/bigcount.hpp"
#include "wf/bounds.hpp"
#include "wf/gen_schemes.hpp"
#include "wf/tower.hpp"
#include "wf/wreath.hpp"

namespace wf {

using nlohmann::json;

/// Decimal string, or null.
json count_json(const std::optional<BigCount> &x);
json count_json(const BigCount &x);
json rational_json(const Rational &x);

/// {"perm": "[...]"} for plain elements; wreath elements carry their shape:
/// {"action", "inner_degree", "outer_degree", "base": [{"at", "perm"}], "top"}.
json element_json(const Element &x);
/// Inverse of element_json. Throws ParseError on malformed input.
Element element_from_json(const json &j);

json witness_json(const StabilizerWitness &w);
json level_hypotheses_json(const LevelHypotheses &h);
json hypotheses_json(const HypothesisReport &r);
/// Structured elements always; flat permutations (image lists) when present.
json generators_json(const GeneratorSet &g);
json tower_json(const Tower &t);
json regrouping_json(const Regrouping &r);
json bound_json(const BoundReport &r);

}  // namespace wf

#endif  // WF_REPORT_HPP
