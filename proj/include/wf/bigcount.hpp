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

#ifndef WF_BIGCOUNT_HPP
#define WF_BIGCOUNT_HPP

#include <cstdint>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace wf {

/// Arbitrary precision non-negative integer used for degrees and orders.
using BigCount = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Results of exponentiations above this many bits are treated as
/// unrepresentable (tower levels past the third or so).
inline constexpr std::uint64_t kMaxBigCountBits = std::uint64_t{1} << 22;

inline std::string to_string(const BigCount &x) { return x.str(); }

/// base^exponent, or nullopt if the result would exceed kMaxBigCountBits.
std::optional<BigCount> checked_pow(const BigCount &base, const BigCount &exponent);

/// x as uint64 when it fits.
std::optional<std::uint64_t> to_u64(const BigCount &x);

BigCount factorial(std::uint64_t n);

}  // namespace wf

#endif  // WF_BIGCOUNT_HPP
