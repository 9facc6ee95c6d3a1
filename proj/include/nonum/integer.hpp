// Copyright 2026 The nonum Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NONUM_INTEGER_HPP_
#define NONUM_INTEGER_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace nonum {

// Arbitrary-precision signed integer used for every numeric field that comes
// from user input (multiset values, ILP coefficients, right-hand sides).
using Integer = boost::multiprecision::cpp_int;

// Floor and ceiling of a / b for b != 0, correct for every sign combination.
Integer floor_div(const Integer& a, const Integer& b);
Integer ceil_div(const Integer& a, const Integer& b);

Integer parse_integer(const std::string& text);

inline std::string to_string(const Integer& value) { return value.str(); }

// Narrowing conversion; throws std::overflow_error when the value does not
// fit.
std::int64_t to_int64(const Integer& value);
std::uint64_t to_uint64(const Integer& value);

}  // namespace nonum

#endif  // NONUM_INTEGER_HPP_
