// Copyright 2026 The Bratteli Authors
//
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

#pragma once

#include <gmpxx.h>

#include <concepts>
#include <cstddef>
#include <string>
#include <string_view>

namespace bratteli {

using BigInt = mpz_class;
using Rational = mpq_class;

enum class ArithmeticMode { kExact, kFloat, kAuto };

// Largest level (or support) size solved in exact arithmetic when the mode
// is kAuto.
inline constexpr std::size_t kExactSizeLimit = 64;

std::string_view to_string(ArithmeticMode mode);
ArithmeticMode parse_mode(std::string_view text);

// kAuto becomes kExact when `size` <= kExactSizeLimit and kFloat otherwise.
// Explicit modes pass through unchanged.
ArithmeticMode resolve_mode(ArithmeticMode requested, std::size_t size);

// Always "num/den", including integers ("3/1") and zero ("0/1").
std::string format_rational(const Rational& value);

// Accepts "p/q", "p" and finite decimals such as "0.25".
Rational parse_rational(std::string_view text);

// Shortest decimal that round-trips to the same double.
std::string format_double(double value);

// num / den in lowest terms. The two-argument mpq_class constructor does
// not reduce, and unreduced values compare unequal to reduced ones.
inline Rational ratio(long num, long den) {
  Rational out(num, den);
  out.canonicalize();
  return out;
}

// Nearest double. mpq_get_d alone truncates toward zero.
double to_double(const Rational& value);
inline double to_double(double value) { return value; }

template <class T>
concept Scalar = std::same_as<T, Rational> || std::same_as<T, double>;

template <Scalar T>
inline constexpr ArithmeticMode kModeOf =
    std::same_as<T, Rational> ? ArithmeticMode::kExact : ArithmeticMode::kFloat;

template <Scalar T>
T from_rational(const Rational& value) {
  if constexpr (std::same_as<T, Rational>) {
    return value;
  } else {
    return to_double(value);
  }
}

template <Scalar T>
std::string format_scalar(const T& value) {
  if constexpr (std::same_as<T, Rational>) {
    return format_rational(value);
  } else {
    return format_double(value);
  }
}

inline bool is_zero(const Rational& value) { return sgn(value) == 0; }
inline bool is_zero(double value) { return value == 0.0; }

}  // namespace bratteli
