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

#include "bratteli/arith.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <string>

#include "bratteli/errors.hpp"

namespace bratteli {

std::string_view to_string(ArithmeticMode mode) {
  switch (mode) {
    case ArithmeticMode::kExact:
      return "exact";
    case ArithmeticMode::kFloat:
      return "float";
    case ArithmeticMode::kAuto:
      return "auto";
  }
  return "auto";
}

ArithmeticMode parse_mode(std::string_view text) {
  if (text == "exact") return ArithmeticMode::kExact;
  if (text == "float") return ArithmeticMode::kFloat;
  if (text == "auto") return ArithmeticMode::kAuto;
  throw ValidationError("unknown arithmetic mode '" + std::string(text) +
                        "' (expected exact, float or auto)");
}

ArithmeticMode resolve_mode(ArithmeticMode requested, std::size_t size) {
  if (requested != ArithmeticMode::kAuto) return requested;
  return size <= kExactSizeLimit ? ArithmeticMode::kExact
                                 : ArithmeticMode::kFloat;
}

double to_double(const Rational& value) {
  const double truncated = value.get_d();
  if (!std::isfinite(truncated) || sgn(value) == 0) return truncated;
  const double away = std::nextafter(truncated, sgn(value) > 0 ? HUGE_VAL : -HUGE_VAL);
  if (!std::isfinite(away)) return truncated;
  const Rational gap_truncated = abs(value - Rational(truncated));
  const Rational gap_away = abs(Rational(away) - value);
  return gap_away < gap_truncated ? away : truncated;
}

std::string format_rational(const Rational& value) {
  Rational reduced = value;
  reduced.canonicalize();
  return reduced.get_num().get_str() + "/" + reduced.get_den().get_str();
}

namespace {

bool is_integer_text(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s.front() == '-' || s.front() == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

BigInt parse_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return BigInt(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto bad = [&] {
    return ValidationError("malformed rational '" + std::string(text) + "'");
  };
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const auto num = text.substr(0, slash);
    const auto den = text.substr(slash + 1);
    if (!is_integer_text(num) || !is_integer_text(den)) throw bad();
    BigInt d = parse_integer(den);
    if (d == 0) throw bad();
    Rational r(parse_integer(num), d);
    r.canonicalize();
    return r;
  }
  if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    const auto whole = text.substr(0, dot);
    const auto frac = text.substr(dot + 1);
    const bool negative = !whole.empty() && whole.front() == '-';
    const auto whole_digits =
        (!whole.empty() && (whole.front() == '-' || whole.front() == '+'))
            ? whole.substr(1)
            : whole;
    if (frac.empty() || (!whole_digits.empty() && !is_integer_text(whole_digits)) ||
        !is_integer_text(frac) || frac.front() == '-' || frac.front() == '+') {
      throw bad();
    }
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    BigInt digits = parse_integer(std::string(whole_digits.empty() ? "0" : whole_digits) +
                                  std::string(frac));
    Rational r(negative ? BigInt(-digits) : digits, scale);
    r.canonicalize();
    return r;
  }
  if (!is_integer_text(text)) throw bad();
  return Rational(parse_integer(text));
}

std::string format_double(double value) {
  std::array<char, 64> buf{};
  const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  if (ec != std::errc()) return std::to_string(value);
  return std::string(buf.data(), end);
}

}  // namespace bratteli
