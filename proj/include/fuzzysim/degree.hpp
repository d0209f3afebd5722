// Copyright 2026 The fuzzysim Authors
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

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace fuzzysim {

// A membership grade in [0,1], stored as an exact fixed-point number with
// 18 fractional decimal digits. Degrees are only ever compared and maximized.
class Degree {
 public:
  static constexpr int kFractionDigits = 18;
  static constexpr std::uint64_t kScale = 1'000'000'000'000'000'000ULL;

  constexpr Degree() = default;

  static constexpr Degree zero() { return Degree(); }
  static constexpr Degree one() { return Degree(kScale); }

  // `units` is the grade multiplied by 10^18; must not exceed kScale.
  static constexpr Degree from_units(std::uint64_t units) {
    return Degree(units > kScale ? kScale : units);
  }

  // The k-th of `levels` evenly spaced grades k/levels, k in 1..levels.
  // Integer division keeps the levels distinct and strictly increasing.
  static constexpr Degree level(std::uint64_t k, std::uint64_t levels) {
    if (levels == 0 || k >= levels) return one();
    return Degree(static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(kScale) * k) / levels));
  }

  // Parses a decimal literal such as "0.75", "1", ".5" or "1.000".
  // On failure returns nullopt and, if `error` is set, a short reason.
  static std::optional<Degree> parse(std::string_view text,
                                     std::string* error = nullptr) {
    auto fail = [&](const char* why) -> std::optional<Degree> {
      if (error) *error = why;
      return std::nullopt;
    };
    if (text.empty()) return fail("empty degree");
    bool negative = false;
    if (text.front() == '-' || text.front() == '+') {
      negative = text.front() == '-';
      text.remove_prefix(1);
    }
    std::size_t dot = text.find('.');
    std::string_view whole = text.substr(0, dot);
    std::string_view frac =
        dot == std::string_view::npos ? std::string_view() : text.substr(dot + 1);
    if (whole.empty() && frac.empty()) return fail("malformed degree");
    for (char c : whole)
      if (c < '0' || c > '9') return fail("malformed degree");
    for (char c : frac)
      if (c < '0' || c > '9') return fail("malformed degree");
    if (frac.size() > static_cast<std::size_t>(kFractionDigits)) {
      // Trailing zeros beyond the representable precision are harmless.
      if (frac.substr(kFractionDigits).find_first_not_of('0') !=
          std::string_view::npos)
        return fail("degree has more than 18 fractional digits");
      frac = frac.substr(0, kFractionDigits);
    }
    // Strip leading zeros so that the integral part can be checked for <= 1.
    while (whole.size() > 1 && whole.front() == '0') whole.remove_prefix(1);
    std::uint64_t integral = 0;
    if (whole.size() > 1 || (!whole.empty() && whole.front() > '1'))
      return fail("degree outside [0,1]");
    if (!whole.empty()) integral = static_cast<std::uint64_t>(whole.front() - '0');
    std::uint64_t fraction = 0;
    for (int i = 0; i < kFractionDigits; ++i) {
      fraction *= 10;
      if (static_cast<std::size_t>(i) < frac.size())
        fraction += static_cast<std::uint64_t>(frac[i] - '0');
    }
    std::uint64_t units = integral * kScale + fraction;
    if (units > kScale) return fail("degree outside [0,1]");
    if (negative && units != 0) return fail("degree outside [0,1]");
    return Degree(units);
  }

  constexpr std::uint64_t units() const { return units_; }
  constexpr bool is_zero() const { return units_ == 0; }

  // Shortest decimal rendering that parses back to the same value.
  std::string to_string() const {
    if (units_ == kScale) return "1";
    if (units_ == 0) return "0";
    std::string digits = std::to_string(units_);
    digits.insert(0, static_cast<std::size_t>(kFractionDigits) - digits.size(), '0');
    while (!digits.empty() && digits.back() == '0') digits.pop_back();
    return "0." + digits;
  }

  friend constexpr auto operator<=>(Degree, Degree) = default;

 private:
  constexpr explicit Degree(std::uint64_t units) : units_(units) {}

  std::uint64_t units_ = 0;
};

}  // namespace fuzzysim
