// Copyright 2026 The Authors.
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

#include "tcf/rational.h"

#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"

namespace tcf {

int64_t Floor(const Rational& r) {
  const int64_t q = r.numerator() / r.denominator();
  return (r.numerator() % r.denominator() != 0 && r.numerator() < 0) ? q - 1
                                                                      : q;
}

std::string ToString(const Rational& r) {
  if (r.denominator() == 1) return absl::StrCat(r.numerator());
  return absl::StrCat(r.numerator(), "/", r.denominator());
}

absl::StatusOr<Rational> ParseRational(absl::string_view text) {
  const auto bad = [&] {
    return absl::InvalidArgumentError(
        absl::StrCat("not a rational number: '", text, "'"));
  };
  if (auto slash = text.find('/'); slash != absl::string_view::npos) {
    int64_t p = 0;
    int64_t q = 0;
    if (!absl::SimpleAtoi(text.substr(0, slash), &p) ||
        !absl::SimpleAtoi(text.substr(slash + 1), &q) || q == 0) {
      return bad();
    }
    return Rational(p, q);
  }
  if (auto dot = text.find('.'); dot != absl::string_view::npos) {
    absl::string_view whole = text.substr(0, dot);
    absl::string_view frac = text.substr(dot + 1);
    if (frac.empty() || frac.size() > 12) return bad();
    const bool negative = !whole.empty() && whole.front() == '-';
    int64_t w = 0;
    int64_t f = 0;
    if ((!whole.empty() && whole != "-" && !absl::SimpleAtoi(whole, &w)) ||
        !absl::SimpleAtoi(frac, &f) || f < 0) {
      return bad();
    }
    int64_t scale = 1;
    for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
    Rational r(w);
    r += negative ? -Rational(f, scale) : Rational(f, scale);
    return r;
  }
  int64_t p = 0;
  if (!absl::SimpleAtoi(text, &p)) return bad();
  return Rational(p);
}

}  // namespace tcf
