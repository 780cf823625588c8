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

#ifndef TCF_RATIONAL_H_
#define TCF_RATIONAL_H_

#include <cstdint>
#include <string>
#include "absl/strings/string_view.h"

#include <boost/rational.hpp>

#include "absl/status/statusor.h"

namespace tcf {

// Exact arithmetic for every hypothesis inequality.
using Rational = boost::rational<int64_t>;

int64_t Floor(const Rational& r);
std::string ToString(const Rational& r);
// Accepts "p", "p/q" and finite decimals such as "2.5".
absl::StatusOr<Rational> ParseRational(absl::string_view text);

}  // namespace tcf

#endif  // TCF_RATIONAL_H_
