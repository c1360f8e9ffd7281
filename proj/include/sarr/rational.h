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

#ifndef SARR_RATIONAL_H_
#define SARR_RATIONAL_H_

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace sarr {

// GMP keeps mpq_class canonical (reduced, positive denominator, 0 == 0/1)
// as long as every value goes through canonicalize() after raw assignment.
using BigInt = mpz_class;
using Rat = mpq_class;
using QVector = std::vector<Rat>;

// Accepts "7", "-3/4", "2.50", "+1.5". Throws ParseError otherwise.
Rat ParseRat(std::string_view text);

// "p" for integers, "p/q" otherwise.
std::string FormatRat(const Rat& value);

bool IsZero(const QVector& v);

// Smallest positive integer multiple of v with integer entries, divided by
// the gcd of those entries.
std::vector<BigInt> PrimitiveIntegerVector(const QVector& v);

}  // namespace sarr

#endif  // SARR_RATIONAL_H_
