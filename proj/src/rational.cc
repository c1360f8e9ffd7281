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

#include "sarr/rational.h"

#include <cctype>

#include "sarr/errors.h"

namespace sarr {
namespace {

bool AllDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

BigInt ParseInteger(std::string_view text, std::string_view whole) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  if (!AllDigits(body)) {
    throw ParseError("not a rational number: \"" + std::string(whole) + "\"");
  }
  BigInt value(std::string(body), 10);
  return negative ? BigInt(-value) : value;
}

}  // namespace

Rat ParseRat(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  const std::string_view whole = text;

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    BigInt num = ParseInteger(text.substr(0, slash), whole);
    std::string_view den_text = text.substr(slash + 1);
    if (!AllDigits(den_text)) {
      throw ParseError("not a rational number: \"" + std::string(whole) + "\"");
    }
    BigInt den(std::string(den_text), 10);
    if (den == 0) {
      throw ParseError("zero denominator in \"" + std::string(whole) + "\"");
    }
    Rat r(num, den);
    r.canonicalize();
    return r;
  }

  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = text.substr(0, dot);
    std::string_view frac_part = text.substr(dot + 1);
    bool negative = false;
    if (!int_part.empty() && (int_part.front() == '+' || int_part.front() == '-')) {
      negative = int_part.front() == '-';
      int_part.remove_prefix(1);
    }
    if ((int_part.empty() && frac_part.empty()) ||
        (!int_part.empty() && !AllDigits(int_part)) ||
        (!frac_part.empty() && !AllDigits(frac_part))) {
      throw ParseError("not a rational number: \"" + std::string(whole) + "\"");
    }
    std::string digits = std::string(int_part) + std::string(frac_part);
    BigInt num(digits.empty() ? std::string("0") : digits, 10);
    BigInt den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_part.size());
    Rat r(negative ? BigInt(-num) : num, den);
    r.canonicalize();
    return r;
  }

  return Rat(ParseInteger(text, whole));
}

std::string FormatRat(const Rat& value) { return value.get_str(10); }

bool IsZero(const QVector& v) {
  for (const Rat& x : v) {
    if (x != 0) return false;
  }
  return true;
}

std::vector<BigInt> PrimitiveIntegerVector(const QVector& v) {
  BigInt lcm = 1;
  for (const Rat& x : v) {
    if (x != 0) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
  }
  std::vector<BigInt> out(v.size());
  BigInt g = 0;
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    out[i] = lcm / v[i].get_den() * v[i].get_num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out[i].get_mpz_t());
  }
  if (g > 1) {
    for (BigInt& x : out) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  }
  return out;
}

}  // namespace sarr
