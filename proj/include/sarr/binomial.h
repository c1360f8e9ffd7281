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

#ifndef SARR_BINOMIAL_H_
#define SARR_BINOMIAL_H_

#include <cstdint>

namespace sarr {

// C(a, b) with C(a, 0) = 1 for every a (including a = -1) and C(a, b) = 0
// when b < 0 or a < b. Overflow is not checked; callers stay at desk scale.
inline int64_t Binomial(int64_t a, int64_t b) {
  if (b < 0) return 0;
  if (b == 0) return 1;
  if (a < b) return 0;
  if (b > a - b) b = a - b;
  int64_t result = 1;
  for (int64_t k = 1; k <= b; ++k) result = result * (a - b + k) / k;
  return result;
}

}  // namespace sarr

#endif  // SARR_BINOMIAL_H_
