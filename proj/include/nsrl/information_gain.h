// Copyright 2026 The nsrl Authors.
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

#ifndef NSRL_INFORMATION_GAIN_H_
#define NSRL_INFORMATION_GAIN_H_

#include <limits>

namespace nsrl {

// Returned when the refined clause covers no positive example.
inline constexpr double kInvalidGain = -std::numeric_limits<double>::infinity();

// FOIL-style gain of refining rule R (covering p0 positives, n0 negatives)
// with one literal into R+h (covering p1, n1); `total` is the number of R's
// positives still covered by R+h:
//
//   total * (log2(p1 / (p1 + n1)) - log2(p0 / (p0 + n0)))
//
// Throws ContractError if p0 < 1 or any count is negative.
double InformationGain(int p0, int n0, int p1, int n1, int total);

}  // namespace nsrl

#endif  // NSRL_INFORMATION_GAIN_H_
