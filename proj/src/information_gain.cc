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

#include "nsrl/information_gain.h"

#include <cmath>

#include "nsrl/error.h"

namespace nsrl {

double InformationGain(int p0, int n0, int p1, int n1, int total) {
  if (p0 < 1) throw ContractError("information gain needs p0 >= 1");
  if (n0 < 0 || p1 < 0 || n1 < 0 || total < 0)
    throw ContractError("information gain counts must be non-negative");
  if (p1 == 0) return kInvalidGain;
  const double before = std::log2(static_cast<double>(p0) / (p0 + n0));
  const double after = std::log2(static_cast<double>(p1) / (p1 + n1));
  return total * (after - before);
}

}  // namespace nsrl
