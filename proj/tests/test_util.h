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

#ifndef NSRL_TESTS_TEST_UTIL_H_
#define NSRL_TESTS_TEST_UTIL_H_

#include <string>

#include "nsrl/catalog.h"
#include "nsrl/harness.h"
#include "nsrl/taxonomy.h"

namespace nsrl::testing {

inline const World& FixtureWorld() {
  static const World kWorld = World::Load(std::string(NSRL_TEST_DATA_DIR) + "/household.tsv",
                                          std::string(NSRL_TEST_DATA_DIR) + "/household.catalog");
  return kWorld;
}

inline const Taxonomy& Fixture() { return FixtureWorld().taxonomy; }

}  // namespace nsrl::testing

#endif  // NSRL_TESTS_TEST_UTIL_H_
