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

#ifndef NSRL_TEXT_UTIL_H_
#define NSRL_TEXT_UTIL_H_

#include <string>
#include <string_view>
#include <vector>

namespace nsrl {

std::string_view Trim(std::string_view s);
std::vector<std::string_view> SplitLines(std::string_view s);
// Splits on `sep`, trimming each piece. Empty input gives {}.
std::vector<std::string> Split(std::string_view s, char sep);
std::vector<std::string> SplitWords(std::string_view s);
std::string Join(const std::vector<std::string>& parts, std::string_view sep);
bool StartsWith(std::string_view s, std::string_view prefix);

}  // namespace nsrl

#endif  // NSRL_TEXT_UTIL_H_
