// Copyright 2026 The rsc Authors
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

#include <iosfwd>
#include <string>
#include <vector>

namespace rsc::cli {

/// Exit codes of the command-line tool.
enum Exit : int { kYes = 0, kNo = 1, kUsage = 2, kBudget = 3 };

/// Runs one command. The first line written to `out` is "RESULT: <token>".
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rsc::cli
