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

#ifndef DMW_TOOLS_CLI_HPP_
#define DMW_TOOLS_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace dmw::cli {

enum ExitCode : int {
  kHolds = 0,
  kFails = 1,
  kUsage = 2,
};

// Runs one dmw command. args excludes the program name. `terminal` selects
// the default output format: text when true, JSON otherwise.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err, bool terminal = false);

}  // namespace dmw::cli

#endif  // DMW_TOOLS_CLI_HPP_
