/* Copyright 2026 The QA2D Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef QA2D_TOOLS_CLI_H_
#define QA2D_TOOLS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace qa2d::cli {

// Exit statuses.
constexpr int kOk = 0;
constexpr int kInternalError = 1;
constexpr int kInputError = 2;

// Runs the command line `args` (args[0] is the program name). Regular
// output goes to `out`, diagnostics and skip reports to `err`.
int Run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err);

}  // namespace qa2d::cli

#endif  // QA2D_TOOLS_CLI_H_
