// Copyright 2026 The Simplex Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SIMPLEX_TOOLS_CLI_H_
#define SIMPLEX_TOOLS_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

#include "simplex/service.h"

namespace simplex::cli {

// Runs `simplex <subcommand> [flags]` in-process. `args` excludes the
// program name. Subcommands: simplify, evaluate, serve, train, build-lm.
// Returns the process exit code: 0 ok, 2 bad flags or configuration,
// 3 unreadable resources, 1 anything else.
int Run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err,
        const EnvLookup& env = SystemEnvironment());

}  // namespace simplex::cli

#endif  // SIMPLEX_TOOLS_CLI_H_
