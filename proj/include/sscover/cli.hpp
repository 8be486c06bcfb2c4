// Copyright 2026 The sscover Authors
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

#ifndef SSCOVER_CLI_HPP_
#define SSCOVER_CLI_HPP_

#include <iosfwd>

namespace sscover {

enum ExitCode : int {
  kExitOk = 0,
  kExitInvalidInput = 1,
  kExitTooLarge = 2,
  // A bound or the price identity failed: the regression signal.
  kExitPropertyViolation = 3,
};

// Entry point of the sscover tool. Writes results to `out` and diagnostics
// to `err`.
int cli_dispatch(int argc, const char* const* argv, std::ostream& out,
                 std::ostream& err);

}  // namespace sscover

#endif  // SSCOVER_CLI_HPP_
