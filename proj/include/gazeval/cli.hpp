// Copyright 2026 The GazeVal Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GAZEVAL_CLI_HPP_
#define GAZEVAL_CLI_HPP_

namespace gazeval {

// Batch CLI entry point. Subcommands: fixations, saliency, metrics, ioc,
// report, simulate. Exit codes: 0 success, 2 parse/data error, 3 config
// error, 4 I/O error. Every failure prints one diagnostic line to stderr.
int run(int argc, const char* const* argv);

}  // namespace gazeval

#endif  // GAZEVAL_CLI_HPP_
