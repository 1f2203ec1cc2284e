// Copyright 2026 The lefschetz-lab Authors
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

#ifndef LEFSCHETZ_CLI_HPP
#define LEFSCHETZ_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace lefschetz::cli {

// Exit status contract: 0 for verdict-true analyses and valid certificates,
// 1 for verdict-false results (witnesses included in the report),
// 2 for input or usage errors.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace lefschetz::cli

#endif  // LEFSCHETZ_CLI_HPP
