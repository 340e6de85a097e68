// Copyright 2026 The mixlat Authors
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

#ifndef MIXLAT_CLI_HPP
#define MIXLAT_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace mixlat {

/// Runs one command line (without the program name). Returns the exit code:
/// 0 all holds, 1 some verdict fails, 2 only unknowns, 3 input error.
int execute(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mixlat

#endif  // MIXLAT_CLI_HPP
