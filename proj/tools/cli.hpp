// Copyright 2026 The Multisurface Gripper Authors
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

namespace gripper::cli {

/// Runs one command line (argv[0] included). Results go to `out` or to the
/// --out file; a single diagnostic line goes to `err` on failure.
int dispatch(const std::vector<std::string>& argv, std::ostream& out,
             std::ostream& err);

}  // namespace gripper::cli
