// Copyright 2026 The actcause Authors
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

// Built-in fixture checks behind the `selftest` command.
#pragma once

#include <string>
#include <vector>

namespace actcause {

struct SelftestRow {
  std::string name;
  bool pass = false;
  std::string detail;  // observed value when the check fails
};

std::vector<SelftestRow> RunSelftest();

}  // namespace actcause
