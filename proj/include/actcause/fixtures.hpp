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

// Built-in fixtures: the blocks-world theory with its goals, narratives and
// structural equation models.
#pragma once

#include <string_view>

#include "actcause/parser.hpp"

namespace actcause {

// Source text of data/blocks_world.act, embedded at build time.
std::string_view BlocksWorldSource();

// Parsed once, on first use.
const Document& BlocksWorld();

}  // namespace actcause
