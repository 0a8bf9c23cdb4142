// Copyright 2026 The qdom Authors
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

#include <cstdint>
#include <optional>
#include <string_view>

namespace qdom {

// simple:    every empty square is covered
// connected: simple, and the visibility graph is connected
// total:     simple, and every queen sees another queen
// kcolored:  simple, and the queens split into at most k connected classes
enum class Variant : std::uint8_t { simple, connected, total, kcolored };

const char* to_string(Variant v);
std::optional<Variant> parse_variant(std::string_view s);

}  // namespace qdom
