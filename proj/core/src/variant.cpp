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

#include "qdom/variant.hpp"

namespace qdom {

const char* to_string(Variant v) {
  switch (v) {
    case Variant::simple:
      return "simple";
    case Variant::connected:
      return "connected";
    case Variant::total:
      return "total";
    case Variant::kcolored:
      return "kcolored";
  }
  return "?";
}

std::optional<Variant> parse_variant(std::string_view s) {
  if (s == "simple") return Variant::simple;
  if (s == "connected") return Variant::connected;
  if (s == "total") return Variant::total;
  if (s == "kcolored") return Variant::kcolored;
  return std::nullopt;
}

}  // namespace qdom
