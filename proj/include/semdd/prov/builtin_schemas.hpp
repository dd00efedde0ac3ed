// Copyright 2026 The semdd Authors.
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

// Object models shipped with the library: rodent-imaging, human-assessment
// and heart-rate.

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "semdd/prov/schema.hpp"

namespace semdd::prov {

std::vector<std::string> builtin_schema_names();
// JSON text of a built-in schema; empty if the name is unknown.
std::string_view builtin_schema_text(std::string_view name);
std::optional<ObjectModelSchema> builtin_schema(std::string_view name);
std::vector<ObjectModelSchema> builtin_schemas();

}  // namespace semdd::prov
