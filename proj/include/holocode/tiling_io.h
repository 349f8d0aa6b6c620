// Copyright 2026 The holocode Authors
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

#ifndef HOLOCODE_TILING_IO_H
#define HOLOCODE_TILING_IO_H

#include <filesystem>
#include <string>
#include <string_view>

#include "holocode/lego.h"

namespace holocode {

inline constexpr int kCodeFileVersion = 1;

/// JSON document holding the tiling and the derived code. Pauli rows are
/// text strings with qubit 0 first. Output is canonical, so
/// code_to_json(code_from_json(s)) == s for any s this function produced.
std::string code_to_json(const HolographicCode& code);

/// Parses a document written by code_to_json. When the "code" member is
/// absent the code is rebuilt from the tiling, which allows hand-edited
/// tilings. Throws std::invalid_argument on malformed input.
HolographicCode code_from_json(std::string_view text);

void save_code(const std::filesystem::path& path, const HolographicCode& code);
HolographicCode load_code(const std::filesystem::path& path);

/// Accepts either a path to a code file or a name like "happy_L2".
HolographicCode resolve_code(std::string_view file_or_name);

}  // namespace holocode

#endif  // HOLOCODE_TILING_IO_H
