// Copyright 2026 The rdhcrypt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rdh {

// Lowercase hex encoding.
std::string to_hex(std::span<const std::uint8_t> bytes);

// Accepts upper or lower case; throws Error(BadKeyEncoding) on odd length or
// a non-hex character.
std::vector<std::uint8_t> from_hex(std::string_view text);

// Parses exactly `digits` hex digits into an integer (digits <= 16).
std::uint64_t parse_hex_u64(std::string_view text, std::size_t digits);

}  // namespace rdh
