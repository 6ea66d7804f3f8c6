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

namespace rdh {

// CRC-32 (IEEE 802.3): reflected polynomial 0xEDB88320, init and final XOR
// 0xFFFFFFFF. crc32("123456789") == 0xCBF43926.
std::uint32_t crc32(std::span<const std::uint8_t> data);

// Continue a running CRC. Pass the previous return value (0 to start).
std::uint32_t crc32_update(std::uint32_t crc, std::span<const std::uint8_t> data);

}  // namespace rdh
