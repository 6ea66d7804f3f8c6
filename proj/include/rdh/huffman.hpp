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

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace rdh {

using FrequencyTable = std::array<std::uint64_t, 256>;

// Canonical prefix code. lengths[s] == 0 means symbol s is absent.
struct CodeTable {
  std::array<std::uint8_t, 256> lengths{};
  std::array<std::uint64_t, 256> codes{};

  std::size_t symbol_count() const noexcept;
};

// Serialized form:
//   "HUF1" | original_len u32 BE | symbol_count u16 BE |
//   symbol_count x (symbol u8, length u8) | bitstream (zero padded)
// Table entries are ordered by (length, symbol).
struct HuffContainer {
  std::uint32_t original_len = 0;
  std::vector<std::pair<std::uint8_t, std::uint8_t>> table;  // (symbol, length)
  std::vector<std::uint8_t> bitstream;

  std::vector<std::uint8_t> serialize() const;
  static HuffContainer parse(std::span<const std::uint8_t> bytes);

  bool operator==(const HuffContainer&) const = default;
};

FrequencyTable build_frequency_table(std::span<const std::uint8_t> data);

// Huffman code lengths from repeated two-smallest merges, where nodes order
// by (weight, smallest symbol contained). A lone symbol gets length 1.
// Throws Error(EmptyInput) when every count is zero.
CodeTable build_canonical_codes(const FrequencyTable& freq);

// Assigns canonical codewords in (length, symbol) order. Throws
// Error(CorruptTable) if the lengths violate the Kraft inequality.
CodeTable assign_canonical_codes(const std::array<std::uint8_t, 256>& lengths);

HuffContainer huffman_compress(std::span<const std::uint8_t> data);
std::vector<std::uint8_t> huffman_decompress(const HuffContainer& container);

}  // namespace rdh
