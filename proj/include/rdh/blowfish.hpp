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

// 32 to 448 bit key. Construction throws Error(BadKeyLength) otherwise.
class BlowfishKey {
 public:
  static constexpr std::size_t kMinBytes = 4;
  static constexpr std::size_t kMaxBytes = 56;

  explicit BlowfishKey(std::span<const std::uint8_t> bytes);

  std::span<const std::uint8_t> bytes() const noexcept { return bytes_; }

  bool operator==(const BlowfishKey&) const = default;

 private:
  std::vector<std::uint8_t> bytes_;
};

using BfBlock = std::array<std::uint8_t, 8>;

// Left and right 32-bit halves of a block, big-endian.
struct BfHalves {
  std::uint32_t left;
  std::uint32_t right;
};

// P-array and S-boxes. Immutable once scheduled.
struct BlowfishState {
  std::array<std::uint32_t, 18> p;
  std::array<std::array<std::uint32_t, 256>, 4> s;

  // The unkeyed initial state: hex digits of pi.
  static const BlowfishState& initial();

  bool operator==(const BlowfishState&) const = default;
};

BlowfishState bf_key_schedule(const BlowfishKey& key);

std::uint32_t bf_f(const BlowfishState& state, std::uint32_t x);

BfHalves bf_encrypt_halves(const BlowfishState& state, BfHalves h);
BfHalves bf_decrypt_halves(const BlowfishState& state, BfHalves h);

BfBlock bf_encrypt_block(const BlowfishState& state, const BfBlock& block);
BfBlock bf_decrypt_block(const BlowfishState& state, const BfBlock& block);

// XOR with the keystream E(BE64(nonce + i)), i = block index, wrapping
// mod 2^64. Applying it twice is the identity.
std::vector<std::uint8_t> bf_ctr_transform(const BlowfishState& state, std::uint64_t nonce,
                                           std::span<const std::uint8_t> data);
void bf_ctr_transform_inplace(const BlowfishState& state, std::uint64_t nonce,
                              std::span<std::uint8_t> data);

}  // namespace rdh
