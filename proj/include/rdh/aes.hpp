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

using AesKey = std::array<std::uint8_t, 16>;
using AesBlock = std::array<std::uint8_t, 16>;

// AES-128 round keys. round_keys[0] is the cipher key itself.
struct AesKeySchedule {
  static constexpr int kRounds = 10;
  std::array<AesBlock, kRounds + 1> round_keys{};
};

AesKeySchedule expand_key(const AesKey& key);

// One cipher round on a column-major state: SubBytes, ShiftRows, MixColumns
// (skipped when `last`), AddRoundKey.
AesBlock aes_round(const AesBlock& state, const AesBlock& round_key, bool last);

AesBlock encrypt_block(const AesBlock& block, const AesKeySchedule& ks);
AesBlock decrypt_block(const AesBlock& block, const AesKeySchedule& ks);

// CBC with PKCS#7 padding. Output length is (len / 16 + 1) * 16.
std::vector<std::uint8_t> aes_cbc_encrypt(std::span<const std::uint8_t> data, const AesKey& key,
                                          const AesBlock& iv);

// Throws Error(BadLength) unless the input is a positive multiple of 16 and
// Error(BadPadding) when the recovered padding is malformed.
std::vector<std::uint8_t> aes_cbc_decrypt(std::span<const std::uint8_t> data, const AesKey& key,
                                          const AesBlock& iv);

namespace aes_detail {
void sub_bytes(AesBlock& state);
void shift_rows(AesBlock& state);
void mix_columns(AesBlock& state);
void add_round_key(AesBlock& state, const AesBlock& round_key);
std::uint8_t sbox(std::uint8_t b);
}  // namespace aes_detail

}  // namespace rdh
