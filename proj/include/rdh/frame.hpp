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
#include <vector>

#include "rdh/aes.hpp"

namespace rdh {

// Self-describing payload package written into carrier LSBs.
//
//   "RDH1" | version u8 | segment_index u16 | segment_count u16 |
//   ct_len u32 | iv[16] | ciphertext[ct_len] | crc32 u32
//
// All integers big-endian; the CRC covers every preceding byte.
struct PayloadFrame {
  static constexpr std::uint8_t kVersion = 0x01;
  static constexpr std::size_t kOverheadBytes = 4 + 1 + 2 + 2 + 4 + 16 + 4;
  static constexpr std::size_t kPrefixBytes = 13;  // up to and including ct_len

  std::uint16_t segment_index = 0;
  std::uint16_t segment_count = 0;
  AesBlock iv{};
  std::vector<std::uint8_t> ciphertext;

  std::size_t byte_size() const noexcept { return kOverheadBytes + ciphertext.size(); }
  std::size_t bit_size() const noexcept { return 8 * byte_size(); }

  std::vector<std::uint8_t> serialize() const;

  bool operator==(const PayloadFrame&) const = default;
};

// Frame bits needed to carry `ct_len` ciphertext bytes.
constexpr std::size_t frame_bits_for(std::size_t ct_len) {
  return 8 * (PayloadFrame::kOverheadBytes + ct_len);
}

// Throws Error(FrameBadMagic), Error(BadVersion), Error(FrameTruncated) or
// Error(BadCrc). Trailing bytes beyond the frame are ignored.
PayloadFrame parse_frame(std::span<const std::uint8_t> bytes);
PayloadFrame parse_frame_bits(std::span<const std::uint8_t> bits);

// Reads ct_len from a frame prefix (validating magic and version) and
// returns the whole frame's size in bytes.
std::size_t frame_size_from_prefix(std::span<const std::uint8_t> prefix);

// Greedy split: unit u takes the largest ct_len whose frame fits capacity[u]
// bits. Every unit gets a frame; units past the end of the ciphertext carry
// zero-length frames. segment_count is the number of nonempty segments.
// Throws Error(CapacityExceeded).
std::vector<PayloadFrame> split_ciphertext(std::span<const std::uint8_t> ciphertext,
                                           const AesBlock& iv,
                                           std::span<const std::size_t> capacities);

// Huffman-compress, AES-CBC encrypt, then split_ciphertext.
std::vector<PayloadFrame> build_frames(std::span<const std::uint8_t> secret, const AesKey& data_key,
                                       const AesBlock& iv, std::span<const std::size_t> capacities);

struct Reassembled {
  AesBlock iv;
  std::vector<std::uint8_t> ciphertext;
};

// Orders nonempty segments by index and concatenates them. Throws
// Error(MissingSegment) if any of 0..segment_count-1 is absent.
Reassembled reassemble(std::span<const PayloadFrame> frames);

// Inverse of build_frames' compression and encryption. A wrong key is
// reported as Error(BadPadding) whether it surfaces in the PKCS#7 padding or
// in the decrypted container's magic.
std::vector<std::uint8_t> open_payload(const Reassembled& r, const AesKey& data_key);

// Bookkeeping written into the first 64 carrier LSBs.
//   peak u8 | zero u8 | region_a_bits u32 BE | checksum u16 BE
// The checksum is the ones'-complement of the ones'-complement sum of the
// three preceding 16-bit big-endian words.
struct SideHeader {
  static constexpr std::size_t kBits = 64;

  std::uint8_t peak = 0;
  std::uint8_t zero = 0;
  std::uint32_t region_a_bits = 0;

  std::array<std::uint8_t, 8> encode() const;
  // Throws Error(HeaderChecksum).
  static SideHeader decode(std::span<const std::uint8_t> bytes);

  bool operator==(const SideHeader&) const = default;
};

std::uint16_t ones_complement_checksum(std::span<const std::uint8_t> bytes);

}  // namespace rdh
