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
#include <optional>
#include <span>
#include <vector>

#include "rdh/aes.hpp"
#include "rdh/blowfish.hpp"
#include "rdh/frame.hpp"
#include "rdh/imagefmt.hpp"
#include "rdh/rdh_core.hpp"

namespace rdh {

struct StegoKeys {
  AesKey data_key;
  BlowfishKey image_key;
  std::uint64_t nonce = 0;
};

struct StegoOptions {
  // Random from std::random_device when unset.
  std::optional<AesBlock> iv;
  // Debug mode: embed in the plain domain, no Blowfish layer.
  bool skip_image_encryption = false;
};

// ---------------------------------------------------------------------------
// Carrier layer. A carrier is one 8-bit sample per slot (the red plane of an
// image, the Y plane of a video frame), laid out as
//
//   [0, 64)            side header slots
//   [64, 64 + L)       region A: payload frame bits
//   [64 + L, N)        region B: histogram-shift host for the backup bits
//
// The backup is the 64 original header-slot LSBs followed by the L original
// region-A LSBs.
// ---------------------------------------------------------------------------

// Largest L for which region B's peak count is at least 64 + L, or nullopt
// when even L = 0 does not fit. Zero-bin availability is not checked.
std::optional<std::size_t> max_region_a_bits(std::span<const std::uint8_t> carrier);

// Reserves room for `region_a_bits` in place. Throws Error(CoverTooSmall),
// Error(NoZeroBin) or Error(CapacityExceeded).
HsSideInfo reserve_room_carrier(std::span<std::uint8_t> carrier, std::size_t region_a_bits);

// Inverse of reserve_room_carrier, valid once every bit outside region A is
// back to its post-reservation value. Throws Error(HeaderChecksum).
SideHeader restore_room_carrier(std::span<std::uint8_t> carrier);

// Overwrites region A LSBs with a serialized frame.
void write_frame_to_carrier(std::span<std::uint8_t> carrier, const PayloadFrame& frame);

// Parses the frame held in region A LSBs. Needs no key.
PayloadFrame read_frame_from_carrier(std::span<const std::uint8_t> carrier);

// ---------------------------------------------------------------------------
// Image pipeline. The carrier is the red plane.
// ---------------------------------------------------------------------------

struct ReservedImage {
  RgbImage image;
  HsSideInfo side;
};
ReservedImage reserve_room(const RgbImage& img, std::size_t frame_bits);

// Largest payload frame, in bits, the cover can take.
std::optional<std::size_t> image_frame_capacity(const RgbImage& img);

struct HideResult {
  RgbImage marked;         // encrypted domain unless skip_image_encryption
  RgbImage plain_marked;   // reserved + frame bits, never encrypted
  std::size_t frame_bits;
  std::size_t region_a_capacity;  // 0 when the cover cannot host any frame
  double psnr_plain;       // original vs plain_marked, +inf when identical
};

HideResult hide(const RgbImage& img, std::span<const std::uint8_t> secret, const StegoKeys& keys,
                const StegoOptions& opts = {});

struct RevealResult {
  std::vector<std::uint8_t> secret;
  RgbImage original;
};

RevealResult reveal(const RgbImage& marked, const StegoKeys& keys, const StegoOptions& opts = {});

// Payload half of reveal; needs only the data key.
std::vector<std::uint8_t> extract_payload(const RgbImage& marked, const AesKey& data_key);

// Cover half of reveal; needs only the image key and nonce.
RgbImage recover_original(const RgbImage& marked, const BlowfishKey& image_key,
                          std::uint64_t nonce, const StegoOptions& opts = {});

AesBlock random_iv();

}  // namespace rdh
