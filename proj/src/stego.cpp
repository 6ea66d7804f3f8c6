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

#include "rdh/stego.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <string>

#include "rdh/bitio.hpp"
#include "rdh/error.hpp"
#include "rdh/metrics.hpp"

namespace rdh {
namespace {

constexpr std::size_t kHeaderSlots = SideHeader::kBits;

std::span<std::uint8_t> region_b(std::span<std::uint8_t> carrier, std::size_t a_bits) {
  return carrier.subspan(kHeaderSlots + a_bits);
}

void encrypt_image(RgbImage& img, const BlowfishKey& key, std::uint64_t nonce) {
  bf_ctr_transform_inplace(bf_key_schedule(key), nonce, img.samples());
}

}  // namespace

std::optional<std::size_t> max_region_a_bits(std::span<const std::uint8_t> carrier) {
  // Region B starts at s = 64 + L; feasible iff maxcount(carrier[s..]) >= s.
  // maxcount(s) - s strictly decreases in s, so scan s downward and stop at
  // the first feasible start.
  const std::size_t n = carrier.size();
  if (n < kHeaderSlots) return std::nullopt;
  std::array<std::size_t, 256> hist{};
  std::size_t best = 0;
  for (std::size_t s = n; s-- > kHeaderSlots;) {
    best = std::max(best, ++hist[carrier[s]]);
    if (best >= s) return s - kHeaderSlots;
  }
  return std::nullopt;
}

HsSideInfo reserve_room_carrier(std::span<std::uint8_t> carrier, std::size_t region_a_bits) {
  const std::size_t n = carrier.size();
  if (n < kHeaderSlots || region_a_bits > n - kHeaderSlots) {
    throw Error(Errc::CoverTooSmall, "region A of " + std::to_string(region_a_bits) +
                                         " bits plus 64 header slots exceeds " +
                                         std::to_string(n) + " carrier samples");
  }
  if (region_a_bits > 0xFFFFFFFFu) throw Error(Errc::CoverTooSmall, "region A too large");
  auto host = region_b(carrier, region_a_bits);
  const std::size_t backup_bits = kHeaderSlots + region_a_bits;
  if (host.empty()) {
    throw Error(Errc::CapacityExceeded, "no region B samples; need " +
                                            std::to_string(backup_bits) + " bits");
  }
  const HsPlan plan = plan_hs(host);
  if (plan.capacity < backup_bits) {
    throw Error(Errc::CapacityExceeded, "region B peak holds " + std::to_string(plan.capacity) +
                                            " bits, backup needs " + std::to_string(backup_bits));
  }

  const Bits backup = lsb_read(carrier, 0, backup_bits);
  hs_embed_inplace(host, backup, plan.peak, plan.zero);

  const SideHeader header{plan.peak, plan.zero, static_cast<std::uint32_t>(region_a_bits)};
  const auto encoded = header.encode();
  lsb_replace_inplace(carrier, 0, unpack_bits(encoded));
  return {plan.peak, plan.zero, static_cast<std::uint32_t>(backup_bits)};
}

SideHeader restore_room_carrier(std::span<std::uint8_t> carrier) {
  if (carrier.size() < kHeaderSlots) throw Error(Errc::HeaderChecksum, "carrier too small");
  const auto header = SideHeader::decode(pack_bits(lsb_read(carrier, 0, kHeaderSlots)));
  if (header.region_a_bits > carrier.size() - kHeaderSlots) {
    throw Error(Errc::HeaderChecksum, "side header region A length out of range");
  }
  const HsSideInfo side{header.peak, header.zero,
                        static_cast<std::uint32_t>(kHeaderSlots + header.region_a_bits)};
  const Bits backup = hs_extract_inplace(region_b(carrier, header.region_a_bits), side);
  lsb_replace_inplace(carrier, 0, backup);
  return header;
}

void write_frame_to_carrier(std::span<std::uint8_t> carrier, const PayloadFrame& frame) {
  lsb_replace_inplace(carrier, kHeaderSlots, unpack_bits(frame.serialize()));
}

PayloadFrame read_frame_from_carrier(std::span<const std::uint8_t> carrier) {
  const std::size_t slots = carrier.size() > kHeaderSlots ? carrier.size() - kHeaderSlots : 0;
  const std::size_t prefix_bits = std::min(slots, 8 * PayloadFrame::kPrefixBytes);
  const auto prefix = pack_bits(lsb_read(carrier, kHeaderSlots, prefix_bits - prefix_bits % 8));
  const std::size_t size = frame_size_from_prefix(prefix);
  if (size > slots / 8) {
    throw Error(Errc::FrameTruncated, "frame of " + std::to_string(size) +
                                          " bytes exceeds carrier capacity");
  }
  return parse_frame(pack_bits(lsb_read(carrier, kHeaderSlots, 8 * size)));
}

ReservedImage reserve_room(const RgbImage& img, std::size_t frame_bits) {
  GrayPlane red = red_plane(img);
  const HsSideInfo side = reserve_room_carrier(red.samples(), frame_bits);
  return {set_red_plane(img, red), side};
}

std::optional<std::size_t> image_frame_capacity(const RgbImage& img) {
  return max_region_a_bits(red_plane(img).samples());
}

HideResult hide(const RgbImage& img, std::span<const std::uint8_t> secret, const StegoKeys& keys,
                const StegoOptions& opts) {
  const AesBlock iv = opts.iv ? *opts.iv : random_iv();
  const std::size_t unbounded = frame_bits_for(0xFFFFFFFFu);
  const auto frames = build_frames(secret, keys.data_key, iv, std::span(&unbounded, 1));
  const PayloadFrame& frame = frames.front();

  GrayPlane red = red_plane(img);
  reserve_room_carrier(red.samples(), frame.bit_size());
  RgbImage reserved = set_red_plane(img, red);

  GrayPlane plain_red = red;
  write_frame_to_carrier(plain_red.samples(), frame);
  RgbImage plain_marked = set_red_plane(img, plain_red);

  RgbImage marked = reserved;
  if (!opts.skip_image_encryption) encrypt_image(marked, keys.image_key, keys.nonce);
  GrayPlane marked_red = red_plane(marked);
  write_frame_to_carrier(marked_red.samples(), frame);
  marked = set_red_plane(marked, marked_red);

  const double quality = psnr(img, plain_marked);
  return {std::move(marked), std::move(plain_marked), frame.bit_size(),
          image_frame_capacity(img).value_or(0), quality};
}

std::vector<std::uint8_t> extract_payload(const RgbImage& marked, const AesKey& data_key) {
  const PayloadFrame frame = read_frame_from_carrier(red_plane(marked).samples());
  return open_payload(reassemble(std::span(&frame, 1)), data_key);
}

RgbImage recover_original(const RgbImage& marked, const BlowfishKey& image_key,
                          std::uint64_t nonce, const StegoOptions& opts) {
  RgbImage img = marked;
  if (!opts.skip_image_encryption) encrypt_image(img, image_key, nonce);
  GrayPlane red = red_plane(img);
  restore_room_carrier(red.samples());
  return set_red_plane(img, red);
}

RevealResult reveal(const RgbImage& marked, const StegoKeys& keys, const StegoOptions& opts) {
  auto secret = extract_payload(marked, keys.data_key);
  return {std::move(secret), recover_original(marked, keys.image_key, keys.nonce, opts)};
}

AesBlock random_iv() {
  std::random_device rd;
  AesBlock iv;
  for (auto& b : iv) b = static_cast<std::uint8_t>(rd());
  return iv;
}

}  // namespace rdh
