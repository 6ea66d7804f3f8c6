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

#include "rdh/frame.hpp"

#include <algorithm>
#include <string>

#include "rdh/bitio.hpp"
#include "rdh/crc32.hpp"
#include "rdh/error.hpp"
#include "rdh/huffman.hpp"

namespace rdh {
namespace {

constexpr std::uint8_t kMagic[4] = {'R', 'D', 'H', '1'};

void put_be(std::vector<std::uint8_t>& out, std::uint64_t v, int bytes) {
  for (int i = bytes - 1; i >= 0; --i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

std::uint64_t get_be(std::span<const std::uint8_t> in, std::size_t off, int bytes) {
  std::uint64_t v = 0;
  for (int i = 0; i < bytes; ++i) v = (v << 8) | in[off + i];
  return v;
}

}  // namespace

std::vector<std::uint8_t> PayloadFrame::serialize() const {
  std::vector<std::uint8_t> out(kMagic, kMagic + 4);
  out.reserve(byte_size());
  out.push_back(kVersion);
  put_be(out, segment_index, 2);
  put_be(out, segment_count, 2);
  put_be(out, ciphertext.size(), 4);
  out.insert(out.end(), iv.begin(), iv.end());
  out.insert(out.end(), ciphertext.begin(), ciphertext.end());
  put_be(out, crc32(out), 4);
  return out;
}

std::size_t frame_size_from_prefix(std::span<const std::uint8_t> prefix) {
  if (prefix.size() < 4 || !std::equal(kMagic, kMagic + 4, prefix.begin())) {
    throw Error(Errc::FrameBadMagic, "no RDH1 payload frame");
  }
  if (prefix.size() < PayloadFrame::kPrefixBytes) {
    throw Error(Errc::FrameTruncated, "frame header cut short");
  }
  if (prefix[4] != PayloadFrame::kVersion) {
    throw Error(Errc::BadVersion, "frame version " + std::to_string(prefix[4]));
  }
  return PayloadFrame::kOverheadBytes + get_be(prefix, 9, 4);
}

PayloadFrame parse_frame(std::span<const std::uint8_t> bytes) {
  const std::size_t size = frame_size_from_prefix(bytes);
  if (bytes.size() < size) {
    throw Error(Errc::FrameTruncated, "frame needs " + std::to_string(size) + " bytes, " +
                                          std::to_string(bytes.size()) + " available");
  }
  const std::uint32_t stored = static_cast<std::uint32_t>(get_be(bytes, size - 4, 4));
  if (crc32(bytes.first(size - 4)) != stored) throw Error(Errc::BadCrc, "frame CRC mismatch");

  PayloadFrame f;
  f.segment_index = static_cast<std::uint16_t>(get_be(bytes, 5, 2));
  f.segment_count = static_cast<std::uint16_t>(get_be(bytes, 7, 2));
  std::copy_n(bytes.begin() + 13, 16, f.iv.begin());
  f.ciphertext.assign(bytes.begin() + 29, bytes.begin() + static_cast<std::ptrdiff_t>(size - 4));
  return f;
}

PayloadFrame parse_frame_bits(std::span<const std::uint8_t> bits) {
  return parse_frame(pack_bits(bits.first(bits.size() - bits.size() % 8)));
}

std::vector<PayloadFrame> split_ciphertext(std::span<const std::uint8_t> ciphertext,
                                           const AesBlock& iv,
                                           std::span<const std::size_t> capacities) {
  if (capacities.size() > 0xFFFF) throw Error(Errc::CapacityExceeded, "more than 65535 units");
  std::vector<PayloadFrame> frames;
  std::size_t offset = 0;
  std::size_t room = 0;
  for (std::size_t u = 0; u < capacities.size(); ++u) {
    if (capacities[u] < frame_bits_for(0)) {
      throw Error(Errc::CapacityExceeded,
                  "unit " + std::to_string(u) + " holds " + std::to_string(capacities[u]) +
                      " bits, a frame needs at least " + std::to_string(frame_bits_for(0)));
    }
    const std::size_t fit = capacities[u] / 8 - PayloadFrame::kOverheadBytes;
    room += fit;
    const std::size_t take = std::min(fit, ciphertext.size() - offset);
    PayloadFrame f;
    f.segment_index = static_cast<std::uint16_t>(u);
    f.iv = iv;
    f.ciphertext.assign(ciphertext.begin() + static_cast<std::ptrdiff_t>(offset),
                        ciphertext.begin() + static_cast<std::ptrdiff_t>(offset + take));
    offset += take;
    frames.push_back(std::move(f));
  }
  if (offset < ciphertext.size() || capacities.empty()) {
    throw Error(Errc::CapacityExceeded,
                "needed " + std::to_string(frame_bits_for(ciphertext.size())) +
                    " bits for " + std::to_string(ciphertext.size()) +
                    " ciphertext bytes, available " + std::to_string(8 * room) +
                    " ciphertext bits over " + std::to_string(capacities.size()) + " units");
  }
  const auto count = static_cast<std::uint16_t>(std::count_if(
      frames.begin(), frames.end(), [](const PayloadFrame& f) { return !f.ciphertext.empty(); }));
  for (auto& f : frames) f.segment_count = count;
  return frames;
}

std::vector<PayloadFrame> build_frames(std::span<const std::uint8_t> secret, const AesKey& data_key,
                                       const AesBlock& iv, std::span<const std::size_t> capacities) {
  const auto container = huffman_compress(secret).serialize();
  const auto ciphertext = aes_cbc_encrypt(container, data_key, iv);
  return split_ciphertext(ciphertext, iv, capacities);
}

Reassembled reassemble(std::span<const PayloadFrame> frames) {
  std::vector<const PayloadFrame*> parts;
  for (const auto& f : frames) {
    if (!f.ciphertext.empty()) parts.push_back(&f);
  }
  if (parts.empty()) throw Error(Errc::MissingSegment, "no nonempty segments");
  std::sort(parts.begin(), parts.end(), [](const PayloadFrame* a, const PayloadFrame* b) {
    return a->segment_index < b->segment_index;
  });
  const std::uint16_t count = parts.front()->segment_count;
  if (parts.size() != count) {
    throw Error(Errc::MissingSegment, "found " + std::to_string(parts.size()) + " of " +
                                          std::to_string(count) + " segments");
  }
  Reassembled r{parts.front()->iv, {}};
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0 && parts[i]->segment_index == parts[i - 1]->segment_index) {
      throw Error(Errc::MissingSegment, "duplicate segment " + std::to_string(parts[i]->segment_index));
    }
    r.ciphertext.insert(r.ciphertext.end(), parts[i]->ciphertext.begin(), parts[i]->ciphertext.end());
  }
  return r;
}

std::vector<std::uint8_t> open_payload(const Reassembled& r, const AesKey& data_key) {
  const auto container = aes_cbc_decrypt(r.ciphertext, data_key, r.iv);
  HuffContainer c;
  try {
    c = HuffContainer::parse(container);
  } catch (const Error& e) {
    if (e.code() == Errc::HuffBadMagic) {
      throw Error(Errc::BadPadding, "decrypted payload is not a HUF1 container");
    }
    throw;
  }
  return huffman_decompress(c);
}

std::uint16_t ones_complement_checksum(std::span<const std::uint8_t> bytes) {
  std::uint32_t sum = 0;
  for (std::size_t i = 0; i < bytes.size(); i += 2) {
    const std::uint32_t hi = bytes[i];
    const std::uint32_t lo = i + 1 < bytes.size() ? bytes[i + 1] : 0;
    sum += (hi << 8) | lo;
    sum = (sum & 0xFFFFu) + (sum >> 16);
  }
  return static_cast<std::uint16_t>(~sum & 0xFFFFu);
}

std::array<std::uint8_t, 8> SideHeader::encode() const {
  std::array<std::uint8_t, 8> b{peak,
                                zero,
                                static_cast<std::uint8_t>(region_a_bits >> 24),
                                static_cast<std::uint8_t>(region_a_bits >> 16),
                                static_cast<std::uint8_t>(region_a_bits >> 8),
                                static_cast<std::uint8_t>(region_a_bits),
                                0,
                                0};
  const std::uint16_t sum = ones_complement_checksum(std::span(b).first(6));
  b[6] = static_cast<std::uint8_t>(sum >> 8);
  b[7] = static_cast<std::uint8_t>(sum);
  return b;
}

SideHeader SideHeader::decode(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 8) throw Error(Errc::HeaderChecksum, "side header shorter than 8 bytes");
  const std::uint16_t stored = static_cast<std::uint16_t>((bytes[6] << 8) | bytes[7]);
  if (ones_complement_checksum(bytes.first(6)) != stored) {
    throw Error(Errc::HeaderChecksum, "side header checksum mismatch (wrong image key?)");
  }
  SideHeader h;
  h.peak = bytes[0];
  h.zero = bytes[1];
  h.region_a_bits = static_cast<std::uint32_t>(get_be(bytes, 2, 4));
  if (h.peak == h.zero) throw Error(Errc::HeaderChecksum, "side header has peak == zero");
  return h;
}

}  // namespace rdh
