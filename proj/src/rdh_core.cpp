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

#include "rdh/rdh_core.hpp"

#include <array>
#include <string>

#include "rdh/error.hpp"

namespace rdh {
namespace {

std::array<std::size_t, 256> histogram(std::span<const std::uint8_t> samples) {
  std::array<std::size_t, 256> h{};
  for (std::uint8_t v : samples) ++h[v];
  return h;
}

void check_range(std::size_t size, std::size_t start, std::size_t n) {
  if (start > size || n > size - start) {
    throw Error(Errc::OutOfRange, "range [" + std::to_string(start) + ", " +
                                      std::to_string(start + n) + ") exceeds " +
                                      std::to_string(size) + " samples");
  }
}

}  // namespace

HsPlan plan_hs(std::span<const std::uint8_t> samples) {
  if (samples.empty()) throw Error(Errc::NoZeroBin, "empty plane");
  const auto h = histogram(samples);
  int peak = 0;
  for (int v = 1; v < 256; ++v) {
    if (h[v] > h[peak]) peak = v;
  }
  for (int v = peak + 1; v < 256; ++v) {
    if (h[v] == 0) return {static_cast<std::uint8_t>(peak), static_cast<std::uint8_t>(v), h[peak]};
  }
  for (int v = peak - 1; v >= 0; --v) {
    if (h[v] == 0) return {static_cast<std::uint8_t>(peak), static_cast<std::uint8_t>(v), h[peak]};
  }
  throw Error(Errc::NoZeroBin, "all 256 sample values occur");
}

HsPlan plan_hs(const GrayPlane& plane) { return plan_hs(plane.samples()); }

void hs_embed_inplace(std::span<std::uint8_t> samples, std::span<const std::uint8_t> bits,
                      std::uint8_t peak, std::uint8_t zero) {
  const auto h = histogram(samples);
  if (peak == zero || h[zero] != 0) {
    throw Error(Errc::ZeroBinNotEmpty, "zero bin " + std::to_string(zero) + " holds " +
                                           std::to_string(h[zero]) + " samples");
  }
  if (bits.size() > h[peak]) {
    throw Error(Errc::CapacityExceeded, "payload of " + std::to_string(bits.size()) +
                                            " bits exceeds peak count " + std::to_string(h[peak]));
  }
  const bool up = peak < zero;
  const int lo = up ? peak : zero;
  const int hi = up ? zero : peak;
  const int step = up ? 1 : -1;
  std::size_t next = 0;
  for (auto& v : samples) {
    if (v > lo && v < hi) {
      v = static_cast<std::uint8_t>(v + step);
    } else if (v == peak && next < bits.size()) {
      if (bits[next++] & 1u) v = static_cast<std::uint8_t>(v + step);
    }
  }
}

GrayPlane hs_embed(const GrayPlane& plane, std::span<const std::uint8_t> bits, std::uint8_t peak,
                   std::uint8_t zero) {
  GrayPlane out = plane;
  hs_embed_inplace(out.samples(), bits, peak, zero);
  return out;
}

Bits hs_extract_inplace(std::span<std::uint8_t> samples, const HsSideInfo& side) {
  const bool up = side.peak < side.zero;
  const int step = up ? 1 : -1;
  const auto one = static_cast<std::uint8_t>(side.peak + step);

  Bits bits;
  bits.reserve(side.payload_bits);
  for (std::uint8_t v : samples) {
    if (bits.size() == side.payload_bits) break;
    if (v == side.peak) {
      bits.push_back(0);
    } else if (v == one) {
      bits.push_back(1);
    }
  }
  if (bits.size() < side.payload_bits) {
    throw Error(Errc::PayloadOverrun, "found " + std::to_string(bits.size()) + " of " +
                                          std::to_string(side.payload_bits) + " payload bits");
  }

  // Undo the shift: [peak+1, zero] moves down (mirrored: [zero, peak-1] up).
  const int lo = up ? side.peak + 1 : side.zero;
  const int hi = up ? side.zero : side.peak - 1;
  for (auto& v : samples) {
    if (v >= lo && v <= hi) v = static_cast<std::uint8_t>(v - step);
  }
  return bits;
}

HsExtraction hs_extract(const GrayPlane& plane, const HsSideInfo& side) {
  HsExtraction out{plane, {}};
  out.bits = hs_extract_inplace(out.plane.samples(), side);
  return out;
}

void lsb_replace_inplace(std::span<std::uint8_t> samples, std::size_t start,
                         std::span<const std::uint8_t> bits) {
  check_range(samples.size(), start, bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    auto& v = samples[start + i];
    v = static_cast<std::uint8_t>((v & 0xFEu) | (bits[i] & 1u));
  }
}

GrayPlane lsb_replace(const GrayPlane& plane, std::size_t start,
                      std::span<const std::uint8_t> bits) {
  GrayPlane out = plane;
  lsb_replace_inplace(out.samples(), start, bits);
  return out;
}

Bits lsb_read(std::span<const std::uint8_t> samples, std::size_t start, std::size_t n) {
  check_range(samples.size(), start, n);
  Bits out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = samples[start + i] & 1u;
  return out;
}

Bits lsb_read(const GrayPlane& plane, std::size_t start, std::size_t n) {
  return lsb_read(plane.samples(), start, n);
}

}  // namespace rdh
