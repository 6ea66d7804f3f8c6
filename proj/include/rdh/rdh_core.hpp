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

#include "rdh/bitio.hpp"
#include "rdh/imagefmt.hpp"

namespace rdh {

struct HsPlan {
  std::uint8_t peak;
  std::uint8_t zero;
  std::size_t capacity;  // occurrences of `peak`
};

// What the extractor needs to invert an embedding.
struct HsSideInfo {
  std::uint8_t peak;
  std::uint8_t zero;
  std::uint32_t payload_bits;
};

// Peak is the most frequent value (smallest on ties). Zero is the nearest
// empty bin above the peak, or failing that the nearest empty bin below it.
// Throws Error(NoZeroBin) when all 256 values occur, or on empty input.
HsPlan plan_hs(std::span<const std::uint8_t> samples);
HsPlan plan_hs(const GrayPlane& plane);

// Histogram-shift embedding. Values strictly between peak and zero move one
// step toward zero; the i-th occurrence of peak then moves one step toward
// zero when bits[i] is 1.
// Throws Error(ZeroBinNotEmpty) or Error(CapacityExceeded).
void hs_embed_inplace(std::span<std::uint8_t> samples, std::span<const std::uint8_t> bits,
                      std::uint8_t peak, std::uint8_t zero);
GrayPlane hs_embed(const GrayPlane& plane, std::span<const std::uint8_t> bits, std::uint8_t peak,
                   std::uint8_t zero);

// Inverse of hs_embed. Throws Error(PayloadOverrun) if fewer than
// side.payload_bits carrier samples are present.
Bits hs_extract_inplace(std::span<std::uint8_t> samples, const HsSideInfo& side);

struct HsExtraction {
  GrayPlane plane;
  Bits bits;
};
HsExtraction hs_extract(const GrayPlane& plane, const HsSideInfo& side);

// LSB substitution over samples[start, start + bits.size()).
// Throws Error(OutOfRange) when the range exceeds the plane.
void lsb_replace_inplace(std::span<std::uint8_t> samples, std::size_t start,
                         std::span<const std::uint8_t> bits);
GrayPlane lsb_replace(const GrayPlane& plane, std::size_t start,
                      std::span<const std::uint8_t> bits);
Bits lsb_read(std::span<const std::uint8_t> samples, std::size_t start, std::size_t n);
Bits lsb_read(const GrayPlane& plane, std::size_t start, std::size_t n);

}  // namespace rdh
