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

#include "rdh/bitio.hpp"

#include <stdexcept>
#include <string>

#include "rdh/error.hpp"

namespace rdh {

void BitWriter::write_bits(std::uint64_t value, unsigned n) {
  if (n > 64) {
    throw std::invalid_argument("write_bits: width " + std::to_string(n) + " exceeds 64");
  }
  for (unsigned i = n; i-- > 0;) {
    const unsigned bit = static_cast<unsigned>((value >> i) & 1u);
    const unsigned offset = static_cast<unsigned>(bit_count_ & 7u);
    if (offset == 0) buffer_.push_back(0);
    if (bit) buffer_.back() |= static_cast<std::uint8_t>(0x80u >> offset);
    ++bit_count_;
  }
}

void BitWriter::write_bytes(std::span<const std::uint8_t> bytes) {
  if ((bit_count_ & 7u) == 0) {
    buffer_.insert(buffer_.end(), bytes.begin(), bytes.end());
    bit_count_ += 8 * static_cast<std::uint64_t>(bytes.size());
    return;
  }
  for (std::uint8_t b : bytes) write_bits(b, 8);
}

BitReader::BitReader(std::span<const std::uint8_t> source, std::uint64_t bit_limit)
    : source_(source), limit_(bit_limit) {
  if (bit_limit > source.size() * 8) {
    throw std::invalid_argument("BitReader: bit limit beyond source");
  }
}

std::uint64_t BitReader::read_bits(unsigned n) {
  if (n > 64) {
    throw std::invalid_argument("read_bits: width " + std::to_string(n) + " exceeds 64");
  }
  if (n > remaining()) {
    throw Error(Errc::OutOfBits, "requested " + std::to_string(n) + " bits, " +
                                     std::to_string(remaining()) + " remain");
  }
  std::uint64_t value = 0;
  for (unsigned i = 0; i < n; ++i) {
    const std::uint8_t byte = source_[cursor_ >> 3];
    value = (value << 1) | ((byte >> (7 - (cursor_ & 7u))) & 1u);
    ++cursor_;
  }
  return value;
}

std::vector<std::uint8_t> pack_bits(std::span<const std::uint8_t> bits) {
  std::vector<std::uint8_t> out((bits.size() + 7) / 8, 0);
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] & 1u) out[i >> 3] |= static_cast<std::uint8_t>(0x80u >> (i & 7u));
  }
  return out;
}

Bits unpack_bits(std::span<const std::uint8_t> bytes) {
  Bits out;
  out.reserve(bytes.size() * 8);
  for (std::uint8_t b : bytes) {
    for (int i = 7; i >= 0; --i) out.push_back(static_cast<std::uint8_t>((b >> i) & 1u));
  }
  return out;
}

}  // namespace rdh
