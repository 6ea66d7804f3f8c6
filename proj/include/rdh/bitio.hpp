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

namespace rdh {

// One bit per element, each 0 or 1.
using Bits = std::vector<std::uint8_t>;

// MSB-first bit packer. The unwritten low bits of the last byte stay zero.
class BitWriter {
 public:
  BitWriter() = default;

  // Appends the low `n` bits of `value`, most significant first.
  // Throws std::invalid_argument when n > 64.
  void write_bits(std::uint64_t value, unsigned n);
  void write_bit(unsigned bit) { write_bits(bit & 1u, 1); }
  void write_bytes(std::span<const std::uint8_t> bytes);

  const std::vector<std::uint8_t>& buffer() const noexcept { return buffer_; }
  std::uint64_t bit_count() const noexcept { return bit_count_; }
  std::vector<std::uint8_t> take() && { return std::move(buffer_); }

 private:
  std::vector<std::uint8_t> buffer_;
  std::uint64_t bit_count_ = 0;
};

// MSB-first reader over a borrowed byte span. Reading past the end throws
// Error(OutOfBits); the cursor is left unchanged in that case.
class BitReader {
 public:
  explicit BitReader(std::span<const std::uint8_t> source) : source_(source) {}
  BitReader(std::span<const std::uint8_t> source, std::uint64_t bit_limit);

  std::uint64_t read_bits(unsigned n);
  unsigned read_bit() { return static_cast<unsigned>(read_bits(1)); }

  std::uint64_t cursor() const noexcept { return cursor_; }
  std::uint64_t total_bits() const noexcept { return limit_; }
  std::uint64_t remaining() const noexcept { return limit_ - cursor_; }

 private:
  std::span<const std::uint8_t> source_;
  std::uint64_t cursor_ = 0;
  std::uint64_t limit_ = source_.size() * 8;
};

// Bits <-> bytes, MSB-first. pack_bits zero-pads the final byte.
std::vector<std::uint8_t> pack_bits(std::span<const std::uint8_t> bits);
Bits unpack_bits(std::span<const std::uint8_t> bytes);

}  // namespace rdh
