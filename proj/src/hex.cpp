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

#include "rdh/hex.hpp"

#include "rdh/error.hpp"

namespace rdh {
namespace {

int nibble(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

std::string to_hex(std::span<const std::uint8_t> bytes) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (std::uint8_t b : bytes) {
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 0xF]);
  }
  return out;
}

std::vector<std::uint8_t> from_hex(std::string_view text) {
  if (text.size() % 2 != 0) {
    throw Error(Errc::BadKeyEncoding, "odd number of hex digits");
  }
  std::vector<std::uint8_t> out;
  out.reserve(text.size() / 2);
  for (std::size_t i = 0; i < text.size(); i += 2) {
    const int hi = nibble(text[i]);
    const int lo = nibble(text[i + 1]);
    if (hi < 0 || lo < 0) throw Error(Errc::BadKeyEncoding, "non-hex character");
    out.push_back(static_cast<std::uint8_t>((hi << 4) | lo));
  }
  return out;
}

std::uint64_t parse_hex_u64(std::string_view text, std::size_t digits) {
  if (digits > 16 || text.size() != digits) {
    throw Error(Errc::BadKeyEncoding,
                "expected " + std::to_string(digits) + " hex digits, got " +
                    std::to_string(text.size()));
  }
  std::uint64_t v = 0;
  for (char c : text) {
    const int n = nibble(c);
    if (n < 0) throw Error(Errc::BadKeyEncoding, "non-hex character");
    v = (v << 4) | static_cast<std::uint64_t>(n);
  }
  return v;
}

}  // namespace rdh
