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

#include "rdh/crc32.hpp"

#include <string_view>

#include <gtest/gtest.h>

namespace rdh {
namespace {

std::span<const std::uint8_t> as_bytes(std::string_view s) {
  return {reinterpret_cast<const std::uint8_t*>(s.data()), s.size()};
}

TEST(Crc32Test, CheckValue) { EXPECT_EQ(crc32(as_bytes("123456789")), 0xCBF43926u); }

TEST(Crc32Test, EmptyInput) { EXPECT_EQ(crc32({}), 0u); }

TEST(Crc32Test, IncrementalMatchesOneShot) {
  const auto all = as_bytes("The quick brown fox jumps over the lazy dog");
  EXPECT_EQ(crc32(all), 0x414FA339u);
  const std::uint32_t part = crc32_update(0, all.first(10));
  EXPECT_EQ(crc32_update(part, all.subspan(10)), crc32(all));
}

}  // namespace
}  // namespace rdh
