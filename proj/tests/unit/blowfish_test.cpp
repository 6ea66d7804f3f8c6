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

#include "rdh/blowfish.hpp"

#include <random>
#include <string_view>

#include <gtest/gtest.h>

#include "rdh/error.hpp"
#include "rdh/hex.hpp"

namespace rdh {
namespace {

BfBlock bf_block(std::string_view hex) {
  const auto v = from_hex(hex);
  BfBlock b;
  std::copy(v.begin(), v.end(), b.begin());
  return b;
}

struct Vector {
  const char* key;
  const char* plain;
  const char* cipher;
};

// Published Blowfish ECB reference vectors.
constexpr Vector kVectors[] = {
    {"0000000000000000", "0000000000000000", "4ef997456198dd78"},
    {"ffffffffffffffff", "ffffffffffffffff", "51866fd5b85ecb8a"},
    {"3000000000000000", "1000000000000001", "7d856f9a613063f2"},
    {"1111111111111111", "1111111111111111", "2466dd878b963c9d"},
    {"0123456789abcdef", "1111111111111111", "61f9c3802281b096"},
    {"1111111111111111", "0123456789abcdef", "7d0cc630afda1ec7"},
    {"fedcba9876543210", "0123456789abcdef", "0aceab0fc6a0a28d"},
    {"7ca110454a1a6e57", "01a1d6d039776742", "59c68245eb05282b"},
    {"0131d9619dc1376e", "5cd54ca83def57da", "b1b8cc0b250f09a0"},
    // "abcdefghijklmnopqrstuvwxyz" / "BLOWFISH"
    {"6162636465666768696a6b6c6d6e6f707172737475767778797a", "424c4f5746495348",
     "324ed0fef413a203"},
};

TEST(BlowfishTest, InitialStateIsPi) {
  const auto& init = BlowfishState::initial();
  EXPECT_EQ(init.p[0], 0x243f6a88u);
  EXPECT_EQ(init.p[1], 0x85a308d3u);
  EXPECT_EQ(init.p[17], 0x8979fb1bu);
  EXPECT_EQ(init.s[0][0], 0xd1310ba6u);
  EXPECT_EQ(init.s[3][255], 0x3ac372e6u);
}

TEST(BlowfishTest, PublishedVectors) {
  for (const auto& v : kVectors) {
    const auto st = bf_key_schedule(BlowfishKey(from_hex(v.key)));
    EXPECT_EQ(to_hex(bf_encrypt_block(st, bf_block(v.plain))), v.cipher) << v.key;
    EXPECT_EQ(to_hex(bf_decrypt_block(st, bf_block(v.cipher))), v.plain) << v.key;
  }
}

TEST(BlowfishTest, KeyLengthBounds) {
  const std::vector<std::uint8_t> three(3), four(4), max(56), over(57);
  for (const auto* bad : {&three, &over}) {
    try {
      BlowfishKey k(*bad);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::BadKeyLength);
    }
  }
  EXPECT_NO_THROW(BlowfishKey{four});
  EXPECT_NO_THROW(BlowfishKey{max});
}

TEST(BlowfishTest, ScheduleIsDeterministic) {
  const BlowfishKey key(from_hex("0011223344"));
  EXPECT_EQ(bf_key_schedule(key), bf_key_schedule(key));
  EXPECT_NE(bf_key_schedule(key), BlowfishState::initial());
}

TEST(BlowfishTest, FDependsOnSchedule) {
  const auto a = bf_key_schedule(BlowfishKey(from_hex("0000000000000000")));
  const auto b = bf_key_schedule(BlowfishKey(from_hex("0000000000000001")));
  int differing = 0;
  std::mt19937 rng(1);
  for (int i = 0; i < 64; ++i) {
    const std::uint32_t x = rng();
    EXPECT_EQ(bf_f(a, x), bf_f(a, x));
    if (bf_f(a, x) != bf_f(b, x)) ++differing;
  }
  EXPECT_GT(differing, 0);
}

TEST(BlowfishTest, FMatchesDefinition) {
  const auto st = bf_key_schedule(BlowfishKey(from_hex("fedcba9876543210")));
  const std::uint32_t x = 0x01a1d6d0;
  const std::uint32_t expect = ((st.s[0][0x01] + st.s[1][0xa1]) ^ st.s[2][0xd6]) + st.s[3][0xd0];
  EXPECT_EQ(bf_f(st, x), expect);
}

TEST(BlowfishTest, RandomRoundTripAndWrongKey) {
  std::mt19937_64 rng(17);
  const auto st = bf_key_schedule(BlowfishKey(from_hex("a1b2c3d4e5f60718")));
  const auto other = bf_key_schedule(BlowfishKey(from_hex("a1b2c3d4e5f60719")));
  for (int i = 0; i < 1000; ++i) {
    BfBlock b;
    for (auto& x : b) x = static_cast<std::uint8_t>(rng());
    const auto c = bf_encrypt_block(st, b);
    ASSERT_EQ(bf_decrypt_block(st, c), b);
    if (i < 50) ASSERT_NE(bf_decrypt_block(other, c), b);
  }
}

TEST(BlowfishCtrTest, FirstKeystreamBlockIsZeroVector) {
  const auto st = bf_key_schedule(BlowfishKey(std::vector<std::uint8_t>(8, 0)));
  const std::vector<std::uint8_t> zeros(8, 0);
  EXPECT_EQ(to_hex(bf_ctr_transform(st, 0, zeros)), "4ef997456198dd78");
  EXPECT_TRUE(bf_ctr_transform(st, 0, {}).empty());
}

TEST(BlowfishCtrTest, CounterLayoutWrapsAndIsBigEndian) {
  const auto st = bf_key_schedule(BlowfishKey(from_hex("0123456789abcdef")));
  const std::vector<std::uint8_t> zeros(16, 0);
  const auto ks = bf_ctr_transform(st, 0xFFFFFFFFFFFFFFFFull, zeros);
  const auto b0 = bf_encrypt_block(st, bf_block("ffffffffffffffff"));
  const auto b1 = bf_encrypt_block(st, bf_block("0000000000000000"));
  EXPECT_TRUE(std::equal(b0.begin(), b0.end(), ks.begin()));
  EXPECT_TRUE(std::equal(b1.begin(), b1.end(), ks.begin() + 8));
}

TEST(BlowfishCtrTest, InvolutionAndBitLocality) {
  std::mt19937_64 rng(23);
  const auto st = bf_key_schedule(BlowfishKey(from_hex("deadbeefcafe")));
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<std::uint8_t> data(rng() % 300);
    for (auto& x : data) x = static_cast<std::uint8_t>(rng());
    const std::uint64_t nonce = rng();
    const auto ct = bf_ctr_transform(st, nonce, data);
    ASSERT_EQ(ct.size(), data.size());
    ASSERT_EQ(bf_ctr_transform(st, nonce, ct), data);
    if (data.empty()) continue;
    const std::size_t bit = rng() % (8 * data.size());
    auto flipped = ct;
    flipped[bit / 8] ^= static_cast<std::uint8_t>(0x80u >> (bit % 8));
    const auto back = bf_ctr_transform(st, nonce, flipped);
    for (std::size_t i = 0; i < data.size(); ++i) {
      const std::uint8_t expect =
          i == bit / 8 ? static_cast<std::uint8_t>(data[i] ^ (0x80u >> (bit % 8))) : data[i];
      ASSERT_EQ(back[i], expect);
    }
  }
}

}  // namespace
}  // namespace rdh
