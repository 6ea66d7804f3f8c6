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

#include <array>
#include <random>

#include <gtest/gtest.h>

#include "rdh/error.hpp"
#include "rdh/metrics.hpp"
#include "test_support.hpp"

namespace rdh {
namespace {

template <typename F>
Errc error_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an error";
  return Errc::OutOfBits;
}

// Largest L with maxcount(carrier[64 + L ..]) >= 64 + L, by direct recount.
std::optional<std::size_t> brute_region_a(std::span<const std::uint8_t> c) {
  if (c.size() < 64) return std::nullopt;
  for (std::size_t l = c.size() - 64 + 1; l-- > 0;) {
    std::array<std::size_t, 256> h{};
    for (std::size_t i = 64 + l; i < c.size(); ++i) ++h[c[i]];
    std::size_t m = 0;
    for (auto v : h) m = std::max(m, v);
    if (m >= 64 + l) return l;
  }
  return std::nullopt;
}

TEST(CapacityTest, MatchesBruteForce) {
  std::mt19937_64 rng(71);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = rng() % 400;
    std::vector<std::uint8_t> c(n);
    testing::fill_peaked(rng, c, 1, 0.2 + 0.8 * (rng() % 100) / 100.0, static_cast<int>(rng() % 256),
                         static_cast<int>(1 + rng() % 20));
    ASSERT_EQ(max_region_a_bits(c), brute_region_a(c)) << "n=" << n;
  }
}

TEST(CarrierTest, ReserveRestoreRoundTrip) {
  std::mt19937_64 rng(73);
  int done = 0;
  for (int t = 0; t < 300; ++t) {
    std::vector<std::uint8_t> c(200 + rng() % 2000);
    testing::fill_peaked(rng, c, 1, 0.7, static_cast<int>(rng() % 256), 15);
    const auto cap = max_region_a_bits(c);
    if (!cap) continue;
    const std::size_t l = rng() % (*cap + 1);
    auto work = c;
    reserve_room_carrier(work, l);
    // Region A is free; scribble over it.
    for (std::size_t i = 64; i < 64 + l; ++i) work[i] = static_cast<std::uint8_t>((work[i] & 0xFE) | (rng() & 1));
    const SideHeader h = restore_room_carrier(work);
    ASSERT_EQ(h.region_a_bits, l);
    ASSERT_EQ(work, c);
    ++done;
  }
  EXPECT_GT(done, 200);
}

TEST(CarrierTest, OverCapacityIsRejected) {
  std::mt19937_64 rng(79);
  std::vector<std::uint8_t> c(1000);
  testing::fill_peaked(rng, c, 1, 0.6, 100, 10);
  const auto cap = max_region_a_bits(c);
  ASSERT_TRUE(cap);
  auto work = c;
  EXPECT_EQ(error_of([&] { reserve_room_carrier(work, *cap + 1); }), Errc::CapacityExceeded);
  EXPECT_EQ(error_of([&] { reserve_room_carrier(work, c.size()); }), Errc::CoverTooSmall);
  EXPECT_EQ(work, c);
}

TEST(HideTest, RoundTripRecoversSecretAndCover) {
  std::mt19937_64 rng(83);
  for (int t = 0; t < 20; ++t) {
    const RgbImage cover = testing::peaked_cover(rng, 64 + rng() % 64, 64 + rng() % 64);
    const auto cap = image_frame_capacity(cover);
    ASSERT_TRUE(cap);
    const auto pool = testing::random_bytes(rng, *cap / 8);
    const std::size_t max_len = testing::longest_fitting_prefix(pool, *cap);
    const std::size_t len = rng() % (max_len + 1);
    const auto secret = std::span(pool).first(len);
    const StegoKeys keys = testing::random_keys(rng);
    const HideResult h = hide(cover, secret, keys);
    EXPECT_LE(h.frame_bits, *cap);
    EXPECT_EQ(h.region_a_capacity, *cap);
    const RevealResult r = reveal(h.marked, keys);
    ASSERT_EQ(r.secret, std::vector<std::uint8_t>(secret.begin(), secret.end()));
    ASSERT_EQ(r.original, cover);
  }
}

TEST(HideTest, EmptyPayload) {
  std::mt19937_64 rng(89);
  const RgbImage cover = testing::peaked_cover(rng, 64, 64);
  const StegoKeys keys = testing::random_keys(rng);
  const HideResult h = hide(cover, {}, keys);
  EXPECT_EQ(h.frame_bits, frame_bits_for(16));
  const RevealResult r = reveal(h.marked, keys);
  EXPECT_TRUE(r.secret.empty());
  EXPECT_EQ(r.original, cover);
}

TEST(HideTest, TinyCoversAreTooSmall) {
  std::mt19937_64 rng(97);
  const StegoKeys keys = testing::random_keys(rng);
  for (std::size_t side : {8u, 16u}) {
    RgbImage flat(side, side, std::vector<std::uint8_t>(side * side * 3, 77));
    EXPECT_EQ(error_of([&] { hide(flat, {}, keys); }), Errc::CoverTooSmall) << side;
  }
}

TEST(HideTest, OversizedPayloadIsCapacityExceeded) {
  std::mt19937_64 rng(101);
  // Frame fits in the red plane but not in what the peak bin can back up.
  const RgbImage cover = testing::peaked_cover(rng, 128, 128);
  const auto secret = testing::random_bytes(rng, 1200);
  EXPECT_EQ(error_of([&] { hide(cover, secret, testing::random_keys(rng)); }), Errc::CapacityExceeded);
}

TEST(HideTest, KeySeparation) {
  std::mt19937_64 rng(103);
  for (int t = 0; t < 20; ++t) {
    const RgbImage cover = testing::peaked_cover(rng, 96, 96);
    const auto secret = testing::random_bytes(rng, 40);
    const StegoKeys keys = testing::random_keys(rng);
    const HideResult h = hide(cover, secret, keys);
    const StegoKeys wrong = testing::random_keys(rng);
    EXPECT_EQ(error_of([&] { extract_payload(h.marked, wrong.data_key); }), Errc::BadPadding);
    EXPECT_EQ(recover_original(h.marked, keys.image_key, keys.nonce), cover);
    EXPECT_EQ(error_of([&] { recover_original(h.marked, wrong.image_key, keys.nonce); }),
              Errc::HeaderChecksum);
    EXPECT_EQ(extract_payload(h.marked, keys.data_key), secret);
  }
}

TEST(HideTest, DeterministicWithFixedIv) {
  std::mt19937_64 rng(107);
  const RgbImage cover = testing::peaked_cover(rng, 64, 64);
  const auto secret = testing::random_bytes(rng, 50);
  const StegoKeys keys = testing::random_keys(rng);
  StegoOptions opts;
  opts.iv = testing::random_block(rng);
  EXPECT_EQ(hide(cover, secret, keys, opts).marked, hide(cover, secret, keys, opts).marked);
}

TEST(HideTest, PlainMarkedTouchesOnlyRedByOne) {
  std::mt19937_64 rng(109);
  const RgbImage cover = testing::peaked_cover(rng, 80, 80);
  const auto secret = testing::random_bytes(rng, 100);
  const HideResult h = hide(cover, secret, testing::random_keys(rng));
  const auto a = cover.samples();
  const auto b = h.plain_marked.samples();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i % 3 == 0) {
      ASSERT_LE(std::abs(int{a[i]} - int{b[i]}), 1);
    } else {
      ASSERT_EQ(a[i], b[i]);
    }
  }
  EXPECT_GE(h.psnr_plain, 52.9);
  EXPECT_DOUBLE_EQ(h.psnr_plain, psnr(cover, h.plain_marked));
}

TEST(HideTest, SkipEncryptionMode) {
  std::mt19937_64 rng(113);
  const RgbImage cover = testing::peaked_cover(rng, 64, 64);
  const auto secret = testing::random_bytes(rng, 60);
  const StegoKeys keys = testing::random_keys(rng);
  StegoOptions opts;
  opts.skip_image_encryption = true;
  const HideResult h = hide(cover, secret, keys, opts);
  EXPECT_EQ(h.marked, h.plain_marked);
  const RevealResult r = reveal(h.marked, keys, opts);
  EXPECT_EQ(r.secret, secret);
  EXPECT_EQ(r.original, cover);
}

TEST(HideTest, EncryptedMarkedDiffersFromPlain) {
  std::mt19937_64 rng(127);
  const RgbImage cover = testing::peaked_cover(rng, 64, 64);
  const HideResult h = hide(cover, {}, testing::random_keys(rng));
  std::size_t same = 0;
  for (std::size_t i = 0; i < cover.samples().size(); ++i) {
    if (i % 3 != 0) same += cover.samples()[i] == h.marked.samples()[i];
  }
  EXPECT_LT(same, cover.samples().size() / 50);
}

TEST(ReserveRoomTest, ImageLevel) {
  std::mt19937_64 rng(131);
  const RgbImage cover = testing::peaked_cover(rng, 64, 64);
  const ReservedImage r = reserve_room(cover, 1000);
  EXPECT_EQ(r.side.payload_bits, 64u + 1000);
  GrayPlane red = red_plane(r.image);
  EXPECT_EQ(restore_room_carrier(red.samples()).region_a_bits, 1000u);
  EXPECT_EQ(set_red_plane(r.image, red), cover);
}

}  // namespace
}  // namespace rdh
