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

#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "rdh/error.hpp"

namespace rdh {
namespace {

GrayPlane row(std::vector<std::uint8_t> v) {
  const std::size_t n = v.size();
  return GrayPlane(n, 1, std::move(v));
}

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

// Straight from the definition: count every value, take the first maximum.
std::size_t brute_peak_count(const GrayPlane& p) {
  std::size_t best = 0;
  for (int v = 0; v < 256; ++v) {
    best = std::max<std::size_t>(best, std::count(p.samples().begin(), p.samples().end(), v));
  }
  return best;
}

TEST(PlanHsTest, ConstantPlane) {
  const GrayPlane p(4, 4, std::vector<std::uint8_t>(16, 9));
  const HsPlan plan = plan_hs(p);
  EXPECT_EQ(plan.peak, 9);
  EXPECT_EQ(plan.zero, 10);
  EXPECT_EQ(plan.capacity, 16u);
}

TEST(PlanHsTest, SmallExample) {
  const HsPlan plan = plan_hs(row({5, 5, 5, 7, 200}));
  EXPECT_EQ(plan.peak, 5);
  EXPECT_EQ(plan.zero, 6);
  EXPECT_EQ(plan.capacity, 3u);
}

TEST(PlanHsTest, TiesPickSmallestAndZeroSearchFallsBackDownward) {
  const HsPlan plan = plan_hs(row({254, 255, 254, 255, 3}));
  EXPECT_EQ(plan.peak, 254);
  // 255 is occupied, so the zero bin is the nearest empty value below.
  EXPECT_EQ(plan.zero, 253);
}

TEST(PlanHsTest, AllValuesPresent) {
  std::vector<std::uint8_t> v(256);
  for (int i = 0; i < 256; ++i) v[i] = static_cast<std::uint8_t>(i);
  v.push_back(4);
  EXPECT_EQ(error_of([&] { plan_hs(row(v)); }), Errc::NoZeroBin);
}

TEST(HsEmbedTest, HandTracedExample) {
  const GrayPlane marked = hs_embed(row({5, 5, 6}), Bits{1, 0}, 5, 7);
  EXPECT_EQ(marked, row({6, 5, 7}));
  const auto back = hs_extract(marked, {5, 7, 2});
  EXPECT_EQ(back.plane, row({5, 5, 6}));
  EXPECT_EQ(back.bits, (Bits{1, 0}));
}

TEST(HsEmbedTest, ZeroPayloadOnlyShifts) {
  const GrayPlane p = row({5, 5, 6, 9, 4});
  const GrayPlane marked = hs_embed(p, Bits{0, 0}, 5, 7);
  EXPECT_EQ(marked, row({5, 5, 7, 9, 4}));
  EXPECT_EQ(hs_embed(p, Bits{}, 5, 7), marked);
  EXPECT_EQ(hs_extract(marked, {5, 7, 0}).plane, p);
}

TEST(HsEmbedTest, MirroredDirection) {
  const GrayPlane p = row({255, 254, 255, 252, 10});
  const GrayPlane marked = hs_embed(p, Bits{1, 1}, 255, 253);
  // 254 shifts down to 253; both 255s become 254.
  EXPECT_EQ(marked, row({254, 253, 254, 252, 10}));
  const auto back = hs_extract(marked, {255, 253, 2});
  EXPECT_EQ(back.plane, p);
  EXPECT_EQ(back.bits, (Bits{1, 1}));
}

TEST(HsEmbedTest, Errors) {
  EXPECT_EQ(error_of([] { hs_embed(row({5, 5, 6}), Bits{1, 0, 1}, 5, 7); }), Errc::CapacityExceeded);
  EXPECT_EQ(error_of([] { hs_embed(row({5, 5, 6}), Bits{1}, 5, 6); }), Errc::ZeroBinNotEmpty);
  EXPECT_EQ(error_of([] { hs_extract(row({5, 9, 9}), {5, 7, 3}); }), Errc::PayloadOverrun);
}

TEST(HsProperty, RoundTripOnRandomPlanes) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 1000; ++trial) {
    GrayPlane p(8, 8);
    for (auto& v : p.samples()) {
      const auto r = rng() % 17;
      v = static_cast<std::uint8_t>(r == 16 ? 255 : r);
    }
    const HsPlan plan = plan_hs(p);
    ASSERT_EQ(plan.capacity, brute_peak_count(p));
    const std::size_t n = rng() % (plan.capacity + 1);
    Bits bits(n);
    for (auto& b : bits) b = rng() & 1u;
    const GrayPlane marked = hs_embed(p, bits, plan.peak, plan.zero);
    for (std::size_t i = 0; i < p.size(); ++i) {
      ASSERT_LE(std::abs(int{marked[i]} - int{p[i]}), 1);
    }
    const auto back = hs_extract(marked, {plan.peak, plan.zero, static_cast<std::uint32_t>(n)});
    ASSERT_EQ(back.plane, p);
    ASSERT_EQ(back.bits, bits);
  }
}

TEST(LsbTest, ReplaceAndRead) {
  EXPECT_EQ(lsb_replace(row({0xFE}), 0, Bits{1})[0], 0xFF);
  EXPECT_EQ(lsb_replace(row({0xFF}), 0, Bits{0})[0], 0xFE);
  EXPECT_EQ(error_of([] { lsb_replace(row({1, 2}), 1, Bits{1, 1}); }), Errc::OutOfRange);
  EXPECT_EQ(error_of([] { lsb_read(row({1, 2}), 3, 0); }), Errc::OutOfRange);
}

TEST(LsbProperty, RoundTripTouchesOnlyLsb) {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 200; ++trial) {
    GrayPlane p(16, 16);
    for (auto& v : p.samples()) v = static_cast<std::uint8_t>(rng());
    const std::size_t start = rng() % 256;
    Bits bits(rng() % (256 - start + 1));
    for (auto& b : bits) b = rng() & 1u;
    const GrayPlane q = lsb_replace(p, start, bits);
    ASSERT_EQ(lsb_read(q, start, bits.size()), bits);
    for (std::size_t i = 0; i < p.size(); ++i) {
      ASSERT_EQ(q[i] & 0xFE, p[i] & 0xFE);
      if (i < start || i >= start + bits.size()) ASSERT_EQ(q[i], p[i]);
    }
  }
}

}  // namespace
}  // namespace rdh
