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

#include "rdh/metrics.hpp"

#include <cmath>
#include <limits>
#include <random>

#include <gtest/gtest.h>

#include "rdh/error.hpp"
#include "test_support.hpp"

namespace rdh {
namespace {

RgbImage filled(std::size_t w, std::size_t h, std::uint8_t v) {
  return RgbImage(w, h, std::vector<std::uint8_t>(w * h * 3, v));
}

TEST(MseTest, ClosedForms) {
  EXPECT_EQ(mse(filled(4, 4, 9), filled(4, 4, 9)), 0.0);
  EXPECT_EQ(mse(filled(4, 4, 9), filled(4, 4, 10)), 1.0);
  EXPECT_EQ(mse(filled(3, 5, 0), filled(3, 5, 255)), 65025.0);
  // One sample off by 3 in a 2x1 image: 9 / 6.
  RgbImage b = filled(2, 1, 50);
  b.samples()[4] = 53;
  EXPECT_DOUBLE_EQ(mse(filled(2, 1, 50), b), 1.5);
}

TEST(PsnrTest, ReferenceValues) {
  EXPECT_NEAR(psnr_from_mse(1.0), 48.1308, 1e-4);
  EXPECT_NEAR(psnr_from_mse(65025.0), 0.0, 1e-12);
  EXPECT_NEAR(psnr_from_mse(1.0 / 3.0), 52.9020, 1e-4);
  EXPECT_NEAR(psnr_from_mse(1.0 / 6.0), 55.9123, 1e-4);
  EXPECT_EQ(psnr_from_mse(0.0), std::numeric_limits<double>::infinity());
  EXPECT_EQ(psnr(filled(2, 2, 1), filled(2, 2, 1)), std::numeric_limits<double>::infinity());
  EXPECT_NEAR(psnr(filled(2, 2, 1), filled(2, 2, 2)), 48.1308, 1e-4);
}

TEST(PsnrTest, Formatting) {
  EXPECT_EQ(format_psnr(std::numeric_limits<double>::infinity()), "inf");
  EXPECT_EQ(format_psnr(48.130803608679), "48.13");
  EXPECT_EQ(format_psnr(0.0), "0.00");
}

TEST(PsnrTest, SymmetricAndMonotone) {
  std::mt19937_64 rng(137);
  for (int t = 0; t < 100; ++t) {
    const RgbImage a(8, 8, testing::random_bytes(rng, 192));
    RgbImage b = a;
    RgbImage c = a;
    const std::size_t i = rng() % 192;
    b.samples()[i] ^= 1;
    c.samples()[i] ^= 1;
    c.samples()[(i + 1) % 192] ^= 1;
    EXPECT_EQ(psnr(a, b), psnr(b, a));
    EXPECT_EQ(mse(a, c), mse(c, a));
    EXPECT_GT(psnr(a, b), psnr(a, c));
  }
}

TEST(MseTest, GrayPlanes) {
  const GrayPlane a(2, 2, {0, 0, 0, 0});
  const GrayPlane b(2, 2, {2, 0, 0, 0});
  EXPECT_DOUBLE_EQ(mse(a, b), 1.0);
  EXPECT_NEAR(psnr(a, b), 48.1308, 1e-4);
}

TEST(MseTest, DimensionMismatch) {
  try {
    mse(filled(2, 3, 0), filled(3, 2, 0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::DimensionMismatch);
  }
}

}  // namespace
}  // namespace rdh
