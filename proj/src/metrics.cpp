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
#include <cstdio>
#include <limits>
#include <span>

#include "rdh/error.hpp"

namespace rdh {
namespace {

double sample_mse(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b) {
  if (a.empty()) return 0.0;
  // Exact integer accumulation; 65025 * 2^40 still fits in 64 bits.
  std::uint64_t sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const int d = int{a[i]} - int{b[i]};
    sum += static_cast<std::uint64_t>(d * d);
  }
  return static_cast<double>(sum) / static_cast<double>(a.size());
}

void check_dims(std::size_t aw, std::size_t ah, std::size_t bw, std::size_t bh) {
  if (aw != bw || ah != bh) {
    throw Error(Errc::DimensionMismatch, std::to_string(aw) + "x" + std::to_string(ah) + " vs " +
                                             std::to_string(bw) + "x" + std::to_string(bh));
  }
}

}  // namespace

double mse(const RgbImage& a, const RgbImage& b) {
  check_dims(a.width(), a.height(), b.width(), b.height());
  return sample_mse(a.samples(), b.samples());
}

double mse(const GrayPlane& a, const GrayPlane& b) {
  check_dims(a.width(), a.height(), b.width(), b.height());
  return sample_mse(a.samples(), b.samples());
}

double psnr_from_mse(double mse_value) {
  if (mse_value == 0.0) return std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(255.0 * 255.0 / mse_value);
}

double psnr(const RgbImage& a, const RgbImage& b) { return psnr_from_mse(mse(a, b)); }
double psnr(const GrayPlane& a, const GrayPlane& b) { return psnr_from_mse(mse(a, b)); }

std::string format_psnr(double db) {
  if (std::isinf(db)) return "inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", db);
  return buf;
}

}  // namespace rdh
