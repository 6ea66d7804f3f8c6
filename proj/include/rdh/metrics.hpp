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

#include <string>

#include "rdh/imagefmt.hpp"

namespace rdh {

// Mean squared difference over all samples: x*y*3 for RGB, x*y for a plane.
// Throws Error(DimensionMismatch).
double mse(const RgbImage& a, const RgbImage& b);
double mse(const GrayPlane& a, const GrayPlane& b);

// 10 * log10(255^2 / mse); +infinity when mse is 0.
double psnr_from_mse(double mse_value);
double psnr(const RgbImage& a, const RgbImage& b);
double psnr(const GrayPlane& a, const GrayPlane& b);

// "inf" or the value with two decimals.
std::string format_psnr(double db);

}  // namespace rdh
