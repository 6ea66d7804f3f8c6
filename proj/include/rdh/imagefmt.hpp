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

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace rdh {

struct Rgb {
  std::uint8_t r = 0, g = 0, b = 0;
  bool operator==(const Rgb&) const = default;
};

// Row-major 8-bit RGB raster. Samples are interleaved R, G, B.
class RgbImage {
 public:
  RgbImage() = default;
  RgbImage(std::size_t width, std::size_t height);
  RgbImage(std::size_t width, std::size_t height, std::vector<std::uint8_t> samples);

  std::size_t width() const noexcept { return width_; }
  std::size_t height() const noexcept { return height_; }
  std::size_t pixel_count() const noexcept { return width_ * height_; }

  Rgb pixel(std::size_t x, std::size_t y) const;
  void set_pixel(std::size_t x, std::size_t y, Rgb value);

  std::span<std::uint8_t> samples() noexcept { return samples_; }
  std::span<const std::uint8_t> samples() const noexcept { return samples_; }

  bool operator==(const RgbImage&) const = default;

 private:
  std::size_t width_ = 0;
  std::size_t height_ = 0;
  std::vector<std::uint8_t> samples_;
};

// Single 8-bit channel.
class GrayPlane {
 public:
  GrayPlane() = default;
  GrayPlane(std::size_t width, std::size_t height);
  GrayPlane(std::size_t width, std::size_t height, std::vector<std::uint8_t> samples);

  std::size_t width() const noexcept { return width_; }
  std::size_t height() const noexcept { return height_; }
  std::size_t size() const noexcept { return samples_.size(); }

  std::uint8_t& operator[](std::size_t i) { return samples_[i]; }
  std::uint8_t operator[](std::size_t i) const { return samples_[i]; }

  std::span<std::uint8_t> samples() noexcept { return samples_; }
  std::span<const std::uint8_t> samples() const noexcept { return samples_; }

  bool operator==(const GrayPlane&) const = default;

 private:
  std::size_t width_ = 0;
  std::size_t height_ = 0;
  std::vector<std::uint8_t> samples_;
};

struct LoadedPpm {
  RgbImage image;
  std::optional<std::uint64_t> nonce;
};

// Binary P6, maxval 255. A comment "# RDHCTR <16 hex>" directly after the
// magic line carries the image-encryption nonce.
LoadedPpm load_ppm(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> save_ppm(const RgbImage& img,
                                   std::optional<std::uint64_t> nonce = std::nullopt);

// Binary P5, maxval 255.
GrayPlane load_pgm(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> save_pgm(const GrayPlane& plane);

GrayPlane red_plane(const RgbImage& img);
// Throws Error(DimensionMismatch) if the plane does not match the image.
RgbImage set_red_plane(const RgbImage& img, const GrayPlane& plane);

std::vector<std::uint8_t> read_file(const std::string& path);

}  // namespace rdh
