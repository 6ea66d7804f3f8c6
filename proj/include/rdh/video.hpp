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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rdh/imagefmt.hpp"
#include "rdh/stego.hpp"

namespace rdh {

enum class Colorspace { C420, C444 };

struct FrameRate {
  std::uint32_t num = 25;
  std::uint32_t den = 1;
  bool operator==(const FrameRate&) const = default;
};

struct YuvFrame {
  GrayPlane y, u, v;
  std::string params;  // raw text between "FRAME" and '\n', usually empty

  // Y, U and V bytes back to back.
  std::vector<std::uint8_t> bytes() const;
  void assign(std::span<const std::uint8_t> bytes);

  bool operator==(const YuvFrame&) const = default;
};

// YUV4MPEG2 stream. `params` keeps every stream header token in order
// (W, H, F, C, I, A, X...) so that writing reproduces the input header.
struct Y4mVideo {
  std::size_t width = 0;
  std::size_t height = 0;
  FrameRate frame_rate;
  Colorspace colorspace = Colorspace::C420;
  std::vector<std::string> params;
  std::vector<YuvFrame> frames;

  std::size_t chroma_width() const noexcept;
  std::size_t chroma_height() const noexcept;

  // Blank frame of the right plane sizes.
  YuvFrame make_frame() const;

  bool operator==(const Y4mVideo&) const = default;
};

// Throws Error(BadSignature), Error(UnsupportedColorspace),
// Error(TruncatedFrame) or Error(MalformedHeader).
Y4mVideo parse_y4m(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> write_y4m(const Y4mVideo& video);

// Builds a stream header for a new video.
Y4mVideo make_y4m(std::size_t width, std::size_t height, Colorspace cs, FrameRate rate = {});

struct Yuv {
  std::uint8_t y = 0, u = 0, v = 0;
  bool operator==(const Yuv&) const = default;
};

// Full-range BT.601 with rounding and clamping. Lossy by up to a couple of
// code values per component on the round trip.
Yuv rgb_to_yuv(Rgb p);
Rgb yuv_to_rgb(Yuv p);

YuvFrame rgb_to_yuv444(const RgbImage& img);
RgbImage yuv444_to_rgb(const YuvFrame& frame);

// Nonce stored in the stream header as "XRDHCTR=<16 hex>" (last one wins).
std::optional<std::uint64_t> y4m_nonce(const Y4mVideo& video);

struct VideoHideResult {
  Y4mVideo marked;
  std::vector<std::size_t> capacities;  // region A bits per frame
  std::size_t ciphertext_bytes;
  std::size_t segments;
};

// Per frame: reserve room on the Y plane, CTR-encrypt Y|U|V with
// nonce + frame index, write that frame's segment into region A.
VideoHideResult video_hide(const Y4mVideo& video, std::span<const std::uint8_t> secret,
                           const StegoKeys& keys, const StegoOptions& opts = {});

struct VideoRevealResult {
  std::vector<std::uint8_t> secret;
  Y4mVideo original;
};

VideoRevealResult video_reveal(const Y4mVideo& marked, const StegoKeys& keys,
                               const StegoOptions& opts = {});

// Data half: reassembles segments by index. Needs only the data key.
std::vector<std::uint8_t> video_extract_payload(const Y4mVideo& marked, const AesKey& data_key);

// Cover half. Needs only the image key and base nonce.
Y4mVideo video_recover(const Y4mVideo& marked, const BlowfishKey& image_key, std::uint64_t nonce,
                       const StegoOptions& opts = {});

}  // namespace rdh
