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

#include "rdh/video.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string_view>

#include "rdh/error.hpp"
#include "rdh/hex.hpp"

namespace rdh {
namespace {

constexpr std::string_view kSignature = "YUV4MPEG2";
constexpr std::string_view kFrameTag = "FRAME";
constexpr std::string_view kNonceParam = "XRDHCTR=";

std::size_t parse_dim(std::string_view digits) {
  if (digits.empty() || digits.size() > 7) throw Error(Errc::MalformedHeader, "bad dimension");
  std::size_t v = 0;
  for (char c : digits) {
    if (c < '0' || c > '9') throw Error(Errc::MalformedHeader, "bad dimension");
    v = v * 10 + static_cast<std::size_t>(c - '0');
  }
  if (v == 0) throw Error(Errc::MalformedHeader, "zero dimension");
  return v;
}

FrameRate parse_rate(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw Error(Errc::MalformedHeader, "bad frame rate");
  return {static_cast<std::uint32_t>(parse_dim(text.substr(0, colon))),
          static_cast<std::uint32_t>(parse_dim(text.substr(colon + 1)))};
}

Colorspace parse_colorspace(std::string_view tag) {
  if (tag == "420" || tag == "420jpeg" || tag == "420paldv" || tag == "420mpeg2") {
    return Colorspace::C420;
  }
  if (tag == "444") return Colorspace::C444;
  throw Error(Errc::UnsupportedColorspace, "colorspace C" + std::string(tag));
}

std::vector<std::string> split_tokens(std::string_view line) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos <= line.size()) {
    const std::size_t next = line.find(' ', pos);
    const std::size_t end = next == std::string_view::npos ? line.size() : next;
    if (end == pos) throw Error(Errc::MalformedHeader, "empty header token");
    out.emplace_back(line.substr(pos, end - pos));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return out;
}

std::string nonce_token(std::uint64_t nonce) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(nonce));
  return std::string(kNonceParam) + buf;
}

std::uint8_t clamp_round(double v) {
  return static_cast<std::uint8_t>(std::clamp(std::lround(v), 0L, 255L));
}

Error with_frame(const Error& e, std::size_t index) {
  std::string what = e.what();
  const auto colon = what.find(": ");
  if (colon != std::string::npos) what = what.substr(colon + 2);
  return Error(e.code(), "frame " + std::to_string(index) + ": " + what);
}

}  // namespace

std::vector<std::uint8_t> YuvFrame::bytes() const {
  std::vector<std::uint8_t> out;
  out.reserve(y.size() + u.size() + v.size());
  for (const GrayPlane* p : {&y, &u, &v}) out.insert(out.end(), p->samples().begin(), p->samples().end());
  return out;
}

void YuvFrame::assign(std::span<const std::uint8_t> bytes) {
  if (bytes.size() != y.size() + u.size() + v.size()) {
    throw Error(Errc::DimensionMismatch, "frame byte count mismatch");
  }
  std::size_t off = 0;
  for (GrayPlane* p : {&y, &u, &v}) {
    std::copy_n(bytes.begin() + static_cast<std::ptrdiff_t>(off), p->size(), p->samples().begin());
    off += p->size();
  }
}

std::size_t Y4mVideo::chroma_width() const noexcept {
  return colorspace == Colorspace::C420 ? width / 2 : width;
}

std::size_t Y4mVideo::chroma_height() const noexcept {
  return colorspace == Colorspace::C420 ? height / 2 : height;
}

YuvFrame Y4mVideo::make_frame() const {
  return {GrayPlane(width, height), GrayPlane(chroma_width(), chroma_height()),
          GrayPlane(chroma_width(), chroma_height()), {}};
}

Y4mVideo make_y4m(std::size_t width, std::size_t height, Colorspace cs, FrameRate rate) {
  Y4mVideo v;
  v.width = width;
  v.height = height;
  v.frame_rate = rate;
  v.colorspace = cs;
  v.params = {"W" + std::to_string(width), "H" + std::to_string(height),
              "F" + std::to_string(rate.num) + ":" + std::to_string(rate.den),
              cs == Colorspace::C420 ? "C420jpeg" : "C444"};
  if (cs == Colorspace::C420 && (width % 2 || height % 2)) {
    throw Error(Errc::UnsupportedColorspace, "C420 needs even width and height");
  }
  return v;
}

Y4mVideo parse_y4m(std::span<const std::uint8_t> bytes) {
  const std::string_view text(reinterpret_cast<const char*>(bytes.data()), bytes.size());
  if (text.substr(0, kSignature.size()) != kSignature ||
      (text.size() > kSignature.size() && text[kSignature.size()] != ' ' &&
       text[kSignature.size()] != '\n')) {
    throw Error(Errc::BadSignature, "missing YUV4MPEG2 signature");
  }
  const std::size_t eol = text.find('\n');
  if (eol == std::string_view::npos) throw Error(Errc::TruncatedFrame, "stream header not terminated");

  Y4mVideo v;
  const std::string_view header = text.substr(kSignature.size(), eol - kSignature.size());
  if (!header.empty()) v.params = split_tokens(header.substr(1));

  bool have_w = false, have_h = false;
  v.colorspace = Colorspace::C420;
  for (const auto& tok : v.params) {
    const std::string_view body = std::string_view(tok).substr(1);
    switch (tok[0]) {
      case 'W': v.width = parse_dim(body); have_w = true; break;
      case 'H': v.height = parse_dim(body); have_h = true; break;
      case 'F': v.frame_rate = parse_rate(body); break;
      case 'C': v.colorspace = parse_colorspace(body); break;
      default: break;
    }
  }
  if (!have_w || !have_h) throw Error(Errc::MalformedHeader, "stream header lacks W or H");
  if (v.colorspace == Colorspace::C420 && (v.width % 2 || v.height % 2)) {
    throw Error(Errc::UnsupportedColorspace,
                "C420 with odd dimensions " + std::to_string(v.width) + "x" + std::to_string(v.height));
  }

  const std::size_t frame_bytes = v.width * v.height + 2 * v.chroma_width() * v.chroma_height();
  std::size_t pos = eol + 1;
  while (pos < text.size()) {
    if (text.substr(pos, kFrameTag.size()) != kFrameTag) {
      throw Error(Errc::MalformedHeader, "expected FRAME at offset " + std::to_string(pos));
    }
    const std::size_t frame_eol = text.find('\n', pos);
    if (frame_eol == std::string_view::npos) throw Error(Errc::TruncatedFrame, "frame header not terminated");
    YuvFrame f = v.make_frame();
    f.params = std::string(text.substr(pos + kFrameTag.size(), frame_eol - pos - kFrameTag.size()));
    if (!f.params.empty() && f.params[0] != ' ') {
      throw Error(Errc::MalformedHeader, "bad FRAME header");
    }
    const std::size_t data = frame_eol + 1;
    if (bytes.size() - data < frame_bytes) {
      throw Error(Errc::TruncatedFrame, "frame " + std::to_string(v.frames.size()) + " has " +
                                            std::to_string(bytes.size() - data) + " of " +
                                            std::to_string(frame_bytes) + " bytes");
    }
    f.assign(bytes.subspan(data, frame_bytes));
    v.frames.push_back(std::move(f));
    pos = data + frame_bytes;
  }
  return v;
}

std::vector<std::uint8_t> write_y4m(const Y4mVideo& video) {
  std::string head(kSignature);
  for (const auto& p : video.params) head += " " + p;
  head += "\n";
  std::vector<std::uint8_t> out(head.begin(), head.end());
  for (const auto& f : video.frames) {
    const std::string tag = std::string(kFrameTag) + f.params + "\n";
    out.insert(out.end(), tag.begin(), tag.end());
    const auto data = f.bytes();
    out.insert(out.end(), data.begin(), data.end());
  }
  return out;
}

Yuv rgb_to_yuv(Rgb p) {
  const double r = p.r, g = p.g, b = p.b;
  return {clamp_round(0.299 * r + 0.587 * g + 0.114 * b),
          clamp_round(-0.168736 * r - 0.331264 * g + 0.5 * b + 128.0),
          clamp_round(0.5 * r - 0.418688 * g - 0.081312 * b + 128.0)};
}

Rgb yuv_to_rgb(Yuv p) {
  const double y = p.y, u = p.u - 128.0, v = p.v - 128.0;
  return {clamp_round(y + 1.402 * v), clamp_round(y - 0.344136 * u - 0.714136 * v),
          clamp_round(y + 1.772 * u)};
}

YuvFrame rgb_to_yuv444(const RgbImage& img) {
  YuvFrame f{GrayPlane(img.width(), img.height()), GrayPlane(img.width(), img.height()),
             GrayPlane(img.width(), img.height()), {}};
  const auto s = img.samples();
  for (std::size_t i = 0; i < f.y.size(); ++i) {
    const Yuv c = rgb_to_yuv({s[3 * i], s[3 * i + 1], s[3 * i + 2]});
    f.y[i] = c.y;
    f.u[i] = c.u;
    f.v[i] = c.v;
  }
  return f;
}

RgbImage yuv444_to_rgb(const YuvFrame& f) {
  if (f.u.size() != f.y.size() || f.v.size() != f.y.size()) {
    throw Error(Errc::DimensionMismatch, "expected 4:4:4 planes");
  }
  RgbImage img(f.y.width(), f.y.height());
  auto s = img.samples();
  for (std::size_t i = 0; i < f.y.size(); ++i) {
    const Rgb c = yuv_to_rgb({f.y[i], f.u[i], f.v[i]});
    s[3 * i] = c.r;
    s[3 * i + 1] = c.g;
    s[3 * i + 2] = c.b;
  }
  return img;
}

std::optional<std::uint64_t> y4m_nonce(const Y4mVideo& video) {
  for (auto it = video.params.rbegin(); it != video.params.rend(); ++it) {
    if (it->starts_with(kNonceParam)) {
      try {
        return parse_hex_u64(std::string_view(*it).substr(kNonceParam.size()), 16);
      } catch (const Error&) {
        throw Error(Errc::MalformedHeader, "bad XRDHCTR parameter");
      }
    }
  }
  return std::nullopt;
}

VideoHideResult video_hide(const Y4mVideo& video, std::span<const std::uint8_t> secret,
                           const StegoKeys& keys, const StegoOptions& opts) {
  VideoHideResult result{video, {}, 0, 0};
  for (const auto& f : video.frames) {
    result.capacities.push_back(max_region_a_bits(f.y.samples()).value_or(0));
  }
  const AesBlock iv = opts.iv ? *opts.iv : random_iv();
  const auto frames = build_frames(secret, keys.data_key, iv, result.capacities);
  for (const auto& f : frames) result.ciphertext_bytes += f.ciphertext.size();
  result.segments = frames.empty() ? 0 : frames.front().segment_count;

  const BlowfishState cipher = bf_key_schedule(keys.image_key);
  for (std::size_t i = 0; i < frames.size(); ++i) {
    YuvFrame& out = result.marked.frames[i];
    try {
      reserve_room_carrier(out.y.samples(), frames[i].bit_size());
    } catch (const Error& e) {
      throw with_frame(e, i);
    }
    if (!opts.skip_image_encryption) {
      auto data = out.bytes();
      bf_ctr_transform_inplace(cipher, keys.nonce + i, data);
      out.assign(data);
    }
    write_frame_to_carrier(out.y.samples(), frames[i]);
  }
  if (!opts.skip_image_encryption) result.marked.params.push_back(nonce_token(keys.nonce));
  return result;
}

std::vector<std::uint8_t> video_extract_payload(const Y4mVideo& marked, const AesKey& data_key) {
  std::vector<PayloadFrame> frames;
  for (std::size_t i = 0; i < marked.frames.size(); ++i) {
    try {
      frames.push_back(read_frame_from_carrier(marked.frames[i].y.samples()));
    } catch (const Error& e) {
      throw with_frame(e, i);
    }
  }
  return open_payload(reassemble(frames), data_key);
}

Y4mVideo video_recover(const Y4mVideo& marked, const BlowfishKey& image_key, std::uint64_t nonce,
                       const StegoOptions& opts) {
  Y4mVideo out = marked;
  if (!opts.skip_image_encryption) {
    const auto it = std::find_if(out.params.rbegin(), out.params.rend(),
                                 [](const std::string& p) { return p.starts_with(kNonceParam); });
    if (it != out.params.rend()) out.params.erase(std::next(it).base());
  }
  const BlowfishState cipher = bf_key_schedule(image_key);
  for (std::size_t i = 0; i < out.frames.size(); ++i) {
    YuvFrame& f = out.frames[i];
    if (!opts.skip_image_encryption) {
      auto data = f.bytes();
      bf_ctr_transform_inplace(cipher, nonce + i, data);
      f.assign(data);
    }
    try {
      restore_room_carrier(f.y.samples());
    } catch (const Error& e) {
      throw with_frame(e, i);
    }
  }
  return out;
}

VideoRevealResult video_reveal(const Y4mVideo& marked, const StegoKeys& keys,
                               const StegoOptions& opts) {
  auto secret = video_extract_payload(marked, keys.data_key);
  return {std::move(secret), video_recover(marked, keys.image_key, keys.nonce, opts)};
}

}  // namespace rdh
