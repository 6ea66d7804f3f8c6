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

#include "rdh/imagefmt.hpp"

#include <cstdio>
#include <fstream>
#include <iterator>
#include <stdexcept>
#include <string>
#include <string_view>

#include "rdh/error.hpp"
#include "rdh/hex.hpp"

namespace rdh {
namespace {

constexpr std::string_view kNonceTag = "# RDHCTR ";

bool is_space(std::uint8_t c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
}

// Header tokenizer for binary netpbm. Comments run from '#' to end of line.
class HeaderScanner {
 public:
  explicit HeaderScanner(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  std::size_t pos() const noexcept { return pos_; }

  void skip_space_and_comments() {
    while (pos_ < bytes_.size()) {
      if (is_space(bytes_[pos_])) {
        ++pos_;
      } else if (bytes_[pos_] == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  std::size_t read_uint() {
    skip_space_and_comments();
    if (pos_ >= bytes_.size()) throw Error(Errc::ImageTruncated, "header ends early");
    if (bytes_[pos_] < '0' || bytes_[pos_] > '9') {
      throw Error(Errc::MalformedHeader, "expected a decimal number");
    }
    std::size_t v = 0;
    while (pos_ < bytes_.size() && bytes_[pos_] >= '0' && bytes_[pos_] <= '9') {
      v = v * 10 + (bytes_[pos_] - '0');
      if (v > (1u << 24)) throw Error(Errc::MalformedHeader, "dimension out of range");
      ++pos_;
    }
    return v;
  }

  // Exactly one whitespace byte separates maxval from the raster.
  void expect_single_space() {
    if (pos_ >= bytes_.size()) throw Error(Errc::ImageTruncated, "header ends early");
    if (!is_space(bytes_[pos_])) throw Error(Errc::MalformedHeader, "no whitespace after maxval");
    ++pos_;
  }

  // Parses "# RDHCTR <16 hex>\n" if it starts at the current position.
  std::optional<std::uint64_t> try_nonce_comment() {
    const std::string_view rest(reinterpret_cast<const char*>(bytes_.data()) + pos_,
                                bytes_.size() - pos_);
    if (rest.substr(0, kNonceTag.size()) != kNonceTag) return std::nullopt;
    const std::size_t eol = rest.find('\n');
    if (eol == std::string_view::npos) throw Error(Errc::ImageTruncated, "header ends early");
    std::string_view digits = rest.substr(kNonceTag.size(), eol - kNonceTag.size());
    if (!digits.empty() && digits.back() == '\r') digits.remove_suffix(1);
    std::uint64_t nonce = 0;
    try {
      nonce = parse_hex_u64(digits, 16);
    } catch (const Error&) {
      throw Error(Errc::MalformedHeader, "bad RDHCTR nonce comment");
    }
    pos_ += eol + 1;
    return nonce;
  }

 private:
  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
};

struct NetpbmHeader {
  std::size_t width, height, data_offset;
  std::optional<std::uint64_t> nonce;
};

NetpbmHeader parse_header(std::span<const std::uint8_t> bytes, char kind) {
  if (bytes.size() < 2 || bytes[0] != 'P' || bytes[1] != kind) {
    throw Error(Errc::ImageBadMagic, std::string("expected P") + kind);
  }
  NetpbmHeader h{};
  std::size_t pos = 2;
  if (pos < bytes.size() && bytes[pos] == '\n') {
    HeaderScanner nonce_scan(bytes.subspan(pos + 1));
    h.nonce = nonce_scan.try_nonce_comment();
    if (h.nonce) pos += 1 + nonce_scan.pos();
  } else if (pos < bytes.size() && !is_space(bytes[pos])) {
    throw Error(Errc::ImageBadMagic, "magic not followed by whitespace");
  }

  HeaderScanner body(bytes.subspan(pos));
  h.width = body.read_uint();
  h.height = body.read_uint();
  const std::size_t maxval = body.read_uint();
  if (h.width == 0 || h.height == 0) throw Error(Errc::MalformedHeader, "zero dimension");
  if (maxval != 255) throw Error(Errc::BadMaxval, "maxval " + std::to_string(maxval));
  body.expect_single_space();
  h.data_offset = pos + body.pos();
  return h;
}

std::string header_text(char kind, std::size_t w, std::size_t h, std::optional<std::uint64_t> nonce) {
  std::string s = std::string("P") + kind + "\n";
  if (nonce) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(*nonce));
    s += std::string(kNonceTag) + buf + "\n";
  }
  s += std::to_string(w) + " " + std::to_string(h) + "\n255\n";
  return s;
}

}  // namespace

RgbImage::RgbImage(std::size_t width, std::size_t height)
    : width_(width), height_(height), samples_(width * height * 3, 0) {}

RgbImage::RgbImage(std::size_t width, std::size_t height, std::vector<std::uint8_t> samples)
    : width_(width), height_(height), samples_(std::move(samples)) {
  if (samples_.size() != width * height * 3) {
    throw Error(Errc::DimensionMismatch, "sample count does not match dimensions");
  }
}

Rgb RgbImage::pixel(std::size_t x, std::size_t y) const {
  const std::size_t i = 3 * (y * width_ + x);
  return {samples_.at(i), samples_.at(i + 1), samples_.at(i + 2)};
}

void RgbImage::set_pixel(std::size_t x, std::size_t y, Rgb v) {
  const std::size_t i = 3 * (y * width_ + x);
  samples_.at(i) = v.r;
  samples_.at(i + 1) = v.g;
  samples_.at(i + 2) = v.b;
}

GrayPlane::GrayPlane(std::size_t width, std::size_t height)
    : width_(width), height_(height), samples_(width * height, 0) {}

GrayPlane::GrayPlane(std::size_t width, std::size_t height, std::vector<std::uint8_t> samples)
    : width_(width), height_(height), samples_(std::move(samples)) {
  if (samples_.size() != width * height) {
    throw Error(Errc::DimensionMismatch, "sample count does not match dimensions");
  }
}

LoadedPpm load_ppm(std::span<const std::uint8_t> bytes) {
  const NetpbmHeader h = parse_header(bytes, '6');
  const std::size_t need = h.width * h.height * 3;
  if (bytes.size() - h.data_offset < need) {
    throw Error(Errc::ImageTruncated, "raster has " + std::to_string(bytes.size() - h.data_offset) +
                                          " of " + std::to_string(need) + " bytes");
  }
  const auto first = bytes.begin() + static_cast<std::ptrdiff_t>(h.data_offset);
  return {RgbImage(h.width, h.height, std::vector<std::uint8_t>(first, first + static_cast<std::ptrdiff_t>(need))),
          h.nonce};
}

std::vector<std::uint8_t> save_ppm(const RgbImage& img, std::optional<std::uint64_t> nonce) {
  const std::string head = header_text('6', img.width(), img.height(), nonce);
  std::vector<std::uint8_t> out(head.begin(), head.end());
  out.insert(out.end(), img.samples().begin(), img.samples().end());
  return out;
}

GrayPlane load_pgm(std::span<const std::uint8_t> bytes) {
  const NetpbmHeader h = parse_header(bytes, '5');
  const std::size_t need = h.width * h.height;
  if (bytes.size() - h.data_offset < need) throw Error(Errc::ImageTruncated, "short raster");
  const auto first = bytes.begin() + static_cast<std::ptrdiff_t>(h.data_offset);
  return GrayPlane(h.width, h.height,
                   std::vector<std::uint8_t>(first, first + static_cast<std::ptrdiff_t>(need)));
}

std::vector<std::uint8_t> save_pgm(const GrayPlane& plane) {
  const std::string head = header_text('5', plane.width(), plane.height(), std::nullopt);
  std::vector<std::uint8_t> out(head.begin(), head.end());
  out.insert(out.end(), plane.samples().begin(), plane.samples().end());
  return out;
}

GrayPlane red_plane(const RgbImage& img) {
  GrayPlane plane(img.width(), img.height());
  const auto s = img.samples();
  for (std::size_t i = 0; i < plane.size(); ++i) plane[i] = s[3 * i];
  return plane;
}

RgbImage set_red_plane(const RgbImage& img, const GrayPlane& plane) {
  if (plane.width() != img.width() || plane.height() != img.height()) {
    throw Error(Errc::DimensionMismatch, "red plane is " + std::to_string(plane.width()) + "x" +
                                             std::to_string(plane.height()) + ", image is " +
                                             std::to_string(img.width()) + "x" +
                                             std::to_string(img.height()));
  }
  RgbImage out = img;
  auto s = out.samples();
  for (std::size_t i = 0; i < plane.size(); ++i) s[3 * i] = plane[i];
  return out;
}

std::vector<std::uint8_t> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace rdh
