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

#include "cli.hpp"

#include <unistd.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "rdh/error.hpp"
#include "rdh/hex.hpp"
#include "rdh/imagefmt.hpp"
#include "rdh/metrics.hpp"
#include "rdh/stego.hpp"
#include "rdh/video.hpp"

namespace rdh::cli {
namespace {

namespace fs = std::filesystem;

struct KeyArgs {
  std::string data_key;
  std::string data_key_file;
  std::string image_key;
  std::string image_key_file;
  std::string nonce;
  std::string iv;
  bool skip_image_encryption = false;
};

void add_data_key(CLI::App* cmd, KeyArgs& k) {
  auto* hex = cmd->add_option("--data-key", k.data_key, "AES-128 key, 32 hex digits");
  auto* file = cmd->add_option("--data-key-file", k.data_key_file, "File holding the AES key in hex");
  hex->excludes(file);
}

void add_image_key(CLI::App* cmd, KeyArgs& k) {
  auto* hex = cmd->add_option("--image-key", k.image_key, "Blowfish key, 8..112 hex digits");
  auto* file = cmd->add_option("--image-key-file", k.image_key_file,
                               "File holding the Blowfish key in hex");
  hex->excludes(file);
  cmd->add_option("--nonce", k.nonce, "CTR nonce, 16 hex digits (default: from file, else 0)");
  cmd->add_flag("--skip-image-encryption", k.skip_image_encryption,
                "Debug: embed without the Blowfish layer");
}

std::string trim(std::string s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  const auto last = s.find_last_not_of(" \t\r\n");
  return first == std::string::npos ? std::string() : s.substr(first, last - first + 1);
}

std::string key_text(const std::string& hex, const std::string& file, const char* what) {
  if (!file.empty()) {
    const auto bytes = read_file(file);
    return trim(std::string(bytes.begin(), bytes.end()));
  }
  if (hex.empty()) throw Error(Errc::BadKeyEncoding, std::string(what) + " is required");
  return hex;
}

AesKey data_key(const KeyArgs& k) {
  const auto bytes = from_hex(key_text(k.data_key, k.data_key_file, "--data-key"));
  if (bytes.size() != 16) {
    throw Error(Errc::BadKeyEncoding, "data key must be 32 hex digits");
  }
  AesKey key;
  std::copy(bytes.begin(), bytes.end(), key.begin());
  return key;
}

BlowfishKey image_key(const KeyArgs& k) {
  return BlowfishKey(from_hex(key_text(k.image_key, k.image_key_file, "--image-key")));
}

std::uint64_t nonce_or(const KeyArgs& k, std::optional<std::uint64_t> from_file) {
  if (!k.nonce.empty()) return parse_hex_u64(k.nonce, 16);
  return from_file.value_or(0);
}

StegoOptions options(const KeyArgs& k) {
  StegoOptions opts;
  opts.skip_image_encryption = k.skip_image_encryption;
  if (!k.iv.empty()) {
    const auto bytes = from_hex(k.iv);
    if (bytes.size() != 16) throw Error(Errc::BadKeyEncoding, "IV must be 32 hex digits");
    AesBlock iv;
    std::copy(bytes.begin(), bytes.end(), iv.begin());
    opts.iv = iv;
  }
  return opts;
}

// Writes via a temporary in the target directory, then renames over it.
class AtomicFile {
 public:
  explicit AtomicFile(fs::path target)
      : target_(std::move(target)),
        temp_(target_.string() + ".tmp." + std::to_string(::getpid())) {}
  AtomicFile(const AtomicFile&) = delete;
  AtomicFile& operator=(const AtomicFile&) = delete;
  ~AtomicFile() {
    if (!committed_) {
      std::error_code ec;
      fs::remove(temp_, ec);
    }
  }

  void stage(std::span<const std::uint8_t> bytes) {
    std::ofstream out(temp_, std::ios::binary | std::ios::trunc);
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    out.close();
    if (!out) throw std::runtime_error("cannot write " + temp_.string());
  }

  void commit() {
    fs::rename(temp_, target_);
    committed_ = true;
  }

 private:
  fs::path target_;
  fs::path temp_;
  bool committed_ = false;
};

void write_atomically(const std::string& path, std::span<const std::uint8_t> bytes) {
  AtomicFile f(path);
  f.stage(bytes);
  f.commit();
}

std::string percent(std::size_t used, std::size_t total) {
  if (total == 0) return "n/a";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f%%", 100.0 * static_cast<double>(used) / static_cast<double>(total));
  return buf;
}

int cmd_hide(const std::string& cover, const std::string& data, const std::string& out_path,
             const KeyArgs& k, std::ostream& out) {
  const auto loaded = load_ppm(read_file(cover));
  const auto secret = read_file(data);
  const StegoKeys keys{data_key(k), image_key(k), nonce_or(k, std::nullopt)};
  const auto result = hide(loaded.image, secret, keys, options(k));
  const auto nonce = k.skip_image_encryption ? std::nullopt : std::optional(keys.nonce);
  write_atomically(out_path, save_ppm(result.marked, nonce));
  out << "SECRET_BYTES: " << secret.size() << "\n"
      << "FRAME_BITS: " << result.frame_bits << "\n"
      << "CAPACITY_BITS: " << result.region_a_capacity << "\n"
      << "CAPACITY_USED: " << percent(result.frame_bits, result.region_a_capacity) << "\n"
      << "PSNR(plain-marked): " << format_psnr(result.psnr_plain)
      << (std::isinf(result.psnr_plain) ? "" : " dB") << "\n";
  return kOk;
}

int cmd_reveal(const std::string& in, const std::string& out_data, const std::string& out_image,
               const KeyArgs& k, std::ostream& out) {
  const auto loaded = load_ppm(read_file(in));
  const StegoKeys keys{data_key(k), image_key(k), nonce_or(k, loaded.nonce)};
  const auto result = reveal(loaded.image, keys, options(k));
  AtomicFile data_file(out_data);
  AtomicFile image_file(out_image);
  data_file.stage(result.secret);
  image_file.stage(save_ppm(result.original));
  data_file.commit();
  image_file.commit();
  out << "SECRET_BYTES: " << result.secret.size() << "\n"
      << "IMAGE: recovered " << result.original.width() << "x" << result.original.height() << "\n";
  return kOk;
}

int cmd_recover(const std::string& in, const std::string& out_image, const KeyArgs& k,
                std::ostream& out) {
  const auto loaded = load_ppm(read_file(in));
  const auto img = recover_original(loaded.image, image_key(k), nonce_or(k, loaded.nonce), options(k));
  write_atomically(out_image, save_ppm(img));
  out << "IMAGE: recovered " << img.width() << "x" << img.height() << "\n";
  return kOk;
}

int cmd_psnr(const std::string& a, const std::string& b, std::ostream& out) {
  const auto ia = load_ppm(read_file(a)).image;
  const auto ib = load_ppm(read_file(b)).image;
  const double m = mse(ia, ib);
  const double db = psnr_from_mse(m);
  out << "MSE: " << m << "\n";
  out << "PSNR: " << format_psnr(db) << (std::isinf(db) ? "" : " dB") << "\n";
  return kOk;
}

int cmd_video_hide(const std::string& cover, const std::string& data, const std::string& out_path,
                   const KeyArgs& k, std::ostream& out) {
  const auto video = parse_y4m(read_file(cover));
  const auto secret = read_file(data);
  const StegoKeys keys{data_key(k), image_key(k), nonce_or(k, std::nullopt)};
  const auto result = video_hide(video, secret, keys, options(k));
  write_atomically(out_path, write_y4m(result.marked));
  std::size_t total = 0;
  for (auto c : result.capacities) total += c;
  out << "SECRET_BYTES: " << secret.size() << "\n"
      << "FRAMES: " << video.frames.size() << "\n"
      << "SEGMENTS: " << result.segments << "\n"
      << "CIPHERTEXT_BYTES: " << result.ciphertext_bytes << "\n"
      << "CAPACITY_BITS: " << total << "\n";
  return kOk;
}

int cmd_video_reveal(const std::string& in, const std::string& out_data,
                     const std::string& out_video, const KeyArgs& k, std::ostream& out) {
  const auto video = parse_y4m(read_file(in));
  const StegoKeys keys{data_key(k), image_key(k), nonce_or(k, y4m_nonce(video))};
  const auto result = video_reveal(video, keys, options(k));
  AtomicFile data_file(out_data);
  AtomicFile video_file(out_video);
  data_file.stage(result.secret);
  video_file.stage(write_y4m(result.original));
  data_file.commit();
  video_file.commit();
  out << "SECRET_BYTES: " << result.secret.size() << "\n"
      << "FRAMES: " << result.original.frames.size() << "\n";
  return kOk;
}

std::string nonce_text(std::optional<std::uint64_t> nonce) {
  if (!nonce) return "none";
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(*nonce));
  return buf;
}

void describe_frame(std::span<const std::uint8_t> carrier, std::ostream& out,
                    const std::string& prefix) {
  try {
    const PayloadFrame f = read_frame_from_carrier(carrier);
    out << prefix << "PAYLOAD: RDH1 segment " << f.segment_index << "/" << f.segment_count
        << " ct_len " << f.ciphertext.size() << " crc ok\n";
  } catch (const Error& e) {
    out << prefix << "PAYLOAD: none (" << errc_name(e.code()) << ")\n";
  }
}

int cmd_inspect(const std::string& in, std::ostream& out) {
  const auto bytes = read_file(in);
  if (bytes.size() >= 9 && std::string(bytes.begin(), bytes.begin() + 9) == "YUV4MPEG2") {
    const auto video = parse_y4m(bytes);
    const auto nonce = y4m_nonce(video);
    out << "FORMAT: y4m\n"
        << "WIDTH: " << video.width << "\n"
        << "HEIGHT: " << video.height << "\n"
        << "COLORSPACE: " << (video.colorspace == Colorspace::C420 ? "420" : "444") << "\n"
        << "FRAMES: " << video.frames.size() << "\n"
        << "NONCE: " << nonce_text(nonce) << "\n";
    for (std::size_t i = 0; i < video.frames.size(); ++i) {
      describe_frame(video.frames[i].y.samples(), out, "FRAME " + std::to_string(i) + " ");
    }
    return kOk;
  }
  const auto loaded = load_ppm(bytes);
  const auto capacity = image_frame_capacity(loaded.image);
  out << "FORMAT: ppm\n"
      << "WIDTH: " << loaded.image.width() << "\n"
      << "HEIGHT: " << loaded.image.height() << "\n"
      << "NONCE: " << nonce_text(loaded.nonce) << "\n"
      << "CAPACITY_BITS: " << capacity.value_or(0) << "\n";
  describe_frame(red_plane(loaded.image).samples(), out, "");
  return kOk;
}

int status_for(const Error& e) {
  switch (error_class(e.code())) {
    case ErrorClass::Capacity: return kCapacity;
    case ErrorClass::Integrity: return kIntegrity;
    case ErrorClass::Format: return kFormat;
    case ErrorClass::Key: return kKeyEncoding;
    case ErrorClass::Other: break;
  }
  return kFailure;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Reversible data hiding in encrypted images and Y4M video"};
  app.require_subcommand(1);

  KeyArgs k;
  std::string cover, data, out_path, in, out_data, out_image, out_video, psnr_a, psnr_b;

  auto* hide_cmd = app.add_subcommand("hide", "Embed a secret into a PPM cover");
  hide_cmd->add_option("--cover", cover, "Cover image (binary PPM)")->required();
  hide_cmd->add_option("--data", data, "Secret payload file")->required();
  hide_cmd->add_option("--out", out_path, "Marked image output")->required();
  hide_cmd->add_option("--iv", k.iv, "AES-CBC IV, 32 hex digits (default: random)");
  add_data_key(hide_cmd, k);
  add_image_key(hide_cmd, k);

  auto* reveal_cmd = app.add_subcommand("reveal", "Extract the secret and recover the cover");
  reveal_cmd->add_option("--in", in, "Marked image")->required();
  reveal_cmd->add_option("--out-data", out_data, "Recovered secret output")->required();
  reveal_cmd->add_option("--out-image", out_image, "Recovered cover output")->required();
  add_data_key(reveal_cmd, k);
  add_image_key(reveal_cmd, k);

  auto* recover_cmd = app.add_subcommand("recover-image", "Recover the cover without the data key");
  recover_cmd->add_option("--in", in, "Marked image")->required();
  recover_cmd->add_option("--out", out_image, "Recovered cover output")->required();
  add_image_key(recover_cmd, k);

  auto* psnr_cmd = app.add_subcommand("psnr", "PSNR between two PPM images");
  psnr_cmd->add_option("a", psnr_a, "First image")->required();
  psnr_cmd->add_option("b", psnr_b, "Second image")->required();

  auto* vhide_cmd = app.add_subcommand("video-hide", "Embed a secret across Y4M frames");
  vhide_cmd->add_option("--cover", cover, "Cover video (YUV4MPEG2)")->required();
  vhide_cmd->add_option("--data", data, "Secret payload file")->required();
  vhide_cmd->add_option("--out", out_path, "Marked video output")->required();
  vhide_cmd->add_option("--iv", k.iv, "AES-CBC IV, 32 hex digits (default: random)");
  add_data_key(vhide_cmd, k);
  add_image_key(vhide_cmd, k);

  auto* vreveal_cmd = app.add_subcommand("video-reveal", "Extract the secret and recover the video");
  vreveal_cmd->add_option("--in", in, "Marked video")->required();
  vreveal_cmd->add_option("--out-data", out_data, "Recovered secret output")->required();
  vreveal_cmd->add_option("--out-video", out_video, "Recovered video output")->required();
  add_data_key(vreveal_cmd, k);
  add_image_key(vreveal_cmd, k);

  auto* inspect_cmd = app.add_subcommand("inspect", "Describe an image or video without keys");
  inspect_cmd->add_option("--in", in, "Image or video")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }

  try {
    if (*hide_cmd) return cmd_hide(cover, data, out_path, k, out);
    if (*reveal_cmd) return cmd_reveal(in, out_data, out_image, k, out);
    if (*recover_cmd) return cmd_recover(in, out_image, k, out);
    if (*psnr_cmd) return cmd_psnr(psnr_a, psnr_b, out);
    if (*vhide_cmd) return cmd_video_hide(cover, data, out_path, k, out);
    if (*vreveal_cmd) return cmd_video_reveal(in, out_data, out_video, k, out);
    if (*inspect_cmd) return cmd_inspect(in, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return status_for(e);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kFailure;
}

}  // namespace rdh::cli
