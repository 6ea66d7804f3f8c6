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

#include "rdh/aes.hpp"

#include <algorithm>
#include <string>

#include "rdh/error.hpp"

namespace rdh {
namespace {

constexpr std::array<std::uint8_t, 256> kSbox = {
    0x63, 0x7c, 0x77, 0x7b, 0xf2, 0x6b, 0x6f, 0xc5, 0x30, 0x01, 0x67, 0x2b, 0xfe, 0xd7, 0xab, 0x76,
    0xca, 0x82, 0xc9, 0x7d, 0xfa, 0x59, 0x47, 0xf0, 0xad, 0xd4, 0xa2, 0xaf, 0x9c, 0xa4, 0x72, 0xc0,
    0xb7, 0xfd, 0x93, 0x26, 0x36, 0x3f, 0xf7, 0xcc, 0x34, 0xa5, 0xe5, 0xf1, 0x71, 0xd8, 0x31, 0x15,
    0x04, 0xc7, 0x23, 0xc3, 0x18, 0x96, 0x05, 0x9a, 0x07, 0x12, 0x80, 0xe2, 0xeb, 0x27, 0xb2, 0x75,
    0x09, 0x83, 0x2c, 0x1a, 0x1b, 0x6e, 0x5a, 0xa0, 0x52, 0x3b, 0xd6, 0xb3, 0x29, 0xe3, 0x2f, 0x84,
    0x53, 0xd1, 0x00, 0xed, 0x20, 0xfc, 0xb1, 0x5b, 0x6a, 0xcb, 0xbe, 0x39, 0x4a, 0x4c, 0x58, 0xcf,
    0xd0, 0xef, 0xaa, 0xfb, 0x43, 0x4d, 0x33, 0x85, 0x45, 0xf9, 0x02, 0x7f, 0x50, 0x3c, 0x9f, 0xa8,
    0x51, 0xa3, 0x40, 0x8f, 0x92, 0x9d, 0x38, 0xf5, 0xbc, 0xb6, 0xda, 0x21, 0x10, 0xff, 0xf3, 0xd2,
    0xcd, 0x0c, 0x13, 0xec, 0x5f, 0x97, 0x44, 0x17, 0xc4, 0xa7, 0x7e, 0x3d, 0x64, 0x5d, 0x19, 0x73,
    0x60, 0x81, 0x4f, 0xdc, 0x22, 0x2a, 0x90, 0x88, 0x46, 0xee, 0xb8, 0x14, 0xde, 0x5e, 0x0b, 0xdb,
    0xe0, 0x32, 0x3a, 0x0a, 0x49, 0x06, 0x24, 0x5c, 0xc2, 0xd3, 0xac, 0x62, 0x91, 0x95, 0xe4, 0x79,
    0xe7, 0xc8, 0x37, 0x6d, 0x8d, 0xd5, 0x4e, 0xa9, 0x6c, 0x56, 0xf4, 0xea, 0x65, 0x7a, 0xae, 0x08,
    0xba, 0x78, 0x25, 0x2e, 0x1c, 0xa6, 0xb4, 0xc6, 0xe8, 0xdd, 0x74, 0x1f, 0x4b, 0xbd, 0x8b, 0x8a,
    0x70, 0x3e, 0xb5, 0x66, 0x48, 0x03, 0xf6, 0x0e, 0x61, 0x35, 0x57, 0xb9, 0x86, 0xc1, 0x1d, 0x9e,
    0xe1, 0xf8, 0x98, 0x11, 0x69, 0xd9, 0x8e, 0x94, 0x9b, 0x1e, 0x87, 0xe9, 0xce, 0x55, 0x28, 0xdf,
    0x8c, 0xa1, 0x89, 0x0d, 0xbf, 0xe6, 0x42, 0x68, 0x41, 0x99, 0x2d, 0x0f, 0xb0, 0x54, 0xbb, 0x16,
};

constexpr std::array<std::uint8_t, 256> kInvSbox = {
    0x52, 0x09, 0x6a, 0xd5, 0x30, 0x36, 0xa5, 0x38, 0xbf, 0x40, 0xa3, 0x9e, 0x81, 0xf3, 0xd7, 0xfb,
    0x7c, 0xe3, 0x39, 0x82, 0x9b, 0x2f, 0xff, 0x87, 0x34, 0x8e, 0x43, 0x44, 0xc4, 0xde, 0xe9, 0xcb,
    0x54, 0x7b, 0x94, 0x32, 0xa6, 0xc2, 0x23, 0x3d, 0xee, 0x4c, 0x95, 0x0b, 0x42, 0xfa, 0xc3, 0x4e,
    0x08, 0x2e, 0xa1, 0x66, 0x28, 0xd9, 0x24, 0xb2, 0x76, 0x5b, 0xa2, 0x49, 0x6d, 0x8b, 0xd1, 0x25,
    0x72, 0xf8, 0xf6, 0x64, 0x86, 0x68, 0x98, 0x16, 0xd4, 0xa4, 0x5c, 0xcc, 0x5d, 0x65, 0xb6, 0x92,
    0x6c, 0x70, 0x48, 0x50, 0xfd, 0xed, 0xb9, 0xda, 0x5e, 0x15, 0x46, 0x57, 0xa7, 0x8d, 0x9d, 0x84,
    0x90, 0xd8, 0xab, 0x00, 0x8c, 0xbc, 0xd3, 0x0a, 0xf7, 0xe4, 0x58, 0x05, 0xb8, 0xb3, 0x45, 0x06,
    0xd0, 0x2c, 0x1e, 0x8f, 0xca, 0x3f, 0x0f, 0x02, 0xc1, 0xaf, 0xbd, 0x03, 0x01, 0x13, 0x8a, 0x6b,
    0x3a, 0x91, 0x11, 0x41, 0x4f, 0x67, 0xdc, 0xea, 0x97, 0xf2, 0xcf, 0xce, 0xf0, 0xb4, 0xe6, 0x73,
    0x96, 0xac, 0x74, 0x22, 0xe7, 0xad, 0x35, 0x85, 0xe2, 0xf9, 0x37, 0xe8, 0x1c, 0x75, 0xdf, 0x6e,
    0x47, 0xf1, 0x1a, 0x71, 0x1d, 0x29, 0xc5, 0x89, 0x6f, 0xb7, 0x62, 0x0e, 0xaa, 0x18, 0xbe, 0x1b,
    0xfc, 0x56, 0x3e, 0x4b, 0xc6, 0xd2, 0x79, 0x20, 0x9a, 0xdb, 0xc0, 0xfe, 0x78, 0xcd, 0x5a, 0xf4,
    0x1f, 0xdd, 0xa8, 0x33, 0x88, 0x07, 0xc7, 0x31, 0xb1, 0x12, 0x10, 0x59, 0x27, 0x80, 0xec, 0x5f,
    0x60, 0x51, 0x7f, 0xa9, 0x19, 0xb5, 0x4a, 0x0d, 0x2d, 0xe5, 0x7a, 0x9f, 0x93, 0xc9, 0x9c, 0xef,
    0xa0, 0xe0, 0x3b, 0x4d, 0xae, 0x2a, 0xf5, 0xb0, 0xc8, 0xeb, 0xbb, 0x3c, 0x83, 0x53, 0x99, 0x61,
    0x17, 0x2b, 0x04, 0x7e, 0xba, 0x77, 0xd6, 0x26, 0xe1, 0x69, 0x14, 0x63, 0x55, 0x21, 0x0c, 0x7d,
};

constexpr std::array<std::uint8_t, 11> kRcon = {0x00, 0x01, 0x02, 0x04, 0x08, 0x10,
                                                0x20, 0x40, 0x80, 0x1b, 0x36};

constexpr std::uint8_t xtime(std::uint8_t x) {
  return static_cast<std::uint8_t>((x << 1) ^ ((x & 0x80) ? 0x1b : 0x00));
}

constexpr std::uint8_t gmul(std::uint8_t a, std::uint8_t b) {
  std::uint8_t r = 0;
  while (b) {
    if (b & 1) r ^= a;
    a = xtime(a);
    b >>= 1;
  }
  return r;
}

void inv_sub_bytes(AesBlock& s) {
  for (auto& b : s) b = kInvSbox[b];
}

// State byte (row r, column c) lives at index 4c + r.
void inv_shift_rows(AesBlock& s) {
  AesBlock t = s;
  for (int r = 1; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) s[4 * ((c + r) % 4) + r] = t[4 * c + r];
  }
}

void inv_mix_columns(AesBlock& s) {
  for (int c = 0; c < 4; ++c) {
    std::uint8_t* col = &s[4 * c];
    const std::uint8_t a0 = col[0], a1 = col[1], a2 = col[2], a3 = col[3];
    col[0] = gmul(a0, 14) ^ gmul(a1, 11) ^ gmul(a2, 13) ^ gmul(a3, 9);
    col[1] = gmul(a0, 9) ^ gmul(a1, 14) ^ gmul(a2, 11) ^ gmul(a3, 13);
    col[2] = gmul(a0, 13) ^ gmul(a1, 9) ^ gmul(a2, 14) ^ gmul(a3, 11);
    col[3] = gmul(a0, 11) ^ gmul(a1, 13) ^ gmul(a2, 9) ^ gmul(a3, 14);
  }
}

}  // namespace

namespace aes_detail {

std::uint8_t sbox(std::uint8_t b) { return kSbox[b]; }

void sub_bytes(AesBlock& s) {
  for (auto& b : s) b = kSbox[b];
}

void shift_rows(AesBlock& s) {
  AesBlock t = s;
  for (int r = 1; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) s[4 * c + r] = t[4 * ((c + r) % 4) + r];
  }
}

void mix_columns(AesBlock& s) {
  for (int c = 0; c < 4; ++c) {
    std::uint8_t* col = &s[4 * c];
    const std::uint8_t a0 = col[0], a1 = col[1], a2 = col[2], a3 = col[3];
    col[0] = xtime(a0) ^ (xtime(a1) ^ a1) ^ a2 ^ a3;
    col[1] = a0 ^ xtime(a1) ^ (xtime(a2) ^ a2) ^ a3;
    col[2] = a0 ^ a1 ^ xtime(a2) ^ (xtime(a3) ^ a3);
    col[3] = (xtime(a0) ^ a0) ^ a1 ^ a2 ^ xtime(a3);
  }
}

void add_round_key(AesBlock& s, const AesBlock& rk) {
  for (std::size_t i = 0; i < s.size(); ++i) s[i] ^= rk[i];
}

}  // namespace aes_detail

using namespace aes_detail;

AesKeySchedule expand_key(const AesKey& key) {
  // 44 words of 4 bytes, w[i] = w[i-4] ^ temp.
  std::array<std::array<std::uint8_t, 4>, 44> w{};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) w[i][j] = key[4 * i + j];
  }
  for (int i = 4; i < 44; ++i) {
    auto temp = w[i - 1];
    if (i % 4 == 0) {
      const std::uint8_t first = temp[0];
      temp = {kSbox[temp[1]], kSbox[temp[2]], kSbox[temp[3]], kSbox[first]};
      temp[0] ^= kRcon[i / 4];
    }
    for (int j = 0; j < 4; ++j) w[i][j] = w[i - 4][j] ^ temp[j];
  }
  AesKeySchedule ks;
  for (int r = 0; r <= AesKeySchedule::kRounds; ++r) {
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) ks.round_keys[r][4 * i + j] = w[4 * r + i][j];
    }
  }
  return ks;
}

AesBlock aes_round(const AesBlock& state, const AesBlock& round_key, bool last) {
  AesBlock s = state;
  sub_bytes(s);
  shift_rows(s);
  if (!last) mix_columns(s);
  add_round_key(s, round_key);
  return s;
}

AesBlock encrypt_block(const AesBlock& block, const AesKeySchedule& ks) {
  AesBlock s = block;
  add_round_key(s, ks.round_keys[0]);
  for (int r = 1; r < AesKeySchedule::kRounds; ++r) s = aes_round(s, ks.round_keys[r], false);
  return aes_round(s, ks.round_keys[AesKeySchedule::kRounds], true);
}

AesBlock decrypt_block(const AesBlock& block, const AesKeySchedule& ks) {
  AesBlock s = block;
  add_round_key(s, ks.round_keys[AesKeySchedule::kRounds]);
  for (int r = AesKeySchedule::kRounds - 1; r >= 1; --r) {
    inv_shift_rows(s);
    inv_sub_bytes(s);
    add_round_key(s, ks.round_keys[r]);
    inv_mix_columns(s);
  }
  inv_shift_rows(s);
  inv_sub_bytes(s);
  add_round_key(s, ks.round_keys[0]);
  return s;
}

std::vector<std::uint8_t> aes_cbc_encrypt(std::span<const std::uint8_t> data, const AesKey& key,
                                          const AesBlock& iv) {
  const AesKeySchedule ks = expand_key(key);
  const std::size_t pad = 16 - data.size() % 16;
  std::vector<std::uint8_t> out(data.begin(), data.end());
  out.insert(out.end(), pad, static_cast<std::uint8_t>(pad));

  AesBlock chain = iv;
  for (std::size_t off = 0; off < out.size(); off += 16) {
    AesBlock b;
    for (int i = 0; i < 16; ++i) b[i] = out[off + i] ^ chain[i];
    chain = encrypt_block(b, ks);
    std::copy(chain.begin(), chain.end(), out.begin() + static_cast<std::ptrdiff_t>(off));
  }
  return out;
}

std::vector<std::uint8_t> aes_cbc_decrypt(std::span<const std::uint8_t> data, const AesKey& key,
                                          const AesBlock& iv) {
  if (data.empty() || data.size() % 16 != 0) {
    throw Error(Errc::BadLength,
                "ciphertext length " + std::to_string(data.size()) + " is not a positive multiple of 16");
  }
  const AesKeySchedule ks = expand_key(key);
  std::vector<std::uint8_t> out(data.size());
  AesBlock chain = iv;
  for (std::size_t off = 0; off < data.size(); off += 16) {
    AesBlock c;
    std::copy_n(data.begin() + static_cast<std::ptrdiff_t>(off), 16, c.begin());
    const AesBlock p = decrypt_block(c, ks);
    for (int i = 0; i < 16; ++i) out[off + i] = p[i] ^ chain[i];
    chain = c;
  }

  const std::uint8_t pad = out.back();
  if (pad == 0 || pad > 16) throw Error(Errc::BadPadding, "invalid PKCS#7 pad byte");
  for (std::size_t i = out.size() - pad; i < out.size(); ++i) {
    if (out[i] != pad) throw Error(Errc::BadPadding, "inconsistent PKCS#7 padding");
  }
  out.resize(out.size() - pad);
  return out;
}

}  // namespace rdh
