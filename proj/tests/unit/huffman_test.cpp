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

#include "rdh/huffman.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string_view>

#include <gtest/gtest.h>

#include "rdh/error.hpp"

namespace rdh {
namespace {

std::vector<std::uint8_t> bytes_of(std::string_view s) { return {s.begin(), s.end()}; }

// Minimum total code length over every complete prefix code, by enumerating
// all length vectors (each length in 1..k-1) that satisfy Kraft equality.
std::uint64_t optimal_total_bits(const std::vector<std::uint64_t>& weights) {
  const std::size_t k = weights.size();
  if (k == 1) return weights[0];  // lone symbols are coded with one bit
  const unsigned max_len = static_cast<unsigned>(k - 1);
  std::vector<unsigned> len(k, 1);
  std::uint64_t best = UINT64_MAX;
  for (;;) {
    std::uint64_t kraft = 0;
    for (unsigned l : len) kraft += 1ull << (max_len - l);
    if (kraft == (1ull << max_len)) {
      std::uint64_t total = 0;
      for (std::size_t i = 0; i < k; ++i) total += weights[i] * len[i];
      best = std::min(best, total);
    }
    std::size_t i = 0;
    while (i < k && ++len[i] > max_len) len[i++] = 1;
    if (i == k) break;
  }
  return best;
}

std::uint64_t coded_bits(const FrequencyTable& freq, const CodeTable& codes) {
  std::uint64_t total = 0;
  for (int s = 0; s < 256; ++s) total += freq[s] * codes.lengths[s];
  return total;
}

TEST(FrequencyTableTest, Counts) {
  EXPECT_EQ(build_frequency_table({}), FrequencyTable{});
  const auto aaa = bytes_of("aaa");
  const auto f1 = build_frequency_table(aaa);
  EXPECT_EQ(f1['a'], 3u);
  EXPECT_EQ(std::accumulate(f1.begin(), f1.end(), std::uint64_t{0}), 3u);
  const auto abra = bytes_of("abracadabra");
  const auto f2 = build_frequency_table(abra);
  EXPECT_EQ(f2['a'], 5u);
  EXPECT_EQ(f2['b'], 2u);
  EXPECT_EQ(f2['r'], 2u);
  EXPECT_EQ(f2['c'], 1u);
  EXPECT_EQ(f2['d'], 1u);
  EXPECT_EQ(std::accumulate(f2.begin(), f2.end(), std::uint64_t{0}), 11u);
}

TEST(CanonicalCodesTest, AbracadabraLengthsAndTotal) {
  const auto freq = build_frequency_table(bytes_of("abracadabra"));
  const CodeTable t = build_canonical_codes(freq);
  EXPECT_EQ(t.lengths['a'], 1);
  EXPECT_EQ(t.lengths['r'], 2);
  EXPECT_EQ(t.lengths['b'], 3);
  EXPECT_EQ(t.lengths['c'], 4);
  EXPECT_EQ(t.lengths['d'], 4);
  EXPECT_EQ(coded_bits(freq, t), 23u);
  EXPECT_EQ(optimal_total_bits({5, 2, 2, 1, 1}), 23u);
  // Canonical: a=0, r=10, b=110, c=1110, d=1111.
  EXPECT_EQ(t.codes['a'], 0b0u);
  EXPECT_EQ(t.codes['r'], 0b10u);
  EXPECT_EQ(t.codes['b'], 0b110u);
  EXPECT_EQ(t.codes['c'], 0b1110u);
  EXPECT_EQ(t.codes['d'], 0b1111u);
}

TEST(CanonicalCodesTest, SingleSymbolGetsLengthOne) {
  FrequencyTable f{};
  f['a'] = 7;
  const CodeTable t = build_canonical_codes(f);
  EXPECT_EQ(t.lengths['a'], 1);
  EXPECT_EQ(t.codes['a'], 0u);
  EXPECT_EQ(t.symbol_count(), 1u);
}

TEST(CanonicalCodesTest, TwoEqualSymbols) {
  FrequencyTable f{};
  f['x'] = 4;
  f['y'] = 4;
  const CodeTable t = build_canonical_codes(f);
  EXPECT_EQ(t.lengths['x'], 1);
  EXPECT_EQ(t.lengths['y'], 1);
  EXPECT_EQ(t.codes['x'], 0u);
  EXPECT_EQ(t.codes['y'], 1u);
}

TEST(CanonicalCodesTest, EmptyInputRejected) {
  try {
    build_canonical_codes(FrequencyTable{});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::EmptyInput);
  }
}

TEST(CanonicalCodesTest, KraftEqualityOverAllSymbols) {
  std::mt19937_64 rng(3);
  FrequencyTable f{};
  for (auto& c : f) c = 1 + rng() % 1000;
  const CodeTable t = build_canonical_codes(f);
  long double kraft = 0;
  for (int s = 0; s < 256; ++s) kraft += std::ldexp(1.0L, -t.lengths[s]);
  EXPECT_EQ(kraft, 1.0L);
}

TEST(HuffmanTest, EmptyInput) {
  const HuffContainer c = huffman_compress({});
  EXPECT_EQ(c.original_len, 0u);
  EXPECT_TRUE(c.table.empty());
  EXPECT_TRUE(c.bitstream.empty());
  EXPECT_EQ(c.serialize(), (std::vector<std::uint8_t>{'H', 'U', 'F', '1', 0, 0, 0, 0, 0, 0}));
  EXPECT_TRUE(huffman_decompress(c).empty());
}

TEST(HuffmanTest, AbracadabraContainer) {
  const auto data = bytes_of("abracadabra");
  const HuffContainer c = huffman_compress(data);
  EXPECT_EQ(c.original_len, 11u);
  EXPECT_EQ(c.bitstream.size(), 3u);  // 23 bits, last byte padded
  // a r b c d, then "abracadabra" = 0 110 10 0 1110 0 1111 0 110 10 0
  EXPECT_EQ(c.bitstream, (std::vector<std::uint8_t>{0b01101001, 0b11001111, 0b01101000}));
  const auto bytes = c.serialize();
  EXPECT_EQ(bytes.size(), 10u + 2 * 5 + 3);
  EXPECT_EQ(bytes[9], 5);
  EXPECT_EQ(huffman_decompress(HuffContainer::parse(bytes)), data);
}

TEST(HuffmanTest, RepeatedByteCostsOneBitEach) {
  const std::vector<std::uint8_t> data(1024, 0x5A);
  const HuffContainer c = huffman_compress(data);
  EXPECT_EQ(c.bitstream.size(), 128u);
  EXPECT_EQ(huffman_decompress(c), data);
}

TEST(HuffmanTest, BadMagic) {
  auto bytes = huffman_compress(bytes_of("hello")).serialize();
  bytes[0] = 'X';
  try {
    HuffContainer::parse(bytes);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::HuffBadMagic);
  }
}

TEST(HuffmanTest, KraftViolationIsCorruptTable) {
  HuffContainer c = huffman_compress(bytes_of("abracadabra"));
  c.table[1].second = 1;  // two length-1 codes plus more symbols
  try {
    huffman_decompress(c);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::CorruptTable);
  }
}

TEST(HuffmanTest, TruncatedBitstream) {
  HuffContainer c = huffman_compress(bytes_of("abracadabra"));
  c.bitstream.pop_back();
  try {
    huffman_decompress(c);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::HuffTruncated);
  }
}

TEST(HuffmanProperty, RoundTripThousandCases) {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 1000; ++i) {
    std::size_t len;
    switch (i % 4) {
      case 0: len = 0; break;
      case 1: len = 1; break;
      default: len = rng() % 600; break;
    }
    const unsigned alphabet = 1 + static_cast<unsigned>(rng() % 256);
    std::vector<std::uint8_t> data(len);
    if (i % 7 == 0) {
      std::fill(data.begin(), data.end(), static_cast<std::uint8_t>(rng()));
    } else {
      for (auto& b : data) b = static_cast<std::uint8_t>(rng() % alphabet);
    }
    const auto bytes = huffman_compress(data).serialize();
    ASSERT_EQ(huffman_decompress(HuffContainer::parse(bytes)), data) << "case " << i;
    ASSERT_EQ(huffman_compress(data).serialize(), bytes);
  }
}

TEST(HuffmanProperty, MatchesExhaustiveOptimum) {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 300; ++i) {
    const std::size_t k = 1 + rng() % 6;
    std::vector<std::uint8_t> symbols;
    while (symbols.size() < k) {
      const auto s = static_cast<std::uint8_t>(rng());
      if (std::find(symbols.begin(), symbols.end(), s) == symbols.end()) symbols.push_back(s);
    }
    std::vector<std::uint8_t> data;
    std::vector<std::uint64_t> weights;
    for (auto s : symbols) {
      const std::uint64_t w = 1 + rng() % 20;
      weights.push_back(w);
      data.insert(data.end(), w, s);
    }
    std::shuffle(data.begin(), data.end(), rng);
    const auto freq = build_frequency_table(data);
    const std::uint64_t total = coded_bits(freq, build_canonical_codes(freq));
    ASSERT_EQ(total, optimal_total_bits(weights)) << "case " << i;
    ASSERT_EQ(huffman_compress(data).bitstream.size(), (total + 7) / 8);
  }
}

}  // namespace
}  // namespace rdh
