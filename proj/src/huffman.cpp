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
#include <limits>
#include <queue>
#include <string>

#include "rdh/bitio.hpp"
#include "rdh/error.hpp"

namespace rdh {
namespace {

constexpr std::uint8_t kMagic[4] = {'H', 'U', 'F', '1'};
constexpr std::size_t kHeaderSize = 10;

struct Node {
  std::uint64_t weight;
  std::uint8_t min_symbol;
  int index;
};

struct NodeAfter {
  bool operator()(const Node& a, const Node& b) const {
    if (a.weight != b.weight) return a.weight > b.weight;
    return a.min_symbol > b.min_symbol;
  }
};

// Symbols sorted by (length, symbol value): the canonical order.
std::vector<std::uint8_t> canonical_order(const std::array<std::uint8_t, 256>& lengths) {
  std::vector<std::uint8_t> order;
  for (int s = 0; s < 256; ++s) {
    if (lengths[s] != 0) order.push_back(static_cast<std::uint8_t>(s));
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](std::uint8_t a, std::uint8_t b) { return lengths[a] < lengths[b]; });
  return order;
}

std::uint32_t read_be32(const std::uint8_t* p) {
  return (std::uint32_t{p[0]} << 24) | (std::uint32_t{p[1]} << 16) |
         (std::uint32_t{p[2]} << 8) | std::uint32_t{p[3]};
}

}  // namespace

std::size_t CodeTable::symbol_count() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(lengths.begin(), lengths.end(), [](std::uint8_t l) { return l != 0; }));
}

FrequencyTable build_frequency_table(std::span<const std::uint8_t> data) {
  FrequencyTable freq{};
  for (std::uint8_t b : data) ++freq[b];
  return freq;
}

CodeTable build_canonical_codes(const FrequencyTable& freq) {
  // Tree stored as parent links; leaves are 0..255, internal nodes follow.
  std::vector<int> parent(256, -1);
  std::priority_queue<Node, std::vector<Node>, NodeAfter> queue;
  for (int s = 0; s < 256; ++s) {
    if (freq[s] != 0) queue.push({freq[s], static_cast<std::uint8_t>(s), s});
  }
  if (queue.empty()) throw Error(Errc::EmptyInput, "no symbols to code");

  std::array<std::uint8_t, 256> lengths{};
  if (queue.size() == 1) {
    lengths[queue.top().min_symbol] = 1;
    return assign_canonical_codes(lengths);
  }

  while (queue.size() > 1) {
    const Node a = queue.top();
    queue.pop();
    const Node b = queue.top();
    queue.pop();
    const int merged = static_cast<int>(parent.size());
    parent.push_back(-1);
    parent[a.index] = merged;
    parent[b.index] = merged;
    queue.push({a.weight + b.weight, std::min(a.min_symbol, b.min_symbol), merged});
  }

  for (int s = 0; s < 256; ++s) {
    if (freq[s] == 0) continue;
    unsigned depth = 0;
    for (int n = s; parent[n] != -1; n = parent[n]) ++depth;
    if (depth > 255) throw Error(Errc::TooLarge, "code length exceeds 255");
    lengths[s] = static_cast<std::uint8_t>(depth);
  }
  return assign_canonical_codes(lengths);
}

CodeTable assign_canonical_codes(const std::array<std::uint8_t, 256>& lengths) {
  CodeTable table;
  table.lengths = lengths;
  const auto order = canonical_order(lengths);
  if (order.empty()) return table;

  // Kraft check in exact arithmetic, scaled by 2^max_len. Lengths above 64
  // cannot be represented as codewords here; such tables are rejected.
  const unsigned max_len = lengths[order.back()];
  if (max_len > 64) throw Error(Errc::CorruptTable, "code length above 64");
  const unsigned __int128 full = static_cast<unsigned __int128>(1) << max_len;
  unsigned __int128 kraft = 0;
  for (std::uint8_t s : order) kraft += static_cast<unsigned __int128>(1) << (max_len - lengths[s]);
  if (kraft > full) throw Error(Errc::CorruptTable, "Kraft inequality violated");
  if (order.size() >= 2 && kraft != full) {
    throw Error(Errc::CorruptTable, "incomplete prefix code");
  }

  std::uint64_t code = 0;
  unsigned prev_len = lengths[order.front()];
  for (std::size_t i = 0; i < order.size(); ++i) {
    const unsigned len = lengths[order[i]];
    if (i > 0) {
      ++code;
      code <<= (len - prev_len);
    } else {
      code = 0;
    }
    table.codes[order[i]] = code;
    prev_len = len;
  }
  return table;
}

std::vector<std::uint8_t> HuffContainer::serialize() const {
  std::vector<std::uint8_t> out(kMagic, kMagic + 4);
  out.push_back(static_cast<std::uint8_t>(original_len >> 24));
  out.push_back(static_cast<std::uint8_t>(original_len >> 16));
  out.push_back(static_cast<std::uint8_t>(original_len >> 8));
  out.push_back(static_cast<std::uint8_t>(original_len));
  const auto count = static_cast<std::uint16_t>(table.size());
  out.push_back(static_cast<std::uint8_t>(count >> 8));
  out.push_back(static_cast<std::uint8_t>(count));
  for (const auto& [symbol, length] : table) {
    out.push_back(symbol);
    out.push_back(length);
  }
  out.insert(out.end(), bitstream.begin(), bitstream.end());
  return out;
}

HuffContainer HuffContainer::parse(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 4 || !std::equal(kMagic, kMagic + 4, bytes.begin())) {
    throw Error(Errc::HuffBadMagic, "container does not start with HUF1");
  }
  if (bytes.size() < kHeaderSize) throw Error(Errc::HuffTruncated, "short header");
  HuffContainer c;
  c.original_len = read_be32(bytes.data() + 4);
  const std::size_t count = (std::size_t{bytes[8]} << 8) | bytes[9];
  if (count > 256) throw Error(Errc::CorruptTable, "more than 256 symbols");
  if (bytes.size() < kHeaderSize + 2 * count) throw Error(Errc::HuffTruncated, "short table");
  for (std::size_t i = 0; i < count; ++i) {
    c.table.emplace_back(bytes[kHeaderSize + 2 * i], bytes[kHeaderSize + 2 * i + 1]);
  }
  c.bitstream.assign(bytes.begin() + static_cast<std::ptrdiff_t>(kHeaderSize + 2 * count),
                     bytes.end());
  return c;
}

HuffContainer huffman_compress(std::span<const std::uint8_t> data) {
  if (data.size() > std::numeric_limits<std::uint32_t>::max()) {
    throw Error(Errc::TooLarge, "input of " + std::to_string(data.size()) + " bytes");
  }
  HuffContainer c;
  c.original_len = static_cast<std::uint32_t>(data.size());
  if (data.empty()) return c;

  const CodeTable codes = build_canonical_codes(build_frequency_table(data));
  for (std::uint8_t s : canonical_order(codes.lengths)) c.table.emplace_back(s, codes.lengths[s]);

  BitWriter w;
  for (std::uint8_t b : data) w.write_bits(codes.codes[b], codes.lengths[b]);
  c.bitstream = std::move(w).take();
  return c;
}

std::vector<std::uint8_t> huffman_decompress(const HuffContainer& c) {
  std::vector<std::uint8_t> out;
  if (c.original_len == 0) return out;
  if (c.table.empty()) throw Error(Errc::CorruptTable, "empty table with nonzero length");

  std::array<std::uint8_t, 256> lengths{};
  for (const auto& [symbol, length] : c.table) {
    if (length == 0 || lengths[symbol] != 0) {
      throw Error(Errc::CorruptTable, "zero length or duplicate symbol");
    }
    lengths[symbol] = length;
  }
  const CodeTable codes = assign_canonical_codes(lengths);
  const auto order = canonical_order(lengths);

  // Canonical decode: per length, the first code value and its offset into
  // the canonical symbol order.
  const unsigned max_len = lengths[order.back()];
  std::vector<std::uint64_t> first_code(max_len + 1, 0);
  std::vector<std::size_t> first_index(max_len + 1, 0);
  std::vector<std::size_t> count_at(max_len + 1, 0);
  for (std::size_t i = order.size(); i-- > 0;) {
    const unsigned len = lengths[order[i]];
    first_code[len] = codes.codes[order[i]];
    first_index[len] = i;
    ++count_at[len];
  }

  out.reserve(c.original_len);
  BitReader reader(c.bitstream);
  while (out.size() < c.original_len) {
    std::uint64_t code = 0;
    unsigned len = 0;
    for (;;) {
      if (reader.remaining() == 0) {
        throw Error(Errc::HuffTruncated, "bitstream ended after " + std::to_string(out.size()) +
                                             " of " + std::to_string(c.original_len) +
                                             " symbols");
      }
      code = (code << 1) | reader.read_bit();
      ++len;
      if (len > max_len) throw Error(Errc::CorruptTable, "invalid codeword in bitstream");
      if (count_at[len] != 0 && code >= first_code[len] &&
          code - first_code[len] < count_at[len]) {
        out.push_back(order[first_index[len] + static_cast<std::size_t>(code - first_code[len])]);
        break;
      }
    }
  }
  return out;
}

}  // namespace rdh
