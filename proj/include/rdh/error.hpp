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

#include <stdexcept>
#include <string>
#include <string_view>

namespace rdh {

enum class Errc {
  // bitio
  OutOfBits,
  // huffman
  EmptyInput,
  TooLarge,
  HuffBadMagic,
  CorruptTable,
  HuffTruncated,
  // aes
  BadLength,
  BadPadding,
  // blowfish
  BadKeyLength,
  // imagefmt
  ImageBadMagic,
  BadMaxval,
  ImageTruncated,
  MalformedHeader,
  DimensionMismatch,
  // rdh_core
  NoZeroBin,
  ZeroBinNotEmpty,
  CapacityExceeded,
  PayloadOverrun,
  OutOfRange,
  // payload frames and side header
  FrameBadMagic,
  BadVersion,
  BadCrc,
  FrameTruncated,
  CoverTooSmall,
  HeaderChecksum,
  MissingSegment,
  // video
  BadSignature,
  UnsupportedColorspace,
  TruncatedFrame,
  // key material supplied as text
  BadKeyEncoding,
};

// Coarse grouping used by front ends to pick an exit status.
enum class ErrorClass { Capacity, Integrity, Format, Key, Other };

std::string_view errc_name(Errc code) noexcept;
ErrorClass error_class(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace rdh
