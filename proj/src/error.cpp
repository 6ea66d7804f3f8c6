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

#include "rdh/error.hpp"

namespace rdh {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::OutOfBits: return "OutOfBits";
    case Errc::EmptyInput: return "EmptyInput";
    case Errc::TooLarge: return "TooLarge";
    case Errc::HuffBadMagic: return "BadMagic";
    case Errc::CorruptTable: return "CorruptTable";
    case Errc::HuffTruncated: return "Truncated";
    case Errc::BadLength: return "BadLength";
    case Errc::BadPadding: return "BadPadding";
    case Errc::BadKeyLength: return "BadKeyLength";
    case Errc::ImageBadMagic: return "BadMagic";
    case Errc::BadMaxval: return "BadMaxval";
    case Errc::ImageTruncated: return "Truncated";
    case Errc::MalformedHeader: return "MalformedHeader";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::NoZeroBin: return "NoZeroBin";
    case Errc::ZeroBinNotEmpty: return "ZeroBinNotEmpty";
    case Errc::CapacityExceeded: return "CapacityExceeded";
    case Errc::PayloadOverrun: return "PayloadOverrun";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::FrameBadMagic: return "BadMagic";
    case Errc::BadVersion: return "BadVersion";
    case Errc::BadCrc: return "BadCrc";
    case Errc::FrameTruncated: return "Truncated";
    case Errc::CoverTooSmall: return "CoverTooSmall";
    case Errc::HeaderChecksum: return "HeaderChecksum";
    case Errc::MissingSegment: return "MissingSegment";
    case Errc::BadSignature: return "BadSignature";
    case Errc::UnsupportedColorspace: return "UnsupportedColorspace";
    case Errc::TruncatedFrame: return "TruncatedFrame";
    case Errc::BadKeyEncoding: return "BadKeyEncoding";
  }
  return "Unknown";
}

ErrorClass error_class(Errc code) noexcept {
  switch (code) {
    case Errc::CapacityExceeded:
    case Errc::CoverTooSmall:
    case Errc::NoZeroBin:
      return ErrorClass::Capacity;
    case Errc::FrameBadMagic:
    case Errc::BadVersion:
    case Errc::BadCrc:
    case Errc::FrameTruncated:
    case Errc::HeaderChecksum:
    case Errc::BadPadding:
    case Errc::MissingSegment:
    case Errc::PayloadOverrun:
    case Errc::HuffBadMagic:
    case Errc::CorruptTable:
    case Errc::HuffTruncated:
      return ErrorClass::Integrity;
    case Errc::ImageBadMagic:
    case Errc::BadMaxval:
    case Errc::ImageTruncated:
    case Errc::MalformedHeader:
    case Errc::DimensionMismatch:
    case Errc::BadSignature:
    case Errc::UnsupportedColorspace:
    case Errc::TruncatedFrame:
      return ErrorClass::Format;
    case Errc::BadKeyLength:
    case Errc::BadKeyEncoding:
      return ErrorClass::Key;
    default:
      return ErrorClass::Other;
  }
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

}  // namespace rdh
