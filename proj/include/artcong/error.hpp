// Copyright 2026 The artcong Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace artcong {

/// Error categories raised by the core library. The numeric values are the
/// status codes surfaced through the C API (see artcong.h).
enum class ErrorCode : int {
  kSyntax = 1,
  kInvalidLabel = 2,
  kDuplicatePair = 3,
  kVertexOutOfRange = 4,
  kUnknownName = 5,
  kRankOutOfRange = 6,
  kDimensionMismatch = 7,
  kNonUnitValue = 8,
  kNotUnimodular = 9,
  kBadModulus = 10,
  kModulusMismatch = 11,
  kNotSmall = 12,
  kBadIndex = 13,
  kInverseInCoxeterMode = 14,
  kCapExceeded = 15,
  kNotSpherical = 16,
  kNotConnected = 17,
  kNotADE = 18,
  kTableInconsistent = 19,
  kNotAffineADE = 20,
  kHypothesisViolated = 21,
  kBadLevel = 22,
  kUnknownType = 23,
  kInvalidArgument = 24,
  kOverflow = 25,
  kIo = 26,
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace artcong
