// Copyright 2026 The qmat Authors.
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
#include <string_view>

namespace qmat {

enum class Errc {
  kNonPrimeCharacteristic,
  kReducibleModulus,
  kSizeCapExceeded,
  kDivisionByZero,
  kMixedFields,
  kLatticeTooLarge,
  kColumnCountMismatch,
  kMixedLattices,
  kOutOfRange,
  kSingularMatrix,
  kNotNested,
  kTableSizeMismatch,
  kAxiomsFailed,
  kSubspaceNotInLattice,
  kSearchCapExceeded,
  kFlagsMissing,
  kDimensionMismatch,
  kElementInBaseField,
  kWrongAmbient,
  kTooLargeForDiagram,
  kParseError,
  kIoError,
};

std::string_view ErrcName(Errc code);

// All library failures are reported through this exception type; the C API
// maps `code()` onto its status enum.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(ErrcName(code)) + ": " + what),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace qmat
