// Copyright 2026 The DesignProbe Authors
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

#ifndef DESIGNPROBE_COMMON_ERROR_H_
#define DESIGNPROBE_COMMON_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace designprobe {

// One code per documented failure mode across the toolchain.
enum class ErrorCode {
  kIo,
  kParse,
  kPathNotFound,
  kZeroParseableUnits,
  kCyclicInheritance,
  kOverlappingEdits,
  kReparseFailure,
  kUnknownNode,
  kNoAnalyzedMethods,
  kInsufficientDisjointClasses,
  kNoImplementor,
  kUnreachable,
  kNameCollision,
  kPreconditionViolation,
  kInsufficientMethods,
  kZeroTotal,
  kMissingGroundTruthEntity,
  kClassTooSmall,
  kUnboundPlaceholder,
  kEmptyPopulation,
  kTransportFailure,
  kMalformedAnswer,
  kEmptyTruth,
  kUniverseMismatch,
  kOverlappingBlocks,
  kVariantMismatch,
  kDanglingScore,
  kEmptyEntityList,
  kDanglingId,
  kMissingInputs,
  kConfigInvalid,
};

std::string_view ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Raised by distractor selection; carries how many disjoint classes exist.
class InsufficientDisjointClasses : public Error {
 public:
  InsufficientDisjointClasses(std::size_t wanted, std::size_t available);

  std::size_t wanted() const { return wanted_; }
  std::size_t available() const { return available_; }

 private:
  std::size_t wanted_;
  std::size_t available_;
};

}  // namespace designprobe

#endif  // DESIGNPROBE_COMMON_ERROR_H_
