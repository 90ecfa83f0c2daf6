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

#include "designprobe/common/error.h"

namespace designprobe {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kIo:
      return "io";
    case ErrorCode::kParse:
      return "parse";
    case ErrorCode::kPathNotFound:
      return "path-not-found";
    case ErrorCode::kZeroParseableUnits:
      return "zero-parseable-units";
    case ErrorCode::kCyclicInheritance:
      return "cyclic-inheritance";
    case ErrorCode::kOverlappingEdits:
      return "overlapping-edits";
    case ErrorCode::kReparseFailure:
      return "reparse-failure";
    case ErrorCode::kUnknownNode:
      return "unknown-node";
    case ErrorCode::kNoAnalyzedMethods:
      return "no-analyzed-methods";
    case ErrorCode::kInsufficientDisjointClasses:
      return "insufficient-disjoint-classes";
    case ErrorCode::kNoImplementor:
      return "no-implementor";
    case ErrorCode::kUnreachable:
      return "unreachable";
    case ErrorCode::kNameCollision:
      return "name-collision";
    case ErrorCode::kPreconditionViolation:
      return "precondition-violation";
    case ErrorCode::kInsufficientMethods:
      return "insufficient-methods";
    case ErrorCode::kZeroTotal:
      return "zero-total";
    case ErrorCode::kMissingGroundTruthEntity:
      return "missing-ground-truth-entity";
    case ErrorCode::kClassTooSmall:
      return "class-too-small";
    case ErrorCode::kUnboundPlaceholder:
      return "unbound-placeholder";
    case ErrorCode::kEmptyPopulation:
      return "empty-population";
    case ErrorCode::kTransportFailure:
      return "transport-failure";
    case ErrorCode::kMalformedAnswer:
      return "malformed-answer";
    case ErrorCode::kEmptyTruth:
      return "empty-truth";
    case ErrorCode::kUniverseMismatch:
      return "universe-mismatch";
    case ErrorCode::kOverlappingBlocks:
      return "overlapping-blocks";
    case ErrorCode::kVariantMismatch:
      return "variant-mismatch";
    case ErrorCode::kDanglingScore:
      return "dangling-score";
    case ErrorCode::kEmptyEntityList:
      return "empty-entity-list";
    case ErrorCode::kDanglingId:
      return "dangling-id";
    case ErrorCode::kMissingInputs:
      return "missing-inputs";
    case ErrorCode::kConfigInvalid:
      return "config-invalid";
  }
  return "unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
      code_(code) {}

InsufficientDisjointClasses::InsufficientDisjointClasses(std::size_t wanted,
                                                         std::size_t available)
    : Error(ErrorCode::kInsufficientDisjointClasses,
            "wanted " + std::to_string(wanted) + " disjoint classes, only " +
                std::to_string(available) + " available"),
      wanted_(wanted),
      available_(available) {}

}  // namespace designprobe
