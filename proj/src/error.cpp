// Copyright 2026 The stancelab Authors.
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

#include "stancelab/error.hpp"

namespace stancelab {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMissingFile: return "MissingFile";
    case ErrorCode::kParse: return "ParseError";
    case ErrorCode::kDuplicateId: return "DuplicateId";
    case ErrorCode::kInvalidEnum: return "InvalidEnum";
    case ErrorCode::kEmptyDocument: return "EmptyDocument";
    case ErrorCode::kEmptyResult: return "EmptyResult";
    case ErrorCode::kEmptySentence: return "EmptySentence";
    case ErrorCode::kMalformedResponse: return "MalformedResponse";
    case ErrorCode::kBackend: return "BackendFailure";
    case ErrorCode::kCacheWriteFailure: return "CacheWriteFailure";
    case ErrorCode::kSampleTooLarge: return "SampleTooLarge";
    case ErrorCode::kUnknownSentence: return "UnknownSentence";
    case ErrorCode::kUnknownSession: return "UnknownSession";
    case ErrorCode::kItemSetMismatch: return "ItemSetMismatch";
    case ErrorCode::kIncompleteSession: return "IncompleteSession";
    case ErrorCode::kDegenerateMarginals: return "DegenerateMarginals";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kEmptyInput: return "EmptyInput";
    case ErrorCode::kDegenerateMargin: return "DegenerateMargin";
    case ErrorCode::kLowExpectedCount: return "LowExpectedCount";
    case ErrorCode::kUnsupportedDf: return "UnsupportedDf";
    case ErrorCode::kUnresolvedSentence: return "UnresolvedSentence";
    case ErrorCode::kInvalidConfig: return "InvalidConfig";
    case ErrorCode::kMissingStageOutput: return "MissingStageOutput";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace stancelab
