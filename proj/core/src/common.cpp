// Copyright 2026 The stforge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "stforge/common.hpp"

namespace stforge {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::MissingFile: return "MissingFile";
    case ErrorCode::DuplicateUttId: return "DuplicateUttId";
    case ErrorCode::MalformedLine: return "MalformedLine";
    case ErrorCode::MissingEntry: return "MissingEntry";
    case ErrorCode::TooShort: return "TooShort";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::VocabTooSmall: return "VocabTooSmall";
    case ErrorCode::IdOutOfRange: return "IdOutOfRange";
    case ErrorCode::MissingFeature: return "MissingFeature";
    case ErrorCode::MissingText: return "MissingText";
    case ErrorCode::UtteranceTooLong: return "UtteranceTooLong";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::NotScalar: return "NotScalar";
    case ErrorCode::CacheMismatch: return "CacheMismatch";
    case ErrorCode::InfeasibleTarget: return "InfeasibleTarget";
    case ErrorCode::MissingTranscript: return "MissingTranscript";
    case ErrorCode::NonFiniteLoss: return "NonFiniteLoss";
    case ErrorCode::IncompatibleCheckpoints: return "IncompatibleCheckpoints";
    case ErrorCode::EmptyTransfer: return "EmptyTransfer";
    case ErrorCode::VocabMismatch: return "VocabMismatch";
    case ErrorCode::StateMismatch: return "StateMismatch";
    case ErrorCode::StageFailed: return "StageFailed";
    case ErrorCode::InvalidStageRange: return "InvalidStageRange";
    case ErrorCode::TreatmentMismatch: return "TreatmentMismatch";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::BadConfig: return "BadConfig";
  }
  return "UnknownError";
}

}  // namespace stforge
