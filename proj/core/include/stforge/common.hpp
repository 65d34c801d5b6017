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

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace stforge {

enum class ErrorCode {
  // corpus
  MissingFile,
  DuplicateUttId,
  MalformedLine,
  MissingEntry,
  // frontend
  TooShort,
  EmptyInput,
  // subword
  VocabTooSmall,
  IdOutOfRange,
  // manifest
  MissingFeature,
  MissingText,
  UtteranceTooLong,
  // autodiff
  ShapeMismatch,
  NotScalar,
  // network
  CacheMismatch,
  // objectives
  InfeasibleTarget,
  MissingTranscript,
  // trainer
  NonFiniteLoss,
  IncompatibleCheckpoints,
  EmptyTransfer,
  // decoder
  VocabMismatch,
  StateMismatch,
  // pipeline
  StageFailed,
  InvalidStageRange,
  TreatmentMismatch,
  // generic
  IoError,
  BadConfig,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& msg)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + msg),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void throw_error(ErrorCode code, const std::string& msg) {
  throw Error(code, msg);
}

}  // namespace stforge
