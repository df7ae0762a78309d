// Copyright 2026 The mwp-attack Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MWP_ERROR_H_
#define MWP_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace mwp {

enum class ErrorCode {
  kEmptyInput,
  kNoQuestionFound,
  kParseError,
  kDivisionByZero,
  kMissingGold,
  kNoBodySentences,
  kOracleUnavailable,
  kMalformedResponse,
  kFormatError,
  kInvalidConfig,
  kIoError,
};

std::string_view ErrorCodeName(ErrorCode code);

// Every recoverable failure in the library is reported as an Error carrying
// one of the codes above. Precondition violations use std::invalid_argument.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace mwp

#endif  // MWP_ERROR_H_
