// Copyright 2026 The pitrecon Authors
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

#ifndef PITRECON_ERROR_H
#define PITRECON_ERROR_H

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace pitrecon {

enum class ErrorCode {
  // Report parsing.
  kMalformedReport,
  kMissingField,
  // Class files.
  kNotAClassFile,
  kTruncatedClassFile,
  kUnsupportedConstantTag,
  kUnknownOpcode,
  kTruncatedCode,
  // Java sources.
  kLexError,
  kUnbalancedBraces,
  // Operator catalog.
  kUnknownMutator,
  kUnrecognizedDescription,
  kNoOpRewrite,
  kMultiLineExpression,
  kUnsupportedSwitchShape,
  kRulesFileSyntax,
  // Resolution.
  kNoCandidateOnLine,
  kMethodNotFound,
  kOrdinalUnresolved,
  kOrdinalOutOfRange,
  // Injection.
  kInvalidTarget,
  kWriteFailed,
  // Files and layout.
  kSourceFileNotFound,
  kClassFileNotFound,
  kReportNotFound,
  kIoError,
};

std::string_view ErrorCodeName(ErrorCode code);

// Every error raised by the library carries a code so callers can classify
// failures without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Raised by the class-file reader; `offset` is the byte position at which
// decoding stopped (relative to the class file or the code array).
class ClassFileError : public Error {
 public:
  ClassFileError(ErrorCode code, std::size_t offset, const std::string& message)
      : Error(code, message), offset_(offset) {}

  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

class LexError : public Error {
 public:
  LexError(int line, int column, const std::string& reason);

  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& reason() const { return reason_; }

 private:
  int line_;
  int column_;
  std::string reason_;
};

}  // namespace pitrecon

#endif  // PITRECON_ERROR_H
