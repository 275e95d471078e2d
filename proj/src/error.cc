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

#include "pitrecon/error.h"

namespace pitrecon {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMalformedReport:
      return "MalformedReport";
    case ErrorCode::kMissingField:
      return "MissingField";
    case ErrorCode::kNotAClassFile:
      return "NotAClassFile";
    case ErrorCode::kTruncatedClassFile:
      return "TruncatedClassFile";
    case ErrorCode::kUnsupportedConstantTag:
      return "UnsupportedConstantTag";
    case ErrorCode::kUnknownOpcode:
      return "UnknownOpcode";
    case ErrorCode::kTruncatedCode:
      return "TruncatedCode";
    case ErrorCode::kLexError:
      return "LexError";
    case ErrorCode::kUnbalancedBraces:
      return "UnbalancedBraces";
    case ErrorCode::kUnknownMutator:
      return "UnknownMutator";
    case ErrorCode::kUnrecognizedDescription:
      return "UnrecognizedDescription";
    case ErrorCode::kNoOpRewrite:
      return "NoOpRewrite";
    case ErrorCode::kMultiLineExpression:
      return "MultiLineExpression";
    case ErrorCode::kUnsupportedSwitchShape:
      return "UnsupportedSwitchShape";
    case ErrorCode::kRulesFileSyntax:
      return "RulesFileSyntax";
    case ErrorCode::kNoCandidateOnLine:
      return "NoCandidateOnLine";
    case ErrorCode::kMethodNotFound:
      return "MethodNotFound";
    case ErrorCode::kOrdinalUnresolved:
      return "OrdinalUnresolved";
    case ErrorCode::kOrdinalOutOfRange:
      return "OrdinalOutOfRange";
    case ErrorCode::kInvalidTarget:
      return "InvalidTarget";
    case ErrorCode::kWriteFailed:
      return "WriteFailed";
    case ErrorCode::kSourceFileNotFound:
      return "SourceFileNotFound";
    case ErrorCode::kClassFileNotFound:
      return "ClassFileNotFound";
    case ErrorCode::kReportNotFound:
      return "ReportNotFound";
    case ErrorCode::kIoError:
      return "IoError";
  }
  return "Unknown";
}

LexError::LexError(int line, int column, const std::string& reason)
    : Error(ErrorCode::kLexError, std::to_string(line) + ":" +
                                      std::to_string(column) + ": " + reason),
      line_(line),
      column_(column),
      reason_(reason) {}

}  // namespace pitrecon
