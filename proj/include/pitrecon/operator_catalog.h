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

#ifndef PITRECON_OPERATOR_CATALOG_H
#define PITRECON_OPERATOR_CATALOG_H

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pitrecon/error.h"

namespace pitrecon {

enum class CandidateKind {
  kBinaryOperator,
  kRelationalOperator,
  kIncrDecr,
  kUnaryMinus,
  kReturnStatement,
  kCallStatement,
  kConditionExpression,
  kSwitchLabel,
};

std::string_view CandidateKindName(CandidateKind kind);
std::optional<CandidateKind> CandidateKindFromName(std::string_view name);

// How one PIT mutator/description pair maps onto a source edit.
struct RewriteRule {
  // Operator family as reported in the statistics tables ("Math",
  // "RemoveConditionals", ...).
  std::string operator_name;
  // Mutator short name. A trailing '*' matches any suffix.
  std::string mutator;
  // Matched against the start of the description.
  std::string description_pattern;
  CandidateKind kind = CandidateKind::kBinaryOperator;
  // Token substitutions for the operator kinds (e.g. "+" -> "-").
  std::vector<std::pair<std::string, std::string>> token_map;
  // Replacement expression for return and condition rules.
  std::string replacement_text;
  std::vector<std::uint8_t> opcode_family;
  // For call-statement rules: the callee named by the description, filled in
  // by RuleFor. Empty matches any call.
  std::string call_name;
};

// A rewritable region on one line. Columns are 1-based byte offsets with an
// exclusive end.
struct CandidateOccurrence {
  int line = 0;
  int column_start = 0;
  int column_end = 0;
  int ordinal = 0;
  // Set when the construct starts on this line but cannot be rewritten
  // line-locally (kMultiLineExpression, kUnsupportedSwitchShape). Blocked
  // candidates still take part in ordinal counting.
  std::optional<ErrorCode> blocked;

  bool operator==(const CandidateOccurrence&) const = default;
};

class OperatorCatalog {
 public:
  // The twelve operator families of PIT's STRONGER mutator group.
  static OperatorCatalog BuiltIn();

  // Adds rules from the tab-separated rules format:
  //   operator  mutator  kind  description-prefix  replacement  opcodes
  // Blank lines and lines starting with '#' are ignored. Token replacements
  // are written as comma-separated `from:to` pairs; opcodes as comma-separated
  // mnemonics. Throws Error(kRulesFileSyntax).
  void AddRules(std::string_view rules_text);

  // The rule whose mutator matches and whose description pattern is the
  // longest prefix of `description`. Throws Error(kUnknownMutator) or
  // Error(kUnrecognizedDescription).
  RewriteRule RuleFor(std::string_view mutator, std::string_view description) const;

  const std::vector<RewriteRule>& rules() const { return rules_; }

 private:
  std::vector<RewriteRule> rules_;
};

// Operator family for a mutator name; falls back to the short name for
// mutators outside the catalog.
std::string OperatorName(std::string_view mutator);

// Table order of the twelve operator families.
const std::vector<std::string>& OperatorOrder();

// Rewrites `line_text` at `occurrence`. Characters outside the occurrence are
// left untouched. Throws the candidate's blocked code, or Error(kNoOpRewrite)
// when the result equals the input.
std::string ApplyReplacement(std::string_view line_text,
                             const CandidateOccurrence& occurrence,
                             const RewriteRule& rule);

}  // namespace pitrecon

#endif  // PITRECON_OPERATOR_CATALOG_H
