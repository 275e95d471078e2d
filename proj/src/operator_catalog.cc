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

#include "pitrecon/operator_catalog.h"

#include <algorithm>
#include <initializer_list>
#include <sstream>

#include "pitrecon/classfile.h"
#include "pitrecon/lexer_internal.h"
#include "pitrecon/report.h"

namespace pitrecon {

namespace {

using TokenMap = std::vector<std::pair<std::string, std::string>>;
using Family = std::vector<std::uint8_t>;

const Family kOrderBranches = {op::kIflt,      op::kIfge,      op::kIfgt,
                               op::kIfle,      op::kIfIcmplt,  op::kIfIcmpge,
                               op::kIfIcmpgt,  op::kIfIcmple};
const Family kEqualityBranches = {op::kIfeq,      op::kIfne,      op::kIfIcmpeq,
                                  op::kIfIcmpne,  op::kIfAcmpeq,  op::kIfAcmpne,
                                  op::kIfnull,    op::kIfnonnull};
const Family kInvokes = {op::kInvokevirtual, op::kInvokespecial, op::kInvokestatic,
                         op::kInvokeinterface};
const Family kValueReturns = {op::kIreturn, op::kLreturn, op::kFreturn, op::kDreturn,
                              op::kAreturn};
const Family kPrimitiveReturns = {op::kIreturn, op::kLreturn, op::kFreturn,
                                  op::kDreturn};
const Family kBooleanReturns = {op::kIreturn, op::kAreturn};
const Family kObjectReturns = {op::kAreturn};

RewriteRule Rule(std::string operator_name, std::string mutator, std::string pattern,
                 CandidateKind kind, Family family) {
  RewriteRule rule;
  rule.operator_name = std::move(operator_name);
  rule.mutator = std::move(mutator);
  rule.description_pattern = std::move(pattern);
  rule.kind = kind;
  rule.opcode_family = std::move(family);
  return rule;
}

bool MutatorMatches(std::string_view rule_mutator, std::string_view short_name) {
  if (!rule_mutator.empty() && rule_mutator.back() == '*') {
    rule_mutator.remove_suffix(1);
    return short_name.substr(0, rule_mutator.size()) == rule_mutator;
  }
  return rule_mutator == short_name;
}

std::vector<std::string> SplitOn(std::string_view text, char sep) {
  std::vector<std::string> parts;
  std::size_t begin = 0;
  while (true) {
    std::size_t at = text.find(sep, begin);
    parts.emplace_back(text.substr(begin, at - begin));
    if (at == std::string_view::npos) break;
    begin = at + 1;
  }
  return parts;
}

void AddMathRules(std::vector<RewriteRule>& rules) {
  struct Arithmetic {
    const char* name;
    TokenMap tokens;
    std::uint8_t base;  // Opcode of the int variant; l/f/d follow at +1..+3.
  };
  const std::vector<Arithmetic> arithmetic = {
      {"addition with subtraction", {{"+", "-"}, {"+=", "-="}, {"++", "--"}}, op::kIadd},
      {"subtraction with addition", {{"-", "+"}, {"-=", "+="}, {"--", "++"}}, op::kIsub},
      {"multiplication with division", {{"*", "/"}, {"*=", "/="}}, op::kImul},
      {"division with multiplication", {{"/", "*"}, {"/=", "*="}}, op::kIdiv},
      {"modulus with multiplication", {{"%", "*"}, {"%=", "*="}}, op::kIrem},
  };
  const std::pair<const char*, int> types[] = {
      {"integer", 0}, {"long", 1}, {"float", 2}, {"double", 3}};
  for (const auto& [type, delta] : types) {
    for (const Arithmetic& a : arithmetic) {
      RewriteRule rule =
          Rule("Math", "MathMutator", std::string("Replaced ") + type + " " + a.name,
               CandidateKind::kBinaryOperator,
               {static_cast<std::uint8_t>(a.base + delta)});
      rule.token_map = a.tokens;
      rules.push_back(std::move(rule));
    }
  }
  // Bitwise and shift descriptions do not name the operand type.
  struct Bitwise {
    const char* description;
    TokenMap tokens;
    Family family;
  };
  const std::vector<Bitwise> bitwise = {
      {"Replaced bitwise AND with OR", {{"&", "|"}, {"&=", "|="}}, {op::kIand, op::kLand}},
      {"Replaced bitwise OR with AND", {{"|", "&"}, {"|=", "&="}}, {op::kIor, op::kLor}},
      {"Replaced XOR with AND", {{"^", "&"}, {"^=", "&="}}, {op::kIxor, op::kLxor}},
      {"Replaced Shift Left with Shift Right", {{"<<", ">>"}, {"<<=", ">>="}},
       {op::kIshl, op::kLshl}},
      {"Replaced Shift Right with Shift Left", {{">>", "<<"}, {">>=", "<<="}},
       {op::kIshr, op::kLshr}},
      {"Replaced Unsigned Shift Right with Shift Left", {{">>>", "<<"}, {">>>=", "<<="}},
       {op::kIushr, op::kLushr}},
  };
  for (const Bitwise& b : bitwise) {
    RewriteRule rule = Rule("Math", "MathMutator", b.description,
                            CandidateKind::kBinaryOperator, b.family);
    rule.token_map = b.tokens;
    rules.push_back(std::move(rule));
  }
}

void AddReturnRule(std::vector<RewriteRule>& rules, const char* operator_name,
                   const char* mutator, const char* pattern, const char* value,
                   const Family& family) {
  RewriteRule rule =
      Rule(operator_name, mutator, pattern, CandidateKind::kReturnStatement, family);
  rule.replacement_text = value;
  rules.push_back(std::move(rule));
}

std::string Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return std::string(s);
}

[[noreturn]] void RulesError(int line_no, const std::string& message) {
  throw Error(ErrorCode::kRulesFileSyntax,
              "rules line " + std::to_string(line_no) + ": " + message);
}

// Column range [start, end) of `token` within a lexed line, 0-based.
std::pair<std::size_t, std::size_t> Range(const Token& token) {
  return {static_cast<std::size_t>(token.column - 1),
          static_cast<std::size_t>(token.end_column - 1)};
}

std::string SwapSwitchLabels(std::string_view region) {
  std::vector<Token> tokens = internal::LexLenient(region);
  std::vector<const Token*> code;
  for (const Token& t : tokens) {
    if (!t.IsComment()) code.push_back(&t);
  }
  // Label extents as [first token, colon/arrow token].
  std::optional<std::pair<std::size_t, std::size_t>> case_label;
  std::optional<std::pair<std::size_t, std::size_t>> default_label;
  int depth = 0;
  for (std::size_t i = 0; i < code.size(); ++i) {
    const Token& t = *code[i];
    if (t.Is(TokenKind::kSeparator, "{") || t.Is(TokenKind::kSeparator, "(")) ++depth;
    if (t.Is(TokenKind::kSeparator, "}") || t.Is(TokenKind::kSeparator, ")")) --depth;
    if (depth != 0) continue;
    bool is_case = t.Is(TokenKind::kKeyword, "case");
    bool is_default = t.Is(TokenKind::kKeyword, "default");
    if (!is_case && !is_default) continue;
    std::size_t k = i + 1;
    while (k < code.size() && !code[k]->Is(TokenKind::kOperator, ":") &&
           !code[k]->Is(TokenKind::kOperator, "->")) {
      ++k;
    }
    if (k == code.size()) break;
    if (is_case && !case_label) case_label = std::make_pair(i, k);
    if (is_default && !default_label) default_label = std::make_pair(i, k);
    i = k;
  }
  if (!case_label || !default_label) {
    throw Error(ErrorCode::kUnsupportedSwitchShape,
                "switch labels are not both on the reported line");
  }
  auto text_of = [&](std::pair<std::size_t, std::size_t> label) {
    std::size_t begin = Range(*code[label.first]).first;
    std::size_t end = Range(*code[label.second]).second;
    return std::make_pair(begin, end);
  };
  auto [case_begin, case_end] = text_of(*case_label);
  auto [default_begin, default_end] = text_of(*default_label);
  std::string case_text(region.substr(case_begin, case_end - case_begin));
  std::string default_text(region.substr(default_begin, default_end - default_begin));
  std::string out(region);
  // Replace the later label first so the earlier offsets stay valid.
  if (case_begin < default_begin) {
    out.replace(default_begin, default_end - default_begin, case_text);
    out.replace(case_begin, case_end - case_begin, default_text);
  } else {
    out.replace(case_begin, case_end - case_begin, default_text);
    out.replace(default_begin, default_end - default_begin, case_text);
  }
  return out;
}

}  // namespace

std::string_view CandidateKindName(CandidateKind kind) {
  switch (kind) {
    case CandidateKind::kBinaryOperator:
      return "binary_operator";
    case CandidateKind::kRelationalOperator:
      return "relational_operator";
    case CandidateKind::kIncrDecr:
      return "incr_decr";
    case CandidateKind::kUnaryMinus:
      return "unary_minus";
    case CandidateKind::kReturnStatement:
      return "return_statement";
    case CandidateKind::kCallStatement:
      return "call_statement";
    case CandidateKind::kConditionExpression:
      return "condition_expression";
    case CandidateKind::kSwitchLabel:
      return "switch_label";
  }
  return "unknown";
}

std::optional<CandidateKind> CandidateKindFromName(std::string_view name) {
  for (CandidateKind kind :
       {CandidateKind::kBinaryOperator, CandidateKind::kRelationalOperator,
        CandidateKind::kIncrDecr, CandidateKind::kUnaryMinus,
        CandidateKind::kReturnStatement, CandidateKind::kCallStatement,
        CandidateKind::kConditionExpression, CandidateKind::kSwitchLabel}) {
    if (CandidateKindName(kind) == name) return kind;
  }
  return std::nullopt;
}

OperatorCatalog OperatorCatalog::BuiltIn() {
  OperatorCatalog catalog;
  std::vector<RewriteRule>& rules = catalog.rules_;

  AddMathRules(rules);

  {
    RewriteRule rule = Rule("ConditionalsBoundary", "ConditionalsBoundaryMutator",
                            "changed conditional boundary",
                            CandidateKind::kRelationalOperator, kOrderBranches);
    rule.token_map = {{"<", "<="}, {"<=", "<"}, {">", ">="}, {">=", ">"}};
    rules.push_back(std::move(rule));
  }

  const std::pair<const char*, const char*> removals[] = {{"true", "IF"},
                                                          {"false", "ELSE"}};
  for (const auto& [value, branch] : removals) {
    RewriteRule equal = Rule(
        "RemoveConditionals", std::string("RemoveConditionalMutator_EQUAL_") + branch,
        std::string("removed conditional - replaced equality check with ") + value,
        CandidateKind::kConditionExpression, kEqualityBranches);
    equal.replacement_text = value;
    rules.push_back(std::move(equal));
    RewriteRule order = Rule(
        "RemoveConditionals", std::string("RemoveConditionalMutator_ORDER_") + branch,
        std::string("removed conditional - replaced comparison check with ") + value,
        CandidateKind::kConditionExpression, kOrderBranches);
    order.replacement_text = value;
    rules.push_back(std::move(order));
  }

  {
    RewriteRule rule = Rule("Increments", "IncrementsMutator", "Changed increment from",
                            CandidateKind::kIncrDecr, {op::kIinc});
    rule.token_map = {{"++", "--"}, {"--", "++"}, {"+=", "-="}, {"-=", "+="}};
    rules.push_back(std::move(rule));
  }

  rules.push_back(Rule("InvertNegatives", "InvertNegsMutator", "removed negation",
                       CandidateKind::kUnaryMinus,
                       {op::kIneg, op::kLneg, op::kFneg, op::kDneg}));

  rules.push_back(Rule("VoidMethodCall", "VoidMethodCallMutator", "removed call to ",
                       CandidateKind::kCallStatement, kInvokes));

  AddReturnRule(rules, "NullReturns", "NullReturnValsMutator",
                "replaced return value with null", "null", kObjectReturns);
  AddReturnRule(rules, "TrueReturns", "BooleanTrueReturnValsMutator",
                "replaced boolean return with true", "true", kBooleanReturns);
  AddReturnRule(rules, "TrueReturns", "BooleanTrueReturnValsMutator",
                "replaced Boolean return with True", "true", kBooleanReturns);
  AddReturnRule(rules, "FalseReturns", "BooleanFalseReturnValsMutator",
                "replaced boolean return with false", "false", kBooleanReturns);
  AddReturnRule(rules, "FalseReturns", "BooleanFalseReturnValsMutator",
                "replaced Boolean return with False", "false", kBooleanReturns);

  const std::pair<const char*, const char*> primitives[] = {
      {"int", "0"},   {"long", "0"},        {"short", "0"},      {"byte", "0"},
      {"char", "0"},  {"float", "0.0f"},    {"double", "0.0"}};
  for (const auto& [type, value] : primitives) {
    AddReturnRule(rules, "PrimitiveReturns", "PrimitiveReturnsMutator",
                  (std::string("replaced ") + type + " return with 0").c_str(), value,
                  kPrimitiveReturns);
  }

  const std::pair<const char*, const char*> empties[] = {
      {"replaced return value with \"\"", "\"\""},
      {"replaced return value with Collections.emptyList", "Collections.emptyList()"},
      {"replaced return value with Collections.emptySet", "Collections.emptySet()"},
      {"replaced return value with Collections.emptyMap", "Collections.emptyMap()"},
      {"replaced return value with Optional.empty", "Optional.empty()"},
      {"replaced return value with Stream.empty", "Stream.empty()"},
      {"replaced Integer return value with 0", "0"},
      {"replaced Long return value with 0", "0L"},
      {"replaced Short return value with 0", "(short) 0"},
      {"replaced Byte return value with 0", "(byte) 0"},
      {"replaced Character return value with", "(char) 0"},
      {"replaced Float return value with 0", "0.0f"},
      {"replaced Double return value with 0", "0.0"},
  };
  for (const auto& [pattern, value] : empties) {
    AddReturnRule(rules, "EmptyReturns", "EmptyObjectReturnValsMutator", pattern, value,
                  kObjectReturns);
  }

  for (const char* name : {"SwitchMutator", "ExperimentalSwitchMutator"}) {
    rules.push_back(Rule("ExperimentalSwitch", name, "", CandidateKind::kSwitchLabel,
                         {op::kTableswitch, op::kLookupswitch}));
  }
  return catalog;
}

void OperatorCatalog::AddRules(std::string_view rules_text) {
  int line_no = 0;
  for (const std::string& raw : SplitOn(rules_text, '\n')) {
    ++line_no;
    std::string line = Trim(raw);
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> fields = SplitOn(line, '\t');
    if (fields.size() != 6) {
      RulesError(line_no, "expected 6 tab-separated fields, got " +
                              std::to_string(fields.size()));
    }
    for (std::string& f : fields) f = Trim(f);
    std::optional<CandidateKind> kind = CandidateKindFromName(fields[2]);
    if (!kind) RulesError(line_no, "unknown candidate kind '" + fields[2] + "'");
    if (fields[0].empty() || fields[1].empty()) {
      RulesError(line_no, "operator and mutator must be non-empty");
    }
    Family family;
    if (fields[5] != "-") {
      for (const std::string& mnemonic : SplitOn(fields[5], ',')) {
        std::optional<std::uint8_t> opcode = OpcodeForMnemonic(Trim(mnemonic));
        if (!opcode) RulesError(line_no, "unknown opcode '" + mnemonic + "'");
        family.push_back(*opcode);
      }
    }
    RewriteRule rule = Rule(fields[0], fields[1], fields[3], *kind, family);
    switch (*kind) {
      case CandidateKind::kBinaryOperator:
      case CandidateKind::kRelationalOperator:
      case CandidateKind::kIncrDecr:
        for (const std::string& pair : SplitOn(fields[4], ',')) {
          std::size_t colon = pair.find(':');
          if (colon == std::string::npos || colon == 0 || colon + 1 == pair.size()) {
            RulesError(line_no, "token replacement '" + pair + "' is not from:to");
          }
          rule.token_map.emplace_back(pair.substr(0, colon), pair.substr(colon + 1));
        }
        break;
      case CandidateKind::kReturnStatement:
      case CandidateKind::kConditionExpression:
        if (fields[4].empty() || fields[4] == "-") {
          RulesError(line_no, "replacement text required");
        }
        rule.replacement_text = fields[4];
        break;
      default:
        break;
    }
    for (const RewriteRule& existing : rules_) {
      if (existing.mutator == rule.mutator &&
          existing.description_pattern == rule.description_pattern) {
        RulesError(line_no, "duplicate rule for " + rule.mutator + " / '" +
                                rule.description_pattern + "'");
      }
    }
    rules_.push_back(std::move(rule));
  }
}

RewriteRule OperatorCatalog::RuleFor(std::string_view mutator,
                                     std::string_view description) const {
  std::string_view short_name = MutatorShortName(mutator);
  const RewriteRule* best = nullptr;
  bool mutator_known = false;
  for (const RewriteRule& rule : rules_) {
    if (!MutatorMatches(rule.mutator, short_name)) continue;
    mutator_known = true;
    if (description.substr(0, rule.description_pattern.size()) !=
        rule.description_pattern) {
      continue;
    }
    if (best == nullptr ||
        rule.description_pattern.size() > best->description_pattern.size()) {
      best = &rule;
    }
  }
  if (!mutator_known) {
    throw Error(ErrorCode::kUnknownMutator, "unknown mutator " + std::string(mutator));
  }
  if (best == nullptr) {
    throw Error(ErrorCode::kUnrecognizedDescription,
                "unrecognized description '" + std::string(description) + "' for " +
                    std::string(short_name));
  }
  RewriteRule rule = *best;
  if (rule.kind == CandidateKind::kCallStatement) {
    // "removed call to java/io/PrintStream::println" names the callee.
    std::size_t sep = description.rfind("::");
    if (sep != std::string_view::npos) {
      std::string_view name = description.substr(sep + 2);
      std::size_t end = name.find_first_of(" \t(");
      rule.call_name = std::string(name.substr(0, end));
    }
  }
  return rule;
}

std::string OperatorName(std::string_view mutator) {
  static const OperatorCatalog* catalog = new OperatorCatalog(OperatorCatalog::BuiltIn());
  std::string_view short_name = MutatorShortName(mutator);
  for (const RewriteRule& rule : catalog->rules()) {
    if (MutatorMatches(rule.mutator, short_name)) return rule.operator_name;
  }
  return std::string(short_name);
}

const std::vector<std::string>& OperatorOrder() {
  static const std::vector<std::string> order = {
      "VoidMethodCall",   "NullReturns",        "TrueReturns",
      "FalseReturns",     "Increments",         "InvertNegatives",
      "PrimitiveReturns", "RemoveConditionals", "ConditionalsBoundary",
      "EmptyReturns",     "Math",               "ExperimentalSwitch"};
  return order;
}

std::string ApplyReplacement(std::string_view line_text,
                             const CandidateOccurrence& occurrence,
                             const RewriteRule& rule) {
  if (occurrence.blocked) {
    throw Error(*occurrence.blocked,
                std::string(ErrorCodeName(*occurrence.blocked)) + " at column " +
                    std::to_string(occurrence.column_start));
  }
  if (occurrence.column_start < 1 || occurrence.column_end <= occurrence.column_start ||
      static_cast<std::size_t>(occurrence.column_end - 1) > line_text.size()) {
    throw Error(ErrorCode::kNoOpRewrite, "occurrence outside the line");
  }
  std::size_t begin = static_cast<std::size_t>(occurrence.column_start - 1);
  std::size_t length = static_cast<std::size_t>(occurrence.column_end -
                                                occurrence.column_start);
  std::string_view original = line_text.substr(begin, length);
  std::string replacement;
  switch (rule.kind) {
    case CandidateKind::kBinaryOperator:
    case CandidateKind::kRelationalOperator:
    case CandidateKind::kIncrDecr: {
      auto it = std::find_if(rule.token_map.begin(), rule.token_map.end(),
                             [&](const auto& p) { return p.first == original; });
      if (it == rule.token_map.end()) {
        throw Error(ErrorCode::kNoOpRewrite,
                    "no replacement for token '" + std::string(original) + "'");
      }
      replacement = it->second;
      break;
    }
    case CandidateKind::kUnaryMinus:
    case CandidateKind::kCallStatement:
      break;
    case CandidateKind::kReturnStatement:
    case CandidateKind::kConditionExpression:
      replacement = rule.replacement_text;
      break;
    case CandidateKind::kSwitchLabel:
      replacement = SwapSwitchLabels(original);
      break;
  }
  if (replacement == original) {
    throw Error(ErrorCode::kNoOpRewrite,
                "rewrite leaves '" + std::string(original) + "' unchanged");
  }
  std::string out(line_text);
  out.replace(begin, length, replacement);
  return out;
}

}  // namespace pitrecon
