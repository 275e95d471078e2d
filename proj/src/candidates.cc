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

#include "pitrecon/candidates.h"

#include <algorithm>
#include <array>
#include <charconv>
#include <span>
#include <tuple>

#include "pitrecon/classfile.h"
#include "pitrecon/lexer_internal.h"

namespace pitrecon {

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

constexpr std::array<std::string_view, 12> kAssignments = {
    "=", "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=", "<<=", ">>=", ">>>="};

bool Contains(std::span<const std::string_view> set, std::string_view text) {
  return std::find(set.begin(), set.end(), text) != set.end();
}

// Operator and separator tokens compare by text; everything else never
// matches punctuation.
bool Punct(const Token* t, std::string_view text) {
  return (t->kind == TokenKind::kOperator || t->kind == TokenKind::kSeparator) &&
         t->text == text;
}

bool Keyword(const Token* t, std::string_view text) {
  return t->Is(TokenKind::kKeyword, text);
}

bool IsIntLiteral(const Token* t) { return t->kind == TokenKind::kIntLiteral; }

bool IsNumber(const Token* t) {
  return t->kind == TokenKind::kIntLiteral || t->kind == TokenKind::kFloatLiteral;
}

class LineScanner {
 public:
  LineScanner(const std::vector<Token>& tokens, std::string_view line_text, int line,
              const RewriteRule& rule, int scope_line)
      : line_text_(line_text), line_(line), rule_(rule), scope_line_(scope_line) {
    for (const Token& t : tokens) {
      if (!t.IsComment()) code_.push_back(&t);
    }
    first_ = code_.size();
    last_ = code_.size();
    for (std::size_t i = 0; i < code_.size(); ++i) {
      if (code_[i]->line == line_ && first_ == code_.size()) first_ = i;
      if (code_[i]->line > line_) {
        last_ = i;
        break;
      }
    }
    if (first_ == code_.size()) last_ = first_;
    MarkGenerics();
  }

  std::vector<CandidateOccurrence> Run() {
    switch (rule_.kind) {
      case CandidateKind::kBinaryOperator:
        ScanBinary();
        break;
      case CandidateKind::kRelationalOperator:
        ScanRelational();
        break;
      case CandidateKind::kIncrDecr:
        ScanIncrements();
        break;
      case CandidateKind::kUnaryMinus:
        ScanUnaryMinus();
        break;
      case CandidateKind::kReturnStatement:
        ScanReturns();
        break;
      case CandidateKind::kCallStatement:
        ScanCalls();
        break;
      case CandidateKind::kConditionExpression:
        ScanConditions();
        break;
      case CandidateKind::kSwitchLabel:
        ScanSwitches();
        break;
    }
    if (rule_.kind == CandidateKind::kConditionExpression) {
      // Nested conditions are evaluated inner first, so the end column gives
      // bytecode order.
      std::sort(out_.begin(), out_.end(), [](const auto& a, const auto& b) {
        return std::tie(a.column_end, a.column_start) < std::tie(b.column_end, b.column_start);
      });
    } else {
      std::sort(out_.begin(), out_.end(), [](const auto& a, const auto& b) {
        return a.column_start < b.column_start;
      });
    }
    out_.erase(std::unique(out_.begin(), out_.end()), out_.end());
    for (std::size_t k = 0; k < out_.size(); ++k) out_[k].ordinal = static_cast<int>(k);
    return std::move(out_);
  }

 private:
  const Token* At(std::size_t i) const { return code_[i]; }
  std::size_t Prev(std::size_t i) const { return i == 0 ? kNone : i - 1; }
  std::size_t Next(std::size_t i) const { return i + 1 < code_.size() ? i + 1 : kNone; }

  bool OnLine(std::size_t i) const {
    return i != kNone && At(i)->line == line_ && At(i)->end_line == line_;
  }

  bool HasKey(std::string_view text) const {
    return std::any_of(rule_.token_map.begin(), rule_.token_map.end(),
                       [&](const auto& p) { return p.first == text; });
  }

  // Index of the bracket matching the one at `i`, or kNone.
  std::size_t Match(std::size_t i) const {
    static constexpr std::pair<std::string_view, std::string_view> kPairs[] = {
        {"(", ")"}, {"[", "]"}, {"{", "}"}};
    for (const auto& [open, close] : kPairs) {
      int depth = 0;
      if (Punct(At(i), open)) {
        for (std::size_t k = i; k < code_.size(); ++k) {
          if (Punct(At(k), open)) ++depth;
          if (Punct(At(k), close) && --depth == 0) return k;
        }
        return kNone;
      }
      if (Punct(At(i), close)) {
        for (std::size_t k = i + 1; k-- > 0;) {
          if (Punct(At(k), close)) ++depth;
          if (Punct(At(k), open) && --depth == 0) return k;
        }
        return kNone;
      }
    }
    return kNone;
  }

  bool OperandEnd(std::size_t i) const {
    if (i == kNone) return false;
    const Token* t = At(i);
    switch (t->kind) {
      case TokenKind::kIdentifier:
      case TokenKind::kIntLiteral:
      case TokenKind::kFloatLiteral:
      case TokenKind::kStringLiteral:
      case TokenKind::kCharLiteral:
        return true;
      case TokenKind::kKeyword:
        return t->text == "this" || t->text == "super" || t->text == "true" ||
               t->text == "false" || t->text == "null";
      default:
        return Punct(t, ")") || Punct(t, "]") || Punct(t, "++") || Punct(t, "--");
    }
  }

  // Type-argument lists: a '<' after a capitalised name, a '.', or a
  // modifier, closed by a run of type-like tokens.
  void MarkGenerics() {
    generic_.assign(code_.size(), false);
    std::size_t begin = first_ > 64 ? first_ - 64 : 0;
    for (std::size_t i = begin; i < last_; ++i) {
      if (generic_[i] || !Punct(At(i), "<")) continue;
      std::size_t prev = Prev(i);
      if (prev == kNone) continue;
      const Token* p = At(prev);
      bool type_like =
          (p->kind == TokenKind::kIdentifier && !p->text.empty() &&
           p->text[0] >= 'A' && p->text[0] <= 'Z') ||
          Punct(p, ".") ||
          (p->kind == TokenKind::kKeyword &&
           (p->text == "public" || p->text == "private" || p->text == "protected" ||
            p->text == "static" || p->text == "final" || p->text == "abstract" ||
            p->text == "synchronized" || p->text == "default"));
      if (!type_like) continue;
      std::size_t close = GenericClose(i);
      if (close == kNone) continue;
      for (std::size_t k = i; k <= close; ++k) generic_[k] = true;
    }
  }

  std::size_t GenericClose(std::size_t open) const {
    int depth = 0;
    for (std::size_t k = open; k < code_.size() && k < open + 64; ++k) {
      const Token* t = At(k);
      if (Punct(t, "<")) {
        ++depth;
      } else if (Punct(t, ">")) {
        depth -= 1;
      } else if (Punct(t, ">>")) {
        depth -= 2;
      } else if (Punct(t, ">>>")) {
        depth -= 3;
      } else if (t->kind == TokenKind::kIdentifier || Punct(t, ".") || Punct(t, ",") ||
                 Punct(t, "?") || Punct(t, "&") || Punct(t, "[") || Punct(t, "]") ||
                 Punct(t, "@")) {
        continue;
      } else if (t->kind == TokenKind::kKeyword &&
                 (t->text == "extends" || t->text == "super" || t->text == "int" ||
                  t->text == "long" || t->text == "short" || t->text == "byte" ||
                  t->text == "char" || t->text == "float" || t->text == "double" ||
                  t->text == "boolean")) {
        continue;
      } else {
        return kNone;
      }
      if (depth <= 0) return k;
    }
    return kNone;
  }

  void Add(std::size_t first, std::size_t last, std::optional<ErrorCode> blocked = {}) {
    CandidateOccurrence occ;
    occ.line = line_;
    occ.column_start = At(first)->column;
    if (!blocked) {
      for (std::size_t k = first; k <= last; ++k) {
        if (!OnLine(k)) {
          blocked = ErrorCode::kMultiLineExpression;
          break;
        }
      }
    }
    if (blocked || last == kNone || !OnLine(last)) {
      occ.column_end = static_cast<int>(line_text_.size()) + 1;
      occ.blocked = blocked ? blocked : ErrorCode::kMultiLineExpression;
      if (occ.column_end <= occ.column_start) occ.column_end = occ.column_start + 1;
    } else {
      occ.column_end = At(last)->end_column;
    }
    out_.push_back(occ);
  }

  // '+' joining strings: a string literal on either side within the same
  // operand chain.
  bool StringConcat(std::size_t i) const {
    std::size_t next = Next(i);
    if (next != kNone && At(next)->kind == TokenKind::kStringLiteral) return true;
    for (std::size_t j = Prev(i); j != kNone; j = Prev(j)) {
      const Token* t = At(j);
      if (Punct(t, ")") || Punct(t, "]")) {
        j = Match(j);
        if (j == kNone) return false;
        continue;
      }
      if (t->kind == TokenKind::kStringLiteral) return true;
      if (t->kind == TokenKind::kOperator &&
          (Contains(kAssignments, t->text) || t->text == "?" || t->text == ":" ||
           t->text == "&&" || t->text == "||" || t->text == "==" || t->text == "!=" ||
           t->text == "->")) {
        return false;
      }
      if (Punct(t, "(") || Punct(t, "[") || Punct(t, ",") || Punct(t, ";") ||
          Punct(t, "{") || Punct(t, "}") || Keyword(t, "return")) {
        return false;
      }
    }
    return false;
  }

  bool InCatchParens(std::size_t i) const {
    int depth = 0;
    for (std::size_t j = Prev(i); j != kNone; j = Prev(j)) {
      if (Punct(At(j), ")")) ++depth;
      if (Punct(At(j), "(") && depth-- == 0) {
        std::size_t p = Prev(j);
        return p != kNone && Keyword(At(p), "catch");
      }
      if (Punct(At(j), ";") || Punct(At(j), "{")) return false;
    }
    return false;
  }

  // Whether the nearest declaration of the identifier at `i` within the scope
  // gives it type int.
  bool LocalInt(std::size_t i) const {
    const std::string& name = At(i)->text;
    for (std::size_t j = Prev(i); j != kNone && At(j)->line >= scope_line_; j = Prev(j)) {
      if (At(j)->kind != TokenKind::kIdentifier || At(j)->text != name) continue;
      std::size_t next = Next(j);
      std::size_t prev = Prev(j);
      if (next == kNone || prev == kNone) continue;
      const Token* n = At(next);
      if (!(Punct(n, "=") || Punct(n, ";") || Punct(n, ",") || Punct(n, ":") ||
            Punct(n, ")"))) {
        continue;
      }
      const Token* p = At(prev);
      if (p->kind == TokenKind::kKeyword) {
        // Narrower types are widened, added and narrowed again; only int
        // locals get iinc.
        if (p->text == "int") return true;
        if (p->text == "short" || p->text == "byte" || p->text == "char" ||
            p->text == "long" || p->text == "float" || p->text == "double" ||
            p->text == "boolean") {
          return false;
        }
        continue;
      }
      if (p->kind == TokenKind::kIdentifier || Punct(p, ">") || Punct(p, "]") ||
          Punct(p, ">>")) {
        return false;
      }
    }
    return false;
  }

  bool BareName(std::size_t i) const {
    if (i == kNone || At(i)->kind != TokenKind::kIdentifier) return false;
    std::size_t prev = Prev(i);
    return prev == kNone || !Punct(At(prev), ".");
  }

  // Whether the increment-like token at `i` compiles to iinc: a local int
  // variable adjusted by a constant.
  bool IsIinc(std::size_t i) const {
    const Token* t = At(i);
    std::size_t prev = Prev(i);
    std::size_t next = Next(i);
    if (t->text == "++" || t->text == "--") {
      if (OperandEnd(prev)) return BareName(prev) && LocalInt(prev);
      if (!BareName(next)) return false;
      std::size_t after = Next(next);
      if (after != kNone &&
          (Punct(At(after), ".") || Punct(At(after), "[") || Punct(At(after), "("))) {
        return false;
      }
      return LocalInt(next);
    }
    if (t->text != "+=" && t->text != "-=") return false;
    if (!BareName(prev) || next == kNone) return false;
    std::size_t literal = next;
    if (Punct(At(literal), "-")) literal = Next(literal);
    if (literal == kNone || !IsIntLiteral(At(literal))) return false;
    const std::string& digits = At(literal)->text;
    int value = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || value > 32767) {
      return false;
    }
    std::size_t after = Next(literal);
    if (after == kNone ||
        !(Punct(At(after), ";") || Punct(At(after), ")") || Punct(At(after), ","))) {
      return false;
    }
    return LocalInt(prev);
  }

  void ScanBinary() {
    for (std::size_t i = first_; i < last_; ++i) {
      const Token* t = At(i);
      if (t->kind != TokenKind::kOperator || !HasKey(t->text) || generic_[i]) continue;
      const std::string& s = t->text;
      if ((s == "+" || s == "-" || s == "*") && !OperandEnd(Prev(i))) continue;
      if ((s == "+" || s == "+=") && StringConcat(i)) continue;
      if ((s == "++" || s == "--" || s == "+=" || s == "-=") && IsIinc(i)) continue;
      if ((s == "|" || s == "&") && InCatchParens(i)) continue;
      Add(i, i);
    }
  }

  void ScanRelational() {
    for (std::size_t i = first_; i < last_; ++i) {
      const Token* t = At(i);
      if (t->kind != TokenKind::kOperator || !HasKey(t->text) || generic_[i]) continue;
      Add(i, i);
    }
  }

  void ScanIncrements() {
    for (std::size_t i = first_; i < last_; ++i) {
      const Token* t = At(i);
      if (t->kind != TokenKind::kOperator || !HasKey(t->text)) continue;
      if (IsIinc(i)) Add(i, i);
    }
  }

  void ScanUnaryMinus() {
    for (std::size_t i = first_; i < last_; ++i) {
      if (!Punct(At(i), "-") || OperandEnd(Prev(i))) continue;
      std::size_t next = Next(i);
      if (next == kNone || IsNumber(At(next))) continue;
      Add(i, i);
    }
  }

  // First token at or after `from` that is `text` at bracket depth zero, or
  // kNone. Stops at the first token past the reported line.
  std::size_t FindAtDepth(std::size_t from, std::string_view text) const {
    for (std::size_t j = from; j < code_.size(); ++j) {
      if (At(j)->line > line_) return kNone;
      if (Punct(At(j), text)) return j;
      if (Punct(At(j), "(") || Punct(At(j), "[") || Punct(At(j), "{")) {
        j = Match(j);
        if (j == kNone) return kNone;
      }
    }
    return kNone;
  }

  void ScanReturns() {
    for (std::size_t i = first_; i < last_; ++i) {
      if (!Keyword(At(i), "return")) continue;
      std::size_t next = Next(i);
      if (next == kNone || Punct(At(next), ";")) continue;
      std::size_t semi = FindAtDepth(next, ";");
      if (semi == kNone) {
        Add(next, kNone, ErrorCode::kMultiLineExpression);
      } else {
        Add(next, semi - 1);
      }
    }
  }

  bool StatementBoundary(std::size_t i) const {
    std::size_t p = Prev(i);
    if (p == kNone) return true;
    const Token* t = At(p);
    if (Punct(t, ";") || Punct(t, "{") || Punct(t, "}") || Keyword(t, "else") ||
        Keyword(t, "do")) {
      return true;
    }
    if (Punct(t, ")")) {
      std::size_t open = Match(p);
      std::size_t kw = open == kNone ? kNone : Prev(open);
      return kw != kNone && (Keyword(At(kw), "if") || Keyword(At(kw), "while") ||
                             Keyword(At(kw), "for"));
    }
    if (Punct(t, ":")) {
      // Only a switch label ends here; a ternary or enhanced-for colon does not.
      for (std::size_t j = Prev(p); j != kNone; j = Prev(j)) {
        const Token* u = At(j);
        if (Keyword(u, "case") || Keyword(u, "default")) return true;
        if (Punct(u, ";") || Punct(u, "{") || Punct(u, "}") || Punct(u, "?")) {
          return false;
        }
      }
    }
    return false;
  }

  void ScanCalls() {
    for (std::size_t s = first_; s < last_; ++s) {
      const Token* start = At(s);
      if (start->kind != TokenKind::kIdentifier && !Keyword(start, "this") &&
          !Keyword(start, "super")) {
        continue;
      }
      if (!StatementBoundary(s)) continue;
      // Walk the call chain: names, dots, type arguments and bracket groups.
      std::size_t j = s;
      std::size_t last_call_name = kNone;
      bool truncated = false;
      while (j < code_.size()) {
        const Token* t = At(j);
        if (t->line > line_) {
          truncated = true;
          break;
        }
        if (t->kind == TokenKind::kIdentifier || Keyword(t, "this") ||
            Keyword(t, "super") || Punct(t, ".")) {
          ++j;
        } else if (Punct(t, "<") && generic_[j]) {
          while (j < code_.size() && generic_[j]) ++j;
        } else if (Punct(t, "(") || Punct(t, "[")) {
          std::size_t close = Match(j);
          if (Punct(t, "(")) {
            std::size_t name = Prev(j);
            last_call_name = At(name)->kind == TokenKind::kIdentifier ? name : kNone;
          }
          if (close == kNone) {
            truncated = true;
            break;
          }
          j = close + 1;
        } else {
          break;
        }
      }
      if (truncated) {
        if (last_call_name != kNone && NameMatches(last_call_name)) {
          Add(s, kNone, ErrorCode::kMultiLineExpression);
        }
        continue;
      }
      if (j >= code_.size() || !Punct(At(j), ";") || !Punct(At(j - 1), ")")) continue;
      std::size_t open = Match(j - 1);
      std::size_t name = open == kNone ? kNone : Prev(open);
      if (name == kNone || name != last_call_name) continue;
      if (!NameMatches(name)) continue;
      Add(s, j);
      s = j;
    }
  }

  bool NameMatches(std::size_t name) const {
    return rule_.call_name.empty() || At(name)->text == rule_.call_name;
  }

  // ---- Conditions ----

  bool OrderFamily() const {
    return std::find(rule_.opcode_family.begin(), rule_.opcode_family.end(),
                     op::kIfIcmplt) != rule_.opcode_family.end() ||
           std::find(rule_.opcode_family.begin(), rule_.opcode_family.end(), op::kIflt) !=
               rule_.opcode_family.end();
  }

  static bool IsOrderOp(const Token* t) {
    return t->kind == TokenKind::kOperator &&
           (t->text == "<" || t->text == "<=" || t->text == ">" || t->text == ">=");
  }
  static bool IsEqualityOp(const Token* t) {
    return t->kind == TokenKind::kOperator && (t->text == "==" || t->text == "!=");
  }

  bool StopsOperand(const Token* t, bool order) const {
    if (Punct(t, ";") || Punct(t, ",") || Punct(t, "{") || Punct(t, "}")) return true;
    if (t->kind == TokenKind::kKeyword) {
      return t->text == "return" || t->text == "case" || t->text == "assert" ||
             t->text == "throw" || t->text == "yield" || t->text == "else" ||
             t->text == "do";
    }
    if (t->kind != TokenKind::kOperator) return false;
    const std::string& s = t->text;
    if (Contains(kAssignments, s) || s == "?" || s == ":" || s == "->" || s == "&&" ||
        s == "||" || s == "&" || s == "|" || s == "^") {
      return true;
    }
    return order && (s == "==" || s == "!=");
  }

  void AddComparison(std::size_t i, bool order) {
    std::size_t left = i;
    for (std::size_t j = Prev(i); j != kNone; j = Prev(j)) {
      const Token* t = At(j);
      if (Punct(t, ")") || Punct(t, "]")) {
        std::size_t m = Match(j);
        if (m == kNone) break;
        left = m;
        j = m;
        continue;
      }
      if (Punct(t, "(") || Punct(t, "[") || StopsOperand(t, order)) break;
      left = j;
    }
    std::size_t right = i;
    for (std::size_t j = i + 1; j < code_.size(); ++j) {
      const Token* t = At(j);
      if (Punct(t, "(") || Punct(t, "[")) {
        std::size_t m = Match(j);
        if (m == kNone) break;
        right = m;
        j = m;
        continue;
      }
      if (Punct(t, ")") || Punct(t, "]") || StopsOperand(t, order)) break;
      right = j;
    }
    if (left == i || right == i) return;
    Add(left, right);
  }

  // Atomic operands of an && / || chain over tokens [a, b]. Operands that are
  // themselves comparisons are left to AddComparison.
  void AddBareOperands(std::size_t a, std::size_t b, bool truncated) {
    std::size_t part = a;
    for (std::size_t j = a; j <= b + 1; ++j) {
      bool split = j > b || Punct(At(j), "&&") || Punct(At(j), "||");
      if (!split) {
        if (Punct(At(j), "(") || Punct(At(j), "[")) {
          std::size_t m = Match(j);
          if (m == kNone || m > b) {
            j = b;
            continue;
          }
          j = m;
        }
        continue;
      }
      if (part < j) AddBarePart(part, j - 1, truncated && j > b);
      part = j + 1;
    }
  }

  void AddBarePart(std::size_t p, std::size_t q, bool truncated) {
    std::size_t s = p;
    while (s <= q && Punct(At(s), "!")) ++s;
    if (s > q) return;
    if (Punct(At(s), "(") && Match(s) == q) {
      if (s + 1 <= q - 1) AddBareOperands(s + 1, q - 1, false);
      return;
    }
    for (std::size_t j = s; j <= q; ++j) {
      const Token* t = At(j);
      if (Punct(t, "(") || Punct(t, "[")) {
        std::size_t m = Match(j);
        if (m == kNone || m > q) break;
        j = m;
        continue;
      }
      if ((IsOrderOp(t) && !generic_[j]) || IsEqualityOp(t) || Punct(t, "?")) return;
    }
    if (s == q && (Keyword(At(s), "true") || Keyword(At(s), "false"))) return;
    if (truncated) {
      Add(p, kNone, ErrorCode::kMultiLineExpression);
    } else {
      Add(p, q);
    }
  }

  // Outermost token of the && / || chain around `i`, scanning left or right.
  // Returns kNone for an empty side.
  std::size_t ChainEdge(std::size_t i, bool forward) const {
    std::size_t edge = kNone;
    std::size_t j = forward ? i + 1 : Prev(i);
    while (j != kNone && j < code_.size()) {
      const Token* t = At(j);
      bool open = forward ? (Punct(t, "(") || Punct(t, "[")) : (Punct(t, ")") || Punct(t, "]"));
      bool close = forward ? (Punct(t, ")") || Punct(t, "]")) : (Punct(t, "(") || Punct(t, "["));
      if (open) {
        std::size_t m = Match(j);
        if (m == kNone) break;
        edge = m;
        j = forward ? m + 1 : Prev(m);
        continue;
      }
      if (close || Punct(t, ";") || Punct(t, ",") || Punct(t, "{") || Punct(t, "}") ||
          Punct(t, "?") || Punct(t, ":") || Punct(t, "->") || Keyword(t, "return") ||
          (t->kind == TokenKind::kOperator && Contains(kAssignments, t->text))) {
        break;
      }
      edge = j;
      j = forward ? j + 1 : Prev(j);
    }
    return edge;
  }

  void ScanConditions() {
    bool order = OrderFamily();
    for (std::size_t i = first_; i < last_; ++i) {
      const Token* t = At(i);
      if (generic_[i]) continue;
      if (order ? IsOrderOp(t) : IsEqualityOp(t)) AddComparison(i, order);
    }
    if (order) return;
    for (std::size_t i = first_; i < last_; ++i) {
      const Token* t = At(i);
      std::size_t next = Next(i);
      if ((Keyword(t, "if") || Keyword(t, "while")) && next != kNone &&
          Punct(At(next), "(")) {
        std::size_t close = Match(next);
        if (close != kNone && At(close)->line == line_) {
          if (close > next + 1) AddBareOperands(next + 1, close - 1, false);
        } else if (next + 1 < last_) {
          AddBareOperands(next + 1, last_ - 1, true);
        }
      } else if (Keyword(t, "for") && next != kNone && Punct(At(next), "(")) {
        std::size_t first_semi = FindAtDepth(next + 1, ";");
        if (first_semi == kNone) continue;
        std::size_t second_semi = FindAtDepth(first_semi + 1, ";");
        if (second_semi != kNone && second_semi > first_semi + 1) {
          AddBareOperands(first_semi + 1, second_semi - 1, false);
        }
      } else if (Punct(t, "&&") || Punct(t, "||")) {
        // A boolean chain outside a condition, e.g. `return a && !b;`.
        std::size_t left = ChainEdge(i, false);
        std::size_t right = ChainEdge(i, true);
        bool truncated = right != kNone && At(right)->line > line_;
        if (truncated) right = last_ - 1;
        if (left != kNone && right != kNone && left <= right) {
          AddBareOperands(left, right, truncated);
        }
      } else if (Punct(t, "?")) {
        std::size_t left = i;
        for (std::size_t j = Prev(i); j != kNone; j = Prev(j)) {
          const Token* u = At(j);
          if (Punct(u, ")") || Punct(u, "]")) {
            std::size_t m = Match(j);
            if (m == kNone) break;
            left = m;
            j = m;
            continue;
          }
          if (Punct(u, "(") || Punct(u, "[") || Punct(u, ";") || Punct(u, ",") ||
              Punct(u, "{") || Punct(u, "}") || Punct(u, "?") || Punct(u, ":") ||
              Punct(u, "->") || Keyword(u, "return") ||
              (u->kind == TokenKind::kOperator && Contains(kAssignments, u->text))) {
            break;
          }
          left = j;
        }
        if (left < i) AddBareOperands(left, i - 1, false);
      }
    }
  }

  void ScanSwitches() {
    for (std::size_t i = first_; i < last_; ++i) {
      if (!Keyword(At(i), "switch")) continue;
      std::size_t open_paren = Next(i);
      if (open_paren == kNone || !Punct(At(open_paren), "(")) continue;
      std::size_t close_paren = Match(open_paren);
      std::size_t brace = close_paren == kNone ? kNone : Next(close_paren);
      if (brace == kNone || !Punct(At(brace), "{") || !OnLine(brace)) {
        Add(i, kNone, ErrorCode::kUnsupportedSwitchShape);
        continue;
      }
      std::size_t end = Match(brace);
      bool closed = end != kNone && OnLine(end);
      std::size_t body_last = closed ? end - 1 : last_ - 1;
      bool has_case = false;
      bool has_default = false;
      for (std::size_t j = brace + 1; j <= body_last && j < last_; ++j) {
        if (Punct(At(j), "(") || Punct(At(j), "{")) {
          std::size_t m = Match(j);
          if (m == kNone || m > body_last) break;
          j = m;
          continue;
        }
        if (Keyword(At(j), "case")) has_case = true;
        if (Keyword(At(j), "default")) has_default = true;
      }
      if (!has_case || !has_default || body_last <= brace) {
        Add(i, kNone, ErrorCode::kUnsupportedSwitchShape);
        continue;
      }
      CandidateOccurrence occ;
      occ.line = line_;
      occ.column_start = At(brace)->end_column;
      occ.column_end = closed ? At(end)->column
                              : static_cast<int>(line_text_.size()) + 1;
      out_.push_back(occ);
    }
  }

  std::string_view line_text_;
  int line_;
  const RewriteRule& rule_;
  int scope_line_;
  std::vector<const Token*> code_;
  std::vector<bool> generic_;
  std::size_t first_ = 0;
  std::size_t last_ = 0;
  std::vector<CandidateOccurrence> out_;
};

}  // namespace

std::vector<CandidateOccurrence> FindCandidatesInTokens(const std::vector<Token>& tokens,
                                                        std::string_view line_text,
                                                        int line, const RewriteRule& rule,
                                                        int scope_line) {
  return LineScanner(tokens, line_text, line, rule, scope_line).Run();
}

std::vector<CandidateOccurrence> FindCandidates(std::string_view line_text,
                                                const RewriteRule& rule, int line) {
  std::vector<Token> tokens = internal::LexLenient(line_text);
  std::vector<CandidateOccurrence> found =
      FindCandidatesInTokens(tokens, line_text, 1, rule, 1);
  for (CandidateOccurrence& occ : found) occ.line = line;
  return found;
}

std::vector<CandidateOccurrence> FindCandidates(const SourceUnit& unit, int line,
                                                const RewriteRule& rule) {
  if (line < 1 || line > unit.line_count()) return {};
  int scope_line = 1;
  if (std::optional<MethodSpan> span = EnclosingSpan(unit.method_spans(), line)) {
    scope_line = span->signature_line;
  }
  return FindCandidatesInTokens(unit.tokens(), unit.line(line), line, rule, scope_line);
}

}  // namespace pitrecon
