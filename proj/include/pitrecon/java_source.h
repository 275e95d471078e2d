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

#ifndef PITRECON_JAVA_SOURCE_H
#define PITRECON_JAVA_SOURCE_H

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pitrecon {

enum class TokenKind {
  kIdentifier,
  kKeyword,
  kOperator,
  kSeparator,
  kIntLiteral,
  kFloatLiteral,
  kStringLiteral,
  kCharLiteral,
  kLineComment,
  kBlockComment,
  kJavadocComment,
};

std::string_view TokenKindName(TokenKind kind);

struct Token {
  TokenKind kind = TokenKind::kIdentifier;
  std::string text;
  // 1-based position of the first character. Columns count bytes.
  int line = 0;
  int column = 0;
  // Position one past the last character; differs from `line` for block
  // comments and text blocks.
  int end_line = 0;
  int end_column = 0;

  bool IsComment() const {
    return kind == TokenKind::kLineComment || kind == TokenKind::kBlockComment ||
           kind == TokenKind::kJavadocComment;
  }
  bool Is(TokenKind k, std::string_view t) const { return kind == k && text == t; }

  bool operator==(const Token&) const = default;
};

// Tokenizes Java source, comments included. Unicode escapes are not
// pre-processed. Throws LexError for unterminated literals or comments and for
// characters that cannot start a token.
std::vector<Token> Lex(std::string_view text);

struct MethodSpan {
  // Dotted nesting path, e.g. "Outer.Inner".
  std::string owner_class;
  // Source name for methods; "<init>" for constructors and instance
  // initializers, "<clinit>" for static initializers.
  std::string method_name;
  int signature_line = 0;
  int start_line = 0;
  int end_line = 0;
  std::optional<std::string> javadoc;

  bool operator==(const MethodSpan&) const = default;
};

enum class LineEnding { kNone, kLf, kCrLf, kCr };

// An immutable, lexed Java source file.
class SourceUnit {
 public:
  // Splits, lexes and scans `text`. Throws LexError, or Error(kUnbalancedBraces).
  static SourceUnit FromText(std::string path, std::string_view text);

  const std::string& path() const { return path_; }
  bool has_bom() const { return has_bom_; }
  // 1-based access; lines are stored without their terminators.
  const std::string& line(int number) const { return lines_.at(number - 1); }
  int line_count() const { return static_cast<int>(lines_.size()); }
  const std::vector<std::string>& lines() const { return lines_; }
  LineEnding ending(int number) const { return endings_.at(number - 1); }
  const std::vector<Token>& tokens() const { return tokens_; }
  const std::vector<MethodSpan>& method_spans() const { return spans_; }

  // Reassembles the file bytes, optionally replacing one line's content. The
  // replaced line keeps its original terminator.
  std::string Render(int replaced_line = 0, std::string_view replacement = {}) const;

 private:
  std::string path_;
  bool has_bom_ = false;
  std::vector<std::string> lines_;
  std::vector<LineEnding> endings_;
  std::vector<Token> tokens_;
  std::vector<MethodSpan> spans_;

  friend std::vector<MethodSpan> ScanMethodSpans(const SourceUnit& unit);
};

// One span per method, constructor and initializer block, ordered by
// start_line. Lambda and anonymous-class bodies belong to the enclosing
// method; named local classes produce nested spans.
std::vector<MethodSpan> ScanMethodSpans(const SourceUnit& unit);

// Innermost span containing `line`. When two disjoint spans share the line
// (several methods on one physical line) the result is ambiguous and
// `ambiguous` is set.
std::optional<MethodSpan> EnclosingSpan(const std::vector<MethodSpan>& spans, int line,
                                        bool* ambiguous = nullptr);

// Verbatim `/** ... */` block above `method_start_line`, skipping blank lines
// and annotations.
std::optional<std::string> ExtractJavadoc(const SourceUnit& unit, int method_start_line);

// Leading spaces and tabs of `line`.
std::string_view LeadingWhitespace(std::string_view line);

}  // namespace pitrecon

#endif  // PITRECON_JAVA_SOURCE_H
