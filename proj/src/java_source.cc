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

#include "pitrecon/java_source.h"

#include <algorithm>
#include <array>
#include <cstring>

#include "pitrecon/error.h"
#include "pitrecon/lexer_internal.h"

namespace pitrecon {

namespace {

constexpr std::array<std::string_view, 53> kKeywords = {
    "abstract",   "assert",       "boolean",   "break",      "byte",
    "case",       "catch",        "char",      "class",      "const",
    "continue",   "default",      "do",        "double",     "else",
    "enum",       "extends",      "final",     "finally",    "float",
    "for",        "goto",         "if",        "implements", "import",
    "instanceof", "int",          "interface", "long",       "native",
    "new",        "package",      "private",   "protected",  "public",
    "return",     "short",        "static",    "strictfp",   "super",
    "switch",     "synchronized", "this",      "throw",      "throws",
    "transient",  "try",          "void",      "volatile",   "while",
    "true",       "false",        "null",
};

// Longest first so that maximal munch picks ">>>=" over ">>".
constexpr std::array<std::string_view, 38> kOperators = {
    ">>>=", "<<=", ">>=", ">>>", "...", "->", "::", "++", "--", "&&",
    "||",   "==",  "!=",  "<=",  ">=",  "+=", "-=", "*=", "/=", "&=",
    "|=",   "^=",  "%=",  "<<",  ">>",  "=",  ">",  "<",  "!",  "~",
    "?",    ":",   "+",   "-",   "*",   "/",  "&",  "|",
};

bool IsIdentStart(unsigned char c) {
  return std::isalpha(c) || c == '_' || c == '$' || c >= 0x80;
}
bool IsIdentPart(unsigned char c) { return IsIdentStart(c) || std::isdigit(c); }

class Lexer {
 public:
  Lexer(std::string_view text, bool lenient) : text_(text), lenient_(lenient) {}

  std::vector<Token> Run() {
    std::vector<Token> out;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == ' ' || c == '\t' || c == '\f') {
        Advance(1);
        continue;
      }
      if (c == '\n' || c == '\r') {
        Newline();
        continue;
      }
      start_pos_ = pos_;
      start_line_ = line_;
      start_column_ = column_;
      out.push_back(Next());
    }
    return out;
  }

 private:
  char Peek(std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }

  void Advance(std::size_t n) {
    pos_ += n;
    column_ += static_cast<int>(n);
  }

  void Newline() {
    if (text_[pos_] == '\r' && Peek(1) == '\n') ++pos_;
    ++pos_;
    ++line_;
    column_ = 1;
  }

  Token Make(TokenKind kind) const {
    Token token;
    token.kind = kind;
    token.text = std::string(text_.substr(start_pos_, pos_ - start_pos_));
    token.line = start_line_;
    token.column = start_column_;
    token.end_line = line_;
    token.end_column = column_;
    return token;
  }

  [[noreturn]] void Fail(const std::string& reason) const {
    throw LexError(start_line_, start_column_, reason);
  }

  Token Next() {
    char c = Peek();
    if (c == '/' && Peek(1) == '/') {
      while (pos_ < text_.size() && Peek() != '\n' && Peek() != '\r') Advance(1);
      return Make(TokenKind::kLineComment);
    }
    if (c == '/' && Peek(1) == '*') return BlockComment();
    if (c == '"') {
      if (Peek(1) == '"' && Peek(2) == '"') return TextBlock();
      return Quoted('"', TokenKind::kStringLiteral, "string literal");
    }
    if (c == '\'') return Quoted('\'', TokenKind::kCharLiteral, "character literal");
    if (std::isdigit(static_cast<unsigned char>(c)) ||
        (c == '.' && std::isdigit(static_cast<unsigned char>(Peek(1))))) {
      return Number();
    }
    if (IsIdentStart(static_cast<unsigned char>(c))) {
      while (pos_ < text_.size() && IsIdentPart(static_cast<unsigned char>(Peek()))) {
        Advance(1);
      }
      Token token = Make(TokenKind::kIdentifier);
      if (std::find(kKeywords.begin(), kKeywords.end(), token.text) != kKeywords.end()) {
        token.kind = TokenKind::kKeyword;
      }
      return token;
    }
    if (std::strchr("(){}[];,@", c) != nullptr && c != '\0') {
      Advance(1);
      return Make(TokenKind::kSeparator);
    }
    for (std::string_view op : kOperators) {
      if (text_.substr(pos_, op.size()) == op) {
        Advance(op.size());
        bool separator = op == "..." || op == "::";
        return Make(separator ? TokenKind::kSeparator : TokenKind::kOperator);
      }
    }
    if (c == '.') {
      Advance(1);
      return Make(TokenKind::kSeparator);
    }
    if (c == '^' || c == '%') {
      Advance(1);
      return Make(TokenKind::kOperator);
    }
    Fail(std::string("illegal character '") + c + "'");
  }

  Token BlockComment() {
    bool javadoc = Peek(2) == '*' && Peek(3) != '/';
    Advance(2);
    while (pos_ < text_.size()) {
      if (Peek() == '*' && Peek(1) == '/') {
        Advance(2);
        return Make(javadoc ? TokenKind::kJavadocComment : TokenKind::kBlockComment);
      }
      if (Peek() == '\n' || Peek() == '\r') {
        Newline();
      } else {
        Advance(1);
      }
    }
    if (lenient_) return Make(TokenKind::kBlockComment);
    Fail("unterminated comment");
  }

  Token Quoted(char quote, TokenKind kind, const char* what) {
    Advance(1);
    while (pos_ < text_.size()) {
      char c = Peek();
      if (c == '\n' || c == '\r') break;
      if (c == '\\') {
        if (pos_ + 1 >= text_.size() || Peek(1) == '\n' || Peek(1) == '\r') break;
        Advance(2);
        continue;
      }
      Advance(1);
      if (c == quote) return Make(kind);
    }
    Fail(std::string("unterminated ") + what);
  }

  Token TextBlock() {
    Advance(3);
    while (pos_ < text_.size()) {
      char c = Peek();
      if (c == '\\' && pos_ + 1 < text_.size()) {
        if (Peek(1) == '\n' || Peek(1) == '\r') {
          Advance(1);
          Newline();
        } else {
          Advance(2);
        }
        continue;
      }
      if (c == '"' && Peek(1) == '"' && Peek(2) == '"') {
        Advance(3);
        return Make(TokenKind::kStringLiteral);
      }
      if (c == '\n' || c == '\r') {
        Newline();
      } else {
        Advance(1);
      }
    }
    if (lenient_) return Make(TokenKind::kStringLiteral);
    Fail("unterminated text block");
  }

  Token Number() {
    bool is_float = false;
    auto digits = [this](auto pred) {
      while (pos_ < text_.size() &&
             (pred(static_cast<unsigned char>(Peek())) || Peek() == '_')) {
        Advance(1);
      }
    };
    auto is_dec = [](unsigned char ch) { return std::isdigit(ch) != 0; };
    auto is_hex = [](unsigned char ch) { return std::isxdigit(ch) != 0; };
    if (Peek() == '0' && (Peek(1) == 'x' || Peek(1) == 'X')) {
      Advance(2);
      digits(is_hex);
      if (Peek() == '.') {
        is_float = true;
        Advance(1);
        digits(is_hex);
      }
      if (Peek() == 'p' || Peek() == 'P') {
        is_float = true;
        Advance(1);
        if (Peek() == '+' || Peek() == '-') Advance(1);
        digits(is_dec);
      }
    } else if (Peek() == '0' && (Peek(1) == 'b' || Peek(1) == 'B')) {
      Advance(2);
      digits(is_dec);
    } else {
      digits(is_dec);
      if (Peek() == '.' && std::isdigit(static_cast<unsigned char>(Peek(1)))) {
        is_float = true;
        Advance(1);
        digits(is_dec);
      } else if (Peek() == '.' && !IsIdentStart(static_cast<unsigned char>(Peek(1))) &&
                 Peek(1) != '.') {
        // "1." is a double literal; "1.foo" never occurs in Java.
        is_float = true;
        Advance(1);
      }
      if (Peek() == 'e' || Peek() == 'E') {
        is_float = true;
        Advance(1);
        if (Peek() == '+' || Peek() == '-') Advance(1);
        digits(is_dec);
      }
    }
    char suffix = Peek();
    if (suffix == 'f' || suffix == 'F' || suffix == 'd' || suffix == 'D') {
      is_float = true;
      Advance(1);
    } else if (suffix == 'l' || suffix == 'L') {
      Advance(1);
    }
    if (IsIdentPart(static_cast<unsigned char>(Peek()))) {
      Fail("malformed numeric literal");
    }
    return Make(is_float ? TokenKind::kFloatLiteral : TokenKind::kIntLiteral);
  }

  std::string_view text_;
  bool lenient_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
  std::size_t start_pos_ = 0;
  int start_line_ = 1;
  int start_column_ = 1;
};

// Structural scan over the code tokens (comments removed) of one file.
class SpanScanner {
 public:
  explicit SpanScanner(const std::vector<Token>& all) {
    for (const Token& t : all) {
      if (!t.IsComment()) code_.push_back(&t);
    }
    MatchBraces();
  }

  std::vector<MethodSpan> Run() {
    std::size_t i = 0;
    while (i < code_.size()) {
      std::optional<TypeDecl> type = TypeAt(i);
      if (type) {
        i = ScanTypeBody(*type, "") + 1;
      } else {
        ++i;
      }
    }
    std::stable_sort(spans_.begin(), spans_.end(),
                     [](const MethodSpan& a, const MethodSpan& b) {
                       return a.start_line < b.start_line;
                     });
    return std::move(spans_);
  }

 private:
  struct TypeDecl {
    std::string name;
    bool is_enum = false;
    std::size_t open_brace = 0;
  };

  void MatchBraces() {
    match_.assign(code_.size(), 0);
    std::vector<std::size_t> stack;
    for (std::size_t i = 0; i < code_.size(); ++i) {
      const Token& t = *code_[i];
      if (t.kind != TokenKind::kSeparator) continue;
      if (t.text == "{" || t.text == "(" || t.text == "[") {
        stack.push_back(i);
      } else if (t.text == "}" || t.text == ")" || t.text == "]") {
        const char* open = t.text == "}" ? "{" : t.text == ")" ? "(" : "[";
        if (stack.empty() || code_[stack.back()]->text != open) {
          throw Error(ErrorCode::kUnbalancedBraces,
                      "unbalanced '" + t.text + "' at line " + std::to_string(t.line));
        }
        match_[stack.back()] = i;
        match_[i] = stack.back();
        stack.pop_back();
      }
    }
    if (!stack.empty()) {
      const Token& t = *code_[stack.back()];
      throw Error(ErrorCode::kUnbalancedBraces,
                  "unclosed '" + t.text + "' at line " + std::to_string(t.line));
    }
  }

  bool IsSep(std::size_t i, std::string_view text) const {
    return i < code_.size() && code_[i]->Is(TokenKind::kSeparator, text);
  }
  bool IsKw(std::size_t i, std::string_view text) const {
    return i < code_.size() && code_[i]->Is(TokenKind::kKeyword, text);
  }
  bool IsIdent(std::size_t i) const {
    return i < code_.size() && code_[i]->kind == TokenKind::kIdentifier;
  }

  // Recognizes a type declaration keyword at `i` and finds its body.
  std::optional<TypeDecl> TypeAt(std::size_t i) const {
    bool dotted = i > 0 && IsSep(i - 1, ".");
    if (dotted) return std::nullopt;
    TypeDecl decl;
    std::size_t name_at;
    if (IsKw(i, "class") || IsKw(i, "interface") || IsKw(i, "enum")) {
      // "@interface" declares an annotation type.
      decl.is_enum = IsKw(i, "enum");
      name_at = i + 1;
    } else if (IsIdent(i) && code_[i]->text == "record" && IsIdent(i + 1) &&
               (IsSep(i + 2, "(") || code_[i + 2]->text == "<")) {
      name_at = i + 1;
    } else {
      return std::nullopt;
    }
    if (!IsIdent(name_at)) return std::nullopt;
    decl.name = code_[name_at]->text;
    for (std::size_t k = name_at + 1; k < code_.size(); ++k) {
      if (IsSep(k, "(")) {
        k = match_[k];
      } else if (IsSep(k, "{")) {
        decl.open_brace = k;
        return decl;
      } else if (IsSep(k, ";") || IsSep(k, "}")) {
        return std::nullopt;
      }
    }
    return std::nullopt;
  }

  // Skips annotations starting at `i`; returns the first non-annotation
  // token. "@interface" is not an annotation.
  std::size_t SkipAnnotations(std::size_t i) const {
    while (IsSep(i, "@") && !IsKw(i + 1, "interface")) {
      ++i;
      while (IsIdent(i) && IsSep(i + 1, ".")) i += 2;
      if (IsIdent(i)) ++i;
      if (IsSep(i, "(")) i = match_[i] + 1;
    }
    return i;
  }

  // Scans the body of `type`; returns the index of its closing brace.
  std::size_t ScanTypeBody(const TypeDecl& type, const std::string& outer) {
    std::string owner = outer.empty() ? type.name : outer + "." + type.name;
    std::size_t close = match_[type.open_brace];
    std::size_t i = type.open_brace + 1;
    if (type.is_enum) {
      // Enum constants, with optional arguments and class bodies, run up to
      // the first top-level ';'.
      while (i < close && !IsSep(i, ";")) {
        if (IsSep(i, "(") || IsSep(i, "{")) {
          i = match_[i] + 1;
        } else {
          ++i;
        }
      }
      if (i < close) ++i;
    }
    while (i < close) i = ScanMember(i, close, owner, type.name);
    return close;
  }

  // Scans one member declaration starting at `i`; returns the index after it.
  std::size_t ScanMember(std::size_t i, std::size_t close, const std::string& owner,
                         const std::string& simple_name) {
    if (IsSep(i, ";")) return i + 1;
    std::size_t start = SkipAnnotations(i);
    if (start >= close) return close;

    if (std::optional<TypeDecl> nested = FindNestedType(start, close)) {
      return ScanTypeBody(*nested, owner) + 1;
    }

    std::size_t k = start;
    if (IsKw(k, "static") && IsSep(k + 1, "{")) ++k;
    if (IsSep(k, "{")) {
      bool is_static = k != start;
      std::size_t end = match_[k];
      AddSpan(owner, is_static ? "<clinit>" : "<init>", start, start, end);
      ScanBodyForTypes(k, end, owner);
      return end + 1;
    }

    for (; k < close; ++k) {
      const Token& t = *code_[k];
      if (t.Is(TokenKind::kOperator, "=") || IsSep(k, ";")) break;
      if (IsSep(k, "@")) {
        k = SkipAnnotations(k) - 1;
        continue;
      }
      if (IsSep(k, "{") && k > start && IsIdent(k - 1) &&
          code_[k - 1]->text == simple_name) {
        // Compact canonical constructor of a record.
        std::size_t end = match_[k];
        AddSpan(owner, "<init>", start, k - 1, end);
        ScanBodyForTypes(k, end, owner);
        return end + 1;
      }
      if (IsSep(k, "(")) {
        if (!IsIdent(k - 1)) break;
        std::size_t name_at = k - 1;
        std::string name = code_[name_at]->text == simple_name ? "<init>"
                                                                : code_[name_at]->text;
        std::size_t after = match_[k] + 1;
        while (after < close && !IsSep(after, "{") && !IsSep(after, ";")) {
          if (IsKw(after, "default")) {
            // Annotation element default, possibly an array initializer.
            while (after < close && !IsSep(after, ";")) {
              if (IsSep(after, "{") || IsSep(after, "(")) after = match_[after];
              ++after;
            }
            return after + 1;
          }
          if (IsSep(after, "(")) after = match_[after];
          ++after;
        }
        if (IsSep(after, "{")) {
          std::size_t end = match_[after];
          AddSpan(owner, name, start, name_at, end);
          ScanBodyForTypes(after, end, owner);
          return end + 1;
        }
        return after + 1;
      }
    }
    // Field (or something unrecognized): skip to the terminating ';' at this
    // level, stepping over initializer braces.
    for (k = start; k < close; ++k) {
      if (IsSep(k, "{") || IsSep(k, "(") || IsSep(k, "[")) {
        k = match_[k];
      } else if (IsSep(k, ";")) {
        return k + 1;
      }
    }
    return close;
  }

  // A type declaration whose keyword appears among the leading modifiers.
  std::optional<TypeDecl> FindNestedType(std::size_t start, std::size_t close) const {
    for (std::size_t k = start; k < close; ++k) {
      const Token& t = *code_[k];
      bool modifier = t.kind == TokenKind::kKeyword &&
                      (t.text == "public" || t.text == "private" ||
                       t.text == "protected" || t.text == "static" ||
                       t.text == "final" || t.text == "abstract" ||
                       t.text == "strictfp");
      bool contextual = t.kind == TokenKind::kIdentifier &&
                        (t.text == "sealed" || t.text == "non") && !IsSep(k + 1, "(");
      if (IsSep(k, "@") && !IsKw(k + 1, "interface")) {
        k = SkipAnnotations(k) - 1;
        continue;
      }
      if (IsSep(k, "@")) continue;
      if (modifier || contextual ||
          (t.text == "-" && k > start && code_[k - 1]->text == "non")) {
        continue;
      }
      return TypeAt(k);
    }
    return std::nullopt;
  }

  // Finds named local classes inside a method body; anonymous classes and
  // lambdas are skipped as plain braces.
  void ScanBodyForTypes(std::size_t open, std::size_t close, const std::string& owner) {
    for (std::size_t k = open + 1; k < close; ++k) {
      if (std::optional<TypeDecl> local = TypeAt(k)) {
        k = ScanTypeBody(*local, owner);
      }
    }
  }

  void AddSpan(const std::string& owner, std::string name, std::size_t start,
               std::size_t signature, std::size_t end) {
    MethodSpan span;
    span.owner_class = owner;
    span.method_name = std::move(name);
    span.start_line = code_[start]->line;
    span.signature_line = code_[signature]->line;
    span.end_line = code_[end]->line;
    spans_.push_back(std::move(span));
  }

  std::vector<const Token*> code_;
  std::vector<std::size_t> match_;
  std::vector<MethodSpan> spans_;
};

}  // namespace

namespace internal {

std::vector<Token> LexLenient(std::string_view text) { return Lexer(text, true).Run(); }

}  // namespace internal

std::string_view TokenKindName(TokenKind kind) {
  switch (kind) {
    case TokenKind::kIdentifier:
      return "identifier";
    case TokenKind::kKeyword:
      return "keyword";
    case TokenKind::kOperator:
      return "operator";
    case TokenKind::kSeparator:
      return "separator";
    case TokenKind::kIntLiteral:
      return "int_literal";
    case TokenKind::kFloatLiteral:
      return "float_literal";
    case TokenKind::kStringLiteral:
      return "string_literal";
    case TokenKind::kCharLiteral:
      return "char_literal";
    case TokenKind::kLineComment:
      return "line_comment";
    case TokenKind::kBlockComment:
      return "block_comment";
    case TokenKind::kJavadocComment:
      return "javadoc_comment";
  }
  return "unknown";
}

std::vector<Token> Lex(std::string_view text) { return Lexer(text, false).Run(); }

SourceUnit SourceUnit::FromText(std::string path, std::string_view text) {
  SourceUnit unit;
  unit.path_ = std::move(path);
  if (text.substr(0, 3) == "\xEF\xBB\xBF") {
    unit.has_bom_ = true;
    text.remove_prefix(3);
  }
  std::size_t begin = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != '\n' && text[i] != '\r') continue;
    unit.lines_.emplace_back(text.substr(begin, i - begin));
    if (text[i] == '\r' && i + 1 < text.size() && text[i + 1] == '\n') {
      unit.endings_.push_back(LineEnding::kCrLf);
      ++i;
    } else {
      unit.endings_.push_back(text[i] == '\n' ? LineEnding::kLf : LineEnding::kCr);
    }
    begin = i + 1;
  }
  if (begin < text.size()) {
    unit.lines_.emplace_back(text.substr(begin));
    unit.endings_.push_back(LineEnding::kNone);
  }
  unit.tokens_ = Lex(text);
  unit.spans_ = ScanMethodSpans(unit);
  return unit;
}

std::string SourceUnit::Render(int replaced_line, std::string_view replacement) const {
  std::string out;
  if (has_bom_) out += "\xEF\xBB\xBF";
  for (std::size_t i = 0; i < lines_.size(); ++i) {
    if (static_cast<int>(i) + 1 == replaced_line) {
      out += replacement;
    } else {
      out += lines_[i];
    }
    switch (endings_[i]) {
      case LineEnding::kLf:
        out += '\n';
        break;
      case LineEnding::kCrLf:
        out += "\r\n";
        break;
      case LineEnding::kCr:
        out += '\r';
        break;
      case LineEnding::kNone:
        break;
    }
  }
  return out;
}

std::vector<MethodSpan> ScanMethodSpans(const SourceUnit& unit) {
  std::vector<MethodSpan> spans = SpanScanner(unit.tokens()).Run();
  for (MethodSpan& span : spans) span.javadoc = ExtractJavadoc(unit, span.start_line);
  return spans;
}

std::optional<MethodSpan> EnclosingSpan(const std::vector<MethodSpan>& spans, int line,
                                        bool* ambiguous) {
  const MethodSpan* best = nullptr;
  bool tie = false;
  for (const MethodSpan& span : spans) {
    if (span.start_line > line || span.end_line < line) continue;
    int size = span.end_line - span.start_line;
    if (best == nullptr || size < best->end_line - best->start_line) {
      best = &span;
      tie = false;
    } else if (size == best->end_line - best->start_line) {
      tie = true;
    }
  }
  if (ambiguous != nullptr) *ambiguous = tie;
  if (best == nullptr) return std::nullopt;
  return *best;
}

std::optional<std::string> ExtractJavadoc(const SourceUnit& unit, int method_start_line) {
  const std::vector<Token>& tokens = unit.tokens();
  // First code token of the declaration.
  std::size_t first = tokens.size();
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (tokens[i].line >= method_start_line && !tokens[i].IsComment()) {
      first = i;
      break;
    }
  }
  if (first == tokens.size() || tokens[first].line != method_start_line) {
    return std::nullopt;
  }

  // Walk backwards over annotations: `@ Name(.Name)* ( ... )?`.
  std::size_t i = first;
  while (i > 0) {
    std::size_t k = i - 1;
    if (tokens[k].IsComment()) break;
    if (tokens[k].Is(TokenKind::kSeparator, ")")) {
      int depth = 0;
      while (true) {
        if (tokens[k].Is(TokenKind::kSeparator, ")")) ++depth;
        if (tokens[k].Is(TokenKind::kSeparator, "(")) --depth;
        if (depth == 0 || k == 0) break;
        --k;
      }
      if (depth != 0 || k == 0) break;
      --k;
    }
    if (tokens[k].kind != TokenKind::kIdentifier) break;
    while (k >= 2 && tokens[k - 1].Is(TokenKind::kSeparator, ".") &&
           tokens[k - 2].kind == TokenKind::kIdentifier) {
      k -= 2;
    }
    if (k == 0 || !tokens[k - 1].Is(TokenKind::kSeparator, "@")) break;
    i = k - 1;
  }
  if (i == 0 || tokens[i - 1].kind != TokenKind::kJavadocComment) return std::nullopt;
  return tokens[i - 1].text;
}

std::string_view LeadingWhitespace(std::string_view line) {
  std::size_t n = 0;
  while (n < line.size() && (line[n] == ' ' || line[n] == '\t')) ++n;
  return line.substr(0, n);
}

}  // namespace pitrecon
