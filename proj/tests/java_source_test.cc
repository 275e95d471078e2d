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

#include <gtest/gtest.h>

#include <string>
#include <vector>

#include "pitrecon/error.h"
#include "test_support.h"

namespace pitrecon {
namespace {

std::vector<std::string> Texts(const std::vector<Token>& tokens) {
  std::vector<std::string> out;
  for (const Token& t : tokens) out.push_back(t.text);
  return out;
}

LexError LexFailure(std::string_view text) {
  try {
    Lex(text);
  } catch (const LexError& e) {
    return e;
  }
  ADD_FAILURE() << "lexed: " << text;
  return LexError(0, 0, "");
}

const MethodSpan* FindSpan(const std::vector<MethodSpan>& spans, std::string_view owner,
                           std::string_view name) {
  for (const MethodSpan& s : spans) {
    if (s.owner_class == owner && s.method_name == name) return &s;
  }
  return nullptr;
}

TEST(LexerTest, SplitsOperatorsMaximalMunch) {
  auto tokens = Lex("a>>>=b >>= c->d::e ... x<<2 != y");
  EXPECT_EQ(Texts(tokens),
            (std::vector<std::string>{"a", ">>>=", "b", ">>=", "c", "->", "d", "::", "e",
                                      "...", "x", "<<", "2", "!=", "y"}));
  EXPECT_EQ(tokens[1].kind, TokenKind::kOperator);
  EXPECT_EQ(tokens[7].kind, TokenKind::kSeparator);
}

TEST(LexerTest, ClassifiesLiteralsAndKeywords) {
  auto tokens = Lex("return 0x1F + 1_000L + 1.5e-3f + .5 + 'c' + \"s\\\"t\" + '\\n';");
  ASSERT_GE(tokens.size(), 14u);
  EXPECT_EQ(tokens[0].kind, TokenKind::kKeyword);
  EXPECT_EQ(tokens[1].kind, TokenKind::kIntLiteral);
  EXPECT_EQ(tokens[3].kind, TokenKind::kIntLiteral);
  EXPECT_EQ(tokens[3].text, "1_000L");
  EXPECT_EQ(tokens[5].kind, TokenKind::kFloatLiteral);
  EXPECT_EQ(tokens[7].kind, TokenKind::kFloatLiteral);
  EXPECT_EQ(tokens[9].kind, TokenKind::kCharLiteral);
  EXPECT_EQ(tokens[11].kind, TokenKind::kStringLiteral);
  EXPECT_EQ(tokens[11].text, "\"s\\\"t\"");
  EXPECT_EQ(tokens[13].kind, TokenKind::kCharLiteral);
}

TEST(LexerTest, OperatorsInsideStringsAndCommentsAreNotTokens) {
  auto tokens = Lex("s = \"a + b\"; // c - d\n/* e * f */ /** g */ t");
  std::vector<TokenKind> kinds;
  for (const Token& t : tokens) kinds.push_back(t.kind);
  EXPECT_EQ(kinds, (std::vector<TokenKind>{
                       TokenKind::kIdentifier, TokenKind::kOperator,
                       TokenKind::kStringLiteral, TokenKind::kSeparator,
                       TokenKind::kLineComment, TokenKind::kBlockComment,
                       TokenKind::kJavadocComment, TokenKind::kIdentifier}));
  EXPECT_EQ(Lex("/**/")[0].kind, TokenKind::kBlockComment);
}

TEST(LexerTest, TracksLinesAndColumns) {
  auto tokens = Lex("a\n  /* x\n y */ b\r\n\tc");
  ASSERT_EQ(tokens.size(), 4u);
  EXPECT_EQ(tokens[0].line, 1);
  EXPECT_EQ(tokens[0].column, 1);
  EXPECT_EQ(tokens[1].line, 2);
  EXPECT_EQ(tokens[1].column, 3);
  EXPECT_EQ(tokens[1].end_line, 3);
  EXPECT_EQ(tokens[2].line, 3);
  EXPECT_EQ(tokens[3].line, 4);
  EXPECT_EQ(tokens[3].column, 2);
}

TEST(LexerTest, TextBlocksAreSingleTokens) {
  auto tokens = Lex("s = \"\"\"\n  a \"quoted\" + b\n  \"\"\";");
  ASSERT_EQ(tokens.size(), 4u);
  EXPECT_EQ(tokens[2].kind, TokenKind::kStringLiteral);
  EXPECT_EQ(tokens[2].end_line, 3);
}

TEST(LexerTest, ReportsPositionOfUnterminatedConstructs) {
  LexError comment = LexFailure("int a;\n  /* never closed");
  EXPECT_EQ(comment.line(), 2);
  EXPECT_EQ(comment.column(), 3);
  EXPECT_EQ(comment.code(), ErrorCode::kLexError);
  LexError str = LexFailure("x = \"abc\ny\";");
  EXPECT_EQ(str.line(), 1);
  EXPECT_EQ(str.column(), 5);
  EXPECT_EQ(LexFailure("c = 'ab").line(), 1);
  EXPECT_EQ(LexFailure("s = \"\"\"\nopen").line(), 1);
  EXPECT_EQ(LexFailure("a # b").column(), 3);
}

TEST(SourceUnitTest, RenderIsByteIdenticalForMixedEndings) {
  for (std::string text : {std::string("class A {}\n"), std::string("class A {\r\n}\r\n"),
                           std::string("\xEF\xBB\xBF" "class A {}"),
                           std::string("class A {\r}\n\n"), std::string("")}) {
    SourceUnit unit = SourceUnit::FromText("A.java", text);
    EXPECT_EQ(unit.Render(), text);
  }
}

TEST(SourceUnitTest, ReplacesOnlyTheRequestedLine) {
  std::string text = "class A {\r\n  int f() { return 1; }\r\n}\r\n";
  SourceUnit unit = SourceUnit::FromText("A.java", text);
  EXPECT_TRUE(!unit.has_bom());
  EXPECT_EQ(unit.line_count(), 3);
  EXPECT_EQ(unit.line(2), "  int f() { return 1; }");
  EXPECT_EQ(unit.ending(2), LineEnding::kCrLf);
  EXPECT_EQ(unit.Render(2, "  int f() { return 0; }"),
            "class A {\r\n  int f() { return 0; }\r\n}\r\n");
}

TEST(SourceUnitTest, UnbalancedBracesAreRejected) {
  try {
    SourceUnit::FromText("A.java", "class A {\n void f() {\n}\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnbalancedBraces);
  }
}

constexpr char kSpans[] = R"(package p;

/** Outer docs. */
public class Outer {
  static int counter;
  static { counter = 1; }
  { counter++; }

  /** Builds it. */
  @Deprecated
  @SuppressWarnings({"a", "b"})
  public Outer() {
    super();
  }

  int plain(int x) { return x; }

  /** Multi. */
  <T extends Comparable<T>> T generic(
      T a,
      T b) throws Exception {
    Runnable r = new Runnable() {
      public void run() { counter--; }
    };
    java.util.function.IntUnaryOperator op = v -> {
      return v + 1;
    };
    class Local {
      int inner() { return 2; }
    }
    return a;
  }

  abstract static class Nested {
    abstract void none();
    void some() {}
  }

  enum Color {
    RED { int shade() { return 1; } }, BLUE;
    int shade() { return 0; }
  }

  record Point(int x, int y) {
    Point {
      if (x < 0) throw new IllegalArgumentException();
    }
    int sum() { return x + y; }
  }

  @interface Marker {
    int value() default 3;
  }

  interface Shape {
    default double area() { return 0; }
  }
}
)";

TEST(MethodSpanTest, FindsAllBodiedMembers) {
  SourceUnit unit = SourceUnit::FromText("Outer.java", kSpans);
  const auto& spans = unit.method_spans();
  const MethodSpan* clinit = FindSpan(spans, "Outer", "<clinit>");
  ASSERT_NE(clinit, nullptr);
  EXPECT_EQ(clinit->start_line, 6);
  const MethodSpan* ctor = nullptr;
  int init_count = 0;
  for (const auto& s : spans) {
    if (s.owner_class == "Outer" && s.method_name == "<init>") {
      ++init_count;
      if (s.signature_line == 12) ctor = &s;
    }
  }
  EXPECT_EQ(init_count, 2);  // instance initializer and constructor
  ASSERT_NE(ctor, nullptr);
  EXPECT_EQ(ctor->start_line, 12);  // annotations precede the span
  EXPECT_EQ(ctor->end_line, 14);
  EXPECT_EQ(ctor->javadoc, "/** Builds it. */");

  const MethodSpan* generic = FindSpan(spans, "Outer", "generic");
  ASSERT_NE(generic, nullptr);
  EXPECT_EQ(generic->start_line, 19);
  EXPECT_EQ(generic->end_line, 32);
  EXPECT_EQ(generic->javadoc, "/** Multi. */");
  EXPECT_EQ(FindSpan(spans, "Outer", "plain")->javadoc, std::nullopt);

  EXPECT_NE(FindSpan(spans, "Outer.Local", "inner"), nullptr);
  EXPECT_EQ(FindSpan(spans, "Outer", "run"), nullptr);  // anonymous body stays inline
  EXPECT_EQ(FindSpan(spans, "Outer.Nested", "none"), nullptr);
  EXPECT_NE(FindSpan(spans, "Outer.Nested", "some"), nullptr);
  EXPECT_NE(FindSpan(spans, "Outer.Color", "shade"), nullptr);
  EXPECT_NE(FindSpan(spans, "Outer.Point", "<init>"), nullptr);
  EXPECT_NE(FindSpan(spans, "Outer.Point", "sum"), nullptr);
  EXPECT_EQ(FindSpan(spans, "Outer.Marker", "value"), nullptr);
  EXPECT_NE(FindSpan(spans, "Outer.Shape", "area"), nullptr);
}

TEST(MethodSpanTest, EnclosingSpanPrefersInnermost) {
  SourceUnit unit = SourceUnit::FromText("Outer.java", kSpans);
  auto lambda_line = EnclosingSpan(unit.method_spans(), 26);
  ASSERT_TRUE(lambda_line);
  EXPECT_EQ(lambda_line->method_name, "generic");
  auto local = EnclosingSpan(unit.method_spans(), 29);
  ASSERT_TRUE(local);
  EXPECT_EQ(local->method_name, "inner");
  EXPECT_FALSE(EnclosingSpan(unit.method_spans(), 5));
}

TEST(MethodSpanTest, SameLineMembersAreAmbiguous) {
  SourceUnit unit = SourceUnit::FromText("A.java", "class A { int a() { return 1; } int b() { return 2; } }");
  bool ambiguous = false;
  ASSERT_TRUE(EnclosingSpan(unit.method_spans(), 1, &ambiguous));
  EXPECT_TRUE(ambiguous);
}

TEST(MethodSpanTest, FixtureFilesAllScan) {
  for (const auto& entry : std::filesystem::recursive_directory_iterator(
           testing::ToyDir() / "src/main/java")) {
    if (entry.path().extension() != ".java") continue;
    std::string text = testing::Slurp(entry.path());
    SourceUnit unit = SourceUnit::FromText(entry.path().string(), text);
    EXPECT_FALSE(unit.method_spans().empty()) << entry.path();
    EXPECT_EQ(unit.Render(), text);
  }
}

TEST(SourceUnitTest, LeadingWhitespace) {
  EXPECT_EQ(LeadingWhitespace("\t  x = 1;"), "\t  ");
  EXPECT_EQ(LeadingWhitespace("x"), "");
  EXPECT_EQ(LeadingWhitespace("   "), "   ");
}

}  // namespace
}  // namespace pitrecon
