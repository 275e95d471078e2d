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

#include <gtest/gtest.h>

#include <string>
#include <vector>

#include "pitrecon/java_source.h"
#include "pitrecon/operator_catalog.h"

namespace pitrecon {
namespace {

RewriteRule RuleOf(std::string_view mutator, std::string_view description) {
  static const OperatorCatalog catalog = OperatorCatalog::BuiltIn();
  return catalog.RuleFor(mutator, description);
}

// Text covered by each candidate, "!" prefixed when blocked.
std::vector<std::string> Spans(std::string_view line, const RewriteRule& rule) {
  std::vector<std::string> out;
  for (const CandidateOccurrence& c : FindCandidates(line, rule)) {
    std::string text(line.substr(c.column_start - 1, c.column_end - c.column_start));
    out.push_back(c.blocked ? "!" + text : text);
  }
  return out;
}

using Strings = std::vector<std::string>;

const RewriteRule& Add() {
  static const RewriteRule r = RuleOf("MathMutator", "Replaced integer addition with subtraction");
  return r;
}
const RewriteRule& Sub() {
  static const RewriteRule r = RuleOf("MathMutator", "Replaced integer subtraction with addition");
  return r;
}

TEST(CandidatesTest, BinaryOperatorsInSourceOrder) {
  std::string line = "int span = (index + 1) * (length + index);";
  auto found = FindCandidates(line, Add());
  ASSERT_EQ(found.size(), 2u);
  EXPECT_EQ(found[0].column_start, 19);
  EXPECT_EQ(found[0].column_end, 20);
  EXPECT_EQ(found[0].ordinal, 0);
  EXPECT_EQ(found[1].ordinal, 1);
  EXPECT_LT(found[0].column_start, found[1].column_start);
}

TEST(CandidatesTest, IgnoresStringsCommentsAndConcatenation) {
  EXPECT_EQ(Spans("s = \"a + b\"; // x + y", Add()), Strings{});
  EXPECT_EQ(Spans("String s = \"n=\" + n;", Add()), Strings{});
  EXPECT_EQ(Spans("x = a /* + */ + b;", Add()), Strings{"+"});
}

TEST(CandidatesTest, CompoundAssignmentsAreBinaryOperators) {
  EXPECT_EQ(Spans("total += value;", Add()), Strings{"+="});
  EXPECT_EQ(Spans("x -= y * 2;", Sub()), Strings{"-="});
}

TEST(CandidatesTest, UnaryMinusIsNotSubtraction) {
  EXPECT_EQ(Spans("x = -y - 3;", Sub()), Strings{"-"});
  RewriteRule neg = RuleOf("InvertNegsMutator", "removed negation");
  auto found = FindCandidates("x = -y - -3;", neg);
  ASSERT_EQ(found.size(), 1u);
  EXPECT_EQ(found[0].column_start, 5);
}

TEST(CandidatesTest, GenericBracketsAreNotRelational) {
  RewriteRule boundary = RuleOf("ConditionalsBoundaryMutator", "changed conditional boundary");
  EXPECT_EQ(Spans("List<Integer> xs = new ArrayList<>();", boundary), Strings{});
  EXPECT_EQ(Spans("Map<String, List<Integer>> m = f(a < b);", boundary), Strings{"<"});
  EXPECT_EQ(Spans("if (a >= b && c < d) {", boundary), (Strings{">=", "<"}));
}

TEST(CandidatesTest, IncrementsOnLocals) {
  RewriteRule incr = RuleOf("IncrementsMutator", "Changed increment from 1 to -1");
  EXPECT_EQ(Spans("for (int i = 0; i < n; i++) {", incr), Strings{"++"});
  EXPECT_EQ(Spans("this.count++;", incr), Strings{});
  EXPECT_EQ(Spans("items[i]++;", incr), Strings{});
}

TEST(CandidatesTest, IncrementNeedsLocalIntDeclaration) {
  SourceUnit unit = SourceUnit::FromText(
      "A.java", "class A {\n  long n;\n  void f() {\n    int count = 3;\n    count--;\n    n++;\n  }\n}\n");
  RewriteRule incr = RuleOf("IncrementsMutator", "Changed increment from -1 to 1");
  EXPECT_EQ(FindCandidates(unit, 5, incr).size(), 1u);
  EXPECT_EQ(FindCandidates(unit, 6, incr).size(), 0u);
}

TEST(CandidatesTest, NarrowLocalsIncrementThroughMath) {
  SourceUnit unit = SourceUnit::FromText(
      "A.java", "class A {\n  void f(short s, int i) {\n    s++;\n    i++;\n  }\n}\n");
  RewriteRule incr = RuleOf("IncrementsMutator", "Changed increment from 1 to -1");
  EXPECT_EQ(FindCandidates(unit, 3, incr).size(), 0u);
  EXPECT_EQ(FindCandidates(unit, 3, Add()).size(), 1u);
  EXPECT_EQ(FindCandidates(unit, 4, incr).size(), 1u);
  EXPECT_EQ(FindCandidates(unit, 4, Add()).size(), 0u);
}

TEST(CandidatesTest, IncrementByLiteralIsNotMath) {
  std::string method =
      "class A {\n  int f(int n) {\n    int odd = 1;\n    odd += 2;\n    return odd;\n  }\n}\n";
  SourceUnit unit = SourceUnit::FromText("A.java", method);
  RewriteRule incr = RuleOf("IncrementsMutator", "Changed increment from 2 to -2");
  EXPECT_EQ(FindCandidates(unit, 4, incr).size(), 1u);
  EXPECT_EQ(FindCandidates(unit, 4, Add()).size(), 0u);
}

TEST(CandidatesTest, ReturnExpressionSpan) {
  RewriteRule prim = RuleOf("PrimitiveReturnsMutator", "replaced int return with 0 for a/B::c");
  EXPECT_EQ(Spans("return a + b;", prim), Strings{"a + b"});
  EXPECT_EQ(Spans("if (x) return size(); else return 1;", prim), (Strings{"size()", "1"}));
  EXPECT_EQ(Spans("return a +", prim), Strings{"!a +"});
}

TEST(CandidatesTest, CallStatementsMatchCalleeName) {
  RewriteRule call = RuleOf("VoidMethodCallMutator", "removed call to java/io/PrintStream::println");
  EXPECT_EQ(Spans("System.out.println(x); log(y);", call), Strings{"System.out.println(x);"});
  EXPECT_EQ(Spans("int n = compute(println(x));", call), Strings{});
  RewriteRule log = RuleOf("VoidMethodCallMutator", "removed call to a/B::log");
  EXPECT_EQ(Spans("log(a); log(b);", log), (Strings{"log(a);", "log(b);"}));
  EXPECT_EQ(Spans("log(a,", log), Strings{"!log(a,"});
}

TEST(CandidatesTest, ConditionsByFamily) {
  RewriteRule order = RuleOf("RemoveConditionalMutator_ORDER_ELSE",
                             "removed conditional - replaced comparison check with false");
  RewriteRule equal = RuleOf("RemoveConditionalMutator_EQUAL_IF",
                             "removed conditional - replaced equality check with true");
  std::string line = "if (a < b && c == null || d != e) {";
  EXPECT_EQ(Spans(line, order), Strings{"a < b"});
  EXPECT_EQ(Spans(line, equal), (Strings{"c == null", "d != e"}));
  EXPECT_EQ(Spans("while (running && !stopped) {", equal), (Strings{"running", "!stopped"}));
}

TEST(CandidatesTest, SwitchNeedsCaseAndDefaultOnLine) {
  RewriteRule sw = RuleOf("SwitchMutator", "Changed switch default to be first case");
  auto ok = Spans("switch (k) { case 1: return 2; default: return 3; }", sw);
  ASSERT_EQ(ok.size(), 1u);
  EXPECT_EQ(ok[0].front(), ' ');
  auto partial = Spans("switch (k) {", sw);
  ASSERT_EQ(partial.size(), 1u);
  EXPECT_EQ(partial[0][0], '!');
}

TEST(CandidatesTest, OrdinalsAreDense) {
  auto found = FindCandidates("a = b + c + d + e;", Add());
  ASSERT_EQ(found.size(), 3u);
  for (int i = 0; i < 3; ++i) EXPECT_EQ(found[i].ordinal, i);
}

}  // namespace
}  // namespace pitrecon
