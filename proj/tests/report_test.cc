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

#include "pitrecon/report.h"

#include <gtest/gtest.h>

#include <set>

#include "pitrecon/error.h"
#include "test_support.h"

namespace pitrecon {
namespace {

constexpr char kMath[] = "org.pitest.mutationtest.engine.gregor.mutators.MathMutator";

std::string Mutation(const std::string& body, const std::string& attrs =
                                                  "detected='true' status='KILLED'") {
  return "<mutation " + attrs + ">" + body + "</mutation>";
}

std::string Report(const std::string& mutations) {
  return "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n<mutations>" + mutations +
         "</mutations>";
}

std::string Body(int index = 2, int line = 17, bool wrapped = true) {
  std::string idx = wrapped ? "<indexes><index>" + std::to_string(index) +
                                  "</index></indexes><blocks><block>0</block></blocks>"
                            : "<index>" + std::to_string(index) + "</index><block>0</block>";
  return "<sourceFile>Buffer.java</sourceFile>"
         "<mutatedClass>org.example.toy.Buffer</mutatedClass>"
         "<mutatedMethod>span</mutatedMethod><methodDescription>(I)I</methodDescription>"
         "<lineNumber>" +
         std::to_string(line) + "</lineNumber><mutator>" + kMath + "</mutator>" + idx +
         "<killingTest>t</killingTest>"
         "<description>Replaced integer addition with subtraction</description>";
}

ErrorCode CodeOf(const std::string& xml) {
  try {
    ParseReport(xml);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error for: " << xml;
  return ErrorCode::kIoError;
}

TEST(ReportTest, ParsesAllFieldsOfNewStyleEntry) {
  auto records = ParseReport(Report(Mutation(Body())));
  ASSERT_EQ(records.size(), 1u);
  const MutationRecord& r = records[0];
  EXPECT_EQ(r.source_file, "Buffer.java");
  EXPECT_EQ(r.mutated_class, "org.example.toy.Buffer");
  EXPECT_EQ(r.mutated_method, "span");
  EXPECT_EQ(r.method_descriptor, "(I)I");
  EXPECT_EQ(r.line, 17);
  EXPECT_EQ(r.mutator, kMath);
  EXPECT_EQ(r.index, 2);
  EXPECT_EQ(r.block, 0);
  EXPECT_EQ(r.status, MutationStatus::kKilled);
  EXPECT_TRUE(r.detected);
  EXPECT_EQ(r.killing_test, "t");
  EXPECT_EQ(r.mutant_id, "org.example.toy.Buffer:17:MathMutator:2");
}

TEST(ReportTest, OldAndNewIndexLayoutsAgree) {
  auto a = ParseReport(Report(Mutation(Body(5, 17, true))));
  auto b = ParseReport(Report(Mutation(Body(5, 17, false))));
  EXPECT_EQ(a, b);
}

TEST(ReportTest, FirstIndexOfListWins) {
  std::string body = Body();
  std::string multi = body;
  multi.replace(multi.find("<index>2</index>"), 16, "<index>4</index><index>9</index>");
  EXPECT_EQ(ParseReport(Report(Mutation(multi)))[0].index, 4);
}

TEST(ReportTest, DuplicateIdsGetOrdinalSuffix) {
  auto records = ParseReport(Report(Mutation(Body()) + Mutation(Body()) + Mutation(Body())));
  ASSERT_EQ(records.size(), 3u);
  EXPECT_EQ(records[0].mutant_id, "org.example.toy.Buffer:17:MathMutator:2");
  EXPECT_EQ(records[1].mutant_id, "org.example.toy.Buffer:17:MathMutator:2#2");
  EXPECT_EQ(records[2].mutant_id, "org.example.toy.Buffer:17:MathMutator:2#3");
}

TEST(ReportTest, StatusesAreMapped) {
  auto records = ParseReport(
      Report(Mutation(Body(), "detected='false' status='SURVIVED'") +
             Mutation(Body(3), "detected='false' status='NO_COVERAGE'") +
             Mutation(Body(4), "detected='true' status='TIMED_OUT'") +
             Mutation(Body(5), "detected='true' status='MEMORY_ERROR'")));
  EXPECT_EQ(records[0].status, MutationStatus::kSurvived);
  EXPECT_EQ(records[1].status, MutationStatus::kNoCoverage);
  EXPECT_EQ(records[2].status, MutationStatus::kTimedOut);
  EXPECT_EQ(records[3].status, MutationStatus::kOther);
  EXPECT_EQ(StatusName(records[3]), "MEMORY_ERROR");
}

TEST(ReportTest, EmptyReportYieldsNoRecords) {
  EXPECT_TRUE(ParseReport(Report("")).empty());
  EXPECT_TRUE(ParseReport("<mutations/>").empty());
}

TEST(ReportTest, MissingRequiredFieldIsReported) {
  for (const char* field : {"sourceFile", "mutatedClass", "lineNumber", "mutator",
                            "description"}) {
    std::string body = Body();
    std::string open = std::string("<") + field + ">";
    std::string close = std::string("</") + field + ">";
    auto start = body.find(open);
    auto end = body.find(close) + close.size();
    body.erase(start, end - start);
    EXPECT_EQ(CodeOf(Report(Mutation(body))), ErrorCode::kMissingField) << field;
  }
  std::string no_index = Body();
  no_index.erase(no_index.find("<indexes>"),
                 no_index.find("</indexes>") + 10 - no_index.find("<indexes>"));
  EXPECT_EQ(CodeOf(Report(Mutation(no_index))), ErrorCode::kMissingField);
}

TEST(ReportTest, MalformedInputsAreRejected) {
  EXPECT_EQ(CodeOf("<mutations><mutation>"), ErrorCode::kMalformedReport);
  EXPECT_EQ(CodeOf("not xml"), ErrorCode::kMalformedReport);
  EXPECT_EQ(CodeOf("<other/>"), ErrorCode::kMalformedReport);
  std::string bad_line = Body();
  bad_line.replace(bad_line.find("17</lineNumber>"), 2, "x7");
  EXPECT_EQ(CodeOf(Report(Mutation(bad_line))), ErrorCode::kMalformedReport);
  std::string zero_line = Body(2, 0);
  EXPECT_EQ(CodeOf(Report(Mutation(zero_line))), ErrorCode::kMalformedReport);
  std::string negative_index = Body(-1);
  EXPECT_EQ(CodeOf(Report(Mutation(negative_index))), ErrorCode::kMalformedReport);
  std::string slashed = Body();
  slashed.replace(slashed.find("org.example.toy.Buffer"), 22, "org/example/toy/Buffer");
  EXPECT_EQ(CodeOf(Report(Mutation(slashed))), ErrorCode::kMalformedReport);
}

TEST(ReportTest, EntitiesAreDecoded) {
  std::string body = Body();
  body.replace(body.find("Replaced integer"), 16, "a &lt;b&gt; &amp; c");
  EXPECT_EQ(ParseReport(Report(Mutation(body)))[0].description,
            "a <b> & c addition with subtraction");
}

TEST(ReportTest, WriteThenParseIsIdentity) {
  auto records = ParseReport(testing::Slurp(testing::ToyLayout().report));
  ASSERT_FALSE(records.empty());
  EXPECT_EQ(ParseReport(WriteReport(records)), records);
}

TEST(ReportTest, ToyReportHasDistinctIdsInFileOrder) {
  auto records = ParseReport(testing::Slurp(testing::ToyLayout().report));
  EXPECT_EQ(records.size(), 66u);
  std::set<std::string> ids;
  for (const auto& r : records) ids.insert(r.mutant_id);
  EXPECT_EQ(ids.size(), records.size());
  EXPECT_EQ(records.front().mutant_id, "org.example.toy.Buffer:17:MathMutator:2");
}

TEST(ReportTest, MutatorShortName) {
  EXPECT_EQ(MutatorShortName(kMath), "MathMutator");
  EXPECT_EQ(MutatorShortName("Bare"), "Bare");
}

}  // namespace
}  // namespace pitrecon
