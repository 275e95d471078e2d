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

#include "pitrecon/dataset_io.h"

#include <gtest/gtest.h>

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "pitrecon/error.h"
#include "test_support.h"

namespace pitrecon {
namespace {

DatasetRecord Sample() {
  DatasetRecord r;
  r.mutant_id = "p.A:3:MathMutator:2";
  r.class_name = "p.A";
  r.source_path = "p/A.java";
  r.line = 3;
  r.mutator = "org.pitest.mutationtest.engine.gregor.mutators.MathMutator";
  r.description = "Replaced integer addition with subtraction";
  r.index = 2;
  r.original_line = "    return a + \"b,\\\"c\";";
  r.mutated_line = "    return a - \"b,\\\"c\";";
  r.javadoc = "/**\n * Docs, with \"quotes\".\n */";
  r.orig_method = "  int f() {\r\n    return a + \"b,\\\"c\";\n  }";
  r.mut_method = "  int f() {\r\n    return a - \"b,\\\"c\";\n  }";
  return r;
}

ReconstructionFailure SampleFailure() {
  ReconstructionFailure f;
  f.mutant_id = "p.A:9:MathMutator:4";
  f.code = FailureCode::kDuplicateEdit;
  f.detail = "same source edit as p.A:9:MathMutator:1";
  f.class_name = "p.A";
  f.source_path = "p/A.java";
  f.line = 9;
  f.mutator = "MathMutator";
  f.description = "Replaced, with \"quotes\"";
  f.index = 4;
  return f;
}

TEST(DatasetIoTest, CsvRoundTripsAwkwardText) {
  DatasetRecord no_doc = Sample();
  no_doc.javadoc.reset();
  no_doc.mutant_id += "#2";
  std::vector<DatasetRecord> records = {Sample(), no_doc};
  std::string csv = DatasetToCsv(records);
  EXPECT_EQ(csv.substr(0, csv.find('\n')),
            "mutant_id,class,source_path,line,mutator,description,index,original_line,"
            "mutated_line,javadoc,orig_method,mut_method");
  EXPECT_EQ(DatasetFromCsv(csv), records);
}

TEST(DatasetIoTest, JsonlRoundTripsAndKeepsNullJavadoc) {
  DatasetRecord no_doc = Sample();
  no_doc.javadoc.reset();
  std::vector<DatasetRecord> records = {Sample(), no_doc};
  std::string jsonl = DatasetToJsonl(records);
  EXPECT_EQ(std::count(jsonl.begin(), jsonl.end(), '\n'), 2);
  EXPECT_NE(jsonl.find("\"javadoc\":null"), std::string::npos);
  EXPECT_EQ(jsonl.rfind("{\"mutant_id\":", 0), 0u);
  EXPECT_EQ(DatasetFromJsonl(jsonl), records);
}

TEST(DatasetIoTest, JsonlReplacesInvalidUtf8) {
  DatasetRecord r = Sample();
  r.original_line = "bad \xff byte";
  std::string jsonl = DatasetToJsonl({r});
  EXPECT_EQ(DatasetFromJsonl(jsonl)[0].original_line, "bad \xEF\xBF\xBD byte");
}

TEST(DatasetIoTest, FailuresRoundTrip) {
  ReconstructionFailure other = SampleFailure();
  other.code = FailureCode::kLexError;
  other.detail = "multi\nline";
  std::vector<ReconstructionFailure> failures = {SampleFailure(), other};
  EXPECT_EQ(FailuresFromCsv(FailuresToCsv(failures)), failures);
}

TEST(DatasetIoTest, EmptyFilesHaveHeadersOnly) {
  EXPECT_EQ(DatasetToCsv({}), DatasetToCsv({}).substr(0, DatasetToCsv({}).find('\n') + 1));
  EXPECT_TRUE(DatasetFromCsv(DatasetToCsv({})).empty());
  EXPECT_TRUE(DatasetFromCsv("").empty());
  EXPECT_TRUE(DatasetToJsonl({}).empty());
  EXPECT_TRUE(FailuresFromCsv(FailuresToCsv({})).empty());
}

TEST(DatasetIoTest, RejectsCorruptInput) {
  EXPECT_THROW(DatasetFromCsv("a,b\n1,2\n"), Error);
  EXPECT_THROW(ParseCsv("\"open"), Error);
  std::string csv = DatasetToCsv({Sample()});
  EXPECT_THROW(DatasetFromCsv(csv + "x,y\n"), Error);
  EXPECT_THROW(DatasetFromJsonl("{not json}\n"), Error);
  std::string failures = FailuresToCsv({SampleFailure()});
  failures.replace(failures.find("DuplicateEdit"), 13, "NoSuchFailure");
  EXPECT_THROW(FailuresFromCsv(failures), Error);
}

TEST(DatasetIoTest, ParseCsvHandlesQuotesAndLineEndings) {
  auto rows = ParseCsv("a,\"b,c\",\"d\"\"e\"\r\n,\"x\ny\",\n");
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"a", "b,c", "d\"e"}));
  EXPECT_EQ(rows[1], (std::vector<std::string>{"", "x\ny", ""}));
}

TEST(StatsTest, PercentRoundsHalfUp) {
  EXPECT_EQ(FormatPercent(59, 66), "89.39");
  EXPECT_EQ(FormatPercent(1, 8), "12.50");
  EXPECT_EQ(FormatPercent(1, 3), "33.33");
  EXPECT_EQ(FormatPercent(2, 3), "66.67");
  EXPECT_EQ(FormatPercent(1, 200000), "0.00");   // 0.0005 % rounds down
  EXPECT_EQ(FormatPercent(1, 20000), "0.01");    // 0.005 % rounds up
  EXPECT_EQ(FormatPercent(5, 5), "100.00");
  EXPECT_EQ(FormatPercent(0, 0), "—");
  EXPECT_EQ(FormatPercent(69198, 69229), "99.96");
}

TEST(StatsTest, TablesFollowCanonicalOrderAndTotals) {
  DatasetRecord math = Sample();
  DatasetRecord neg = Sample();
  neg.mutator = "org.pitest.mutationtest.engine.gregor.mutators.InvertNegsMutator";
  neg.javadoc.reset();
  neg.source_path = "p/B.java";
  ReconstructionFailure failed = SampleFailure();
  ReconstructionFailure custom = SampleFailure();
  custom.mutator = "com.acme.ZetaMutator";
  custom.source_path = "";
  StatsTables t = ComputeStats({math, neg}, {failed, custom}, "toy");
  EXPECT_EQ(t.system.system, "toy");
  EXPECT_EQ(t.system.files, 2);
  EXPECT_EQ(t.system.mutations, 4);
  EXPECT_EQ(t.system.preserved, 2);
  EXPECT_EQ(t.system.javadoc, 1);
  ASSERT_EQ(t.operators.size(), 4u);
  EXPECT_EQ(t.operators[0].name, "InvertNegatives");
  EXPECT_EQ(t.operators[1].name, "Math");
  EXPECT_EQ(t.operators[1].mutations, 2);
  EXPECT_EQ(t.operators[1].preserved, 1);
  EXPECT_EQ(t.operators[2].name, "ZetaMutator");
  EXPECT_EQ(t.operators[3].name, "Total");
  EXPECT_EQ(t.operators[3].mutations, 4);
  EXPECT_EQ(t.operators[3].preserved, 2);
}

// Per-operator counts enumerated by hand from the fixture's mutation table,
// with its own mutator-to-operator mapping.
TEST(StatsTest, ToyOperatorCountsMatchHandEnumeration) {
  const std::map<std::string, std::string> operator_of = {
      {"VoidMethodCallMutator", "VoidMethodCall"},
      {"returns.NullReturnValsMutator", "NullReturns"},
      {"returns.BooleanTrueReturnValsMutator", "TrueReturns"},
      {"returns.BooleanFalseReturnValsMutator", "FalseReturns"},
      {"IncrementsMutator", "Increments"},
      {"InvertNegsMutator", "InvertNegatives"},
      {"returns.PrimitiveReturnsMutator", "PrimitiveReturns"},
      {"RemoveConditionalMutator_EQUAL_IF", "RemoveConditionals"},
      {"RemoveConditionalMutator_EQUAL_ELSE", "RemoveConditionals"},
      {"RemoveConditionalMutator_ORDER_IF", "RemoveConditionals"},
      {"RemoveConditionalMutator_ORDER_ELSE", "RemoveConditionals"},
      {"ConditionalsBoundaryMutator", "ConditionalsBoundary"},
      {"returns.EmptyObjectReturnValsMutator", "EmptyReturns"},
      {"MathMutator", "Math"},
      {"experimental.SwitchMutator", "ExperimentalSwitch"}};
  std::map<std::string, std::pair<std::int64_t, std::int64_t>> want;
  std::ifstream in(testing::ToyDir() / "mutations.tsv");
  for (std::string line; std::getline(in, line);) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cols;
    std::stringstream fields(line);
    for (std::string col; std::getline(fields, col, '\t');) cols.push_back(col);
    ASSERT_GE(cols.size(), 7u) << line;
    auto& [mutations, preserved] = want[operator_of.at(cols[3])];
    ++mutations;
    if (cols[6].rfind("!", 0) != 0) ++preserved;
  }
  DatasetResult result = GenerateDataset(testing::ToyLayout(), OperatorCatalog::BuiltIn());
  StatsTables tables = ComputeStats(result.records, result.failures, "toy");
  ASSERT_EQ(tables.operators.size(), want.size() + 1);
  for (const OperatorRow& row : tables.operators) {
    if (row.name == "Total") {
      EXPECT_EQ(row.mutations, 66);
      EXPECT_EQ(row.preserved, 59);
      continue;
    }
    EXPECT_EQ(row.mutations, want.at(row.name).first) << row.name;
    EXPECT_EQ(row.preserved, want.at(row.name).second) << row.name;
  }
  EXPECT_EQ(tables.system.files, 10);
}

TEST(StatsTest, RenderAlignsColumns) {
  std::string text = RenderStats(ComputeStats({Sample()}, {SampleFailure()}, "toy"));
  EXPECT_NE(text.find("System  Files  Mutations  Preserved  Preserved %  Javadoc  Javadoc %"),
            std::string::npos);
  EXPECT_NE(text.find("toy         1          2          1        50.00        1     100.00"),
            std::string::npos);
  EXPECT_NE(text.find("Total"), std::string::npos);
  std::string empty = RenderStats(ComputeStats({}, {}, "none"));
  EXPECT_NE(empty.find("—"), std::string::npos);
  EXPECT_NE(empty.find("Total"), std::string::npos);
}

TEST(StatsTest, WriteOutputCreatesParents) {
  testing::TempDir dir;
  WriteOutput(dir.path() / "a/b/c.txt", "bytes");
  EXPECT_EQ(testing::Slurp(dir.path() / "a/b/c.txt"), "bytes");
  EXPECT_THROW(WriteOutput(dir.path() / "a/b/c.txt/d", "x"), Error);
}

}  // namespace
}  // namespace pitrecon
