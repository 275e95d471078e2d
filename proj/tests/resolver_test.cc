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

#include "pitrecon/resolver.h"

#include <gtest/gtest.h>

#include <string>
#include <vector>

#include "pitrecon/classfile.h"
#include "pitrecon/error.h"
#include "pitrecon/operator_catalog.h"
#include "pitrecon/report.h"

namespace pitrecon {
namespace {

// Serves one in-memory class and counts lookups.
class CountingSource : public ClassInfoSource {
 public:
  explicit CountingSource(ClassDebugInfo info) : info_(std::move(info)) {}
  const ClassDebugInfo& Get(const std::string& class_name) override {
    ++gets;
    last_name = class_name;
    return info_;
  }
  int gets = 0;
  std::string last_name;

 private:
  ClassDebugInfo info_;
};

Instruction Insn(std::uint32_t offset, std::uint8_t opcode, std::string member = {}) {
  return {offset, opcode, std::string(*MnemonicForOpcode(opcode)), 1, std::move(member)};
}

// span(I)I: two iadd on line 17 around an imul, like the fixture's Buffer.span.
ClassDebugInfo SpanClass() {
  ClassDebugInfo info;
  info.class_name = "p.Buffer";
  MethodCode span;
  span.name = "span";
  span.descriptor = "(I)I";
  span.instructions = {Insn(0, 0x1b), Insn(1, 0x04), Insn(2, op::kIadd), Insn(3, 0x2a),
                       Insn(4, 0x1b), Insn(5, op::kIadd), Insn(6, op::kImul),
                       Insn(7, 0x3d), Insn(8, 0x1c), Insn(9, op::kIadd),
                       Insn(10, op::kIreturn)};
  span.line_table = {{0, 17}, {8, 18}};
  MethodCode overload = span;
  overload.descriptor = "(J)I";
  MethodCode other;
  other.name = "other";
  other.descriptor = "()V";
  info.methods = {span, overload, other};
  return info;
}

MutationRecord Record(int index, std::optional<std::string> descriptor = "(I)I") {
  MutationRecord r;
  r.mutated_class = "p.Buffer";
  r.mutated_method = "span";
  r.method_descriptor = std::move(descriptor);
  r.line = 17;
  r.index = index;
  return r;
}

RewriteRule AddRule() {
  return OperatorCatalog::BuiltIn().RuleFor("MathMutator",
                                            "Replaced integer addition with subtraction");
}

std::vector<CandidateOccurrence> Candidates(int n) {
  std::vector<CandidateOccurrence> out;
  for (int i = 0; i < n; ++i) out.push_back({17, 10 * i + 1, 10 * i + 2, i, std::nullopt});
  return out;
}

ErrorCode ResolveError(const std::vector<CandidateOccurrence>& c, const MutationRecord& r,
                       ClassInfoSource& source) {
  try {
    Resolve(c, r, AddRule(), source);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "resolved";
  return ErrorCode::kIoError;
}

TEST(ResolverTest, SingleCandidateNeverReadsClassFile) {
  CountingSource source(SpanClass());
  auto picked = Resolve(Candidates(1), Record(99), AddRule(), source);
  EXPECT_EQ(picked.ordinal, 0);
  EXPECT_EQ(source.gets, 0);
}

TEST(ResolverTest, IndexSelectsOrdinal) {
  CountingSource source(SpanClass());
  EXPECT_EQ(Resolve(Candidates(2), Record(2), AddRule(), source).ordinal, 0);
  EXPECT_EQ(Resolve(Candidates(2), Record(5), AddRule(), source).ordinal, 1);
  EXPECT_EQ(source.gets, 2);
  EXPECT_EQ(source.last_name, "p.Buffer");
}

TEST(ResolverTest, Failures) {
  CountingSource source(SpanClass());
  EXPECT_EQ(ResolveError({}, Record(2), source), ErrorCode::kNoCandidateOnLine);
  EXPECT_EQ(ResolveError(Candidates(2), Record(6), source), ErrorCode::kOrdinalUnresolved);
  EXPECT_EQ(ResolveError(Candidates(2), Record(9), source), ErrorCode::kOrdinalUnresolved);
  EXPECT_EQ(ResolveError(Candidates(2), Record(500), source),
            ErrorCode::kOrdinalUnresolved);
  MutationRecord missing = Record(2, "(Z)I");
  EXPECT_EQ(ResolveError(Candidates(2), missing, source), ErrorCode::kMethodNotFound);
  MutationRecord overloaded = Record(2, std::nullopt);
  EXPECT_EQ(ResolveError(Candidates(2), overloaded, source), ErrorCode::kMethodNotFound);
}

TEST(ResolverTest, MoreInstructionsThanCandidatesIsOutOfRange) {
  ClassDebugInfo info = SpanClass();
  info.methods[0].line_table = {{0, 17}};  // third iadd moves onto line 17
  CountingSource source(info);
  EXPECT_EQ(ResolveError(Candidates(2), Record(9), source), ErrorCode::kOrdinalOutOfRange);
}

TEST(ResolverTest, FindReportedMethodWithoutDescriptor) {
  ClassDebugInfo info = SpanClass();
  MutationRecord r = Record(0, std::nullopt);
  r.mutated_method = "other";
  EXPECT_EQ(FindReportedMethod(info, r).descriptor, "()V");
  r.mutated_method = "absent";
  EXPECT_THROW(FindReportedMethod(info, r), Error);
}

}  // namespace
}  // namespace pitrecon
