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

#include "pitrecon/error.h"

namespace pitrecon {

const MethodCode& FindReportedMethod(const ClassDebugInfo& info,
                                     const MutationRecord& record) {
  if (record.method_descriptor) {
    if (const MethodCode* method =
            info.FindMethod(record.mutated_method, *record.method_descriptor)) {
      return *method;
    }
    throw Error(ErrorCode::kMethodNotFound,
                "no method " + record.mutated_method + *record.method_descriptor +
                    " in " + info.class_name);
  }
  const MethodCode* found = nullptr;
  for (const MethodCode& method : info.methods) {
    if (method.name != record.mutated_method) continue;
    if (found != nullptr) {
      throw Error(ErrorCode::kMethodNotFound,
                  "method " + record.mutated_method + " in " + info.class_name +
                      " is overloaded and the report gives no descriptor");
    }
    found = &method;
  }
  if (found == nullptr) {
    throw Error(ErrorCode::kMethodNotFound,
                "no method " + record.mutated_method + " in " + info.class_name);
  }
  return *found;
}

CandidateOccurrence Resolve(const std::vector<CandidateOccurrence>& candidates,
                            const MutationRecord& record, const RewriteRule& rule,
                            ClassInfoSource& classes) {
  if (candidates.empty()) {
    throw Error(ErrorCode::kNoCandidateOnLine,
                "no " + std::string(CandidateKindName(rule.kind)) + " candidate on line " +
                    std::to_string(record.line));
  }
  if (candidates.size() == 1) return candidates.front();

  const ClassDebugInfo& info = classes.Get(record.mutated_class);
  const MethodCode& method = FindReportedMethod(info, record);
  std::optional<int> ordinal = OccurrenceOrdinal(method, record.line, rule.opcode_family,
                                                 record.index, rule.call_name);
  if (!ordinal) {
    throw Error(ErrorCode::kOrdinalUnresolved,
                "instruction " + std::to_string(record.index) + " of " + method.name +
                    " is not a family instruction on line " + std::to_string(record.line));
  }
  if (static_cast<std::size_t>(*ordinal) >= candidates.size()) {
    throw Error(ErrorCode::kOrdinalOutOfRange,
                "occurrence " + std::to_string(*ordinal) + " of " +
                    std::to_string(candidates.size()) + " candidates");
  }
  return candidates[static_cast<std::size_t>(*ordinal)];
}

}  // namespace pitrecon
