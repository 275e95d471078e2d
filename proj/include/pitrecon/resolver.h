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
#ifndef PITRECON_RESOLVER_H
#define PITRECON_RESOLVER_H

#include <string>
#include <vector>

#include "pitrecon/classfile.h"
#include "pitrecon/operator_catalog.h"
#include "pitrecon/report.h"

namespace pitrecon {

// Supplies parsed class files on demand. Resolve only asks when a line holds
// more than one candidate.
class ClassInfoSource {
 public:
  virtual ~ClassInfoSource() = default;
  // Binary class name as it appears in the report ("org.x.Foo$Bar"). Throws
  // Error(kClassFileNotFound) or a ClassFileError.
  virtual const ClassDebugInfo& Get(const std::string& class_name) = 0;
};

// Picks the candidate a mutation refers to. A single candidate is returned
// without touching `classes`. Otherwise the mutation's instruction counter
// is turned into an ordinal among same-line instructions of the rule's opcode
// family, relying on left-to-right emission order for one line.
//
// Throws Error with kNoCandidateOnLine, kMethodNotFound, kOrdinalUnresolved or
// kOrdinalOutOfRange, and whatever `classes` throws.
CandidateOccurrence Resolve(const std::vector<CandidateOccurrence>& candidates,
                            const MutationRecord& record, const RewriteRule& rule,
                            ClassInfoSource& classes);

// Method lookup used by Resolve: exact (name, descriptor) when the report has
// a descriptor, otherwise a unique name. Throws Error(kMethodNotFound).
const MethodCode& FindReportedMethod(const ClassDebugInfo& info,
                                     const MutationRecord& record);

}  // namespace pitrecon

#endif  // PITRECON_RESOLVER_H
