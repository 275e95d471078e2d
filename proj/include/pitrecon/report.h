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

#ifndef PITRECON_REPORT_H
#define PITRECON_REPORT_H

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pitrecon {

enum class MutationStatus {
  kKilled,
  kSurvived,
  kNoCoverage,
  kTimedOut,
  kOther,
};

// One <mutation> element of a PIT XML report.
struct MutationRecord {
  std::string mutant_id;
  std::string source_file;
  std::string mutated_class;
  std::string mutated_method;
  // Absent when the report omits <methodDescription>.
  std::optional<std::string> method_descriptor;
  int line = 0;
  std::string mutator;
  std::string description;
  int index = 0;
  std::optional<int> block;
  MutationStatus status = MutationStatus::kOther;
  // Verbatim status attribute; meaningful for kOther.
  std::string status_text;
  bool detected = false;
  std::optional<std::string> killing_test;

  bool operator==(const MutationRecord&) const = default;
};

// "org.pitest...MathMutator" -> "MathMutator".
std::string_view MutatorShortName(std::string_view mutator);

// Builds the `<class>:<line>:<mutator-short-name>:<index>` identifier.
std::string MakeMutantId(const MutationRecord& record);

// Parses the bytes of a mutations.xml report. Records come back in document
// order. Identifiers that would collide get a `#2`, `#3`, ... suffix in
// document order so that every id is unique within the report.
//
// Throws Error(kMalformedReport) for non-XML input, invalid UTF-8 or a wrong
// root element, and Error(kMissingField) when a required child is absent.
std::vector<MutationRecord> ParseReport(std::string_view report_bytes);

// Serializes records back into the report schema. ParseReport(WriteReport(r))
// reproduces every field of `r`.
std::string WriteReport(const std::vector<MutationRecord>& records);

std::string_view StatusName(const MutationRecord& record);

}  // namespace pitrecon

#endif  // PITRECON_REPORT_H
