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
#ifndef PITRECON_RECONSTRUCT_H
#define PITRECON_RECONSTRUCT_H

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "pitrecon/error.h"
#include "pitrecon/java_source.h"
#include "pitrecon/operator_catalog.h"
#include "pitrecon/report.h"
#include "pitrecon/resolver.h"

namespace pitrecon {

// One reconstructed mutant: the enclosing method before and after the edit.
struct DatasetRecord {
  std::string mutant_id;
  std::string orig_method;
  std::string mut_method;
  std::optional<std::string> javadoc;
  std::string class_name;
  // Relative to the sources root, '/'-separated.
  std::string source_path;
  int line = 0;
  std::string mutator;
  std::string description;
  int index = 0;
  std::string original_line;
  std::string mutated_line;

  bool operator==(const DatasetRecord&) const = default;
};

enum class FailureCode {
  kNoCandidateOnLine,
  kDuplicateEdit,
  kUnrecognizedDescription,
  kUnknownMutator,
  kNoEnclosingMethod,
  kMethodNotFound,
  kOrdinalUnresolved,
  kOrdinalOutOfRange,
  kMultiLineExpression,
  kUnsupportedSwitchShape,
  kSourceFileNotFound,
  kClassFileNotFound,
  kLexError,
};

std::string_view FailureCodeName(FailureCode code);
std::optional<FailureCode> FailureCodeFromName(std::string_view name);

// Per-mutation failure code for an error raised while reconstructing. A no-op
// rewrite counts as an unrecognized description and unreadable class files as
// missing ones.
FailureCode FailureCodeFor(ErrorCode code);

// A mutation that could not be reconstructed. The record fields are copied so
// that failures can be tabulated without the report.
struct ReconstructionFailure {
  std::string mutant_id;
  FailureCode code = FailureCode::kNoCandidateOnLine;
  std::string detail;
  std::string class_name;
  std::string source_path;
  int line = 0;
  std::string mutator;
  std::string description;
  int index = 0;

  bool operator==(const ReconstructionFailure&) const = default;
};

using Outcome = std::variant<DatasetRecord, ReconstructionFailure>;

ReconstructionFailure MakeFailure(const MutationRecord& record, FailureCode code,
                                  std::string detail, std::string source_path = {});

// Where a system keeps its report, compiled classes and sources.
struct SystemLayout {
  std::filesystem::path report;
  std::filesystem::path classes_root;
  std::filesystem::path sources_root;

  // Applies the Maven conventions under `system_path` to every location not
  // given explicitly. The report is the newest target/pit-reports/**/
  // mutations.xml (ties go to the lexicographically greatest path). Throws
  // Error(kReportNotFound) naming the searched location.
  static SystemLayout Discover(const std::filesystem::path& system_path,
                               std::optional<std::filesystem::path> report = {},
                               std::optional<std::filesystem::path> sources = {},
                               std::optional<std::filesystem::path> classes = {});
};

// Source file of a mutated class relative to the sources root: the package
// directories of the outer class plus the report's sourceFile.
std::string RelativeSourcePath(const MutationRecord& record);

// RelativeSourcePath under `sources_root`. Throws Error(kSourceFileNotFound).
std::filesystem::path LocateSource(const std::filesystem::path& sources_root,
                                   const MutationRecord& record);

// Reads and parses class files below a classes root, once per class.
// Thread-safe.
class ClassFileCache : public ClassInfoSource {
 public:
  explicit ClassFileCache(std::filesystem::path classes_root)
      : root_(std::move(classes_root)) {}

  const ClassDebugInfo& Get(const std::string& class_name) override;

  // Number of class files actually read.
  int loads() const;

 private:
  struct Entry {
    std::optional<ClassDebugInfo> info;
    ErrorCode error = ErrorCode::kClassFileNotFound;
    std::string message;
  };
  std::filesystem::path root_;
  mutable std::mutex mu_;
  std::map<std::string, std::unique_ptr<Entry>> entries_;
  int loads_ = 0;
};

// Reconstructs one mutation against its already parsed source file.
Outcome ReconstructOne(const MutationRecord& record, const SourceUnit& unit,
                       ClassInfoSource& classes, const OperatorCatalog& catalog);

struct DatasetResult {
  // The report entries in document order.
  std::vector<MutationRecord> entries;
  // Both ordered by (source_path, line, index, mutant_id).
  std::vector<DatasetRecord> records;
  std::vector<ReconstructionFailure> failures;
};

// Reconstructs every entry. Later entries whose edit repeats an earlier one
// (same file, line and mutated line) become kDuplicateEdit failures. `jobs`
// caps the number of worker threads; the result does not depend on it.
DatasetResult GenerateDataset(const std::vector<MutationRecord>& entries,
                              const SystemLayout& layout, const OperatorCatalog& catalog,
                              int jobs = 1);

// Reads and parses the layout's report, then runs the overload above. Throws
// Error(kReportNotFound) or report parse errors.
DatasetResult GenerateDataset(const SystemLayout& layout, const OperatorCatalog& catalog,
                              int jobs = 1);

// Reads a whole file. Throws Error(kIoError).
std::string ReadFileBytes(const std::filesystem::path& path);

}  // namespace pitrecon

#endif  // PITRECON_RECONSTRUCT_H
