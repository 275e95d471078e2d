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
#ifndef PITRECON_INJECT_H
#define PITRECON_INJECT_H

#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pitrecon/java_source.h"
#include "pitrecon/operator_catalog.h"
#include "pitrecon/reconstruct.h"
#include "pitrecon/report.h"

namespace pitrecon {

enum class InjectionMode { kMutation, kStatement, kClass, kSystem };

std::optional<InjectionMode> InjectionModeFromName(std::string_view name);

// Which mutants to inject: one mutant, one (class, line) statement, one class
// or the whole system.
struct InjectionTarget {
  InjectionMode mode = InjectionMode::kSystem;
  std::optional<std::string> mutant_id;
  std::optional<std::string> class_name;
  std::optional<int> line;
};

using RecordPredicate = std::function<bool(const MutationRecord&)>;

// Class selectors match the binary name or, when they contain no '.', the
// simple name; nested classes of the selected class are included. Throws
// Error(kInvalidTarget) when the selectors do not fit the mode.
RecordPredicate BuildPredicate(const InjectionTarget& target);

// The mutated content with the original line's leading whitespace.
std::string Reindent(std::string_view original_line, std::string_view mutated_line);

// <class-as-path>/L<line>_I<index>_<mutator short name>/<source file>,
// relative to the output root. Ids carrying a "#k" suffix get "_k" appended
// to the directory.
std::filesystem::path MutantRelativePath(const MutationRecord& record);

struct InjectedFile {
  std::filesystem::path path;
  // Set when the written file no longer lexes.
  std::optional<std::string> validity_error;
};

// Writes `unit` with `record.line` replaced by the reindented mutated line.
// Line endings and any byte-order mark are kept. Throws Error(kWriteFailed).
InjectedFile InjectOne(const SourceUnit& unit, const MutationRecord& record,
                       std::string_view mutated_line,
                       const std::filesystem::path& out_root);

struct ManifestEntry {
  std::string mutant_id;
  // Relative to the output root, '/'-separated.
  std::string path;
  // "ok", or "invalid: <lex error>".
  std::string status;
};

struct InjectionSummary {
  int written = 0;
  int validity_failures = 0;
  int reconstruction_failures = 0;
  int filtered_out = 0;
  std::vector<ManifestEntry> manifest;
};

// Reconstructs the system, then writes one mutant file per selected
// reconstruction and `manifest.jsonl` under `out_root`. Throws for missing
// inputs or an unwritable output root.
InjectionSummary InjectAll(const SystemLayout& layout, const InjectionTarget& target,
                           const std::filesystem::path& out_root,
                           const OperatorCatalog& catalog, int jobs = 1);

}  // namespace pitrecon

#endif  // PITRECON_INJECT_H
