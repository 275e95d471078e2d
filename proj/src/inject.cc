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
#include "pitrecon/inject.h"

#include <algorithm>
#include <fstream>
#include <map>

#include "json.hpp"

#include "pitrecon/error.h"

namespace pitrecon {

namespace fs = std::filesystem;

namespace {

bool ClassMatches(const std::string& selector, const std::string& mutated_class) {
  std::string outer = mutated_class.substr(0, mutated_class.find('$'));
  if (selector.find('.') == std::string::npos) {
    std::size_t dot = outer.rfind('.');
    outer = dot == std::string::npos ? outer : outer.substr(dot + 1);
  }
  if (selector.find('$') != std::string::npos) {
    return mutated_class == selector ||
           mutated_class.compare(0, selector.size() + 1, selector + "$") == 0;
  }
  return outer == selector;
}

void WriteBytes(const fs::path& path, std::string_view bytes) {
  std::error_code ec;
  fs::create_directories(path.parent_path(), ec);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kWriteFailed, "cannot write " + path.string());
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  out.close();
  if (!out) throw Error(ErrorCode::kWriteFailed, "cannot write " + path.string());
}

}  // namespace

std::optional<InjectionMode> InjectionModeFromName(std::string_view name) {
  if (name == "mutation") return InjectionMode::kMutation;
  if (name == "statement") return InjectionMode::kStatement;
  if (name == "class") return InjectionMode::kClass;
  if (name == "system") return InjectionMode::kSystem;
  return std::nullopt;
}

RecordPredicate BuildPredicate(const InjectionTarget& target) {
  auto invalid = [](const std::string& message) {
    return Error(ErrorCode::kInvalidTarget, message);
  };
  switch (target.mode) {
    case InjectionMode::kMutation:
      if (!target.mutant_id || target.class_name || target.line) {
        throw invalid("mutation mode takes exactly a mutant id");
      }
      return [id = *target.mutant_id](const MutationRecord& r) { return r.mutant_id == id; };
    case InjectionMode::kStatement:
      if (!target.class_name || !target.line || target.mutant_id) {
        throw invalid("statement mode takes a class and a line");
      }
      return [cls = *target.class_name, line = *target.line](const MutationRecord& r) {
        return r.line == line && ClassMatches(cls, r.mutated_class);
      };
    case InjectionMode::kClass:
      if (!target.class_name || target.line || target.mutant_id) {
        throw invalid("class mode takes exactly a class");
      }
      return [cls = *target.class_name](const MutationRecord& r) {
        return ClassMatches(cls, r.mutated_class);
      };
    case InjectionMode::kSystem:
      if (target.class_name || target.line || target.mutant_id) {
        throw invalid("system mode takes no selector");
      }
      return [](const MutationRecord&) { return true; };
  }
  throw invalid("unknown mode");
}

std::string Reindent(std::string_view original_line, std::string_view mutated_line) {
  std::string out(LeadingWhitespace(original_line));
  mutated_line.remove_prefix(LeadingWhitespace(mutated_line).size());
  out += mutated_line;
  return out;
}

fs::path MutantRelativePath(const MutationRecord& record) {
  std::string class_path = record.mutated_class;
  std::replace(class_path.begin(), class_path.end(), '.', '/');
  std::string dir = "L" + std::to_string(record.line) + "_I" +
                    std::to_string(record.index) + "_" +
                    std::string(MutatorShortName(record.mutator));
  std::size_t hash = record.mutant_id.rfind('#');
  if (hash != std::string::npos) dir += "_" + record.mutant_id.substr(hash + 1);
  return fs::path(class_path) / dir / record.source_file;
}

InjectedFile InjectOne(const SourceUnit& unit, const MutationRecord& record,
                       std::string_view mutated_line, const fs::path& out_root) {
  InjectedFile result;
  result.path = out_root / MutantRelativePath(record);
  std::string bytes =
      unit.Render(record.line, Reindent(unit.line(record.line), mutated_line));
  WriteBytes(result.path, bytes);
  try {
    Lex(bytes);
  } catch (const LexError& e) {
    result.validity_error = e.what();
  }
  return result;
}

InjectionSummary InjectAll(const SystemLayout& layout, const InjectionTarget& target,
                           const fs::path& out_root, const OperatorCatalog& catalog,
                           int jobs) {
  RecordPredicate selected = BuildPredicate(target);
  std::error_code ec;
  fs::create_directories(out_root, ec);
  if (ec || !fs::is_directory(out_root)) {
    throw Error(ErrorCode::kWriteFailed, "cannot create " + out_root.string());
  }
  DatasetResult dataset = GenerateDataset(layout, catalog, jobs);

  std::map<std::string, const DatasetRecord*> by_id;
  for (const DatasetRecord& record : dataset.records) by_id[record.mutant_id] = &record;

  InjectionSummary summary;
  std::map<std::string, SourceUnit> units;
  for (const MutationRecord& entry : dataset.entries) {
    if (!selected(entry)) {
      ++summary.filtered_out;
      continue;
    }
    auto found = by_id.find(entry.mutant_id);
    if (found == by_id.end()) {
      ++summary.reconstruction_failures;
      continue;
    }
    const DatasetRecord& reconstructed = *found->second;
    auto unit = units.find(reconstructed.source_path);
    if (unit == units.end()) {
      fs::path path = layout.sources_root / reconstructed.source_path;
      unit = units
                 .emplace(reconstructed.source_path,
                          SourceUnit::FromText(reconstructed.source_path,
                                               ReadFileBytes(path)))
                 .first;
    }
    InjectedFile file =
        InjectOne(unit->second, entry, reconstructed.mutated_line, out_root);
    ++summary.written;
    ManifestEntry manifest;
    manifest.mutant_id = entry.mutant_id;
    manifest.path = MutantRelativePath(entry).generic_string();
    manifest.status = "ok";
    if (file.validity_error) {
      ++summary.validity_failures;
      manifest.status = "invalid: " + *file.validity_error;
    }
    summary.manifest.push_back(std::move(manifest));
  }
  std::sort(summary.manifest.begin(), summary.manifest.end(),
            [](const auto& a, const auto& b) { return a.path < b.path; });

  std::string lines;
  for (const ManifestEntry& m : summary.manifest) {
    nlohmann::ordered_json j;
    j["mutant_id"] = m.mutant_id;
    j["path"] = m.path;
    j["status"] = m.status;
    lines += j.dump() + "\n";
  }
  WriteBytes(out_root / "manifest.jsonl", lines);
  return summary;
}

}  // namespace pitrecon
