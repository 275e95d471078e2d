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
#include "pitrecon/reconstruct.h"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iterator>
#include <set>
#include <sstream>
#include <thread>
#include <tuple>

#include "pitrecon/candidates.h"
#include "pitrecon/classfile.h"

namespace pitrecon {

namespace fs = std::filesystem;

namespace {

constexpr std::pair<FailureCode, std::string_view> kFailureNames[] = {
    {FailureCode::kNoCandidateOnLine, "NoCandidateOnLine"},
    {FailureCode::kDuplicateEdit, "DuplicateEdit"},
    {FailureCode::kUnrecognizedDescription, "UnrecognizedDescription"},
    {FailureCode::kUnknownMutator, "UnknownMutator"},
    {FailureCode::kNoEnclosingMethod, "NoEnclosingMethod"},
    {FailureCode::kMethodNotFound, "MethodNotFound"},
    {FailureCode::kOrdinalUnresolved, "OrdinalUnresolved"},
    {FailureCode::kOrdinalOutOfRange, "OrdinalOutOfRange"},
    {FailureCode::kMultiLineExpression, "MultiLineExpression"},
    {FailureCode::kUnsupportedSwitchShape, "UnsupportedSwitchShape"},
    {FailureCode::kSourceFileNotFound, "SourceFileNotFound"},
    {FailureCode::kClassFileNotFound, "ClassFileNotFound"},
    {FailureCode::kLexError, "LexError"},
};

std::string JoinLines(const SourceUnit& unit, int first, int last, int replaced_line,
                      std::string_view replacement) {
  std::string out;
  for (int n = first; n <= last; ++n) {
    if (n > first) out += '\n';
    out += n == replaced_line ? std::string(replacement) : unit.line(n);
  }
  return out;
}

template <typename T>
auto OrderKey(const T& x) {
  return std::tie(x.source_path, x.line, x.index, x.mutant_id);
}

}  // namespace

std::string_view FailureCodeName(FailureCode code) {
  for (const auto& [c, name] : kFailureNames) {
    if (c == code) return name;
  }
  return "Unknown";
}

std::optional<FailureCode> FailureCodeFromName(std::string_view name) {
  for (const auto& [c, n] : kFailureNames) {
    if (n == name) return c;
  }
  return std::nullopt;
}

FailureCode FailureCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kUnknownMutator:
      return FailureCode::kUnknownMutator;
    case ErrorCode::kUnrecognizedDescription:
    case ErrorCode::kNoOpRewrite:
      return FailureCode::kUnrecognizedDescription;
    case ErrorCode::kMultiLineExpression:
      return FailureCode::kMultiLineExpression;
    case ErrorCode::kUnsupportedSwitchShape:
      return FailureCode::kUnsupportedSwitchShape;
    case ErrorCode::kMethodNotFound:
      return FailureCode::kMethodNotFound;
    case ErrorCode::kOrdinalUnresolved:
      return FailureCode::kOrdinalUnresolved;
    case ErrorCode::kOrdinalOutOfRange:
      return FailureCode::kOrdinalOutOfRange;
    case ErrorCode::kSourceFileNotFound:
      return FailureCode::kSourceFileNotFound;
    case ErrorCode::kClassFileNotFound:
    case ErrorCode::kNotAClassFile:
    case ErrorCode::kTruncatedClassFile:
    case ErrorCode::kUnsupportedConstantTag:
    case ErrorCode::kUnknownOpcode:
    case ErrorCode::kTruncatedCode:
      return FailureCode::kClassFileNotFound;
    case ErrorCode::kLexError:
    case ErrorCode::kUnbalancedBraces:
      return FailureCode::kLexError;
    default:
      return FailureCode::kNoCandidateOnLine;
  }
}

ReconstructionFailure MakeFailure(const MutationRecord& record, FailureCode code,
                                  std::string detail, std::string source_path) {
  ReconstructionFailure failure;
  failure.mutant_id = record.mutant_id;
  failure.code = code;
  failure.detail = std::move(detail);
  failure.class_name = record.mutated_class;
  failure.source_path =
      source_path.empty() ? RelativeSourcePath(record) : std::move(source_path);
  failure.line = record.line;
  failure.mutator = record.mutator;
  failure.description = record.description;
  failure.index = record.index;
  return failure;
}

SystemLayout SystemLayout::Discover(const fs::path& system_path,
                                    std::optional<fs::path> report,
                                    std::optional<fs::path> sources,
                                    std::optional<fs::path> classes) {
  SystemLayout layout;
  layout.sources_root = sources ? *sources : system_path / "src" / "main" / "java";
  layout.classes_root = classes ? *classes : system_path / "target" / "classes";
  if (report) {
    std::error_code ec;
    if (!fs::is_regular_file(*report, ec)) {
      throw Error(ErrorCode::kReportNotFound, "report not found: " + report->string());
    }
    layout.report = *report;
    return layout;
  }
  fs::path reports = system_path / "target" / "pit-reports";
  std::optional<std::pair<fs::file_time_type, fs::path>> best;
  std::error_code ec;
  if (fs::is_directory(reports, ec)) {
    for (fs::recursive_directory_iterator it(reports, ec), end; !ec && it != end;
         it.increment(ec)) {
      if (it->path().filename() != "mutations.xml" || !it->is_regular_file(ec)) continue;
      std::pair<fs::file_time_type, fs::path> candidate{it->last_write_time(ec),
                                                        it->path()};
      if (!best || candidate > *best) best = candidate;
    }
  }
  if (!best) {
    throw Error(ErrorCode::kReportNotFound,
                "no mutations.xml found under " + reports.string() +
                    " (searched recursively; pass --report to override)");
  }
  layout.report = best->second;
  return layout;
}

std::string RelativeSourcePath(const MutationRecord& record) {
  std::string outer = record.mutated_class.substr(0, record.mutated_class.find('$'));
  std::size_t dot = outer.rfind('.');
  if (dot == std::string::npos) return record.source_file;
  std::string package = outer.substr(0, dot);
  std::replace(package.begin(), package.end(), '.', '/');
  return package + "/" + record.source_file;
}

fs::path LocateSource(const fs::path& sources_root, const MutationRecord& record) {
  fs::path path = sources_root / RelativeSourcePath(record);
  std::error_code ec;
  if (!fs::is_regular_file(path, ec)) {
    throw Error(ErrorCode::kSourceFileNotFound, "source file not found: " + path.string());
  }
  return path;
}

std::string ReadFileBytes(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::kIoError, "error reading " + path.string());
  return std::move(buffer).str();
}

const ClassDebugInfo& ClassFileCache::Get(const std::string& class_name) {
  std::lock_guard<std::mutex> lock(mu_);
  std::unique_ptr<Entry>& entry = entries_[class_name];
  if (!entry) {
    entry = std::make_unique<Entry>();
    std::string relative = class_name;
    std::replace(relative.begin(), relative.end(), '.', '/');
    fs::path path = root_ / (relative + ".class");
    std::error_code ec;
    if (!fs::is_regular_file(path, ec)) {
      entry->error = ErrorCode::kClassFileNotFound;
      entry->message = "class file not found: " + path.string();
    } else {
      ++loads_;
      try {
        std::string bytes = ReadFileBytes(path);
        entry->info = ParseClass(std::span<const std::uint8_t>(
            reinterpret_cast<const std::uint8_t*>(bytes.data()), bytes.size()));
      } catch (const Error& e) {
        entry->error = e.code();
        entry->message = path.string() + ": " + e.what();
      }
    }
  }
  if (!entry->info) throw Error(entry->error, entry->message);
  return *entry->info;
}

int ClassFileCache::loads() const {
  std::lock_guard<std::mutex> lock(mu_);
  return loads_;
}

Outcome ReconstructOne(const MutationRecord& record, const SourceUnit& unit,
                       ClassInfoSource& classes, const OperatorCatalog& catalog) {
  try {
    RewriteRule rule = catalog.RuleFor(record.mutator, record.description);
    if (record.line < 1 || record.line > unit.line_count()) {
      return MakeFailure(record, FailureCode::kNoCandidateOnLine,
                         "line " + std::to_string(record.line) + " is outside the file",
                         unit.path());
    }
    std::vector<CandidateOccurrence> candidates = FindCandidates(unit, record.line, rule);
    CandidateOccurrence chosen = Resolve(candidates, record, rule, classes);
    const std::string& original = unit.line(record.line);
    std::string mutated = ApplyReplacement(original, chosen, rule);

    bool ambiguous = false;
    std::optional<MethodSpan> span =
        EnclosingSpan(unit.method_spans(), record.line, &ambiguous);
    if (!span || ambiguous) {
      return MakeFailure(record, FailureCode::kNoEnclosingMethod,
                         ambiguous ? "several methods share line " +
                                         std::to_string(record.line)
                                   : "line " + std::to_string(record.line) +
                                         " is not inside a method body",
                         unit.path());
    }
    DatasetRecord out;
    out.mutant_id = record.mutant_id;
    out.orig_method = JoinLines(unit, span->start_line, span->end_line, 0, {});
    out.mut_method =
        JoinLines(unit, span->start_line, span->end_line, record.line, mutated);
    out.javadoc = span->javadoc;
    out.class_name = record.mutated_class;
    out.source_path = unit.path();
    out.line = record.line;
    out.mutator = record.mutator;
    out.description = record.description;
    out.index = record.index;
    out.original_line = original;
    out.mutated_line = std::move(mutated);
    return out;
  } catch (const Error& e) {
    return MakeFailure(record, FailureCodeFor(e.code()), e.what(), unit.path());
  }
}

DatasetResult GenerateDataset(const std::vector<MutationRecord>& entries,
                              const SystemLayout& layout, const OperatorCatalog& catalog,
                              int jobs) {
  DatasetResult result;
  result.entries = entries;

  std::map<std::string, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    groups[RelativeSourcePath(entries[i])].push_back(i);
  }
  std::vector<const std::pair<const std::string, std::vector<std::size_t>>*> work;
  for (const auto& group : groups) work.push_back(&group);

  std::vector<std::optional<Outcome>> outcomes(entries.size());
  ClassFileCache classes(layout.classes_root);
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (std::size_t g = next++; g < work.size(); g = next++) {
      const auto& [relative, members] = *work[g];
      fs::path path = layout.sources_root / relative;
      std::error_code ec;
      if (!fs::is_regular_file(path, ec)) {
        for (std::size_t i : members) {
          outcomes[i] = MakeFailure(entries[i], FailureCode::kSourceFileNotFound,
                                    "source file not found: " + path.string(), relative);
        }
        continue;
      }
      std::optional<SourceUnit> unit;
      try {
        unit = SourceUnit::FromText(relative, ReadFileBytes(path));
      } catch (const Error& e) {
        FailureCode code = e.code() == ErrorCode::kIoError ? FailureCode::kSourceFileNotFound
                                                           : FailureCodeFor(e.code());
        for (std::size_t i : members) {
          outcomes[i] = MakeFailure(entries[i], code, relative + ": " + e.what(), relative);
        }
        continue;
      }
      for (std::size_t i : members) {
        outcomes[i] = ReconstructOne(entries[i], *unit, classes, catalog);
      }
    }
  };

  std::size_t threads = std::clamp<std::size_t>(static_cast<std::size_t>(std::max(jobs, 1)),
                                                 1, std::max<std::size_t>(work.size(), 1));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }

  for (std::optional<Outcome>& outcome : outcomes) {
    if (auto* record = std::get_if<DatasetRecord>(&*outcome)) {
      result.records.push_back(std::move(*record));
    } else {
      result.failures.push_back(std::get<ReconstructionFailure>(std::move(*outcome)));
    }
  }
  std::sort(result.records.begin(), result.records.end(),
            [](const auto& a, const auto& b) { return OrderKey(a) < OrderKey(b); });

  // The first record of each (file, line, edit) group stands for the edit.
  std::map<std::tuple<std::string, int, std::string>, std::string> seen;
  std::vector<DatasetRecord> kept;
  for (DatasetRecord& record : result.records) {
    auto key = std::make_tuple(record.source_path, record.line, record.mutated_line);
    auto [it, inserted] = seen.emplace(key, record.mutant_id);
    if (inserted) {
      kept.push_back(std::move(record));
      continue;
    }
    ReconstructionFailure failure;
    failure.mutant_id = record.mutant_id;
    failure.code = FailureCode::kDuplicateEdit;
    failure.detail = "same source edit as " + it->second;
    failure.class_name = record.class_name;
    failure.source_path = record.source_path;
    failure.line = record.line;
    failure.mutator = record.mutator;
    failure.description = record.description;
    failure.index = record.index;
    result.failures.push_back(std::move(failure));
  }
  result.records = std::move(kept);
  std::sort(result.failures.begin(), result.failures.end(),
            [](const auto& a, const auto& b) { return OrderKey(a) < OrderKey(b); });
  return result;
}

DatasetResult GenerateDataset(const SystemLayout& layout, const OperatorCatalog& catalog,
                              int jobs) {
  std::error_code ec;
  if (!fs::is_regular_file(layout.report, ec)) {
    throw Error(ErrorCode::kReportNotFound, "report not found: " + layout.report.string());
  }
  return GenerateDataset(ParseReport(ReadFileBytes(layout.report)), layout, catalog, jobs);
}

}  // namespace pitrecon
