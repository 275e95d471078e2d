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

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <map>
#include <set>

#include "json.hpp"

#include "pitrecon/error.h"
#include "pitrecon/operator_catalog.h"

namespace pitrecon {

namespace {

void AppendField(std::string& out, std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) {
    out += field;
    return;
  }
  out += '"';
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
}

void AppendRow(std::string& out, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) out += ',';
    AppendField(out, fields[i]);
  }
  out += '\n';
}

int ToInt(const std::string& text, std::string_view what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(ErrorCode::kIoError,
                "bad " + std::string(what) + " value '" + text + "'");
  }
  return value;
}

std::vector<std::vector<std::string>> Rows(std::string_view csv,
                                           const std::vector<std::string>& header) {
  std::vector<std::vector<std::string>> rows = ParseCsv(csv);
  if (rows.empty()) return rows;
  if (rows.front() != header) {
    throw Error(ErrorCode::kIoError, "unexpected CSV header");
  }
  rows.erase(rows.begin());
  for (const auto& row : rows) {
    if (row.size() != header.size()) {
      throw Error(ErrorCode::kIoError, "CSV row has " + std::to_string(row.size()) +
                                           " fields, expected " +
                                           std::to_string(header.size()));
    }
  }
  return rows;
}

nlohmann::ordered_json ToJson(const DatasetRecord& r) {
  nlohmann::ordered_json j;
  j["mutant_id"] = r.mutant_id;
  j["class"] = r.class_name;
  j["source_path"] = r.source_path;
  j["line"] = r.line;
  j["mutator"] = r.mutator;
  j["description"] = r.description;
  j["index"] = r.index;
  j["original_line"] = r.original_line;
  j["mutated_line"] = r.mutated_line;
  j["javadoc"] = r.javadoc ? nlohmann::ordered_json(*r.javadoc) : nullptr;
  j["orig_method"] = r.orig_method;
  j["mut_method"] = r.mut_method;
  return j;
}

}  // namespace

const std::vector<std::string>& DatasetCsvHeader() {
  static const std::vector<std::string> header = {
      "mutant_id",   "class",        "source_path", "line",
      "mutator",     "description",  "index",       "original_line",
      "mutated_line", "javadoc",     "orig_method", "mut_method"};
  return header;
}

const std::vector<std::string>& FailuresCsvHeader() {
  static const std::vector<std::string> header = {
      "mutant_id", "code", "detail", "class", "source_path",
      "line",      "mutator", "description", "index"};
  return header;
}

std::vector<std::vector<std::string>> ParseCsv(std::string_view csv) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool quoted = false;
  bool field_started = false;
  for (std::size_t i = 0; i < csv.size(); ++i) {
    char c = csv[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < csv.size() && csv[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
      continue;
    }
    if (c == '"') {
      quoted = true;
      field_started = true;
    } else if (c == ',') {
      row.push_back(std::move(field));
      field.clear();
      field_started = true;
    } else if (c == '\n' || c == '\r') {
      if (c == '\r' && i + 1 < csv.size() && csv[i + 1] == '\n') ++i;
      row.push_back(std::move(field));
      field.clear();
      rows.push_back(std::move(row));
      row.clear();
      field_started = false;
    } else {
      field += c;
      field_started = true;
    }
  }
  if (quoted) throw Error(ErrorCode::kIoError, "unterminated quoted CSV field");
  if (field_started || !row.empty()) {
    row.push_back(std::move(field));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string DatasetToCsv(const std::vector<DatasetRecord>& records) {
  std::string out;
  AppendRow(out, DatasetCsvHeader());
  for (const DatasetRecord& r : records) {
    AppendRow(out, {r.mutant_id, r.class_name, r.source_path, std::to_string(r.line),
                    r.mutator, r.description, std::to_string(r.index), r.original_line,
                    r.mutated_line, r.javadoc.value_or(""), r.orig_method, r.mut_method});
  }
  return out;
}

std::vector<DatasetRecord> DatasetFromCsv(std::string_view csv) {
  std::vector<DatasetRecord> records;
  for (auto& row : Rows(csv, DatasetCsvHeader())) {
    DatasetRecord r;
    r.mutant_id = std::move(row[0]);
    r.class_name = std::move(row[1]);
    r.source_path = std::move(row[2]);
    r.line = ToInt(row[3], "line");
    r.mutator = std::move(row[4]);
    r.description = std::move(row[5]);
    r.index = ToInt(row[6], "index");
    r.original_line = std::move(row[7]);
    r.mutated_line = std::move(row[8]);
    if (!row[9].empty()) r.javadoc = std::move(row[9]);
    r.orig_method = std::move(row[10]);
    r.mut_method = std::move(row[11]);
    records.push_back(std::move(r));
  }
  return records;
}

std::string DatasetToJsonl(const std::vector<DatasetRecord>& records) {
  std::string out;
  for (const DatasetRecord& r : records) {
    // Source bytes that are not UTF-8 become U+FFFD rather than aborting.
    out += ToJson(r).dump(-1, ' ', false, nlohmann::json::error_handler_t::replace) + "\n";
  }
  return out;
}

std::vector<DatasetRecord> DatasetFromJsonl(std::string_view jsonl) {
  std::vector<DatasetRecord> records;
  std::size_t begin = 0;
  int line_no = 0;
  while (begin < jsonl.size()) {
    std::size_t end = jsonl.find('\n', begin);
    if (end == std::string_view::npos) end = jsonl.size();
    std::string_view line = jsonl.substr(begin, end - begin);
    begin = end + 1;
    ++line_no;
    if (line.empty()) continue;
    try {
      nlohmann::json j = nlohmann::json::parse(line);
      DatasetRecord r;
      r.mutant_id = j.at("mutant_id").get<std::string>();
      r.class_name = j.at("class").get<std::string>();
      r.source_path = j.at("source_path").get<std::string>();
      r.line = j.at("line").get<int>();
      r.mutator = j.at("mutator").get<std::string>();
      r.description = j.at("description").get<std::string>();
      r.index = j.at("index").get<int>();
      r.original_line = j.at("original_line").get<std::string>();
      r.mutated_line = j.at("mutated_line").get<std::string>();
      if (!j.at("javadoc").is_null()) r.javadoc = j.at("javadoc").get<std::string>();
      r.orig_method = j.at("orig_method").get<std::string>();
      r.mut_method = j.at("mut_method").get<std::string>();
      records.push_back(std::move(r));
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::kIoError,
                  "JSONL line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return records;
}

std::string FailuresToCsv(const std::vector<ReconstructionFailure>& failures) {
  std::string out;
  AppendRow(out, FailuresCsvHeader());
  for (const ReconstructionFailure& f : failures) {
    AppendRow(out, {f.mutant_id, std::string(FailureCodeName(f.code)), f.detail,
                    f.class_name, f.source_path, std::to_string(f.line), f.mutator,
                    f.description, std::to_string(f.index)});
  }
  return out;
}

std::vector<ReconstructionFailure> FailuresFromCsv(std::string_view csv) {
  std::vector<ReconstructionFailure> failures;
  for (auto& row : Rows(csv, FailuresCsvHeader())) {
    ReconstructionFailure f;
    f.mutant_id = std::move(row[0]);
    std::optional<FailureCode> code = FailureCodeFromName(row[1]);
    if (!code) throw Error(ErrorCode::kIoError, "unknown failure code '" + row[1] + "'");
    f.code = *code;
    f.detail = std::move(row[2]);
    f.class_name = std::move(row[3]);
    f.source_path = std::move(row[4]);
    f.line = ToInt(row[5], "line");
    f.mutator = std::move(row[6]);
    f.description = std::move(row[7]);
    f.index = ToInt(row[8], "index");
    failures.push_back(std::move(f));
  }
  return failures;
}

void WriteOutput(const std::filesystem::path& path, std::string_view bytes) {
  if (path == "-") {
    std::cout.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    std::cout.flush();
    return;
  }
  std::error_code ec;
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path(), ec);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  out.close();
  if (!out) throw Error(ErrorCode::kWriteFailed, "cannot write " + path.string());
}

StatsTables ComputeStats(const std::vector<DatasetRecord>& records,
                         const std::vector<ReconstructionFailure>& failures,
                         std::string system_name) {
  StatsTables tables;
  tables.system.system = std::move(system_name);
  std::set<std::string> files;
  std::map<std::string, OperatorRow> rows;
  for (const DatasetRecord& r : records) {
    files.insert(r.source_path);
    if (r.javadoc) ++tables.system.javadoc;
    OperatorRow& row = rows[OperatorName(r.mutator)];
    ++row.mutations;
    ++row.preserved;
  }
  for (const ReconstructionFailure& f : failures) {
    if (!f.source_path.empty()) files.insert(f.source_path);
    ++rows[OperatorName(f.mutator)].mutations;
  }
  tables.system.files = static_cast<std::int64_t>(files.size());
  tables.system.preserved = static_cast<std::int64_t>(records.size());
  tables.system.mutations = static_cast<std::int64_t>(records.size() + failures.size());

  OperatorRow total{"Total", 0, 0};
  auto take = [&](const std::string& name) {
    auto it = rows.find(name);
    if (it == rows.end()) return;
    it->second.name = name;
    total.mutations += it->second.mutations;
    total.preserved += it->second.preserved;
    tables.operators.push_back(it->second);
    rows.erase(it);
  };
  for (const std::string& name : OperatorOrder()) take(name);
  while (!rows.empty()) take(rows.begin()->first);
  tables.operators.push_back(total);
  return tables;
}

std::string FormatPercent(std::int64_t numerator, std::int64_t denominator) {
  if (denominator <= 0) return "—";
  std::int64_t hundredths = (numerator * 20000 + denominator) / (2 * denominator);
  std::string fraction = std::to_string(hundredths % 100);
  if (fraction.size() < 2) fraction.insert(0, "0");
  return std::to_string(hundredths / 100) + "." + fraction;
}

std::string RenderStats(const StatsTables& tables) {
  // Display width counts code points so the em dash pads like one column.
  auto width = [](const std::string& s) {
    return static_cast<std::size_t>(std::count_if(
        s.begin(), s.end(), [](char c) { return (static_cast<unsigned char>(c) & 0xc0) != 0x80; }));
  };
  auto render = [&](const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> widths(rows.front().size(), 0);
    for (const auto& row : rows) {
      for (std::size_t c = 0; c < row.size(); ++c) widths[c] = std::max(widths[c], width(row[c]));
    }
    std::string out;
    for (const auto& row : rows) {
      std::string line;
      for (std::size_t c = 0; c < row.size(); ++c) {
        std::string pad(widths[c] - width(row[c]), ' ');
        if (c > 0) line += "  ";
        line += c == 0 ? row[c] + pad : pad + row[c];
      }
      while (!line.empty() && line.back() == ' ') line.pop_back();
      out += line + "\n";
    }
    return out;
  };

  const SystemRow& s = tables.system;
  std::vector<std::vector<std::string>> system_rows = {
      {"System", "Files", "Mutations", "Preserved", "Preserved %", "Javadoc", "Javadoc %"}};
  system_rows.push_back({s.system, std::to_string(s.files), std::to_string(s.mutations),
                         std::to_string(s.preserved), FormatPercent(s.preserved, s.mutations),
                         std::to_string(s.javadoc), FormatPercent(s.javadoc, s.preserved)});
  std::vector<std::vector<std::string>> operator_rows = {
      {"Operator", "Mutations", "Preserved", "Rate %"}};
  for (const OperatorRow& row : tables.operators) {
    operator_rows.push_back({row.name, std::to_string(row.mutations),
                             std::to_string(row.preserved),
                             FormatPercent(row.preserved, row.mutations)});
  }
  return render(system_rows) + "\n" + render(operator_rows);
}

}  // namespace pitrecon
