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
#ifndef PITRECON_DATASET_IO_H
#define PITRECON_DATASET_IO_H

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "pitrecon/reconstruct.h"

namespace pitrecon {

// Column order of the dataset CSV.
const std::vector<std::string>& DatasetCsvHeader();
const std::vector<std::string>& FailuresCsvHeader();

// RFC 4180 CSV with '\n' record separators. Fields holding a comma, quote,
// CR or LF are quoted. An absent Javadoc is an empty field.
std::string DatasetToCsv(const std::vector<DatasetRecord>& records);
std::vector<DatasetRecord> DatasetFromCsv(std::string_view csv);

// One JSON object per line with the CSV's field names; an absent Javadoc is
// null.
std::string DatasetToJsonl(const std::vector<DatasetRecord>& records);
std::vector<DatasetRecord> DatasetFromJsonl(std::string_view jsonl);

std::string FailuresToCsv(const std::vector<ReconstructionFailure>& failures);
std::vector<ReconstructionFailure> FailuresFromCsv(std::string_view csv);

// Splits CSV text into rows of fields. Throws Error(kIoError) on an
// unterminated quote.
std::vector<std::vector<std::string>> ParseCsv(std::string_view csv);

// Writes `bytes` to `path`, or to standard output when `path` is "-".
// Throws Error(kWriteFailed).
void WriteOutput(const std::filesystem::path& path, std::string_view bytes);

struct SystemRow {
  std::string system;
  std::int64_t files = 0;
  std::int64_t mutations = 0;
  std::int64_t preserved = 0;
  std::int64_t javadoc = 0;
};

struct OperatorRow {
  std::string name;
  std::int64_t mutations = 0;
  std::int64_t preserved = 0;
};

struct StatsTables {
  SystemRow system;
  // Operator families in table order, then any others by name, then "Total".
  std::vector<OperatorRow> operators;
};

StatsTables ComputeStats(const std::vector<DatasetRecord>& records,
                         const std::vector<ReconstructionFailure>& failures,
                         std::string system_name);

// `numerator / denominator` as a percentage with two decimals, rounded half
// up; an em dash when the denominator is zero.
std::string FormatPercent(std::int64_t numerator, std::int64_t denominator);

// Plain-text aligned tables.
std::string RenderStats(const StatsTables& tables);

}  // namespace pitrecon

#endif  // PITRECON_DATASET_IO_H
