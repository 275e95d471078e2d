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
// pitrecon: reconstructs source-level mutants from PIT reports.
//
//   pitrecon gen-dataset <system-path> [--out dataset.csv] [--format csv|jsonl]
//   pitrecon inject <system-path> [--mode system|class|statement|mutation] ...
//   pitrecon stats --dataset dataset.csv --failures failures.csv

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "pitrecon/dataset_io.h"
#include "pitrecon/error.h"
#include "pitrecon/inject.h"
#include "pitrecon/operator_catalog.h"
#include "pitrecon/reconstruct.h"

namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFatal = 2;
constexpr int kExitInvalidMutants = 3;
constexpr int kExitUsage = 64;

struct CommonOptions {
  std::string system;
  std::optional<std::string> report;
  std::optional<std::string> sources;
  std::optional<std::string> classes;
  std::optional<std::string> rules;
  bool quiet = false;
  int jobs = 1;
};

void AddCommon(CLI::App* cmd, CommonOptions& o) {
  cmd->add_option("system", o.system, "System root (Maven layout)")->required();
  cmd->add_option("--report", o.report, "PIT mutations.xml (default: newest under target/pit-reports)");
  cmd->add_option("--sources", o.sources, "Sources root (default: src/main/java)");
  cmd->add_option("--classes", o.classes, "Classes root (default: target/classes)");
  cmd->add_option("--rules", o.rules, "Extra rewrite rules file");
  cmd->add_flag("--quiet", o.quiet, "Suppress the summary");
  cmd->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::Range(1, 256));
}

pitrecon::SystemLayout Layout(const CommonOptions& o) {
  auto opt_path = [](const std::optional<std::string>& s) -> std::optional<fs::path> {
    if (s) return fs::path(*s);
    return std::nullopt;
  };
  return pitrecon::SystemLayout::Discover(o.system, opt_path(o.report),
                                          opt_path(o.sources), opt_path(o.classes));
}

pitrecon::OperatorCatalog Catalog(const CommonOptions& o) {
  pitrecon::OperatorCatalog catalog = pitrecon::OperatorCatalog::BuiltIn();
  if (o.rules) catalog.AddRules(pitrecon::ReadFileBytes(*o.rules));
  return catalog;
}

std::string SystemName(const std::string& system) {
  fs::path p = fs::path(system).lexically_normal();
  if (p.filename().empty()) p = p.parent_path();
  return p.filename().string();
}

int GenDataset(const CommonOptions& o, const std::string& out, const std::string& format) {
  pitrecon::SystemLayout layout = Layout(o);
  pitrecon::DatasetResult result =
      pitrecon::GenerateDataset(layout, Catalog(o), o.jobs);
  pitrecon::WriteOutput(out, format == "jsonl" ? pitrecon::DatasetToJsonl(result.records)
                                               : pitrecon::DatasetToCsv(result.records));
  fs::path dir = out == "-" ? fs::path(".") : fs::path(out).parent_path();
  if (dir.empty()) dir = ".";
  std::string stats = pitrecon::RenderStats(
      pitrecon::ComputeStats(result.records, result.failures, SystemName(o.system)));
  pitrecon::WriteOutput(dir / "failures.csv", pitrecon::FailuresToCsv(result.failures));
  pitrecon::WriteOutput(dir / "stats.txt", stats);
  if (!o.quiet) {
    std::cerr << "report: " << layout.report.string() << "\n"
              << result.records.size() << " records, " << result.failures.size()
              << " failures of " << result.entries.size() << " mutations\n\n"
              << stats;
  }
  return kExitOk;
}

int Inject(const CommonOptions& o, const std::string& out, const std::string& mode,
           const std::optional<std::string>& mutant_id,
           const std::optional<std::string>& class_name, const std::optional<int>& line) {
  pitrecon::InjectionTarget target;
  target.mode = *pitrecon::InjectionModeFromName(mode);
  target.mutant_id = mutant_id;
  target.class_name = class_name;
  target.line = line;
  try {
    pitrecon::BuildPredicate(target);
  } catch (const pitrecon::Error& e) {
    std::cerr << "pitrecon inject: " << e.what() << "\n";
    return kExitUsage;
  }
  pitrecon::InjectionSummary summary =
      pitrecon::InjectAll(Layout(o), target, out, Catalog(o), o.jobs);
  if (!o.quiet) {
    std::cerr << "written: " << summary.written
              << "\nvalidity_failures: " << summary.validity_failures
              << "\nreconstruction_failures: " << summary.reconstruction_failures
              << "\nfiltered_out: " << summary.filtered_out << "\n";
  }
  return summary.validity_failures > 0 ? kExitInvalidMutants : kExitOk;
}

int Stats(const std::string& dataset, const std::string& failures,
          const std::string& system) {
  std::string bytes = pitrecon::ReadFileBytes(dataset);
  std::vector<pitrecon::DatasetRecord> records =
      fs::path(dataset).extension() == ".jsonl" ? pitrecon::DatasetFromJsonl(bytes)
                                                : pitrecon::DatasetFromCsv(bytes);
  std::vector<pitrecon::ReconstructionFailure> failed =
      pitrecon::FailuresFromCsv(pitrecon::ReadFileBytes(failures));
  std::cout << pitrecon::RenderStats(pitrecon::ComputeStats(records, failed, system));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reconstructs source-level mutants from PIT mutation reports"};
  app.require_subcommand(1);

  CommonOptions gen_opts;
  std::string gen_out = "dataset.csv";
  std::string format = "csv";
  CLI::App* gen = app.add_subcommand("gen-dataset", "Build the method-level dataset");
  AddCommon(gen, gen_opts);
  gen->add_option("--out", gen_out, "Dataset file, or - for standard output");
  gen->add_option("--format", format, "Dataset format")
      ->check(CLI::IsMember({"csv", "jsonl"}));

  CommonOptions inject_opts;
  std::string inject_out = "mutants";
  std::string mode = "system";
  std::optional<std::string> mutant_id;
  std::optional<std::string> class_name;
  std::optional<int> line;
  CLI::App* inject = app.add_subcommand("inject", "Write mutant source files");
  AddCommon(inject, inject_opts);
  inject->add_option("--out", inject_out, "Output root");
  inject->add_option("--mode", mode, "Granularity")
      ->check(CLI::IsMember({"mutation", "statement", "class", "system"}));
  inject->add_option("--mutant-id", mutant_id, "Mutant id (mutation mode)");
  inject->add_option("--class", class_name, "Class name (statement and class modes)");
  inject->add_option("--line", line, "Line (statement mode)");

  std::string dataset;
  std::string failures;
  std::string system = "system";
  CLI::App* stats = app.add_subcommand("stats", "Print statistics tables");
  stats->add_option("--dataset", dataset, "Dataset CSV or JSONL")->required();
  stats->add_option("--failures", failures, "Failures CSV")->required();
  stats->add_option("--system", system, "System name for the table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (gen->parsed()) return GenDataset(gen_opts, gen_out, format);
    if (inject->parsed()) {
      return Inject(inject_opts, inject_out, mode, mutant_id, class_name, line);
    }
    return Stats(dataset, failures, system);
  } catch (const std::exception& e) {
    std::cerr << "pitrecon: " << e.what() << "\n";
    return kExitFatal;
  }
}
