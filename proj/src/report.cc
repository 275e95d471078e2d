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

#include "pitrecon/report.h"

#include <expat.h>

#include <cctype>
#include <charconv>
#include <cstring>
#include <map>
#include <memory>
#include <sstream>

#include "pitrecon/error.h"

namespace pitrecon {

namespace {

MutationStatus StatusFromText(std::string_view text) {
  if (text == "KILLED") return MutationStatus::kKilled;
  if (text == "SURVIVED") return MutationStatus::kSurvived;
  if (text == "NO_COVERAGE") return MutationStatus::kNoCoverage;
  if (text == "TIMED_OUT") return MutationStatus::kTimedOut;
  return MutationStatus::kOther;
}

// Fields of the <mutation> element currently being read. Absent children stay
// as nullopt so the required ones can be reported precisely.
struct PendingMutation {
  int position = 0;
  long xml_line = 0;
  std::string status;
  bool detected = false;
  std::map<std::string, std::string> fields;
};

struct ParseState {
  XML_Parser parser = nullptr;
  std::vector<MutationRecord> records;
  std::vector<std::string> stack;
  std::string text;
  std::unique_ptr<PendingMutation> pending;
  int mutation_count = 0;
  bool root_seen = false;
  // Set from inside callbacks; rethrown after XML_Parse returns so that no
  // exception crosses the C library.
  std::unique_ptr<Error> error;
};

void Fail(ParseState* state, Error error) {
  if (!state->error) state->error = std::make_unique<Error>(std::move(error));
  XML_StopParser(state->parser, XML_FALSE);
}

int ParseInt(ParseState* state, const std::string& field, const std::string& text,
             int min_value) {
  std::string_view trimmed = text;
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.front()))) {
    trimmed.remove_prefix(1);
  }
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back()))) {
    trimmed.remove_suffix(1);
  }
  int value = 0;
  auto [ptr, ec] =
      std::from_chars(trimmed.data(), trimmed.data() + trimmed.size(), value);
  if (ec != std::errc() || ptr != trimmed.data() + trimmed.size() ||
      trimmed.empty() || value < min_value) {
    Fail(state, Error(ErrorCode::kMalformedReport,
                      "invalid " + field + " value '" + text + "'"));
    return 0;
  }
  return value;
}

void FinishMutation(ParseState* state) {
  PendingMutation& pending = *state->pending;
  static constexpr const char* kRequired[] = {
      "sourceFile", "mutatedClass", "lineNumber", "mutator", "description", "index"};
  for (const char* name : kRequired) {
    if (!pending.fields.count(name)) {
      Fail(state, Error(ErrorCode::kMissingField,
                        std::string("missing <") + name + "> in mutation #" +
                            std::to_string(pending.position) + " (line " +
                            std::to_string(pending.xml_line) + ")"));
      return;
    }
  }
  MutationRecord record;
  record.source_file = pending.fields["sourceFile"];
  record.mutated_class = pending.fields["mutatedClass"];
  if (record.mutated_class.empty() ||
      record.mutated_class.find_first_of("/\\") != std::string::npos) {
    Fail(state, Error(ErrorCode::kMalformedReport,
                      "invalid mutatedClass '" + record.mutated_class + "'"));
    return;
  }
  if (auto it = pending.fields.find("mutatedMethod"); it != pending.fields.end()) {
    record.mutated_method = it->second;
  }
  if (auto it = pending.fields.find("methodDescription"); it != pending.fields.end()) {
    record.method_descriptor = it->second;
  }
  record.line = ParseInt(state, "lineNumber", pending.fields["lineNumber"], 1);
  record.index = ParseInt(state, "index", pending.fields["index"], 0);
  if (auto it = pending.fields.find("block"); it != pending.fields.end()) {
    record.block = ParseInt(state, "block", it->second, 0);
  }
  if (state->error) return;
  record.mutator = pending.fields["mutator"];
  record.description = pending.fields["description"];
  if (auto it = pending.fields.find("killingTest"); it != pending.fields.end()) {
    record.killing_test = it->second;
  }
  record.status_text = pending.status;
  record.status = StatusFromText(pending.status);
  record.detected = pending.detected;
  state->records.push_back(std::move(record));
}

void XMLCALL OnStart(void* data, const XML_Char* name, const XML_Char** attrs) {
  auto* state = static_cast<ParseState*>(data);
  if (state->error) return;
  std::string element = name;
  if (state->stack.empty()) {
    if (element != "mutations") {
      Fail(state, Error(ErrorCode::kMalformedReport,
                        "root element is <" + element + ">, expected <mutations>"));
      return;
    }
    state->root_seen = true;
  } else if (state->stack.size() == 1 && element == "mutation") {
    state->pending = std::make_unique<PendingMutation>();
    state->pending->position = ++state->mutation_count;
    state->pending->xml_line = XML_GetCurrentLineNumber(state->parser);
    for (int i = 0; attrs[i] != nullptr; i += 2) {
      std::string_view key = attrs[i];
      std::string_view value = attrs[i + 1];
      if (key == "status") state->pending->status = value;
      if (key == "detected") state->pending->detected = value == "true";
    }
  }
  state->stack.push_back(std::move(element));
  state->text.clear();
}

void XMLCALL OnEnd(void* data, const XML_Char* name) {
  auto* state = static_cast<ParseState*>(data);
  if (state->error) return;
  std::string element = name;
  state->stack.pop_back();
  if (state->pending) {
    if (state->stack.size() == 1 && element == "mutation") {
      FinishMutation(state);
      state->pending.reset();
    } else if (state->stack.size() == 2) {
      // Direct child of <mutation>. Repeated children keep the first value.
      state->pending->fields.try_emplace(element, state->text);
    } else if (state->stack.size() == 3 &&
               ((state->stack[2] == "indexes" && element == "index") ||
                (state->stack[2] == "blocks" && element == "block"))) {
      // Newer reports wrap these as <indexes><index>..</index></indexes>; the
      // first entry addresses the mutated instruction.
      state->pending->fields.try_emplace(element, state->text);
    }
  }
  state->text.clear();
}

void XMLCALL OnText(void* data, const XML_Char* chars, int len) {
  auto* state = static_cast<ParseState*>(data);
  state->text.append(chars, static_cast<std::size_t>(len));
}

void AppendEscaped(std::ostringstream& out, std::string_view text) {
  for (char c : text) {
    switch (c) {
      case '<':
        out << "&lt;";
        break;
      case '>':
        out << "&gt;";
        break;
      case '&':
        out << "&amp;";
        break;
      case '\'':
        out << "&apos;";
        break;
      case '"':
        out << "&quot;";
        break;
      default:
        out << c;
    }
  }
}

}  // namespace

std::string_view MutatorShortName(std::string_view mutator) {
  auto dot = mutator.rfind('.');
  return dot == std::string_view::npos ? mutator : mutator.substr(dot + 1);
}

std::string MakeMutantId(const MutationRecord& record) {
  return record.mutated_class + ":" + std::to_string(record.line) + ":" +
         std::string(MutatorShortName(record.mutator)) + ":" +
         std::to_string(record.index);
}

std::vector<MutationRecord> ParseReport(std::string_view report_bytes) {
  // Forcing UTF-8 overrides any encoding declaration in the prolog.
  std::unique_ptr<std::remove_pointer_t<XML_Parser>, decltype(&XML_ParserFree)>
      parser(XML_ParserCreate("UTF-8"), &XML_ParserFree);
  ParseState state;
  state.parser = parser.get();
  XML_SetUserData(parser.get(), &state);
  XML_SetElementHandler(parser.get(), OnStart, OnEnd);
  XML_SetCharacterDataHandler(parser.get(), OnText);

  XML_Status status = XML_Parse(parser.get(), report_bytes.data(),
                                static_cast<int>(report_bytes.size()), XML_TRUE);
  if (state.error) throw *state.error;
  if (status != XML_STATUS_OK) {
    throw Error(ErrorCode::kMalformedReport,
                std::string("XML error at line ") +
                    std::to_string(XML_GetCurrentLineNumber(parser.get())) + ": " +
                    XML_ErrorString(XML_GetErrorCode(parser.get())));
  }
  if (!state.root_seen) {
    throw Error(ErrorCode::kMalformedReport, "no root element");
  }

  std::map<std::string, int> seen;
  for (MutationRecord& record : state.records) {
    std::string id = MakeMutantId(record);
    int count = ++seen[id];
    record.mutant_id = count == 1 ? id : id + "#" + std::to_string(count);
  }
  return std::move(state.records);
}

std::string_view StatusName(const MutationRecord& record) {
  switch (record.status) {
    case MutationStatus::kKilled:
      return "KILLED";
    case MutationStatus::kSurvived:
      return "SURVIVED";
    case MutationStatus::kNoCoverage:
      return "NO_COVERAGE";
    case MutationStatus::kTimedOut:
      return "TIMED_OUT";
    case MutationStatus::kOther:
      break;
  }
  return record.status_text;
}

std::string WriteReport(const std::vector<MutationRecord>& records) {
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n<mutations>\n";
  for (const MutationRecord& r : records) {
    out << "<mutation detected='" << (r.detected ? "true" : "false")
        << "' status='";
    AppendEscaped(out, StatusName(r));
    out << "'>";
    auto field = [&out](std::string_view name, std::string_view value) {
      out << '<' << name << '>';
      AppendEscaped(out, value);
      out << "</" << name << '>';
    };
    field("sourceFile", r.source_file);
    field("mutatedClass", r.mutated_class);
    field("mutatedMethod", r.mutated_method);
    if (r.method_descriptor) field("methodDescription", *r.method_descriptor);
    field("lineNumber", std::to_string(r.line));
    field("mutator", r.mutator);
    out << "<indexes><index>" << r.index << "</index></indexes>";
    if (r.block) out << "<blocks><block>" << *r.block << "</block></blocks>";
    if (r.killing_test) field("killingTest", *r.killing_test);
    field("description", r.description);
    out << "</mutation>\n";
  }
  out << "</mutations>\n";
  return out.str();
}

}  // namespace pitrecon
