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

#ifndef PITRECON_CANDIDATES_H
#define PITRECON_CANDIDATES_H

#include <string_view>
#include <vector>

#include "pitrecon/java_source.h"
#include "pitrecon/operator_catalog.h"

namespace pitrecon {

// Token-level matches of `rule` on one source line, left to right, with
// ordinals assigned in that order. Comments and literals never match.
//
// This overload lexes `line_text` on its own, so a line that sits inside a
// multi-line comment or text block is misread; prefer the SourceUnit form.
std::vector<CandidateOccurrence> FindCandidates(std::string_view line_text,
                                                const RewriteRule& rule, int line = 1);

std::vector<CandidateOccurrence> FindCandidates(const SourceUnit& unit, int line,
                                                const RewriteRule& rule);

// Core scan over the code tokens that start on one line. `tokens` is the
// whole file so that statement boundaries and declarations before the line
// are visible; local variable declarations are looked up from `scope_line`
// onwards.
std::vector<CandidateOccurrence> FindCandidatesInTokens(const std::vector<Token>& tokens,
                                                        std::string_view line_text,
                                                        int line, const RewriteRule& rule,
                                                        int scope_line = 1);

}  // namespace pitrecon

#endif  // PITRECON_CANDIDATES_H
