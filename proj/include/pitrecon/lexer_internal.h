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

#ifndef PITRECON_LEXER_INTERNAL_H
#define PITRECON_LEXER_INTERNAL_H

#include <string_view>
#include <vector>

#include "pitrecon/java_source.h"

namespace pitrecon::internal {

// Like Lex, but a comment or text block left open at the end of input becomes
// a token instead of an error. Used when lexing a single line out of context.
std::vector<Token> LexLenient(std::string_view text);

}  // namespace pitrecon::internal

#endif  // PITRECON_LEXER_INTERNAL_H
