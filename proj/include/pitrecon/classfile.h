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

#ifndef PITRECON_CLASSFILE_H
#define PITRECON_CLASSFILE_H

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pitrecon {

// JVM opcode values used by the operator catalog. The full table lives in
// classfile.cc.
namespace op {
inline constexpr std::uint8_t kIadd = 0x60, kLadd = 0x61, kFadd = 0x62, kDadd = 0x63;
inline constexpr std::uint8_t kIsub = 0x64, kLsub = 0x65, kFsub = 0x66, kDsub = 0x67;
inline constexpr std::uint8_t kImul = 0x68, kLmul = 0x69, kFmul = 0x6a, kDmul = 0x6b;
inline constexpr std::uint8_t kIdiv = 0x6c, kLdiv = 0x6d, kFdiv = 0x6e, kDdiv = 0x6f;
inline constexpr std::uint8_t kIrem = 0x70, kLrem = 0x71, kFrem = 0x72, kDrem = 0x73;
inline constexpr std::uint8_t kIneg = 0x74, kLneg = 0x75, kFneg = 0x76, kDneg = 0x77;
inline constexpr std::uint8_t kIshl = 0x78, kLshl = 0x79, kIshr = 0x7a, kLshr = 0x7b;
inline constexpr std::uint8_t kIushr = 0x7c, kLushr = 0x7d;
inline constexpr std::uint8_t kIand = 0x7e, kLand = 0x7f, kIor = 0x80, kLor = 0x81;
inline constexpr std::uint8_t kIxor = 0x82, kLxor = 0x83, kIinc = 0x84;
inline constexpr std::uint8_t kIfeq = 0x99, kIfne = 0x9a, kIflt = 0x9b, kIfge = 0x9c;
inline constexpr std::uint8_t kIfgt = 0x9d, kIfle = 0x9e;
inline constexpr std::uint8_t kIfIcmpeq = 0x9f, kIfIcmpne = 0xa0, kIfIcmplt = 0xa1;
inline constexpr std::uint8_t kIfIcmpge = 0xa2, kIfIcmpgt = 0xa3, kIfIcmple = 0xa4;
inline constexpr std::uint8_t kIfAcmpeq = 0xa5, kIfAcmpne = 0xa6;
inline constexpr std::uint8_t kTableswitch = 0xaa, kLookupswitch = 0xab;
inline constexpr std::uint8_t kIreturn = 0xac, kLreturn = 0xad, kFreturn = 0xae;
inline constexpr std::uint8_t kDreturn = 0xaf, kAreturn = 0xb0, kReturn = 0xb1;
inline constexpr std::uint8_t kInvokevirtual = 0xb6, kInvokespecial = 0xb7;
inline constexpr std::uint8_t kInvokestatic = 0xb8, kInvokeinterface = 0xb9;
inline constexpr std::uint8_t kInvokedynamic = 0xba;
inline constexpr std::uint8_t kWide = 0xc4;
inline constexpr std::uint8_t kIfnull = 0xc6, kIfnonnull = 0xc7;
}  // namespace op

// Looks up a mnemonic ("iadd", "if_icmplt", ...) in the opcode table.
std::optional<std::uint8_t> OpcodeForMnemonic(std::string_view mnemonic);
// Mnemonic of a non-wide opcode, or nullopt for unassigned values.
std::optional<std::string_view> MnemonicForOpcode(std::uint8_t opcode);

struct Instruction {
  std::uint32_t offset = 0;
  std::uint8_t opcode = 0;
  // `wide`-prefixed instructions report the modified opcode with a `_w`
  // suffix ("iinc_w"); `opcode` is then the modified opcode, not 0xc4.
  std::string mnemonic;
  std::uint32_t width = 1;
  // Callee name for invoke instructions, filled in by ParseClass.
  std::string member_name;

  bool operator==(const Instruction&) const = default;
};

struct LineEntry {
  std::uint32_t start_offset = 0;
  int line = 0;

  bool operator==(const LineEntry&) const = default;
};

struct MethodCode {
  std::string name;
  std::string descriptor;
  std::vector<Instruction> instructions;
  // Sorted by start_offset.
  std::vector<LineEntry> line_table;
};

struct ClassDebugInfo {
  // Binary name with '/' replaced by '.', e.g. "org.example.Foo$Bar".
  std::string class_name;
  int major_version = 0;
  std::vector<MethodCode> methods;

  // Exact (name, descriptor) lookup.
  const MethodCode* FindMethod(std::string_view name,
                               std::string_view descriptor) const;
};

// Parses a class file. Methods without a Code attribute are omitted.
//
// Throws ClassFileError with kNotAClassFile, kTruncatedClassFile,
// kUnsupportedConstantTag, kUnknownOpcode or kTruncatedCode.
ClassDebugInfo ParseClass(std::span<const std::uint8_t> class_bytes);

// Decodes the body of a Code attribute. The position of an instruction in the
// returned vector is its per-method instruction counter.
std::vector<Instruction> DecodeInstructions(std::span<const std::uint8_t> code);

// Line of the last line-table entry starting at or before `offset`.
std::optional<int> LineOf(const MethodCode& method, std::uint32_t offset);

// Among the instructions attributed to `line` whose opcode is in `family`,
// returns the zero-based position of the one whose instruction counter is
// `mutation_index`. A non-empty `member_name` also restricts the count to
// invokes of that name.
std::optional<int> OccurrenceOrdinal(const MethodCode& method, int line,
                                     std::span<const std::uint8_t> family,
                                     int mutation_index,
                                     std::string_view member_name = {});

}  // namespace pitrecon

#endif  // PITRECON_CLASSFILE_H
