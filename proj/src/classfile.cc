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

#include "pitrecon/classfile.h"

#include <algorithm>
#include <array>
#include <iostream>

#include "pitrecon/error.h"

namespace pitrecon {

namespace {

// Operand bytes following the opcode. kVariable marks the switches and
// `wide`, whose length depends on their encoding.
constexpr int kVariable = -1;
constexpr int kUnassigned = -2;

struct OpcodeInfo {
  const char* mnemonic;
  int operand_bytes;
};

constexpr std::array<OpcodeInfo, 202> kOpcodes = {{
    {"nop", 0},           {"aconst_null", 0},  {"iconst_m1", 0},
    {"iconst_0", 0},      {"iconst_1", 0},     {"iconst_2", 0},
    {"iconst_3", 0},      {"iconst_4", 0},     {"iconst_5", 0},
    {"lconst_0", 0},      {"lconst_1", 0},     {"fconst_0", 0},
    {"fconst_1", 0},      {"fconst_2", 0},     {"dconst_0", 0},
    {"dconst_1", 0},      {"bipush", 1},       {"sipush", 2},
    {"ldc", 1},           {"ldc_w", 2},        {"ldc2_w", 2},
    {"iload", 1},         {"lload", 1},        {"fload", 1},
    {"dload", 1},         {"aload", 1},        {"iload_0", 0},
    {"iload_1", 0},       {"iload_2", 0},      {"iload_3", 0},
    {"lload_0", 0},       {"lload_1", 0},      {"lload_2", 0},
    {"lload_3", 0},       {"fload_0", 0},      {"fload_1", 0},
    {"fload_2", 0},       {"fload_3", 0},      {"dload_0", 0},
    {"dload_1", 0},       {"dload_2", 0},      {"dload_3", 0},
    {"aload_0", 0},       {"aload_1", 0},      {"aload_2", 0},
    {"aload_3", 0},       {"iaload", 0},       {"laload", 0},
    {"faload", 0},        {"daload", 0},       {"aaload", 0},
    {"baload", 0},        {"caload", 0},       {"saload", 0},
    {"istore", 1},        {"lstore", 1},       {"fstore", 1},
    {"dstore", 1},        {"astore", 1},       {"istore_0", 0},
    {"istore_1", 0},      {"istore_2", 0},     {"istore_3", 0},
    {"lstore_0", 0},      {"lstore_1", 0},     {"lstore_2", 0},
    {"lstore_3", 0},      {"fstore_0", 0},     {"fstore_1", 0},
    {"fstore_2", 0},      {"fstore_3", 0},     {"dstore_0", 0},
    {"dstore_1", 0},      {"dstore_2", 0},     {"dstore_3", 0},
    {"astore_0", 0},      {"astore_1", 0},     {"astore_2", 0},
    {"astore_3", 0},      {"iastore", 0},      {"lastore", 0},
    {"fastore", 0},       {"dastore", 0},      {"aastore", 0},
    {"bastore", 0},       {"castore", 0},      {"sastore", 0},
    {"pop", 0},           {"pop2", 0},         {"dup", 0},
    {"dup_x1", 0},        {"dup_x2", 0},       {"dup2", 0},
    {"dup2_x1", 0},       {"dup2_x2", 0},      {"swap", 0},
    {"iadd", 0},          {"ladd", 0},         {"fadd", 0},
    {"dadd", 0},          {"isub", 0},         {"lsub", 0},
    {"fsub", 0},          {"dsub", 0},         {"imul", 0},
    {"lmul", 0},          {"fmul", 0},         {"dmul", 0},
    {"idiv", 0},          {"ldiv", 0},         {"fdiv", 0},
    {"ddiv", 0},          {"irem", 0},         {"lrem", 0},
    {"frem", 0},          {"drem", 0},         {"ineg", 0},
    {"lneg", 0},          {"fneg", 0},         {"dneg", 0},
    {"ishl", 0},          {"lshl", 0},         {"ishr", 0},
    {"lshr", 0},          {"iushr", 0},        {"lushr", 0},
    {"iand", 0},          {"land", 0},         {"ior", 0},
    {"lor", 0},           {"ixor", 0},         {"lxor", 0},
    {"iinc", 2},          {"i2l", 0},          {"i2f", 0},
    {"i2d", 0},           {"l2i", 0},          {"l2f", 0},
    {"l2d", 0},           {"f2i", 0},          {"f2l", 0},
    {"f2d", 0},           {"d2i", 0},          {"d2l", 0},
    {"d2f", 0},           {"i2b", 0},          {"i2c", 0},
    {"i2s", 0},           {"lcmp", 0},         {"fcmpl", 0},
    {"fcmpg", 0},         {"dcmpl", 0},        {"dcmpg", 0},
    {"ifeq", 2},          {"ifne", 2},         {"iflt", 2},
    {"ifge", 2},          {"ifgt", 2},         {"ifle", 2},
    {"if_icmpeq", 2},     {"if_icmpne", 2},    {"if_icmplt", 2},
    {"if_icmpge", 2},     {"if_icmpgt", 2},    {"if_icmple", 2},
    {"if_acmpeq", 2},     {"if_acmpne", 2},    {"goto", 2},
    {"jsr", 2},           {"ret", 1},          {"tableswitch", kVariable},
    {"lookupswitch", kVariable}, {"ireturn", 0}, {"lreturn", 0},
    {"freturn", 0},       {"dreturn", 0},      {"areturn", 0},
    {"return", 0},        {"getstatic", 2},    {"putstatic", 2},
    {"getfield", 2},      {"putfield", 2},     {"invokevirtual", 2},
    {"invokespecial", 2}, {"invokestatic", 2}, {"invokeinterface", 4},
    {"invokedynamic", 4}, {"new", 2},          {"newarray", 1},
    {"anewarray", 2},     {"arraylength", 0},  {"athrow", 0},
    {"checkcast", 2},     {"instanceof", 2},   {"monitorenter", 0},
    {"monitorexit", 0},   {"wide", kVariable}, {"multianewarray", 3},
    {"ifnull", 2},        {"ifnonnull", 2},    {"goto_w", 4},
    {"jsr_w", 4},
}};

int OperandBytes(std::uint8_t opcode) {
  return opcode < kOpcodes.size() ? kOpcodes[opcode].operand_bytes : kUnassigned;
}

std::uint32_t ReadU4At(std::span<const std::uint8_t> bytes, std::size_t at) {
  return (static_cast<std::uint32_t>(bytes[at]) << 24) |
         (static_cast<std::uint32_t>(bytes[at + 1]) << 16) |
         (static_cast<std::uint32_t>(bytes[at + 2]) << 8) |
         static_cast<std::uint32_t>(bytes[at + 3]);
}

// Big-endian cursor over the class file with bounds checking.
class Reader {
 public:
  explicit Reader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  std::size_t pos() const { return pos_; }

  void Need(std::size_t n) const {
    if (bytes_.size() - pos_ < n) {
      throw ClassFileError(ErrorCode::kTruncatedClassFile, pos_,
                           "class file truncated at offset " + std::to_string(pos_));
    }
  }

  std::uint8_t U1() {
    Need(1);
    return bytes_[pos_++];
  }
  std::uint16_t U2() {
    Need(2);
    std::uint16_t v = static_cast<std::uint16_t>((bytes_[pos_] << 8) | bytes_[pos_ + 1]);
    pos_ += 2;
    return v;
  }
  std::uint32_t U4() {
    Need(4);
    std::uint32_t v = ReadU4At(bytes_, pos_);
    pos_ += 4;
    return v;
  }
  std::span<const std::uint8_t> Bytes(std::size_t n) {
    Need(n);
    auto out = bytes_.subspan(pos_, n);
    pos_ += n;
    return out;
  }
  void Skip(std::size_t n) { Bytes(n); }

 private:
  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
};

void AppendCodePoint(std::string& out, std::uint32_t cp) {
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xc0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3f));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xe0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3f));
    out += static_cast<char>(0x80 | (cp & 0x3f));
  } else {
    out += static_cast<char>(0xf0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3f));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3f));
    out += static_cast<char>(0x80 | (cp & 0x3f));
  }
}

// Converts the class file's modified UTF-8 (two-byte NUL, surrogate pairs
// encoded as two three-byte sequences) to standard UTF-8.
std::string DecodeModifiedUtf8(std::span<const std::uint8_t> bytes) {
  std::string out;
  out.reserve(bytes.size());
  std::vector<std::uint16_t> units;
  for (std::size_t i = 0; i < bytes.size();) {
    std::uint8_t b = bytes[i];
    if (b < 0x80) {
      units.push_back(b);
      i += 1;
    } else if ((b & 0xe0) == 0xc0 && i + 1 < bytes.size()) {
      units.push_back(static_cast<std::uint16_t>(((b & 0x1f) << 6) | (bytes[i + 1] & 0x3f)));
      i += 2;
    } else if ((b & 0xf0) == 0xe0 && i + 2 < bytes.size()) {
      units.push_back(static_cast<std::uint16_t>(((b & 0x0f) << 12) |
                                                 ((bytes[i + 1] & 0x3f) << 6) |
                                                 (bytes[i + 2] & 0x3f)));
      i += 3;
    } else {
      units.push_back(0xfffd);
      i += 1;
    }
  }
  for (std::size_t i = 0; i < units.size(); ++i) {
    std::uint32_t u = units[i];
    if (u >= 0xd800 && u < 0xdc00 && i + 1 < units.size() &&
        units[i + 1] >= 0xdc00 && units[i + 1] < 0xe000) {
      u = 0x10000 + ((u - 0xd800) << 10) + (units[i + 1] - 0xdc00);
      ++i;
    }
    AppendCodePoint(out, u);
  }
  return out;
}

constexpr std::uint8_t kTagUtf8 = 1;
constexpr std::uint8_t kTagClass = 7;

struct ConstantPool {
  std::vector<std::uint8_t> tags;
  std::vector<std::string> utf8;
  // For Class entries: index of the name's Utf8 entry.
  std::vector<std::uint16_t> class_name_index;
  // For member refs and InvokeDynamic: NameAndType index. For NameAndType:
  // index of the name's Utf8 entry.
  std::vector<std::uint16_t> name_link;

  // Member name behind a Methodref, InterfaceMethodref or InvokeDynamic
  // entry; empty when the entry has another shape.
  std::string MemberName(std::uint16_t index) const {
    if (index == 0 || index >= tags.size()) return {};
    std::uint8_t tag = tags[index];
    if (tag != 9 && tag != 10 && tag != 11 && tag != 18) return {};
    std::uint16_t nat = name_link[index];
    if (nat == 0 || nat >= tags.size() || tags[nat] != 12) return {};
    std::uint16_t name = name_link[nat];
    if (name == 0 || name >= tags.size() || tags[name] != kTagUtf8) return {};
    return utf8[name];
  }

  const std::string& Utf8(std::uint16_t index, std::size_t at) const {
    if (index == 0 || index >= tags.size() || tags[index] != kTagUtf8) {
      throw ClassFileError(ErrorCode::kTruncatedClassFile, at,
                           "constant #" + std::to_string(index) + " is not Utf8");
    }
    return utf8[index];
  }

  const std::string& ClassName(std::uint16_t index, std::size_t at) const {
    if (index == 0 || index >= tags.size() || tags[index] != kTagClass) {
      throw ClassFileError(ErrorCode::kTruncatedClassFile, at,
                           "constant #" + std::to_string(index) + " is not a Class");
    }
    return Utf8(class_name_index[index], at);
  }
};

ConstantPool ReadConstantPool(Reader& in) {
  std::uint16_t count = in.U2();
  ConstantPool pool;
  pool.tags.assign(count, 0);
  pool.utf8.assign(count, {});
  pool.class_name_index.assign(count, 0);
  pool.name_link.assign(count, 0);
  for (std::uint16_t i = 1; i < count; ++i) {
    std::size_t at = in.pos();
    std::uint8_t tag = in.U1();
    pool.tags[i] = tag;
    switch (tag) {
      case kTagUtf8: {
        std::uint16_t length = in.U2();
        pool.utf8[i] = DecodeModifiedUtf8(in.Bytes(length));
        break;
      }
      case kTagClass:
        pool.class_name_index[i] = in.U2();
        break;
      case 8:   // String
      case 16:  // MethodType
      case 19:  // Module
      case 20:  // Package
        in.Skip(2);
        break;
      case 15:  // MethodHandle
        in.Skip(3);
        break;
      case 9:   // Fieldref
      case 10:  // Methodref
      case 11:  // InterfaceMethodref
      case 17:  // Dynamic
      case 18:  // InvokeDynamic
        in.U2();
        pool.name_link[i] = in.U2();
        break;
      case 12:  // NameAndType
        pool.name_link[i] = in.U2();
        in.U2();
        break;
      case 3:   // Integer
      case 4:   // Float
        in.Skip(4);
        break;
      case 5:  // Long
      case 6:  // Double
        in.Skip(8);
        ++i;   // Eight-byte constants take two slots.
        break;
      default:
        throw ClassFileError(ErrorCode::kUnsupportedConstantTag, at,
                             "unsupported constant tag " + std::to_string(tag) +
                                 " at offset " + std::to_string(at));
    }
  }
  return pool;
}

void SkipAttributes(Reader& in) {
  std::uint16_t count = in.U2();
  for (std::uint16_t i = 0; i < count; ++i) {
    in.U2();
    in.Skip(in.U4());
  }
}

// Reads a Code attribute body starting after attribute_length. `code_base`
// is the class-file offset of the code array, used in error offsets.
void ReadCode(Reader& in, const ConstantPool& pool, MethodCode& method) {
  in.U2();  // max_stack
  in.U2();  // max_locals
  std::uint32_t code_length = in.U4();
  std::size_t code_base = in.pos();
  auto code = in.Bytes(code_length);
  try {
    method.instructions = DecodeInstructions(code);
  } catch (const ClassFileError& e) {
    throw ClassFileError(e.code(), code_base + e.offset(),
                         std::string(e.what()) + " in method " + method.name);
  }
  for (Instruction& insn : method.instructions) {
    if (insn.opcode >= op::kInvokevirtual && insn.opcode <= op::kInvokedynamic) {
      std::uint16_t index = static_cast<std::uint16_t>(
          (code[insn.offset + 1] << 8) | code[insn.offset + 2]);
      insn.member_name = pool.MemberName(index);
    }
  }
  std::uint16_t handlers = in.U2();
  in.Skip(static_cast<std::size_t>(handlers) * 8);
  std::uint16_t attribute_count = in.U2();
  for (std::uint16_t i = 0; i < attribute_count; ++i) {
    std::size_t at = in.pos();
    const std::string& name = pool.Utf8(in.U2(), at);
    std::uint32_t length = in.U4();
    if (name != "LineNumberTable") {
      in.Skip(length);
      continue;
    }
    std::size_t end = in.pos() + length;
    std::uint16_t entries = in.U2();
    for (std::uint16_t k = 0; k < entries; ++k) {
      LineEntry entry;
      entry.start_offset = in.U2();
      entry.line = in.U2();
      method.line_table.push_back(entry);
    }
    if (in.pos() != end) {
      throw ClassFileError(ErrorCode::kTruncatedClassFile, at,
                           "LineNumberTable length mismatch");
    }
  }
  std::stable_sort(method.line_table.begin(), method.line_table.end(),
                   [](const LineEntry& a, const LineEntry& b) {
                     return a.start_offset < b.start_offset;
                   });
}

// Newest class-file major version this reader has been checked against.
constexpr int kNewestKnownMajor = 69;

}  // namespace

std::optional<std::uint8_t> OpcodeForMnemonic(std::string_view mnemonic) {
  for (std::size_t i = 0; i < kOpcodes.size(); ++i) {
    if (mnemonic == kOpcodes[i].mnemonic) return static_cast<std::uint8_t>(i);
  }
  return std::nullopt;
}

std::optional<std::string_view> MnemonicForOpcode(std::uint8_t opcode) {
  if (opcode >= kOpcodes.size()) return std::nullopt;
  return kOpcodes[opcode].mnemonic;
}

const MethodCode* ClassDebugInfo::FindMethod(std::string_view name,
                                             std::string_view descriptor) const {
  for (const MethodCode& m : methods) {
    if (m.name == name && m.descriptor == descriptor) return &m;
  }
  return nullptr;
}

std::vector<Instruction> DecodeInstructions(std::span<const std::uint8_t> code) {
  std::vector<Instruction> out;
  std::size_t pc = 0;
  auto need = [&](std::size_t at, std::size_t n) {
    if (code.size() < at || code.size() - at < n) {
      throw ClassFileError(ErrorCode::kTruncatedCode, pc,
                           "code truncated in instruction at offset " + std::to_string(pc));
    }
  };
  while (pc < code.size()) {
    std::uint8_t opcode = code[pc];
    Instruction insn;
    insn.offset = static_cast<std::uint32_t>(pc);
    insn.opcode = opcode;
    int operands = OperandBytes(opcode);
    if (operands == kUnassigned) {
      throw ClassFileError(ErrorCode::kUnknownOpcode, pc,
                           "unknown opcode " + std::to_string(opcode) + " at offset " +
                               std::to_string(pc));
    }
    insn.mnemonic = kOpcodes[opcode].mnemonic;
    std::size_t width = 1;
    if (opcode == op::kTableswitch || opcode == op::kLookupswitch) {
      // Operands start at the next four-byte boundary of the code array.
      std::size_t aligned = (pc + 4) & ~static_cast<std::size_t>(3);
      if (opcode == op::kTableswitch) {
        need(aligned, 12);
        auto low = static_cast<std::int32_t>(ReadU4At(code, aligned + 4));
        auto high = static_cast<std::int32_t>(ReadU4At(code, aligned + 8));
        if (high < low) {
          throw ClassFileError(ErrorCode::kTruncatedCode, pc,
                               "tableswitch with high < low at offset " + std::to_string(pc));
        }
        std::size_t jumps = static_cast<std::size_t>(
            static_cast<std::int64_t>(high) - static_cast<std::int64_t>(low) + 1);
        width = aligned - pc + 12 + jumps * 4;
      } else {
        need(aligned, 8);
        auto pairs = static_cast<std::int32_t>(ReadU4At(code, aligned + 4));
        if (pairs < 0) {
          throw ClassFileError(ErrorCode::kTruncatedCode, pc,
                               "lookupswitch with negative npairs at offset " +
                                   std::to_string(pc));
        }
        width = aligned - pc + 8 + static_cast<std::size_t>(pairs) * 8;
      }
    } else if (opcode == op::kWide) {
      need(pc, 2);
      std::uint8_t modified = code[pc + 1];
      bool is_load_store = (modified >= 0x15 && modified <= 0x19) ||  // iload..aload
                           (modified >= 0x36 && modified <= 0x3a) ||  // istore..astore
                           modified == 0xa9;                           // ret
      if (modified == op::kIinc) {
        width = 6;
      } else if (is_load_store) {
        width = 4;
      } else {
        throw ClassFileError(ErrorCode::kUnknownOpcode, pc + 1,
                             "opcode " + std::to_string(modified) +
                                 " cannot follow wide at offset " + std::to_string(pc));
      }
      insn.opcode = modified;
      insn.mnemonic = std::string(kOpcodes[modified].mnemonic) + "_w";
    } else {
      width = 1 + static_cast<std::size_t>(operands);
    }
    need(pc, width);
    insn.width = static_cast<std::uint32_t>(width);
    out.push_back(std::move(insn));
    pc += width;
  }
  return out;
}

ClassDebugInfo ParseClass(std::span<const std::uint8_t> class_bytes) {
  Reader in(class_bytes);
  if (class_bytes.size() < 4 || ReadU4At(class_bytes, 0) != 0xCAFEBABE) {
    throw ClassFileError(ErrorCode::kNotAClassFile, 0, "bad magic number");
  }
  in.U4();
  in.U2();  // minor_version
  ClassDebugInfo info;
  info.major_version = in.U2();
  if (info.major_version > kNewestKnownMajor) {
    std::cerr << "warning: class file version " << info.major_version
              << " is newer than " << kNewestKnownMajor << "; parsing anyway\n";
  }
  ConstantPool pool = ReadConstantPool(in);
  in.U2();  // access_flags
  std::size_t this_at = in.pos();
  info.class_name = pool.ClassName(in.U2(), this_at);
  std::replace(info.class_name.begin(), info.class_name.end(), '/', '.');
  in.U2();  // super_class
  in.Skip(static_cast<std::size_t>(in.U2()) * 2);  // interfaces

  std::uint16_t field_count = in.U2();
  for (std::uint16_t i = 0; i < field_count; ++i) {
    in.Skip(6);
    SkipAttributes(in);
  }

  std::uint16_t method_count = in.U2();
  for (std::uint16_t i = 0; i < method_count; ++i) {
    in.U2();  // access_flags
    std::size_t at = in.pos();
    MethodCode method;
    method.name = pool.Utf8(in.U2(), at);
    method.descriptor = pool.Utf8(in.U2(), at + 2);
    bool has_code = false;
    std::uint16_t attribute_count = in.U2();
    for (std::uint16_t k = 0; k < attribute_count; ++k) {
      std::size_t attr_at = in.pos();
      const std::string& name = pool.Utf8(in.U2(), attr_at);
      std::uint32_t length = in.U4();
      if (name == "Code" && !has_code) {
        in.Need(length);
        std::size_t end = in.pos() + length;
        ReadCode(in, pool, method);
        if (in.pos() != end) {
          throw ClassFileError(ErrorCode::kTruncatedClassFile, attr_at,
                               "Code attribute length mismatch in " + method.name);
        }
        has_code = true;
      } else {
        in.Skip(length);
      }
    }
    if (has_code) info.methods.push_back(std::move(method));
  }
  SkipAttributes(in);
  return info;
}

std::optional<int> LineOf(const MethodCode& method, std::uint32_t offset) {
  std::optional<int> line;
  for (const LineEntry& entry : method.line_table) {
    if (entry.start_offset > offset) break;
    line = entry.line;
  }
  return line;
}

std::optional<int> OccurrenceOrdinal(const MethodCode& method, int line,
                                     std::span<const std::uint8_t> family,
                                     int mutation_index, std::string_view member_name) {
  if (mutation_index < 0 ||
      static_cast<std::size_t>(mutation_index) >= method.instructions.size()) {
    return std::nullopt;
  }
  int ordinal = 0;
  for (std::size_t counter = 0; counter < method.instructions.size(); ++counter) {
    const Instruction& insn = method.instructions[counter];
    if (std::find(family.begin(), family.end(), insn.opcode) == family.end()) continue;
    if (LineOf(method, insn.offset) != line) continue;
    if (!member_name.empty() && insn.member_name != member_name) continue;
    if (static_cast<int>(counter) == mutation_index) return ordinal;
    ++ordinal;
  }
  return std::nullopt;
}

}  // namespace pitrecon
