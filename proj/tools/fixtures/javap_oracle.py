#!/usr/bin/env python3
# Copyright 2026 The pitrecon Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Disassembles class files with the JDK's own class-file library.

Prints the information `javap -c -l` shows for each method that has code:
instruction offsets and mnemonics (invokes carry javap's `// Method` comment),
then the LineNumberTable. The output is
committed next to the fixtures and compared against pitrecon's decoder.

Requires a Java 24+ runtime (java.lang.classfile) reachable through JPype;
the jdk4py wheel provides one.

Usage: javap_oracle.py CLASS_FILE... > oracle.txt
"""

import glob
import sys

import jpype


def start_jvm():
    import jdk4py
    libjvm = glob.glob(str(jdk4py.JAVA_HOME) + "/lib/server/libjvm.so")[0]
    jpype.startJVM(libjvm, "--enable-native-access=ALL-UNNAMED")


def disassemble(path):
    ClassFile = jpype.JClass("java.lang.classfile.ClassFile")
    Attributes = jpype.JClass("java.lang.classfile.Attributes")
    Instruction = jpype.JClass("java.lang.classfile.Instruction")
    Invoke = jpype.JClass("java.lang.classfile.instruction.InvokeInstruction")
    with open(path, "rb") as f:
        data = f.read()
    model = ClassFile.of().parse(jpype.JArray(jpype.JByte)(data))
    out = ["class " + str(model.thisClass().asInternalName()).replace("/", ".")]
    for method in model.methods():
        code = method.findAttribute(Attributes.code())
        if not code.isPresent():
            continue
        code = code.get()
        out.append("method %s %s" % (method.methodName().stringValue(),
                                     method.methodType().stringValue()))
        out.append("  Code:")
        bci = 0
        for element in code.elementList():
            if isinstance(element, Instruction):
                text = "    %d: %s" % (bci, str(element.opcode().name()).lower())
                if isinstance(element, Invoke):
                    text += " // Method %s.%s:%s" % (element.owner().asInternalName(),
                                                     element.name().stringValue(),
                                                     element.type().stringValue())
                out.append(text)
                bci += element.sizeInBytes()
        out.append("  LineNumberTable:")
        for attr in code.findAttributes(Attributes.lineNumberTable()):
            for info in attr.lineNumbers():
                out.append("    line %d: %d" % (info.lineNumber(), info.startPc()))
    return out


def main(argv):
    start_jvm()
    for path in sorted(argv[1:]):
        print("\n".join(disassemble(path)))


if __name__ == "__main__":
    main(sys.argv)
