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
"""Writes the toy system's PIT report from mutations.tsv and the oracle.

Each row names a mutation by method, line and the ordinal of its target
among the line's instructions of the mutator's opcode family. The instruction
index PIT would report is looked up in javap_oracle.txt, so the report agrees
with the committed class files by construction. Also writes
expected_outcomes.tsv: mutant id, then the expected mutated line or
!<FailureCode>.

Usage: make_report.py TOY_DIR
"""

import collections
import os
import re
import sys
from xml.sax.saxutils import escape

PREFIX = "org.pitest.mutationtest.engine.gregor.mutators."
ORDER = ["iflt", "ifge", "ifgt", "ifle", "if_icmplt", "if_icmpge", "if_icmpgt", "if_icmple"]
EQUAL = ["ifeq", "ifne", "if_icmpeq", "if_icmpne", "if_acmpeq", "if_acmpne", "ifnull",
         "ifnonnull"]
INVOKES = ["invokevirtual", "invokespecial", "invokestatic", "invokeinterface"]
MATH_TYPES = {"integer": "i", "long": "l", "float": "f", "double": "d"}
MATH_OPS = {"addition": "add", "subtraction": "sub", "multiplication": "mul",
            "division": "div", "modulus": "rem"}
BITWISE = {"Replaced bitwise AND": "and", "Replaced bitwise OR": "or", "Replaced XOR": "xor",
           "Replaced Shift Left": "shl", "Replaced Shift Right": "shr",
           "Replaced Unsigned Shift Right": "ushr"}


def family(mutator, description):
    """Opcode mnemonics a mutation can target, plus an invoke name filter."""
    short = mutator.split(".")[-1]
    if short == "MathMutator":
        m = re.match(r"Replaced (\w+) (\w+) with", description)
        if m and m.group(1) in MATH_TYPES:
            return [MATH_TYPES[m.group(1)] + MATH_OPS[m.group(2)]], None
        for prefix, op in sorted(BITWISE.items(), key=lambda kv: -len(kv[0])):
            if description.startswith(prefix):
                return ["i" + op, "l" + op], None
        raise ValueError(description)
    if short == "ConditionalsBoundaryMutator" or short.startswith("RemoveConditionalMutator_ORDER"):
        return ORDER, None
    if short.startswith("RemoveConditionalMutator_EQUAL"):
        return EQUAL, None
    if short == "IncrementsMutator":
        return ["iinc", "iinc_w"], None
    if short == "InvertNegsMutator":
        return ["ineg", "lneg", "fneg", "dneg"], None
    if short == "VoidMethodCallMutator":
        return INVOKES, description.split("::")[-1]
    if short in ("NullReturnValsMutator", "EmptyObjectReturnValsMutator"):
        return ["areturn"], None
    if short in ("BooleanTrueReturnValsMutator", "BooleanFalseReturnValsMutator"):
        return ["ireturn", "areturn"], None
    if short == "PrimitiveReturnsMutator":
        return ["ireturn", "lreturn", "freturn", "dreturn"], None
    if short in ("SwitchMutator", "ExperimentalSwitchMutator"):
        return ["tableswitch", "lookupswitch"], None
    raise ValueError(mutator)


def read_oracle(path):
    """{(class, method): [(descriptor, [(offset, mnemonic, member)], [(pc, line)])]}"""
    methods = collections.defaultdict(list)
    current = None
    mode = None
    for raw in open(path):
        line = raw.rstrip("\n")
        if line.startswith("class "):
            cls = line[6:]
        elif line.startswith("method "):
            name, desc = line[7:].split(" ")
            current = (desc, [], [])
            methods[(cls, name)].append(current)
        elif line.strip() == "Code:":
            mode = "code"
        elif line.strip() == "LineNumberTable:":
            mode = "lines"
        elif mode == "code":
            m = re.match(r"\s*(\d+): (\S+)(?: // Method \S+?\.([^.:]+):)?", line)
            current[1].append((int(m.group(1)), m.group(2), m.group(3)))
        elif mode == "lines":
            m = re.match(r"\s*line (\d+): (\d+)", line)
            current[2].append((int(m.group(2)), int(m.group(1))))
    return methods


def line_of(table, offset):
    best = None
    for pc, line in sorted(table):
        if pc <= offset:
            best = line
    return best


def main(toy):
    methods = read_oracle(os.path.join(toy, "javap_oracle.txt"))
    rows = []
    for raw in open(os.path.join(toy, "mutations.tsv")):
        if raw.startswith("#") or not raw.strip():
            continue
        cls, method, line, mutator, k, status, expected, description = raw.rstrip("\n").split("\t")
        rows.append((cls, method, int(line), mutator, int(k), status,
                     expected.replace("\\t", "\t"), description))

    xml = ["<?xml version=\"1.0\" encoding=\"UTF-8\"?>", "<mutations partial=\"false\">"]
    expected_rows = []
    seen_ids = collections.Counter()
    for n, (cls, method, line, mutator, k, status, expected, description) in enumerate(rows):
        fqcn = "org.example.toy." + cls
        mutator = PREFIX + mutator
        ops, member = family(mutator, description)
        found = []
        for desc, insns, table in methods[(fqcn, method)]:
            for index, (offset, mnemonic, callee) in enumerate(insns):
                if (mnemonic in ops and line_of(table, offset) == line and
                        (member is None or callee == member)):
                    found.append((desc, index))
        if k >= len(found):
            sys.exit("row %d: only %d family instructions on %s.%s line %d" %
                     (n + 1, len(found), cls, method, line))
        descriptor, index = found[k]
        short = mutator.split(".")[-1]
        mutant_id = "%s:%d:%s:%d" % (fqcn, line, short, index)
        seen_ids[mutant_id] += 1
        if seen_ids[mutant_id] > 1:
            mutant_id += "#%d" % seen_ids[mutant_id]
        source_file = cls.split("$")[0] + ".java"
        detected = "true" if status in ("KILLED", "TIMED_OUT") else "false"
        killing = "org.example.toy.%sTest.test%s(org.example.toy.%sTest)" % (
            cls.split("$")[0], method[0].upper() + method[1:], cls.split("$")[0])
        # Older PIT releases wrote <index>/<block>; newer ones wrap them.
        if n % 5 == 4:
            where = "<index>%d</index><block>%d</block>" % (index, n % 3)
        else:
            where = ("<indexes><index>%d</index></indexes><blocks><block>%d</block></blocks>"
                     % (index, n % 3))
        xml.append(
            "<mutation detected='%s' status='%s' numberOfTestsRun='%d'>"
            "<sourceFile>%s</sourceFile><mutatedClass>%s</mutatedClass>"
            "<mutatedMethod>%s</mutatedMethod><methodDescription>%s</methodDescription>"
            "<lineNumber>%d</lineNumber><mutator>%s</mutator>%s"
            "<killingTest>%s</killingTest><description>%s</description></mutation>"
            % (detected, status, 0 if status == "NO_COVERAGE" else 1 + n % 4,
               source_file, fqcn, escape(method), descriptor, line, mutator, where,
               escape(killing) if status == "KILLED" else "", escape(description)))
        expected_rows.append("%s\t%s" % (mutant_id, expected.replace("\t", "\\t")))
    xml.append("</mutations>")

    report_dir = os.path.join(toy, "target", "pit-reports", "202610161200")
    os.makedirs(report_dir, exist_ok=True)
    with open(os.path.join(report_dir, "mutations.xml"), "w") as f:
        f.write("\n".join(xml) + "\n")
    with open(os.path.join(toy, "expected_outcomes.tsv"), "w") as f:
        f.write("# mutant id<TAB>expected mutated line (\\t = tab) or !<FailureCode>\n")
        f.write("\n".join(expected_rows) + "\n")


if __name__ == "__main__":
    main(sys.argv[1])
