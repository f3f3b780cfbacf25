#!/usr/bin/env python3
"""Writes tests/fixtures/long_functions: 20 C++/CUDA files whose routines are longer than the
2000-character text window, plus labels.json with routine spans and census counts."""

import json
import random
from pathlib import Path

OUT = Path(__file__).resolve().parent / "long_functions"
WINDOW = 2000

rng = random.Random(20240611)

TYPES = ["double", "float", "int", "long"]
NAMES = ["energy", "cell", "hit", "layer", "eta", "phi", "radius", "weight", "sample", "bin"]


def statement(depth):
    a, b, c = rng.sample(NAMES, 3)
    kind = rng.randrange(7)
    pad = "  " * depth
    if kind == 0:
        return [f"{pad}const {rng.choice(TYPES)} {a}_{depth}{rng.randrange(100)} = {b}[i] * {rng.uniform(0.1, 9.9):.4f} + {c}[i];"]
    if kind == 1:
        return [f"{pad}// scale the {a} contribution by the {b} response"]
    if kind == 2:
        return [f"{pad}acc += std::sqrt({a}[i] * {a}[i] + {b}[i] * {b}[i]) / (1.0 + {c}[i]);"]
    if kind == 3 and depth < 4:
        body = [line for _ in range(rng.randint(2, 4)) for line in statement(depth + 1)]
        return [f"{pad}if ({a}[i] > {rng.uniform(0, 5):.3f}) {{"] + body + [f"{pad}}}"]
    if kind == 4 and depth < 4:
        body = [line for _ in range(rng.randint(2, 3)) for line in statement(depth + 1)]
        return [f"{pad}for (int k = 0; k < {rng.randint(2, 64)}; ++k) {{"] + body + [f"{pad}}}"]
    if kind == 5:
        return [f'{pad}log_line("{a} {{ {b} }} step", {c}[i]);']
    return [f"{pad}{a}[i] = std::min({b}[i], {c}[i]) - acc * {rng.uniform(0.01, 1.0):.5f};"]


def function(name, target_len, cuda):
    qual = "__global__ void" if cuda else "double"
    params = ", ".join(f"double* {n}" for n in NAMES) + ", int n"
    head = f"{qual} {name}({params}) {{"
    lines = [head, "  double acc = 0.0;", "  for (int i = 0; i < n; ++i) {"]
    while sum(len(l) + 1 for l in lines) < target_len:
        lines += statement(2)
    lines += ["  }"]
    if not cuda:
        lines += ["  return acc;"]
    else:
        lines += ["  (void)acc;"]
    lines += ["}"]
    return "\n".join(lines)


def balanced(text):
    stack, pairs, i = [], {")": "(", "]": "[", "}": "{"}, 0
    while i < len(text):
        ch = text[i]
        if ch == '"':
            i += 1
            while text[i] != '"':
                i += 2 if text[i] == "\\" else 1
        elif text.startswith("//", i):
            i = text.find("\n", i)
            if i < 0:
                break
        elif ch in "([{":
            stack.append(ch)
        elif ch in ")]}":
            if not stack or stack.pop() != pairs[ch]:
                return False
        i += 1
    return not stack


def census(spans, windows, text):
    partial = complete = 0
    for b, e in windows:
        cuts = any(rb < b < re or rb < e < re for rb, re in spans)
        holds = any(b <= rb and re <= e for rb, re in spans)
        if cuts:
            partial += 1
        elif holds and balanced(text[b:e]):
            complete += 1
    return partial, complete


def main():
    OUT.mkdir(exist_ok=True)
    labels = {"window": WINDOW, "files": {}}
    for f in range(20):
        cuda = f % 3 == 0
        ext = ".cu" if cuda else ".cpp"
        path = f"module_{f:02d}{ext}"
        parts = ["#include <algorithm>", "#include <cmath>", "", "void log_line(const char* what, double v);", ""]
        text = "\n".join(parts) + "\n"
        spans = []
        for r in range(rng.randint(1, 2)):
            text += f"// routine {r} of {path}\n"
            body = function(f"kernel_{f:02d}_{r}", rng.randint(2100, 3800), cuda)
            spans.append([len(text), len(text) + len(body)])
            text += body + "\n\n"
        (OUT / path).write_text(text)
        windows = [(b, min(len(text), b + WINDOW)) for b in range(0, len(text), WINDOW)]
        fixed = census(spans, windows, text)
        labels["files"][path] = {
            "routines": spans,
            "fixed_window": {"partial": fixed[0], "complete": fixed[1]},
            "cst": {"partial": 0, "complete": len(spans)},
        }
    (OUT / "labels.json").write_text(json.dumps(labels, indent=2) + "\n")


if __name__ == "__main__":
    main()
