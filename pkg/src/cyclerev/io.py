"""Reading and writing digraphs, reversal sequences, bicovers and traces.

Formats:

* digraph JSON ``{"n": 3, "arcs": [[0, 1], [1, 2], [2, 0]]}``, arcs sorted
* edge list: a line ``n m`` followed by ``m`` lines ``u v``
* DOT: ``digraph D {`` with bare integer vertices and one ``u -> v;`` per arc
* sequence JSON ``{"cycles": [[0, 1, 2], ...]}`` in application order
* bicover JSON ``{"part_one": [...], "part_two": [...]}``, both sorted
* trace CSV with columns ``step,cycle_length,backward_before,backward_after,sigma_before,sigma_after``
"""

from __future__ import annotations

import csv
import io
import json
import re
from fractions import Fraction
from typing import Iterable, Sequence

from .analysis import Bicover
from .digraph import Cycle, Digraph
from .errors import CycleRevError

TRACE_COLUMNS = (
    "step",
    "cycle_length",
    "backward_before",
    "backward_after",
    "sigma_before",
    "sigma_after",
)


class FormatError(CycleRevError):
    """Malformed input; ``line`` is 1-based when known."""

    def __init__(self, message: str, line: int | None = None, source: str | None = None):
        where = ""
        if source:
            where += f"{source}:"
        if line is not None:
            where += f"{line}:"
        super().__init__(f"{where} {message}" if where else message)
        self.line = line


def _dumps(obj) -> str:
    return json.dumps(obj) + "\n"


def _loads(text: str, source: str | None):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc.msg}", exc.lineno, source) from None


def _int(value, field: str, source: str | None, line: int | None = None) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise FormatError(f"field {field!r} must be an integer, got {value!r}", line, source)
    return value


def digraph_to_json(d: Digraph) -> str:
    return _dumps({"n": d.n, "arcs": [list(a) for a in d.arcs]})


def digraph_from_json(text: str, source: str | None = None) -> Digraph:
    data = _loads(text, source)
    if not isinstance(data, dict) or "n" not in data or "arcs" not in data:
        raise FormatError('digraph JSON needs keys "n" and "arcs"', source=source)
    n = _int(data["n"], "n", source)
    arcs = data["arcs"]
    if not isinstance(arcs, list):
        raise FormatError('field "arcs" must be a list', source=source)
    pairs = []
    for i, a in enumerate(arcs):
        if not isinstance(a, list) or len(a) != 2:
            raise FormatError(f"arcs[{i}] must be a pair, got {a!r}", source=source)
        pairs.append((_int(a[0], f"arcs[{i}][0]", source), _int(a[1], f"arcs[{i}][1]", source)))
    try:
        return Digraph(n, pairs)
    except (CycleRevError, ValueError) as exc:
        raise FormatError(str(exc), source=source) from None


def digraph_to_edgelist(d: Digraph) -> str:
    lines = [f"{d.n} {d.m}"] + [f"{u} {v}" for u, v in d.arcs]
    return "\n".join(lines) + "\n"


def digraph_from_edgelist(text: str, source: str | None = None) -> Digraph:
    lines = text.splitlines()
    while lines and not lines[-1].strip():
        lines.pop()
    if not lines:
        raise FormatError("empty edge list", 1, source)

    def ints(lineno: int, expected: int) -> list[int]:
        parts = lines[lineno - 1].split()
        if len(parts) != expected:
            raise FormatError(f"expected {expected} integers, got {len(parts)}", lineno, source)
        try:
            return [int(p) for p in parts]
        except ValueError:
            raise FormatError(f"not an integer in {lines[lineno - 1]!r}", lineno, source) from None

    n, m = ints(1, 2)
    if len(lines) - 1 != m:
        raise FormatError(f"header announces {m} arcs, found {len(lines) - 1} lines", 1, source)
    d_arcs = []
    for lineno in range(2, m + 2):
        d_arcs.append(tuple(ints(lineno, 2)))
    try:
        return Digraph(n, d_arcs)
    except (CycleRevError, ValueError) as exc:
        line = None
        arc = getattr(exc, "arc", None)
        if arc in d_arcs:
            line = d_arcs.index(arc) + 2
        raise FormatError(str(exc), line, source) from None


def digraph_to_dot(d: Digraph) -> str:
    lines = ["digraph D {"]
    lines += [f"  {v};" for v in range(d.n)]
    lines += [f"  {u} -> {v};" for u, v in d.arcs]
    lines.append("}")
    return "\n".join(lines) + "\n"


_DOT_NODE = re.compile(r"^\s*(\d+)\s*;\s*$")
_DOT_ARC = re.compile(r"^\s*(\d+)\s*->\s*(\d+)\s*;\s*$")


def digraph_from_dot(text: str, source: str | None = None) -> Digraph:
    """Read the DOT subset written by :func:`digraph_to_dot`."""
    lines = text.splitlines()
    if not lines or lines[0].strip() != "digraph D {":
        raise FormatError('expected "digraph D {"', 1, source)
    n = 0
    arcs = []
    closed = False
    for lineno, line in enumerate(lines[1:], start=2):
        if closed:
            if line.strip():
                raise FormatError("content after closing brace", lineno, source)
            continue
        if line.strip() == "}":
            closed = True
        elif m := _DOT_ARC.match(line):
            arcs.append((int(m[1]), int(m[2])))
        elif m := _DOT_NODE.match(line):
            n = max(n, int(m[1]) + 1)
        elif line.strip():
            raise FormatError(f"unrecognised DOT line {line.strip()!r}", lineno, source)
    if not closed:
        raise FormatError("missing closing brace", len(lines), source)
    try:
        return Digraph(n, arcs)
    except (CycleRevError, ValueError) as exc:
        raise FormatError(str(exc), source=source) from None


WRITERS = {"json": digraph_to_json, "edgelist": digraph_to_edgelist, "dot": digraph_to_dot}
EXTENSIONS = {"json": "json", "edgelist": "txt", "dot": "dot"}


def format_digraph(d: Digraph, fmt: str = "json") -> str:
    return WRITERS[fmt](d)


def parse_digraph(text: str, source: str | None = None) -> Digraph:
    """Detect the format from the first non-blank character and parse."""
    head = text.lstrip()
    if head.startswith("{"):
        return digraph_from_json(text, source)
    if head.startswith("digraph"):
        return digraph_from_dot(text, source)
    return digraph_from_edgelist(text, source)


def sequence_to_json(sequence: Iterable) -> str:
    return _dumps({"cycles": [list(c) for c in sequence]})


def sequence_from_json(text: str, source: str | None = None) -> list[list[int]]:
    """Vertex lists as written; validity is checked against a digraph later."""
    data = _loads(text, source)
    if not isinstance(data, dict) or not isinstance(data.get("cycles"), list):
        raise FormatError('sequence JSON needs a list under "cycles"', source=source)
    out = []
    for i, c in enumerate(data["cycles"]):
        if not isinstance(c, list):
            raise FormatError(f"cycles[{i}] must be a list", source=source)
        out.append([_int(v, f"cycles[{i}]", source) for v in c])
    return out


def bicover_to_json(b: Bicover) -> str:
    return _dumps({"part_one": sorted(b.part_one), "part_two": sorted(b.part_two)})


def bicover_from_json(text: str, source: str | None = None) -> Bicover:
    data = _loads(text, source)
    if not isinstance(data, dict) or "part_one" not in data or "part_two" not in data:
        raise FormatError('bicover JSON needs keys "part_one" and "part_two"', source=source)
    parts = []
    for key in ("part_one", "part_two"):
        if not isinstance(data[key], list):
            raise FormatError(f"field {key!r} must be a list", source=source)
        parts.append([_int(v, key, source) for v in data[key]])
    return Bicover(*parts)


def format_fraction(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def trace_to_csv(trace: Sequence) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(TRACE_COLUMNS)
    for t in trace:
        writer.writerow(
            [
                t.step,
                t.cycle_length,
                t.backward_before,
                t.backward_after,
                format_fraction(t.sigma_before),
                format_fraction(t.sigma_after),
            ]
        )
    return buf.getvalue()


def trace_from_csv(text: str, source: str | None = None) -> list[dict]:
    reader = csv.reader(io.StringIO(text))
    rows = list(reader)
    if not rows or tuple(rows[0]) != TRACE_COLUMNS:
        raise FormatError(f"trace header must be {','.join(TRACE_COLUMNS)}", 1, source)
    out = []
    for lineno, row in enumerate(rows[1:], start=2):
        if len(row) != len(TRACE_COLUMNS):
            raise FormatError(f"expected {len(TRACE_COLUMNS)} fields", lineno, source)
        try:
            rec = {k: int(v) for k, v in zip(TRACE_COLUMNS[:4], row[:4])}
            rec["sigma_before"] = Fraction(row[4])
            rec["sigma_after"] = Fraction(row[5])
        except ValueError as exc:
            raise FormatError(str(exc), lineno, source) from None
        out.append(rec)
    return out
