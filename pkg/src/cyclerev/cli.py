"""Command-line interface: ``cyclerev <command> ...``.

Exit status is 0 on success, 1 when ``verify`` finds a violated invariant and
2 on malformed input or bad arguments.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

from . import generators
from .analysis import (
    Embedding,
    dichromatic_number,
    digirth,
    validate_bicover,
)
from .digraph import Digraph, apply_sequence, is_tournament, strong_components
from .errors import CycleRevError, InvalidStepError
from .io import (
    EXTENSIONS,
    FormatError,
    bicover_from_json,
    bicover_to_json,
    format_digraph,
    parse_digraph,
    sequence_from_json,
    sequence_to_json,
    trace_to_csv,
)
from .reduction import bicover_tournament, charbit_reduce, crs_exact, transform_same_score
from .structure import canonical_components, triangulate_sequence


class InputError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text(encoding="ascii")
    except (OSError, UnicodeDecodeError) as exc:
        raise InputError(f"{path}: {exc}") from None


def _digraph(path: str) -> Digraph:
    return parse_digraph(_read(path), "<stdin>" if path == "-" else path)


def _sequence(path: str) -> list[list[int]]:
    return sequence_from_json(_read(path), path)


def _emit(text: str, output: str | None) -> None:
    if output is None:
        sys.stdout.write(text)
    else:
        Path(output).write_text(text, encoding="ascii")


def _int_list(text: str, what: str) -> list[int]:
    if not text.strip():
        return []
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise InputError(f"{what} must be a comma-separated list of integers: {text!r}") from None


def cmd_gen(args) -> int:
    kind, params = args.kind, args.params

    def param(i: int, name: str, cast=int):
        if len(params) <= i:
            raise InputError(f"gen {kind} needs parameter <{name}>")
        try:
            return cast(params[i])
        except ValueError:
            raise InputError(f"parameter <{name}> is not a number: {params[i]!r}") from None

    if kind == "transitive":
        d = generators.transitive(param(0, "n"))
    elif kind == "random":
        d = generators.random_tournament(param(0, "n"), args.seed)
    elif kind == "random-digraph":
        density = param(1, "density", float) if len(params) > 1 else 0.5
        d = generators.random_digraph(param(0, "n"), args.seed, density)
    elif kind == "paley":
        d = generators.paley(param(0, "p"))
    elif kind == "cycle":
        n = param(0, "n")
        d = Digraph(n, [(i, (i + 1) % n) for i in range(n)])
    elif kind == "iterated":
        c3 = Digraph(3, [(0, 1), (1, 2), (2, 0)])
        d = generators.iterated_construction(c3, param(0, "copies"))
    else:  # pragma: no cover - argparse restricts choices
        raise InputError(f"unknown kind {kind}")
    _emit(format_digraph(d, args.format), args.output)
    return 0


def cmd_analyze(args) -> int:
    d = _digraph(args.input)
    g = digirth(d)
    report = {
        "n": d.n,
        "m": d.m,
        "tournament": is_tournament(d),
        "strong_components": [sorted(c) for c in strong_components(d)],
        "digirth": "inf" if g == math.inf else g,
        "dichromatic_number": dichromatic_number(d),
        "score_sequence": d.score_sequence(),
    }
    _emit(json.dumps(report) + "\n", args.output)
    return 0


def _write_parts(prefix: str | None, parts: dict[str, tuple[str, str]]) -> None:
    """Write ``{name: (suffix, text)}`` as ``prefix.suffix`` files, or bundle to stdout."""
    if prefix is None:
        bundle = {}
        for name, (suffix, text) in parts.items():
            bundle[name] = json.loads(text) if suffix.endswith("json") else text
        sys.stdout.write(json.dumps(bundle) + "\n")
        return
    for suffix, text in parts.values():
        Path(f"{prefix}.{suffix}").write_text(text, encoding="ascii")


def cmd_reduce(args) -> int:
    d = _digraph(args.input)
    emb = None
    if args.embedding is not None:
        try:
            emb = Embedding(tuple(_int_list(args.embedding, "--embedding")))
        except ValueError as exc:
            raise InputError(str(exc)) from None
        if emb.n != d.n:
            raise InputError(f"--embedding has {emb.n} slots, digraph has {d.n} vertices")
    result = charbit_reduce(d, emb, attach_bicover=False)
    fmt = args.format
    parts = {
        "sequence": ("sequence.json", sequence_to_json(result.sequence)),
        "digraph": (f"digraph.{EXTENSIONS[fmt]}", format_digraph(result.digraph, fmt)),
        "trace": ("trace.csv", trace_to_csv(result.trace)),
    }
    _write_parts(args.output, parts)
    return 0


def cmd_bicover(args) -> int:
    d = _digraph(args.input)
    w0 = _int_list(args.w0, "--w0") if args.w0 else []
    result = bicover_tournament(d, w0)
    _write_parts(
        args.output,
        {
            "sequence": ("sequence.json", sequence_to_json(result.sequence)),
            "bicover": ("bicover.json", bicover_to_json(result.bicover)),
        },
    )
    return 0


def cmd_crs(args) -> int:
    d = _digraph(args.input)
    value = crs_exact(d, args.budget, args.moves)
    _emit(("budget exhausted" if value is None else str(value)) + "\n", args.output)
    return 0


def cmd_triangulate(args) -> int:
    d = _digraph(args.input)
    seq = _sequence(args.sequence)
    _emit(sequence_to_json(triangulate_sequence(d, seq)), args.output)
    return 0


def cmd_decompose(args) -> int:
    d = _digraph(args.input)
    seq = _sequence(args.sequence)
    comps = canonical_components(d, seq)
    listing = {
        "components": [{"indices": comp, "cycles": [seq[i] for i in comp]} for comp in comps]
    }
    _emit(json.dumps(listing) + "\n", args.output)
    return 0


def cmd_transform(args) -> int:
    a = _digraph(args.input_a)
    b = _digraph(args.input_b)
    _emit(sequence_to_json(transform_same_score(a, b)), args.output)
    return 0


def cmd_export(args) -> int:
    _emit(format_digraph(_digraph(args.input), args.format), args.output)
    return 0


def cmd_verify(args) -> int:
    d = _digraph(args.input)
    lines = []
    ok = True

    def record(name: str, passed: bool, detail: str = "") -> None:
        nonlocal ok
        ok = ok and passed
        lines.append(f"{'PASS' if passed else 'FAIL'} {name}" + (f": {detail}" if detail else ""))

    final = d
    if args.sequence is not None:
        seq = _sequence(args.sequence)
        try:
            final = apply_sequence(d, seq)
        except InvalidStepError as exc:
            record("sequence_valid", False, str(exc))
            final = None
        else:
            record("sequence_valid", True, f"{len(seq)} cycles")
            record("degrees_preserved", final.out_degrees() == d.out_degrees()
                   and final.in_degrees() == d.in_degrees())
            record("strong_components_preserved",
                   set(strong_components(final)) == set(strong_components(d)))
            record("arc_count_preserved", final.m == d.m)
    if args.bicover is not None:
        b = bicover_from_json(_read(args.bicover), args.bicover)
        if final is None:
            record("bicover_valid", False, "sequence invalid")
        else:
            record("bicover_valid", validate_bicover(final, b))
    if not lines:
        record("digraph_valid", True, f"n={d.n} m={d.m}")
    _emit("\n".join(lines) + "\n", args.output)
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cyclerev", description="Sequential cycle reversal on digraphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text, inputs=("input",)):
        p = sub.add_parser(name, help=help_text)
        for inp in inputs:
            p.add_argument(inp, nargs="?" if inp == "input" else None, default="-" if inp == "input" else None)
        p.add_argument("--output", help="output path (prefix for multi-file commands)")
        p.set_defaults(func=func)
        return p

    p = add("gen", cmd_gen, "generate a digraph", inputs=())
    p.add_argument("kind", choices=["transitive", "random", "random-digraph", "paley", "cycle", "iterated"])
    p.add_argument("params", nargs="*")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=list(EXTENSIONS), default="json")

    add("analyze", cmd_analyze, "report basic invariants")

    p = add("reduce", cmd_reduce, "reverse bad cycles until all are good")
    p.add_argument("--embedding", help="comma-separated slot of each vertex")
    p.add_argument("--format", choices=list(EXTENSIONS), default="json")

    p = add("bicover", cmd_bicover, "tournament bicover by cycle reversals")
    p.add_argument("--w0", help="comma-separated acyclic starting set")

    p = add("crs", cmd_crs, "minimum reversals to dichromatic number <= 2")
    p.add_argument("--budget", type=int, default=3)
    p.add_argument("--moves", choices=["all", "triangles"], default="all")

    p = add("triangulate", cmd_triangulate, "rewrite a sequence with 3-cycles", inputs=("input", "sequence"))
    p = add("decompose", cmd_decompose, "canonical decomposition of a sequence", inputs=("input", "sequence"))
    p = add("transform", cmd_transform, "sequence between equal-score tournaments", inputs=("input_a", "input_b"))

    p = add("verify", cmd_verify, "check a sequence and/or bicover")
    p.add_argument("--sequence")
    p.add_argument("--bicover")

    p = add("export", cmd_export, "convert a digraph between formats")
    p.add_argument("--format", choices=list(EXTENSIONS), default="json")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InputError, FormatError, CycleRevError, ValueError) as exc:
        print(f"cyclerev {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
