"""Reversing a single arc, a path, or a set of arcs through cycle reversals.

Each widget returns the reversal sequence together with the resulting digraph,
and documents exactly which arcs end up flipped.  In the finite setting some
residue always remains: the last auxiliary path (arc widget) or the closing
back-arc (path widget) stays reversed.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Sequence

from .digraph import Cycle, Digraph, apply_sequence, iter_bits, split_closed_walk
from .errors import InfeasibleArcError, WidgetError

Path = list[int]


def _check_arc(d: Digraph, arc) -> tuple[int, int]:
    u, v = (int(x) for x in arc)
    if not (0 <= u < d.n and 0 <= v < d.n) or not d.has_arc(u, v):
        raise WidgetError(f"arc {(u, v)} is not in the digraph")
    return u, v


def edge_disjoint_return_paths(d: Digraph, arc, limit: int | None = None) -> list[Path]:
    """A maximum family of pairwise edge-disjoint directed paths from ``v`` back to ``u``.

    Unit-capacity max flow (Edmonds-Karp) from ``v`` to ``u`` in ``d`` without
    the arc ``uv``, stopped after ``limit`` augmentations, then split into
    simple paths.
    """
    u, v = _check_arc(d, arc)
    n = d.n
    # residual[a] is a bitmask of heads b with residual capacity on (a, b)
    residual = list(d.out_rows)
    residual[u] &= ~(1 << v)
    flow: set[tuple[int, int]] = set()
    count = 0
    while limit is None or count < limit:
        parent = [-1] * n
        parent[v] = v
        queue = deque([v])
        while queue and parent[u] == -1:
            a = queue.popleft()
            for b in iter_bits(residual[a]):
                if parent[b] == -1:
                    parent[b] = a
                    queue.append(b)
        if parent[u] == -1:
            break
        b = u
        while b != v:
            a = parent[b]
            residual[a] &= ~(1 << b)
            residual[b] |= 1 << a
            if (b, a) in flow:
                flow.discard((b, a))
            else:
                flow.add((a, b))
            b = a
        count += 1

    succ: dict[int, list[int]] = {}
    for a, b in sorted(flow):
        succ.setdefault(a, []).append(b)
    paths = []
    for _ in range(count):
        walk = [v]
        while walk[-1] != u:
            walk.append(succ[walk[-1]].pop(0))
        # drop any loops the flow walk picked up
        path: Path = []
        seen: dict[int, int] = {}
        for x in walk:
            if x in seen:
                for y in path[seen[x] + 1:]:
                    del seen[y]
                del path[seen[x] + 1:]
            else:
                seen[x] = len(path)
                path.append(x)
        paths.append(path)
    return paths


def _path_arcs(p: Sequence[int]) -> list[tuple[int, int]]:
    return [(p[i], p[i + 1]) for i in range(len(p) - 1)]


def _check_return_paths(d: Digraph, u: int, v: int, paths: Sequence[Sequence[int]]) -> None:
    if not paths:
        raise WidgetError("at least one return path is required")
    used: dict[frozenset[int], int] = {}
    uv = frozenset((u, v))
    for i, p in enumerate(paths):
        p = list(p)
        if len(p) < 3 or p[0] != v or p[-1] != u:
            raise WidgetError(f"path {p} must run from {v} to {u} through at least one vertex", i)
        if len(set(p)) != len(p):
            raise WidgetError(f"path {p} repeats a vertex", i)
        for a, b in _path_arcs(p):
            if not (0 <= a < d.n and 0 <= b < d.n) or not d.has_arc(a, b):
                raise WidgetError(f"arc {(a, b)} of path is not in the digraph", i)
            e = frozenset((a, b))
            if e == uv:
                raise WidgetError(f"path uses the edge {{{u}, {v}}}", i)
            if e in used:
                raise WidgetError(f"path shares edge {sorted(e)} with path {used[e]}", i)
            used[e] = i


def reverse_arc_widget(d: Digraph, arc, paths: Sequence[Sequence[int]]) -> tuple[list[Cycle], Digraph]:
    """Reverse ``uv`` using return paths ``P_0..P_{k-1}`` from ``v`` to ``u``.

    First the cycle ``u v (P_0)``, then for each next path the closed walk
    ``reversed(P_i)`` followed by ``P_{i+1}``.  When two consecutive paths share
    an interior vertex that walk is not simple and is reversed as its pieces
    (arc-disjoint simple cycles), so the sequence can be longer than ``k``.

    Afterwards ``uv`` and the arcs of ``P_{k-1}`` are reversed and everything
    else is as in ``d``.
    """
    u, v = _check_arc(d, arc)
    paths = [list(p) for p in paths]
    _check_return_paths(d, u, v, paths)
    seq = [Cycle([u] + paths[0][:-1])]
    for prev, nxt in zip(paths, paths[1:]):
        walk = prev[::-1] + nxt[1:-1]
        seq.extend(Cycle(piece) for piece in split_closed_walk(walk))
    return seq, apply_sequence(d, seq)


def reverse_path_widget(
    d: Digraph, path: Sequence[int], back: Sequence[int]
) -> tuple[list[Cycle], Digraph]:
    """Reverse the path ``v_0 .. v_m`` using back-arcs ``v_{n_i} -> v_0``.

    ``back`` lists ``n_0 < .. < n_j`` and must end at ``m``.  The cycles are
    ``v_0 .. v_{n_0}`` and then ``v_0 v_{n_i} v_{n_i + 1} .. v_{n_{i+1}}``.
    Afterwards every path arc and the back-arc from ``v_m`` are reversed; the
    other back-arcs were flipped twice and are unchanged.
    """
    path = [int(x) for x in path]
    back = [int(x) for x in back]
    m = len(path) - 1
    if len(set(path)) != len(path):
        raise WidgetError(f"path {path} repeats a vertex")
    for i, (a, b) in enumerate(_path_arcs(path)):
        if not (0 <= a < d.n and 0 <= b < d.n) or not d.has_arc(a, b):
            raise WidgetError(f"path arc {(a, b)} is not in the digraph", i)
    if not back:
        raise WidgetError("back-arc list is empty")
    if any(b <= a for a, b in zip(back, back[1:])):
        raise WidgetError(f"back-arc indices must increase: {back}")
    if back[-1] != m:
        raise WidgetError(f"last back-arc index must be {m}, got {back[-1]}")
    if back[0] < 2:
        raise WidgetError(f"first back-arc index must be at least 2, got {back[0]}")
    v0 = path[0]
    for i, k in enumerate(back):
        if not d.has_arc(path[k], v0):
            raise WidgetError(f"back-arc {(path[k], v0)} is not in the digraph", i)
    seq = [Cycle(path[: back[0] + 1])]
    for a, b in zip(back, back[1:]):
        seq.append(Cycle([v0] + path[a : b + 1]))
    return seq, apply_sequence(d, seq)


@dataclass
class ArcSetResult:
    sequence: list[Cycle]
    digraph: Digraph
    # ledger[i] is the return path reversed as a side effect of reversing arcs[i]
    ledger: list[Path]


def _shortest_path_avoiding(d: Digraph, s: int, t: int, banned: set[frozenset[int]]) -> Path | None:
    parent = {s: s}
    queue = deque([s])
    while queue:
        a = queue.popleft()
        if a == t:
            break
        for b in iter_bits(d.out_rows[a]):
            if b not in parent and frozenset((a, b)) not in banned:
                parent[b] = a
                queue.append(b)
    if t not in parent:
        return None
    p = [t]
    while p[-1] != s:
        p.append(parent[p[-1]])
    return p[::-1]


def reverse_arc_set(d: Digraph, arcs: Sequence) -> ArcSetResult:
    """Reverse every arc of ``arcs``, each through its own return path.

    Arcs are handled greedily in order.  Each gets a shortest return path that
    avoids every edge used so far and every edge of ``arcs``; the paths end up
    reversed too and are recorded in the ledger.
    """
    arcs = [_check_arc(d, a) for a in arcs]
    if len(set(arcs)) != len(arcs):
        raise WidgetError("arcs must be pairwise distinct")
    banned = {frozenset(a) for a in arcs}
    seq: list[Cycle] = []
    ledger: list[Path] = []
    for i, (u, v) in enumerate(arcs):
        p = _shortest_path_avoiding(d, v, u, banned)
        if p is None:
            raise InfeasibleArcError(f"no edge-disjoint return path for arc {(u, v)}", i)
        banned.update(frozenset(a) for a in _path_arcs(p))
        seq.append(Cycle([u] + p[:-1]))
        ledger.append(p)
    # untouched edges are the same in d and in every intermediate digraph
    return ArcSetResult(seq, apply_sequence(d, seq), ledger)
