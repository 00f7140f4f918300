"""Triangulating cycle reversals in tournaments, and the canonical
decomposition of a reversal sequence into edge-sharing components."""

from __future__ import annotations

from typing import Iterable, Sequence

from .digraph import Cycle, Digraph, apply_sequence, as_cycle, cycle_error, is_tournament
from .errors import InvalidCycleError, NotATournamentError


def _triangles(d: Digraph, vs: list[int]) -> list[Cycle]:
    if len(vs) == 3:
        return [Cycle(vs)]
    v0, v1, v2 = vs[:3]
    rest = [v0] + vs[2:]
    tri = Cycle((v0, v1, v2))
    if d.has_arc(v0, v2):
        # reversing the shorter cycle turns v0v2 around and closes the triangle
        return _triangles(d, rest) + [tri]
    return [tri] + _triangles(d.flip(tri.arcs()), rest)


def triangulate_cycle(d: Digraph, cycle, anchor: int | None = None) -> list[Cycle]:
    """``len(cycle) - 2`` triangles whose reversal equals reversing ``cycle``.

    Every triangle uses ``anchor`` (default: the first vertex) and two
    consecutive vertices of the cycle, so each of its edges contains the
    anchor or is an edge of the cycle.
    """
    if not is_tournament(d):
        raise NotATournamentError("triangulation needs a tournament")
    c = as_cycle(cycle)
    reason = cycle_error(d, c)
    if reason is not None:
        raise InvalidCycleError(reason)
    if anchor is None:
        anchor = c[0]
    if anchor not in c.vertices:
        raise InvalidCycleError(f"anchor {anchor} is not on {c}")
    return _triangles(d, list(c.rotated_to(anchor)))


def triangulate_sequence(d: Digraph, sequence: Sequence) -> list[Cycle]:
    """Replace each cycle by its triangulation at its first vertex."""
    if not is_tournament(d):
        raise NotATournamentError("triangulation needs a tournament")
    apply_sequence(d, sequence)
    out: list[Cycle] = []
    current = d
    for cycle in sequence:
        c = as_cycle(cycle)
        out.extend(_triangles(current, list(c)))
        current = current.flip(c.arcs())
    return out


def triangulate_avoiding(d: Digraph, cycle, forbidden: Iterable[Sequence[int]]) -> list[Cycle] | None:
    """A triangulation none of whose triangles uses a forbidden edge, or None.

    Tries every anchor on the cycle in order.  Experimental: no guarantee that
    one exists even when some other triangulation would avoid the edges.
    """
    bad = {frozenset(e) for e in forbidden}
    c = as_cycle(cycle)
    for anchor in c:
        tris = triangulate_cycle(d, c, anchor)
        if not any(t.edges() & bad for t in tris):
            return tris
    return None


def edge_stabilizer(sequence: Sequence, edge: Sequence[int]) -> list[int]:
    """Indices of the cycles that contain ``edge`` (either direction)."""
    e = frozenset(edge)
    return [i for i, c in enumerate(sequence) if e in as_cycle(c).edges()]


def canonical_components(d: Digraph, sequence: Sequence) -> list[list[int]]:
    """Indices of the cycles of a valid sequence, grouped by shared edges.

    Components are listed by their first index and are ascending inside.
    """
    cycles = [as_cycle(c) for c in sequence]
    apply_sequence(d, cycles)
    parent = list(range(len(cycles)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    owner: dict[frozenset[int], int] = {}
    for i, c in enumerate(cycles):
        for e in c.edges():
            if e in owner:
                a, b = find(owner[e]), find(i)
                if a != b:
                    parent[max(a, b)] = min(a, b)
            else:
                owner[e] = i
    groups: dict[int, list[int]] = {}
    for i in range(len(cycles)):
        groups.setdefault(find(i), []).append(i)
    return [groups[r] for r in sorted(groups)]


def canonical_decomposition(d: Digraph, sequence: Sequence) -> list[list[Cycle]]:
    """Split a valid sequence into components connected by shared edges.

    Distinct components use disjoint edge sets, so they can be applied one
    after another in any order with the same final digraph.
    """
    cycles = [as_cycle(c) for c in sequence]
    return [[cycles[i] for i in comp] for comp in canonical_components(d, cycles)]


def sequences_equivalent(d: Digraph, first: Sequence, second: Sequence) -> bool:
    return apply_sequence(d, first) == apply_sequence(d, second)
