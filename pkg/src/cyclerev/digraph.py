"""Oriented digraphs on vertices ``0..n-1`` and sequential cycle reversal.

Adjacency is stored densely as one Python int bitmask per vertex (bit ``v`` of
``out_rows[u]`` is set iff ``u -> v``).  All values are immutable; every
operation returns a new digraph.
"""

from __future__ import annotations

import heapq
from typing import Iterable, Iterator, Sequence

from .errors import (
    CapExceededError,
    InvalidArcError,
    InvalidCycleError,
    InvalidStepError,
)

__all__ = [
    "Cycle",
    "Digraph",
    "apply_sequence",
    "as_cycle",
    "build",
    "cycle_error",
    "enumerate_simple_cycles",
    "find_cycle",
    "is_acyclic",
    "is_acyclic_set",
    "is_tournament",
    "iter_bits",
    "iter_simple_cycles",
    "reverse_cycle",
    "split_closed_walk",
    "strong_components",
    "topological_order",
]


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of set bits in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Cycle:
    """A simple directed cycle given by its vertex sequence.

    The closing arc from the last vertex back to the first is implicit.  Two
    cycles compare equal when one is a rotation of the other; a reflection is a
    different cycle (it runs the other way).
    """

    __slots__ = ("vertices", "_key")

    def __init__(self, vertices: Iterable[int]):
        vs = tuple(int(v) for v in vertices)
        if len(vs) < 3:
            raise InvalidCycleError(f"cycle needs at least 3 vertices, got {vs}")
        if len(set(vs)) != len(vs):
            raise InvalidCycleError(f"cycle repeats a vertex: {vs}")
        self.vertices = vs
        i = vs.index(min(vs))
        self._key = vs[i:] + vs[:i]

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self) -> Iterator[int]:
        return iter(self.vertices)

    def __getitem__(self, i):
        return self.vertices[i]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Cycle):
            return NotImplemented
        return self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __repr__(self) -> str:
        return f"Cycle({list(self.vertices)})"

    def arcs(self) -> list[tuple[int, int]]:
        vs = self.vertices
        return [(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]

    def edges(self) -> set[frozenset[int]]:
        return {frozenset(a) for a in self.arcs()}

    def reversed(self) -> "Cycle":
        return Cycle(self.vertices[::-1])

    def rotated_to(self, v: int) -> "Cycle":
        i = self.vertices.index(v)
        return Cycle(self.vertices[i:] + self.vertices[:i])

    def canonical(self) -> tuple[int, ...]:
        """The rotation starting at the smallest vertex."""
        return self._key


def as_cycle(c) -> Cycle:
    return c if isinstance(c, Cycle) else Cycle(c)


class Digraph:
    """An oriented simple digraph: no loops, at most one of ``uv``/``vu``."""

    __slots__ = ("n", "out_rows", "in_rows", "_arcs")

    def __init__(self, n: int, arcs: Iterable[Sequence[int]] = ()):
        n = int(n)
        if n < 0:
            raise ValueError(f"vertex count must be non-negative, got {n}")
        out = [0] * n
        inn = [0] * n
        for arc in arcs:
            u, v = (int(x) for x in arc)
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidArcError(f"vertex id out of range for n={n}", (u, v))
            if u == v:
                raise InvalidArcError("loop", (u, v))
            if out[u] >> v & 1:
                raise InvalidArcError("duplicate arc", (u, v))
            if out[v] >> u & 1:
                raise InvalidArcError("anti-parallel pair", (u, v))
            out[u] |= 1 << v
            inn[v] |= 1 << u
        self.n = n
        self.out_rows = tuple(out)
        self.in_rows = tuple(inn)
        self._arcs = None

    @classmethod
    def from_rows(cls, out_rows: Sequence[int]) -> "Digraph":
        """Build from out-neighbour bitmasks without validation (internal fast path)."""
        self = object.__new__(cls)
        n = len(out_rows)
        inn = [0] * n
        for u, row in enumerate(out_rows):
            for v in iter_bits(row):
                inn[v] |= 1 << u
        self.n = n
        self.out_rows = tuple(out_rows)
        self.in_rows = tuple(inn)
        self._arcs = None
        return self

    @property
    def arcs(self) -> tuple[tuple[int, int], ...]:
        """All arcs, sorted lexicographically."""
        if self._arcs is None:
            self._arcs = tuple(
                (u, v) for u in range(self.n) for v in iter_bits(self.out_rows[u])
            )
        return self._arcs

    @property
    def m(self) -> int:
        return sum(row.bit_count() for row in self.out_rows)

    @property
    def vertices(self) -> range:
        return range(self.n)

    def edges(self) -> set[frozenset[int]]:
        return {frozenset(a) for a in self.arcs}

    def has_arc(self, u: int, v: int) -> bool:
        return bool(self.out_rows[u] >> v & 1)

    def out_neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.out_rows[v]))

    def in_neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.in_rows[v]))

    def out_degree(self, v: int) -> int:
        return self.out_rows[v].bit_count()

    def in_degree(self, v: int) -> int:
        return self.in_rows[v].bit_count()

    def out_degrees(self) -> list[int]:
        return [row.bit_count() for row in self.out_rows]

    def in_degrees(self) -> list[int]:
        return [row.bit_count() for row in self.in_rows]

    def score_sequence(self) -> list[int]:
        """Out-degrees sorted ascending."""
        return sorted(self.out_degrees())

    def flip(self, arcs: Iterable[tuple[int, int]]) -> "Digraph":
        """Reverse the given arcs, which must all be present (no checks)."""
        out = list(self.out_rows)
        for u, v in arcs:
            out[u] &= ~(1 << v)
            out[v] |= 1 << u
        return Digraph.from_rows(out)

    def induced(self, vertices: Iterable[int]) -> "Digraph":
        """Induced subdigraph, relabelled ``0..k-1`` in ascending id order."""
        vs = sorted(set(vertices))
        index = {v: i for i, v in enumerate(vs)}
        return Digraph(len(vs), [(index[u], index[v]) for u, v in self.arcs if u in index and v in index])

    def __eq__(self, other) -> bool:
        if not isinstance(other, Digraph):
            return NotImplemented
        return self.n == other.n and self.out_rows == other.out_rows

    def __hash__(self) -> int:
        return hash(self.out_rows)

    def __repr__(self) -> str:
        return f"Digraph({self.n}, {[list(a) for a in self.arcs]})"


def build(n: int, arc_list: Iterable[Sequence[int]]) -> Digraph:
    return Digraph(n, arc_list)


def is_tournament(d: Digraph) -> bool:
    full = (1 << d.n) - 1
    return all(
        (d.out_rows[v] | d.in_rows[v]) == full & ~(1 << v) for v in range(d.n)
    )


def cycle_error(d: Digraph, cycle) -> str | None:
    """Reason why ``cycle`` is not a cycle of ``d``, or None if it is."""
    try:
        c = as_cycle(cycle)
    except InvalidCycleError as exc:
        return str(exc)
    for u, v in c.arcs():
        if not (0 <= u < d.n and 0 <= v < d.n):
            return f"vertex out of range in arc {(u, v)}"
        if not d.has_arc(u, v):
            return f"arc {(u, v)} is not present"
    return None


def reverse_cycle(d: Digraph, cycle) -> Digraph:
    """Flip every arc of ``cycle``; all other arcs are kept."""
    reason = cycle_error(d, cycle)
    if reason is not None:
        raise InvalidCycleError(reason)
    return d.flip(as_cycle(cycle).arcs())


def apply_sequence(d: Digraph, sequence: Iterable) -> Digraph:
    """Reverse the cycles of ``sequence`` one after another.

    Raises InvalidStepError carrying the index of the first cycle that is not a
    cycle of the digraph produced by its predecessors.  ``d`` itself is never
    modified.
    """
    current = d
    for i, cycle in enumerate(sequence):
        reason = cycle_error(current, cycle)
        if reason is not None:
            raise InvalidStepError(i, reason)
        current = current.flip(as_cycle(cycle).arcs())
    return current


def strong_components(d: Digraph) -> list[frozenset[int]]:
    """Strong components in a topological order of the condensation (sources first)."""
    n = d.n
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack: list[int] = []
    comps: list[frozenset[int]] = []
    counter = 0
    for root in range(n):
        if index[root] != -1:
            continue
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True
        work = [(root, iter_bits(d.out_rows[root]))]
        while work:
            v, it = work[-1]
            advanced = False
            for w in it:
                if index[w] == -1:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack[w] = True
                    work.append((w, iter_bits(d.out_rows[w])))
                    advanced = True
                    break
                if on_stack[w]:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                comps.append(frozenset(comp))
    # Tarjan emits sinks first.
    comps.reverse()
    return comps


def _topological_order_of_mask(d: Digraph, mask: int) -> list[int] | None:
    indeg = {v: (d.in_rows[v] & mask).bit_count() for v in iter_bits(mask)}
    heap = [v for v, k in indeg.items() if k == 0]
    heapq.heapify(heap)
    order = []
    while heap:
        v = heapq.heappop(heap)
        order.append(v)
        for w in iter_bits(d.out_rows[v] & mask):
            indeg[w] -= 1
            if indeg[w] == 0:
                heapq.heappush(heap, w)
    return order if len(order) == len(indeg) else None


def topological_order(d: Digraph) -> tuple[int, ...] | None:
    """Lexicographically smallest ordering with every arc pointing forward, or None."""
    order = _topological_order_of_mask(d, (1 << d.n) - 1)
    return None if order is None else tuple(order)


def is_acyclic(d: Digraph) -> bool:
    return topological_order(d) is not None


def is_acyclic_set(d: Digraph, vertices: Iterable[int] | int) -> bool:
    """Whether ``vertices`` (an iterable or a bitmask) induces an acyclic subdigraph."""
    mask = vertices if isinstance(vertices, int) else _mask(vertices)
    remaining = mask
    # Peel off vertices with no in-neighbour left inside the set.
    while remaining:
        sources = 0
        for v in iter_bits(remaining):
            if not d.in_rows[v] & remaining:
                sources |= 1 << v
        if not sources:
            return False
        remaining &= ~sources
    return True


def find_cycle(d: Digraph) -> Cycle | None:
    """Some simple directed cycle of ``d``, or None when ``d`` is acyclic."""
    state = [0] * d.n  # 0 new, 1 on the DFS path, 2 done
    for root in range(d.n):
        if state[root]:
            continue
        path = [root]
        state[root] = 1
        work = [iter_bits(d.out_rows[root])]
        while work:
            for w in work[-1]:
                if state[w] == 1:
                    return Cycle(path[path.index(w):])
                if state[w] == 0:
                    state[w] = 1
                    path.append(w)
                    work.append(iter_bits(d.out_rows[w]))
                    break
            else:
                work.pop()
                state[path.pop()] = 2
    return None


def split_closed_walk(walk: Sequence[int]) -> list[list[int]]:
    """Split a closed walk (closing arc implicit) into simple cycles.

    The pieces partition the walk's arcs; if those arcs are pairwise distinct,
    reversing the pieces one after another reverses exactly the walk.
    """
    stack: list[int] = []
    pos: dict[int, int] = {}
    pieces = []
    for v in list(walk) + list(walk[:1]):
        if v in pos:
            i = pos[v]
            pieces.append(stack[i:])
            for w in stack[i + 1:]:
                del pos[w]
            del stack[i + 1:]
        else:
            pos[v] = len(stack)
            stack.append(v)
    return pieces


def iter_simple_cycles(d: Digraph, max_length: int | None = None) -> Iterator[Cycle]:
    """Every simple cycle exactly once, rotated to start at its smallest vertex.

    Order is deterministic: by start vertex, then lexicographically by the DFS
    over ascending neighbour ids.
    """
    limit = d.n if max_length is None else max_length
    for s in range(d.n):
        allowed = ((1 << d.n) - 1) & ~((1 << (s + 1)) - 1)
        path = [s]
        used = 1 << s
        work = [iter_bits(d.out_rows[s] & (allowed | 1 << s))]
        while work:
            for w in work[-1]:
                if w == s:
                    if len(path) >= 3:
                        yield Cycle(path)
                    continue
                if used >> w & 1 or len(path) >= limit:
                    continue
                path.append(w)
                used |= 1 << w
                work.append(iter_bits(d.out_rows[w] & (allowed | 1 << s)))
                break
            else:
                work.pop()
                used &= ~(1 << path.pop())


def enumerate_simple_cycles(d: Digraph, cap: int, max_length: int | None = None) -> list[Cycle]:
    """All simple cycles (optionally up to ``max_length``); raises if more than ``cap``."""
    out = []
    for c in iter_simple_cycles(d, max_length):
        if len(out) >= cap:
            raise CapExceededError(f"more than {cap} simple cycles")
        out.append(c)
    return out
