"""Circular embeddings, arc lengths and weights, bad-cycle search, and exact
dichromatic number / two-colouring by backtracking.

An embedding places the vertex in slot ``i`` at position ``i/n`` on a circle of
perimeter 1.  The length of an arc is the clockwise distance from tail to head.
An arc is *forward* when its tail occupies a smaller slot than its head; a
cycle is *good* when it has at least as many forward as backward arcs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .digraph import (
    Cycle,
    Digraph,
    as_cycle,
    is_acyclic_set,
    iter_bits,
    split_closed_walk,
    topological_order,
)


@dataclass(frozen=True)
class Embedding:
    """Bijection ``vertex -> slot``; ``slots[v]`` is the slot of vertex ``v``."""

    slots: tuple[int, ...]

    def __post_init__(self):
        slots = tuple(int(s) for s in self.slots)
        if sorted(slots) != list(range(len(slots))):
            raise ValueError(f"slots must be a permutation of 0..{len(slots) - 1}: {slots}")
        object.__setattr__(self, "slots", slots)

    @classmethod
    def identity(cls, n: int) -> "Embedding":
        return cls(tuple(range(n)))

    @property
    def n(self) -> int:
        return len(self.slots)

    def order(self) -> list[int]:
        """Vertices listed by slot."""
        out = [0] * self.n
        for v, s in enumerate(self.slots):
            out[s] = v
        return out


def arc_length(e: Embedding, arc: Sequence[int]) -> Fraction:
    u, v = arc
    return Fraction((e.slots[v] - e.slots[u]) % e.n, e.n)


def sigma(d: Digraph, e: Embedding) -> Fraction:
    return sum((arc_length(e, a) for a in d.arcs), Fraction(0))


def arc_weight(e: Embedding, arc: Sequence[int]) -> int:
    u, v = arc
    return 1 if e.slots[u] < e.slots[v] else -1


def cycle_weight(e: Embedding, cycle) -> int:
    return sum(arc_weight(e, a) for a in as_cycle(cycle).arcs())


def is_good_cycle(e: Embedding, cycle) -> bool:
    return cycle_weight(e, cycle) >= 0


def backward_arc_count(d: Digraph, e: Embedding) -> int:
    return sum(1 for u, v in d.arcs if e.slots[u] > e.slots[v])


def _simple_negative_cycle(e: Embedding, walk: list[int]) -> Cycle | None:
    """Split a closed walk into simple cycles and return one of negative weight."""
    for piece in split_closed_walk(walk):
        if len(piece) >= 3 and cycle_weight(e, piece) < 0:
            return Cycle(piece)
    return None


def find_bad_cycle(d: Digraph, e: Embedding) -> Cycle | None:
    """A simple cycle with negative weight sum, or None when every cycle is good.

    Bellman-Ford with a virtual source joined to every vertex at weight 0.  If
    round ``n`` still relaxes an arc a negative cycle exists; rounds continue
    until the predecessor graph closes a cycle, which then has negative weight.
    While the predecessor graph is a forest every distance is at least
    ``-(n-1)``, so this happens within a bounded number of extra rounds.
    """
    n = d.n
    if n == 0:
        return None
    arcs = [(u, v, arc_weight(e, (u, v))) for u, v in d.arcs]
    dist = [0] * n
    pred = [-1] * n
    rounds = 0
    while True:
        changed = False
        for u, v, w in arcs:
            if dist[u] + w < dist[v]:
                dist[v] = dist[u] + w
                pred[v] = u
                changed = True
        rounds += 1
        if not changed:
            return None
        if rounds >= n:
            walk = _predecessor_cycle(pred)
            if walk is not None:
                cycle = _simple_negative_cycle(e, walk)
                if cycle is None:  # pragma: no cover - predecessor cycles are negative
                    raise AssertionError(f"predecessor cycle {walk} is not negative")
                return cycle


def _predecessor_cycle(pred: list[int]) -> list[int] | None:
    """A cycle of the functional graph ``v -> pred[v]``, returned in arc direction."""
    state = [0] * len(pred)
    for start in range(len(pred)):
        v = start
        trail = []
        while v != -1 and state[v] == 0:
            state[v] = 1
            trail.append(v)
            v = pred[v]
        if v != -1 and state[v] == 1:
            walk = trail[trail.index(v):]
            walk.reverse()
            return walk
        for w in trail:
            state[w] = 2
    return None


@dataclass(frozen=True)
class Bicover:
    part_one: frozenset[int]
    part_two: frozenset[int]

    def __init__(self, part_one: Iterable[int], part_two: Iterable[int]):
        object.__setattr__(self, "part_one", frozenset(part_one))
        object.__setattr__(self, "part_two", frozenset(part_two))


def validate_bicover(d: Digraph, b: Bicover) -> bool:
    one, two = b.part_one, b.part_two
    if one & two or (one | two) != set(range(d.n)):
        return False
    return is_acyclic_set(d, one) and is_acyclic_set(d, two)


def _joins_acyclic(d: Digraph, cls: int, v: int) -> bool:
    """Whether adding ``v`` to the acyclic class ``cls`` keeps it acyclic.

    True iff no out-neighbour of ``v`` inside the class reaches an in-neighbour
    of ``v`` inside the class.
    """
    targets = d.in_rows[v] & cls
    if not targets:
        return True
    frontier = seen = d.out_rows[v] & cls
    while frontier:
        if frontier & targets:
            return False
        nxt = 0
        for w in iter_bits(frontier):
            nxt |= d.out_rows[w]
        frontier = nxt & cls & ~seen
        seen |= frontier
    return True


def _colour(d: Digraph, k: int) -> list[int] | None:
    """Partition into at most ``k`` acyclic classes (bitmasks), or None.

    Vertices are placed in id order; a vertex may open a new class only as the
    next unused index, which fixes vertex 0 in class 0 and removes relabelled
    duplicates.
    """
    n = d.n
    if n == 0:
        return []
    classes = [0] * k
    choice = [-1] * n
    i = 0
    used = [0] * (n + 1)  # number of classes opened before vertex i
    while 0 <= i < n:
        v = i
        c = choice[v]
        if c >= 0:
            classes[c] &= ~(1 << v)
        c += 1
        limit = min(k, used[i] + 1)
        while c < limit and not _joins_acyclic(d, classes[c], v):
            c += 1
        if c < limit:
            choice[v] = c
            classes[c] |= 1 << v
            used[i + 1] = max(used[i], c + 1)
            i += 1
        else:
            choice[v] = -1
            i -= 1
    if i < 0:
        return None
    return [cls for cls in classes if cls]


def dichromatic_number(d: Digraph) -> int:
    """Least number of classes in a partition of V into acyclic sets."""
    if d.n == 0:
        return 0
    if topological_order(d) is not None:
        return 1
    k = 2
    while _colour(d, k) is None:
        k += 1
    return k


def acyclic_partition(d: Digraph, k: int) -> list[frozenset[int]] | None:
    """A partition of V into at most ``k`` acyclic sets, or None."""
    classes = _colour(d, k)
    if classes is None:
        return None
    return [frozenset(iter_bits(c)) for c in classes]


def find_bicover(d: Digraph) -> Bicover | None:
    classes = _colour(d, 2)
    if classes is None:
        return None
    one = frozenset(iter_bits(classes[0])) if classes else frozenset()
    return Bicover(one, frozenset(range(d.n)) - one)


def has_bicover(d: Digraph) -> bool:
    return _colour(d, 2) is not None


def digirth(d: Digraph) -> float | int:
    """Length of a shortest directed cycle; ``math.inf`` when acyclic."""
    best = math.inf
    for s in range(d.n):
        # BFS from s; the first time an in-neighbour of s is reached closes a shortest cycle through s.
        dist = 0
        seen = frontier = 1 << s
        target = d.in_rows[s]
        while frontier and dist + 1 < best:
            if frontier & target:
                best = dist + 1
                break
            nxt = 0
            for w in iter_bits(frontier):
                nxt |= d.out_rows[w]
            frontier = nxt & ~seen
            seen |= frontier
            dist += 1
    return best
