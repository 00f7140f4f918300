"""Driving the dichromatic number down to at most 2 by cycle reversals.

* :func:`charbit_reduce` reverses bad cycles (negative under the ±1 weights of
  an embedding) until every cycle is good.
* :func:`bicover_tournament` grows an acyclic set ``W`` and then clears the
  backward arcs of an order on ``V - W`` with swaps, 3-cycle and 5-cycle
  reversals.
* :func:`crs_exact` is a breadth-first search for the shortest sequence.
* :func:`transform_same_score` turns one tournament into another with the same
  out-degrees.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from .analysis import (
    Bicover,
    Embedding,
    backward_arc_count,
    find_bad_cycle,
    find_bicover,
    has_bicover,
    sigma,
)
from .digraph import (
    Cycle,
    Digraph,
    _topological_order_of_mask,
    is_acyclic_set,
    is_tournament,
    iter_simple_cycles,
    reverse_cycle,
)
from .errors import CyclicSetError, NotATournamentError, ScoreMismatchError


@dataclass(frozen=True)
class TraceStep:
    step: int
    cycle_length: int
    backward_before: int
    backward_after: int
    sigma_before: Fraction
    sigma_after: Fraction


@dataclass
class ReductionResult:
    sequence: list[Cycle]
    digraph: Digraph
    trace: list[TraceStep]
    bicover: Bicover | None = None


def charbit_reduce(
    d: Digraph, embedding: Embedding | None = None, attach_bicover: bool = True
) -> ReductionResult:
    """Reverse bad cycles until none is left.

    Reversing a cycle flips the forward/backward status of each of its arcs, and
    a bad cycle has more backward than forward arcs, so the number of backward
    arcs drops with every step.  The sequence is therefore at most ``m`` long.
    The lengths around a cycle add up to its number of backward arcs, so sigma
    falls by exactly the same integer amount.
    """
    e = embedding or Embedding.identity(d.n)
    if e.n != d.n:
        raise ValueError(f"embedding has {e.n} slots for {d.n} vertices")
    current = d
    sequence: list[Cycle] = []
    trace: list[TraceStep] = []
    back = backward_arc_count(current, e)
    sig = sigma(current, e)
    while True:
        cycle = find_bad_cycle(current, e)
        if cycle is None:
            break
        current = current.flip(cycle.arcs())
        back_after = backward_arc_count(current, e)
        sig_after = sigma(current, e)
        if back_after >= back:  # pragma: no cover - guaranteed by the weight argument
            raise AssertionError("backward-arc count did not decrease")
        trace.append(TraceStep(len(sequence), len(cycle), back, back_after, sig, sig_after))
        sequence.append(cycle)
        back, sig = back_after, sig_after
    bicover = find_bicover(current) if attach_bicover else None
    return ReductionResult(sequence, current, trace, bicover)


@dataclass
class BicoverResult:
    sequence: list[Cycle]
    bicover: Bicover
    digraph: Digraph
    # (n - |W|, |F|, k) before each loop step, then once more at exit
    potentials: list[tuple[int, int, int]] = field(default_factory=list)


def _mask(vs: Iterable[int]) -> int:
    m = 0
    for v in vs:
        m |= 1 << v
    return m


def bicover_tournament(d: Digraph, w0: Iterable[int] = ()) -> BicoverResult:
    """Find a reversal sequence after which ``W`` and ``V - W`` are both acyclic, ``W ⊇ w0``.

    ``W`` starts as a greedy maximal acyclic superset of ``w0`` and grows
    whenever the current digraph allows.  The complement carries a linear order
    whose backward arcs ``F`` are removed one gap at a time.  Each loop step
    strictly lowers ``(n - |W|, |F|, k)`` lexicographically, where ``k`` is the
    smallest successor gap of an arc in ``F``.
    """
    if not is_tournament(d):
        raise NotATournamentError("bicover_tournament needs a tournament")
    w0 = set(w0)
    if any(not 0 <= v < d.n for v in w0):
        raise ValueError(f"W0 has vertices outside 0..{d.n - 1}")
    if not is_acyclic_set(d, w0):
        raise CyclicSetError(f"W0 = {sorted(w0)} is not acyclic")

    g = d
    n = d.n
    wmask = _mask(w0)
    for v in range(n):
        if not wmask >> v & 1 and is_acyclic_set(g, wmask | 1 << v):
            wmask |= 1 << v
    worder = _topological_order_of_mask(g, wmask)
    order = [v for v in range(n) if not wmask >> v & 1]
    sequence: list[Cycle] = []
    potentials: list[tuple[int, int, int]] = []

    while True:
        pos = {v: i for i, v in enumerate(order)}
        # backward arcs y -> x with x before y, keyed by (gap, pos x)
        best = None
        nback = 0
        for i, y in enumerate(order):
            for j in range(i):
                x = order[j]
                if g.out_rows[y] >> x & 1:
                    nback += 1
                    key = (i - j, j)
                    if best is None or key < best[0]:
                        best = (key, y, x)
        if best is None:
            potentials.append((n - len(worder), 0, 0))
            break
        (k, _), y, x = best
        potentials.append((n - len(worder), nback, k))

        if k == 1:
            order[pos[x]], order[pos[y]] = y, x
            continue

        if is_acyclic_set(g, wmask | 1 << y):
            wmask |= 1 << y
            worder = _topological_order_of_mask(g, wmask)
            order.remove(y)
            continue

        # first out-neighbour of y in the W order directly followed by an in-neighbour
        for a in range(len(worder) - 1):
            u, v = worder[a], worder[a + 1]
            if g.out_rows[y] >> u & 1 and g.out_rows[v] >> y & 1:
                break
        else:  # pragma: no cover - y would be insertable into W
            raise AssertionError("no consecutive pair u, v with y -> u and v -> y")
        xk1 = order[pos[y] - 1]
        if g.out_rows[u] >> xk1 & 1:
            cycle = Cycle((y, u, xk1))
            g = reverse_cycle(g, cycle)
            order[pos[xk1]], order[pos[y]] = y, xk1
        else:
            cycle = Cycle((y, x, xk1, u, v))
            g = reverse_cycle(g, cycle)
            worder[a], worder[a + 1] = v, u
        sequence.append(cycle)

    w = frozenset(v for v in range(n) if wmask >> v & 1)
    return BicoverResult(sequence, Bicover(w, frozenset(range(n)) - w), g, potentials)


def crs_exact(d: Digraph, budget: int, moves: str = "all") -> int | None:
    """Fewest cycle reversals reaching dichromatic number at most 2.

    Breadth-first over labelled digraph states; one move reverses any simple
    cycle of the current state (only 3-cycles when ``moves == "triangles"``).
    Returns None when no goal state lies within ``budget`` moves, and 0 when
    ``d`` already qualifies.
    """
    if moves not in ("all", "triangles"):
        raise ValueError(f"moves must be 'all' or 'triangles', got {moves!r}")
    max_length = 3 if moves == "triangles" else None
    if has_bicover(d):
        return 0
    seen = {d}
    frontier = [d]
    for depth in range(1, budget + 1):
        nxt = []
        for state in frontier:
            for cycle in iter_simple_cycles(state, max_length):
                succ = state.flip(cycle.arcs())
                if succ in seen:
                    continue
                if has_bicover(succ):
                    return depth
                seen.add(succ)
                nxt.append(succ)
        frontier = nxt
        if not frontier:
            break
    return None


def _split_closed_trails(out: dict[int, list[int]], n: int) -> list[list[int]]:
    """Decompose a balanced arc set into arc-disjoint simple cycles (deterministic)."""
    cycles = []
    for s in range(n):
        stack = [s]
        pos = {s: 0}
        while stack:
            v = stack[-1]
            if not out[v]:
                stack.pop()
                del pos[v]
                continue
            w = out[v].pop(0)
            if w in pos:
                i = pos[w]
                cycles.append(stack[i:])
                for x in stack[i + 1:]:
                    del pos[x]
                del stack[i + 1:]
            else:
                pos[w] = len(stack)
                stack.append(w)
    return cycles


def transform_same_score(d: Digraph, target: Digraph) -> list[Cycle]:
    """A reversal sequence taking ``d`` to ``target`` (same out-degree at every vertex).

    The arcs of ``d`` that ``target`` holds reversed form a balanced set, which
    splits into arc-disjoint cycles of ``d``; reversing them in any order
    yields ``target``.
    """
    if d.n != target.n:
        raise ValueError(f"vertex sets differ: {d.n} vs {target.n} vertices")
    for name, g in (("first", d), ("second", target)):
        if not is_tournament(g):
            raise NotATournamentError(f"{name} digraph is not a tournament")
    for v in range(d.n):
        if d.out_degree(v) != target.out_degree(v):
            raise ScoreMismatchError(v, d.out_degree(v), target.out_degree(v))
    out = defaultdict(list)
    for u, v in d.arcs:
        if target.has_arc(v, u):
            out[u].append(v)
    return [Cycle(c) for c in _split_closed_trails(out, d.n)]
