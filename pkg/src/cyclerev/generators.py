"""Deterministic constructions: transitive, random and Paley tournaments, blow-ups,
the cyclic-copies construction, and random reversal sequences.

Randomness comes from SplitMix64 so that outputs are bit-identical on every
platform and Python version:

    state  <- state + 0x9E3779B97F4A7C15            (mod 2**64)
    z      <- state
    z      <- (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9   (mod 2**64)
    z      <- (z ^ (z >> 27)) * 0x94D049BB133111EB   (mod 2**64)
    output <- z ^ (z >> 31)
"""

from __future__ import annotations

from typing import Sequence

from .digraph import Cycle, Digraph, is_tournament, iter_bits, strong_components
from .errors import NotATournamentError

MASK64 = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15
MIX1 = 0xBF58476D1CE4E5B9
MIX2 = 0x94D049BB133111EB


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + GOLDEN_GAMMA) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * MIX1) & MASK64
        z = ((z ^ (z >> 27)) * MIX2) & MASK64
        return z ^ (z >> 31)

    def bit(self) -> int:
        return self.next_u64() >> 63

    def below(self, k: int) -> int:
        """Uniform integer in ``[0, k)`` by rejection sampling."""
        if k <= 0:
            raise ValueError("k must be positive")
        limit = (1 << 64) - (1 << 64) % k
        while True:
            x = self.next_u64()
            if x < limit:
                return x % k

    def random(self) -> float:
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))

    def choice(self, seq):
        return seq[self.below(len(seq))]

    def shuffle(self, items: list) -> None:
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]


def transitive(n: int) -> Digraph:
    """The transitive tournament with arcs ``i -> j`` for all ``i < j``."""
    return Digraph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def random_tournament(n: int, seed: int) -> Digraph:
    """Orient each pair ``i < j`` by one draw's top bit: 0 gives ``i -> j``."""
    rng = SplitMix64(seed)
    arcs = []
    for i in range(n):
        for j in range(i + 1, n):
            arcs.append((j, i) if rng.bit() else (i, j))
    return Digraph(n, arcs)


def random_digraph(n: int, seed: int, density: float = 0.5) -> Digraph:
    """Each pair ``i < j`` carries an arc with probability ``density``, oriented uniformly."""
    rng = SplitMix64(seed)
    arcs = []
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < density:
                arcs.append((j, i) if rng.bit() else (i, j))
    return Digraph(n, arcs)


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


def paley(p: int) -> Digraph:
    """Paley tournament: ``i -> j`` iff ``j - i`` is a nonzero square mod ``p``."""
    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p % 4 != 3:
        raise ValueError(f"{p} is not congruent to 3 mod 4")
    residues = {x * x % p for x in range(1, p)}
    return Digraph(p, [(i, j) for i in range(p) for j in range(p) if (j - i) % p in residues])


def blowup(d: Digraph, parts: Sequence[Digraph]) -> Digraph:
    """Replace vertex ``x`` of ``d`` by the tournament ``parts[x]``.

    Vertices of part ``x`` are numbered consecutively after those of parts
    ``0..x-1``.  Every cross pair follows the orientation of the arc between the
    two parts in ``d``.
    """
    if not is_tournament(d):
        raise NotATournamentError("blow-up base must be a tournament")
    if len(parts) != d.n:
        raise ValueError(f"need {d.n} parts, got {len(parts)}")
    offsets = []
    total = 0
    for x, part in enumerate(parts):
        if not is_tournament(part):
            raise NotATournamentError(f"part {x} is not a tournament")
        offsets.append(total)
        total += part.n
    arcs = []
    for x, part in enumerate(parts):
        arcs.extend((offsets[x] + u, offsets[x] + v) for u, v in part.arcs)
    for x, y in d.arcs:
        for i in range(parts[x].n):
            for j in range(parts[y].n):
                arcs.append((offsets[x] + i, offsets[y] + j))
    return Digraph(total, arcs)


def iterated_construction(base: Digraph, copies: int) -> Digraph:
    """``copies`` disjoint copies of ``base`` with all arcs from copy i to copy i+1 (cyclically).

    Copy ``i`` occupies vertices ``i*n .. i*n + n - 1``.  With ``copies == 3``
    and a tournament base the result is a tournament.
    """
    if copies < 2:
        raise ValueError("need at least two copies")
    n = base.n
    arcs = []
    for i in range(copies):
        arcs.extend((i * n + u, i * n + v) for u, v in base.arcs)
    for i in range(copies):
        j = (i + 1) % copies
        if copies == 2 and i == 1:
            # the two directions would clash; copy 0 -> copy 1 only
            break
        arcs.extend((i * n + u, j * n + v) for u in range(n) for v in range(n))
    return Digraph(n * copies, arcs)


def random_cycle(d: Digraph, rng: SplitMix64) -> Cycle | None:
    """A random simple cycle found by a random walk inside a nontrivial strong component."""
    comps = [c for c in strong_components(d) if len(c) > 1]
    if not comps:
        return None
    comp = sorted(rng.choice(comps))
    cmask = 0
    for v in comp:
        cmask |= 1 << v
    v = rng.choice(comp)
    walk = [v]
    seen = {v: 0}
    while True:
        nbrs = list(iter_bits(d.out_rows[v] & cmask))
        v = rng.choice(nbrs)
        if v in seen:
            return Cycle(walk[seen[v]:])
        seen[v] = len(walk)
        walk.append(v)


def random_reversal_sequence(d: Digraph, length: int, rng: SplitMix64) -> list[Cycle]:
    """Up to ``length`` cycles, each drawn in the digraph left by the previous reversals."""
    seq = []
    current = d
    for _ in range(length):
        c = random_cycle(current, rng)
        if c is None:
            break
        seq.append(c)
        current = current.flip(c.arcs())
    return seq
