import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from conftest import digraphs, tournaments
from cyclerev.analysis import Embedding, backward_arc_count, sigma, validate_bicover
from cyclerev.digraph import Digraph, apply_sequence
from cyclerev.errors import CyclicSetError, NotATournamentError, ScoreMismatchError
from cyclerev.generators import SplitMix64, paley, random_reversal_sequence, random_tournament, transitive
from cyclerev.reduction import bicover_tournament, charbit_reduce, crs_exact, transform_same_score

C3 = Digraph(3, [(0, 1), (1, 2), (2, 0)])


def test_charbit_on_good_input():
    res = charbit_reduce(transitive(5))
    assert res.sequence == [] and res.trace == []
    assert res.digraph == transitive(5)


def test_charbit_three_cycle_bad_embedding():
    e = Embedding((0, 2, 1))
    res = charbit_reduce(C3, e)
    assert len(res.sequence) == 1
    t = res.trace[0]
    assert (t.step, t.cycle_length, t.backward_before, t.backward_after) == (0, 3, 2, 1)
    assert t.sigma_before == sigma(C3, e) == 2
    assert t.sigma_after == 1


def test_charbit_rejects_wrong_embedding_size():
    with pytest.raises(ValueError):
        charbit_reduce(C3, Embedding.identity(4))


@settings(max_examples=60, deadline=None)
@given(digraphs(max_n=8), st.randoms(use_true_random=False))
def test_charbit_properties(d, rnd):
    slots = list(range(d.n))
    rnd.shuffle(slots)
    e = Embedding(tuple(slots))
    res = charbit_reduce(d, e)
    assert len(res.sequence) <= backward_arc_count(d, e) <= d.m
    assert apply_sequence(d, res.sequence) == res.digraph
    before = [t.backward_before for t in res.trace] + [backward_arc_count(res.digraph, e)]
    assert all(a > b for a, b in zip(before, before[1:]))
    # lengths around a cycle sum to its backward-arc count, so sigma drops in step
    for t in res.trace:
        assert t.sigma_before - t.sigma_after == t.backward_before - t.backward_after
    assert oracles.has_bicover(res.digraph)
    assert res.bicover is not None and validate_bicover(res.digraph, res.bicover)


def test_bicover_tournament_paley():
    for p in (7, 11, 19, 23):
        res = bicover_tournament(paley(p))
        assert validate_bicover(res.digraph, res.bicover)
        assert apply_sequence(paley(p), res.sequence) == res.digraph
        assert all(len(c) in (3, 5) for c in res.sequence)


def test_bicover_tournament_respects_w0():
    res = bicover_tournament(paley(7), [0, 1])
    assert {0, 1} <= res.bicover.part_one


def test_bicover_tournament_errors():
    with pytest.raises(NotATournamentError):
        bicover_tournament(Digraph(3, [(0, 1)]))
    with pytest.raises(CyclicSetError):
        bicover_tournament(C3, [0, 1, 2])
    with pytest.raises(ValueError):
        bicover_tournament(C3, [5])


@settings(max_examples=60, deadline=None)
@given(tournaments(max_n=11))
def test_bicover_tournament_properties(d):
    res = bicover_tournament(d)
    assert validate_bicover(res.digraph, res.bicover)
    assert oracles.simulate(d, res.sequence) == set(res.digraph.arcs)
    assert all(a > b for a, b in zip(res.potentials, res.potentials[1:]))


def test_crs_values():
    assert crs_exact(transitive(6), 0) == 0
    assert crs_exact(C3, 1) == 0
    assert crs_exact(paley(7), 3) == 1
    assert crs_exact(paley(7), 3, moves="triangles") == 2
    assert crs_exact(paley(7), 1, moves="triangles") is None
    assert crs_exact(paley(7), 0) is None
    with pytest.raises(ValueError):
        crs_exact(C3, 1, moves="squares")


def test_transform_same_score_examples():
    assert transform_same_score(C3, C3) == []
    rev = apply_sequence(C3, [(0, 1, 2)])
    seq = transform_same_score(C3, rev)
    assert apply_sequence(C3, seq) == rev


def test_transform_same_score_errors():
    with pytest.raises(ValueError):
        transform_same_score(C3, transitive(4))
    with pytest.raises(NotATournamentError):
        transform_same_score(Digraph(3, [(0, 1)]), C3)
    with pytest.raises(ScoreMismatchError) as info:
        transform_same_score(C3, transitive(3))
    assert info.value.vertex == 0


@settings(max_examples=60, deadline=None)
@given(tournaments(min_n=3, max_n=10), st.integers(0, 2**64 - 1))
def test_transform_round_trip(d, seed):
    target = apply_sequence(d, random_reversal_sequence(d, 5, SplitMix64(seed)))
    seq = transform_same_score(d, target)
    assert oracles.simulate(d, seq) == set(target.arcs)
    arcs = [a for c in seq for a in c.arcs()]
    assert len(arcs) == len(set(arcs))
    assert set(arcs) == {a for a in d.arcs if not target.has_arc(*a)}


def test_transform_random_pair():
    d = random_tournament(12, 5)
    target = apply_sequence(d, random_reversal_sequence(d, 15, SplitMix64(9)))
    assert apply_sequence(d, transform_same_score(d, target)) == target


def test_crs_zero_on_all_six_vertex_tournaments():
    # the smallest tournament without a bicover has 7 vertices
    pairs = [(i, j) for i in range(6) for j in range(i + 1, 6)]
    for code in range(1 << len(pairs)):
        d = Digraph(6, [(j, i) if code >> b & 1 else (i, j) for b, (i, j) in enumerate(pairs)])
        assert crs_exact(d, 3) == 0
