import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from conftest import digraphs, tournaments
from cyclerev.digraph import (
    Cycle,
    apply_sequence,
    build,
    enumerate_simple_cycles,
    find_cycle,
    is_acyclic_set,
    is_tournament,
    reverse_cycle,
    split_closed_walk,
    strong_components,
    topological_order,
)
from cyclerev.errors import (
    CapExceededError,
    InvalidArcError,
    InvalidCycleError,
    InvalidStepError,
)
from cyclerev.generators import SplitMix64, paley, random_reversal_sequence, transitive


def test_build_three_cycle(c3):
    assert build(3, [(0, 1), (1, 2), (2, 0)]) == c3
    assert c3.arcs == ((0, 1), (1, 2), (2, 0))
    assert c3.m == 3


def test_build_single_vertex():
    d = build(1, [])
    assert d.n == 1 and d.arcs == ()


@pytest.mark.parametrize(
    "n, arcs, bad",
    [
        (2, [(0, 1), (1, 0)], (1, 0)),
        (2, [(1, 1)], (1, 1)),
        (3, [(0, 1), (0, 1)], (0, 1)),
        (3, [(0, 3)], (0, 3)),
        (3, [(-1, 2)], (-1, 2)),
    ],
)
def test_build_rejects(n, arcs, bad):
    with pytest.raises(InvalidArcError) as info:
        build(n, arcs)
    assert info.value.arc == bad


def test_build_error_names_kind():
    with pytest.raises(InvalidArcError, match="anti-parallel"):
        build(2, [(0, 1), (1, 0)])
    with pytest.raises(InvalidArcError, match="loop"):
        build(2, [(0, 0)])
    with pytest.raises(InvalidArcError, match="duplicate"):
        build(2, [(0, 1), (0, 1)])


def test_is_tournament(c3):
    assert is_tournament(c3)
    assert not is_tournament(build(3, [(0, 1)]))
    assert is_tournament(transitive(5))
    assert is_tournament(build(0, []))


def test_cycle_equality_is_up_to_rotation_only():
    assert Cycle([0, 1, 2]) == Cycle([1, 2, 0]) == Cycle([2, 0, 1])
    assert Cycle([0, 1, 2]) != Cycle([0, 2, 1])
    assert hash(Cycle([3, 1, 2])) == hash(Cycle([1, 2, 3]))
    assert Cycle([4, 5, 6]).vertices == (4, 5, 6)


@pytest.mark.parametrize("vs", [[0, 1], [0, 1, 0], [1, 2, 3, 2]])
def test_cycle_shape_errors(vs):
    with pytest.raises(InvalidCycleError):
        Cycle(vs)


def test_reverse_three_cycle(c3):
    r = reverse_cycle(c3, [0, 1, 2])
    assert set(r.arcs) == {(1, 0), (2, 1), (0, 2)}
    assert reverse_cycle(r, [2, 1, 0]) == c3


def test_reverse_cycle_rejects_non_cycles(c3):
    with pytest.raises(InvalidCycleError):
        reverse_cycle(transitive(4), [0, 1, 2])
    with pytest.raises(InvalidCycleError):
        reverse_cycle(c3, [0, 2, 1])
    with pytest.raises(InvalidCycleError):
        reverse_cycle(c3, [0, 1])


def test_apply_sequence_basics(c3):
    assert apply_sequence(c3, []) == c3
    assert apply_sequence(c3, [(0, 1, 2), (2, 1, 0)]) == c3


def test_apply_sequence_reports_failing_step(c3):
    with pytest.raises(InvalidStepError) as info:
        apply_sequence(c3, [(0, 1, 2), (0, 1, 2)])
    assert info.value.index == 1


def test_apply_sequence_uses_intermediate_digraph():
    # the triangle 0,2,3 only exists once 0,1,2 has been reversed
    d = build(4, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 0)])
    first = [0, 1, 2]
    second = [0, 2, 3]
    with pytest.raises(InvalidCycleError):
        reverse_cycle(d, second)
    out = apply_sequence(d, [first, second])
    assert set(out.arcs) == oracles.simulate(d, [first, second])


def test_strong_components_examples(c3):
    assert strong_components(transitive(4)) == [frozenset({i}) for i in range(4)]
    assert strong_components(c3) == [frozenset({0, 1, 2})]
    assert strong_components(paley(7)) == [frozenset(range(7))]


def test_strong_components_topological():
    # {0,1,2} -> 3 -> {4,5,6}
    d = build(7, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 6), (6, 4)])
    assert strong_components(d) == [frozenset({0, 1, 2}), frozenset({3}), frozenset({4, 5, 6})]


def test_topological_order_examples(c3):
    assert topological_order(transitive(3)) == (0, 1, 2)
    assert topological_order(c3) is None
    assert topological_order(build(1, [])) == (0,)


def test_find_cycle_examples(c3):
    assert find_cycle(c3) == Cycle([0, 1, 2])
    assert find_cycle(transitive(6)) is None
    c = find_cycle(paley(7))
    assert oracles.simulate(paley(7), [c]) is not None


def test_enumerate_examples(c3):
    assert enumerate_simple_cycles(c3, 10) == [Cycle([0, 1, 2])]
    assert enumerate_simple_cycles(transitive(5), 10) == []
    # regular 7-tournament: C(7,3) - 7*C(3,2) = 14 triangles
    assert len(enumerate_simple_cycles(paley(7), 1000, max_length=3)) == 14
    with pytest.raises(CapExceededError):
        enumerate_simple_cycles(paley(7), 13, max_length=3)


def test_enumerate_paley7_matches_permutation_scan():
    got = {c.canonical() for c in enumerate_simple_cycles(paley(7), 10_000)}
    assert got == oracles.all_cycles(paley(7))
    assert len(got) == 136


def test_split_closed_walk():
    assert split_closed_walk([0, 1, 2]) == [[0, 1, 2]]
    pieces = split_closed_walk([0, 1, 2, 3, 1, 4])
    assert sorted(map(sorted, pieces)) == [[0, 1, 4], [1, 2, 3]]


@settings(max_examples=60, deadline=None)
@given(digraphs(max_n=7))
def test_enumeration_matches_oracle(d):
    got = [c.canonical() for c in enumerate_simple_cycles(d, 10**6)]
    assert len(got) == len(set(got))
    assert set(got) == oracles.all_cycles(d)


@settings(max_examples=80, deadline=None)
@given(digraphs(max_n=9))
def test_find_cycle_iff_no_topological_order(d):
    c = find_cycle(d)
    order = topological_order(d)
    assert (c is None) == (order is not None)
    if c is not None:
        assert oracles.simulate(d, [c]) is not None
    else:
        pos = {v: i for i, v in enumerate(order)}
        assert all(pos[u] < pos[v] for u, v in d.arcs)


@settings(max_examples=80, deadline=None)
@given(digraphs(max_n=8))
def test_strong_components_match_reachability(d):
    comps = strong_components(d)
    assert set(comps) == oracles.scc_partition(d)
    index = {v: i for i, comp in enumerate(comps) for v in comp}
    assert all(index[u] <= index[v] for u, v in d.arcs)


@settings(max_examples=60, deadline=None)
@given(digraphs(max_n=8), st.sets(st.integers(0, 7)))
def test_is_acyclic_set_matches_oracle(d, vs):
    vs = {v for v in vs if v < d.n}
    assert is_acyclic_set(d, vs) == oracles.acyclic(set(d.arcs), vs)


@settings(max_examples=60, deadline=None)
@given(tournaments(min_n=3, max_n=10), st.integers(0, 2**64 - 1))
def test_reversal_invariants(d, seed):
    seq = random_reversal_sequence(d, 8, SplitMix64(seed))
    out = apply_sequence(d, seq)
    assert set(out.arcs) == oracles.simulate(d, seq)
    assert out.out_degrees() == d.out_degrees()
    assert out.in_degrees() == d.in_degrees()
    assert set(strong_components(out)) == set(strong_components(d))
    assert out.m == d.m
    if seq:
        back = apply_sequence(out, [c.reversed() for c in reversed(seq)])
        assert back == d


@settings(max_examples=60, deadline=None)
@given(digraphs(min_n=3, max_n=8))
def test_involution(d):
    c = find_cycle(d)
    if c is not None:
        assert reverse_cycle(reverse_cycle(d, c), c.reversed()) == d


def test_digraph_is_hashable_and_value_equal():
    a = build(3, [(0, 1), (2, 1)])
    b = build(3, [(2, 1), (0, 1)])
    assert a == b and hash(a) == hash(b)
    assert {a: 1}[b] == 1
