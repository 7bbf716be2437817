from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from jugglestate.errors import (
    BadParameters,
    BadStateString,
    CapacityTooSmall,
    Collision,
    InvalidPattern,
    MustThrow,
    MustWait,
    NotATransition,
    OutOfRange,
)
from jugglestate.siteswap import canonical_rotation, validate
from jugglestate.toss import (
    TossState,
    admissible_throws,
    advance,
    build_state_graph,
    cycle_to_pattern,
    find_transition,
    parse_state,
    pattern_states,
)

from oracles import k_subsets, oracle_state, reachable, shortest_throw_sequence


def S(*beats, m=5):
    return TossState(beats, m)


def test_advance_examples():
    assert advance(S(0, 2, 3), 5) == S(1, 2, 4)
    assert advance(S(0, 1, 3), 4) == S(0, 2, 3)
    assert advance(S(1, 2, 4), 0) == S(0, 1, 3)
    with pytest.raises(Collision):
        advance(S(0, 2, 3), 3)
    with pytest.raises(MustWait):
        advance(S(1, 2, 4), 3)
    with pytest.raises(MustThrow):
        advance(S(0, 2, 3), 0)
    with pytest.raises(OutOfRange):
        advance(S(0, 2, 3), 6)


def test_admissible_examples():
    assert admissible_throws(S(0, 1, 2)) == [3, 4, 5]
    assert admissible_throws(S(1, 2, 4)) == [0]
    # after the shift {1, 2} is occupied, so 2 and 3 collide and 1 is free
    assert admissible_throws(S(0, 2, 3)) == [1, 4, 5]
    assert oracle_state(((0, 2, 3), 5), 1) == ((0, 1, 2), 5)


@pytest.mark.parametrize("k, m", [(k, m) for m in range(1, 7) for k in range(0, m + 1)])
def test_advance_matches_oracle(k, m):
    for occ in k_subsets(k, m):
        state = TossState(occ, m)
        legal = []
        for t in range(m + 2):
            expected = oracle_state((occ, m), t)
            if expected is None:
                with pytest.raises(Exception):
                    advance(state, t)
            else:
                legal.append(t)
                assert advance(state, t) == TossState(expected[0], m)
        assert admissible_throws(state) == legal


def test_state_graph_examples():
    g = build_state_graph(3, 5)
    assert len(g.nodes) == 10
    g = build_state_graph(1, 1)
    assert g.nodes == (TossState((0,), 1),)
    assert g.successors(TossState((0,), 1)) == {1: TossState((0,), 1)}
    g = build_state_graph(2, 3)
    assert [s.occupied for s in g.nodes] == k_subsets(2, 3)


def test_empty_state_graph():
    g = build_state_graph(0, 3)
    (node,) = g.nodes
    assert g.successors(node) == {0: node}


@pytest.mark.parametrize("k, m", [(-1, 3), (4, 3), (0, 0), (1, 36)])
def test_bad_graph_parameters(k, m):
    with pytest.raises(BadParameters):
        build_state_graph(k, m)


@pytest.mark.parametrize("m", range(1, 9))
def test_graph_laws(m):
    for k in range(0, m + 1):
        g = build_state_graph(k, m)
        assert len(g.nodes) == comb(m, k)
        for node in g.nodes:
            out = g.successors(node)
            assert len(out) == (m - k + 1 if 0 in node else 1)
            targets = list(out.values())
            assert len(set(targets)) == len(targets)
            assert all(t.k == k for t in targets)
        succ = lambda u: g.successors(u).values()
        for node in g.nodes:
            assert reachable(node, succ) == set(g.nodes)


def test_pattern_states_examples():
    assert pattern_states([4, 5, 0], 5) == [S(0, 1, 3), S(0, 2, 3), S(1, 2, 4)]
    assert pattern_states([4, 5, 0]) == [S(0, 1, 3), S(0, 2, 3), S(1, 2, 4)]
    assert pattern_states([3], 3) == [TossState((0, 1, 2), 3)]
    assert pattern_states([0], 1) == [TossState((), 1)]
    with pytest.raises(InvalidPattern):
        pattern_states([5, 4, 3])
    with pytest.raises(CapacityTooSmall):
        pattern_states([4, 5, 0], 4)


def test_cycle_to_pattern_examples():
    assert cycle_to_pattern([S(0, 1, 3), S(0, 2, 3), S(1, 2, 4)]).throws == (4, 5, 0)
    assert cycle_to_pattern([TossState((0, 1, 2), 3)]).throws == (3,)
    assert cycle_to_pattern([S(0, 2, 3), S(1, 2, 4), S(0, 1, 3)]).throws == (5, 0, 4)
    with pytest.raises(NotATransition) as info:
        cycle_to_pattern([S(0, 1, 3), S(1, 2, 4)])
    assert info.value.index == 0


valid_patterns = st.lists(st.integers(0, 7), min_size=1, max_size=5).filter(lambda t: validate(t).valid)


@given(valid_patterns, st.integers(0, 2))
@settings(max_examples=300)
def test_cycle_round_trip(throws, extra):
    m = max(max(throws), 1) + extra
    states = pattern_states(throws, m)
    # replaying the throws walks the cycle and closes it
    s = states[0]
    for i, t in enumerate(throws):
        assert s == states[i]
        s = advance(s, t)
    assert s == states[0]
    assert all(st_.k == validate(throws).particle_count for st_ in states)
    back = cycle_to_pattern(states)
    assert canonical_rotation(back) == canonical_rotation(throws)


def test_find_transition_examples():
    assert find_transition(S(0, 1, 2), S(0, 1, 2)) == []
    assert find_transition(S(0, 1, 3), S(0, 2, 3)) == [4]
    assert find_transition(S(0, 1, 2), S(1, 2, 4)) == shortest_throw_sequence((0, 1, 2), (1, 2, 4), 5, 4)
    assert find_transition(S(0, 1, 2), S(1, 2, 4)) == [4, 4, 5]


@pytest.mark.parametrize("k, m", [(2, 4), (3, 5), (2, 5)])
def test_find_transition_matches_enumeration(k, m):
    for a in k_subsets(k, m):
        for b in k_subsets(k, m):
            got = find_transition(TossState(a, m), TossState(b, m))
            assert got == shortest_throw_sequence(a, b, m, m)
            s = TossState(a, m)
            for t in got:
                s = advance(s, t)
            assert s == TossState(b, m)


def test_find_transition_needs_same_shape():
    with pytest.raises(BadParameters):
        find_transition(S(0, 1), S(0, 1, 2))


def test_parse_state():
    assert parse_state("0,2,3", 5) == S(0, 2, 3)
    assert parse_state("{3, 0,2}", 5) == S(0, 2, 3)
    assert parse_state("", 3) == TossState((), 3)
    for bad in ["0,x", "0,0", "0,5"]:
        with pytest.raises(BadStateString):
            parse_state(bad, 5)


def test_state_identity():
    assert S(3, 0, 2).id == "0,2,3"
    assert S(0, 1, 2) < S(0, 1, 3) < S(1, 2, 4)
    with pytest.raises(BadParameters):
        TossState((5,), 5)
