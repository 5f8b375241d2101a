from collections import deque

import pytest
from hypothesis import given, settings, strategies as st

from pvbraid import BraidError, BraidWord, GroupMode, a, canonical_sign_set
from pvbraid.core import all_sign_sets
from pvbraid.rewriting import (
    Move,
    apply_move,
    bidirectional_search,
    equivalent,
    generator_exponent_sums,
    neighbors,
    pair_exponent_sums,
    position_map,
    r3_windows,
    relation_instances,
    replay,
    separating_invariant,
)
from pvbraid.signs import act

from conftest import words

PB, TILDE, G2 = GroupMode.PBn, GroupMode.TildePBn, GroupMode.Gn2


def found(w, mode, target, rule, position, growth=False):
    return any(x == target and m.rule == rule and m.position == position for x, m in neighbors(w, mode, growth))


def test_neighbor_examples():
    assert found(BraidWord.of(2, (1, 2), (1, 2, -1)), PB, BraidWord(2), "free_reduce", 1)
    assert found(BraidWord.of(4, (1, 2), (3, 4)), PB, BraidWord.of(4, (3, 4), (1, 2)), "far_comm", 1)
    assert found(BraidWord.of(3, (1, 2), (1, 3), (2, 3)), PB, BraidWord.of(3, (2, 3), (1, 3), (1, 2)), "r3", 1)


def test_r3_closure_has_four_orientations():
    u = BraidWord.of(3, (1, 2), (1, 3), (2, 3))
    v = BraidWord.of(3, (2, 3), (1, 3), (1, 2))
    inv = lambda w: w.replace(g.inverse() for g in reversed(w.letters))
    for src, dst in ((u, v), (v, u), (inv(u), inv(v)), (inv(v), inv(u))):
        assert found(src, PB, dst, "r3", 1)
    mixed = BraidWord.of(3, (1, 2), (1, 3, -1), (2, 3))
    assert not any(m.rule == "r3" for _, m in neighbors(mixed, PB))
    assert len(r3_windows(3)) == 24


def test_mode_gates_rules():
    w = BraidWord.of(2, (1, 2))
    rules = lambda mode, growth=False: {m.rule for _, m in neighbors(w, mode, growth)}
    assert "virtualize" not in rules(PB) and "virtualize" in rules(TILDE)
    assert "involutive" not in rules(TILDE) and "involutive" in rules(G2)
    assert "free_insert" not in rules(PB) and "free_insert" in rules(PB, True)
    variants = {m.variant for _, m in neighbors(w, G2, True) if m.rule == "involutive"}
    assert variants == {"flip", "square_insert"}


def test_neighbors_are_ordered_by_rule_then_position():
    w = BraidWord.of(4, (1, 2), (3, 4), (3, 4, -1), (1, 2))
    keys = [(m.rule, m.position) for _, m in neighbors(w, TILDE, True)]
    assert keys == sorted(keys)


@settings(max_examples=40, deadline=None)
@given(words(max_n=4, max_size=8), st.sampled_from(list(GroupMode)))
def test_neighbors_are_sound(w, mode):
    states = list(all_sign_sets(w.n))
    sums = pair_exponent_sums(w)
    for x, move in neighbors(w, mode, allow_growth=True):
        assert apply_move(w, move, mode) == x
        for S in states:
            assert act(x, S) == act(w, S)
        if mode is not G2:
            assert pair_exponent_sums(x) == sums
        if mode is PB:
            assert generator_exponent_sums(x) == generator_exponent_sums(w)


@pytest.mark.parametrize("mode", list(GroupMode))
def test_relation_instances_are_one_move_apart(mode):
    for name, lhs, rhs in relation_instances(4, mode):
        assert any(x == rhs for x, _ in neighbors(lhs, mode, True)), (name, lhs, rhs)


def test_apply_move_rejects_illegal_moves():
    w = BraidWord.of(3, (1, 2), (1, 3))
    with pytest.raises(BraidError):
        apply_move(w, Move("far_comm", 1))
    with pytest.raises(BraidError):
        apply_move(w, Move("free_reduce", 1))
    with pytest.raises(BraidError):
        apply_move(w, Move("virtualize", 1), PB)
    with pytest.raises(BraidError):
        apply_move(w, Move("r3", 1))


def test_position_map():
    assert position_map(Move("free_reduce", 2), 5) == {0: 0, 3: 1, 4: 2}
    assert position_map(Move("free_insert", 1, a(1, 2)), 2) == {0: 2, 1: 3}
    assert position_map(Move("far_comm", 1), 3) == {0: 1, 1: 0, 2: 2}
    assert position_map(Move("r3", 2), 4) == {0: 0, 1: 3, 2: 2, 3: 1}
    assert position_map(Move("virtualize", 1), 2) == {0: 0, 1: 1}


def test_pair_exponent_sums_examples(six_letter):
    assert set(pair_exponent_sums(BraidWord(3)).values()) == {0}
    assert pair_exponent_sums(BraidWord.of(2, (1, 2), (2, 1))) == {(1, 2): 2}
    sums = pair_exponent_sums(six_letter)
    brute = {}
    for g in six_letter:
        key = tuple(sorted((g.over, g.under)))
        brute[key] = brute.get(key, 0) + g.exponent
    assert all(v == 0 for v in brute.values())
    assert all(v == 0 for v in sums.values()) and len(sums) == 6


def test_equivalent_examples(six_letter):
    e4 = BraidWord(4)
    v = equivalent(BraidWord.of(2, (1, 2), (1, 2, -1)), BraidWord(2), PB)
    assert v.equal
    v = equivalent(six_letter, e4, PB, max_len=8)
    assert v.equal and replay(six_letter, v.trace, PB) == e4
    x, y = BraidWord.of(2, (1, 2)), BraidWord.of(2, (2, 1))
    assert equivalent(x, y, PB, max_states=1000).status == "unknown"
    v = equivalent(x, y, TILDE)
    assert v.equal and [s.move.rule for s in v.trace] == ["virtualize"]


def test_equivalent_gn2():
    x = BraidWord.of(3, (1, 2))
    assert equivalent(x, x.replace([a(1, 2, -1)]), G2).equal
    v = equivalent(BraidWord.of(3, (1, 2), (1, 2)), BraidWord(3), G2)
    assert v.equal and v.trace[0].move.variant == "square_reduce"


def test_equivalent_needs_insertions():
    # a[1,2] a[3,4]^-1 ... commuting past an inverse pair needs no growth, but
    # conjugating the r3 relation does
    u = BraidWord.of(3, (1, 2, -1), (1, 2), (1, 3), (2, 3), (1, 2, -1))
    t = BraidWord.of(3, (1, 2, -1), (2, 3), (1, 3), (1, 2), (1, 2, -1))
    v = equivalent(u, t, PB)
    assert v.equal and replay(u, v.trace, PB) == t


def test_separating_invariants():
    x, y = BraidWord.of(2, (1, 2)), BraidWord.of(2, (2, 1))
    assert separating_invariant(x, y, PB) == "generator exponent sums"
    assert separating_invariant(x, y, TILDE) is None
    assert separating_invariant(x, x.replace([a(1, 2, -1)]), G2) is None
    assert separating_invariant(x, BraidWord(2), G2) == "generator counts mod 2"
    v = equivalent(x, BraidWord(2), TILDE)
    assert v.status == "unknown" and v.separated_by == "pair exponent sums"


def test_strand_count_mismatch():
    with pytest.raises(BraidError):
        equivalent(BraidWord(2), BraidWord(3))


@settings(max_examples=40, deadline=None)
@given(words(n=3, max_size=4), words(n=3, max_size=4), st.sampled_from(list(GroupMode)))
def test_equivalence_is_symmetric_and_replays(w1, w2, mode):
    v12 = equivalent(w1, w2, mode, max_states=3000)
    v21 = equivalent(w2, w1, mode, max_states=3000)
    assert v12.status == v21.status
    if v12.equal:
        assert replay(w1, v12.trace, mode) == w2
        assert replay(w2, v21.trace, mode) == w1


def plain_bfs_distance(src, dst, expand):
    seen = {src: 0}
    q = deque([src])
    while q:
        x = q.popleft()
        if x == dst:
            return seen[x]
        for y in expand(x):
            if y not in seen:
                seen[y] = seen[x] + 1
                q.append(y)
    return None


@given(st.integers(0, 60), st.integers(0, 60))
def test_bidirectional_search_on_a_grid(a_, b_):
    # states are points of a 8x8 grid with 4-neighbour moves
    src, dst = divmod(a_, 8), divmod(b_, 8)

    def expand(p):
        x, y = p
        for q in ((x + 1, y), (x - 1, y), (x, y + 1), (x, y - 1)):
            if 0 <= q[0] < 8 and 0 <= q[1] < 8:
                yield q

    res = bidirectional_search(src, dst, expand, 10**4)
    assert res.path[0] == src and res.path[-1] == dst
    assert all(q in set(expand(p)) for p, q in zip(res.path, res.path[1:]))
    assert len(res.path) - 1 >= plain_bfs_distance(src, dst, expand)


def test_bidirectional_search_gives_up():
    res = bidirectional_search(0, -1, lambda x: [x + 1] if x >= 0 else [x - 1], 50)
    assert res.path is None and res.states >= 50
