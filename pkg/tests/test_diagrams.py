import random

import pytest
from hypothesis import given, strategies as st

from pvbraid import BraidWord, PreconditionError, a, canonical_sign_set
from pvbraid.campaigns import random_pure_diagram
from pvbraid.classify import classify
from pvbraid.diagrams import DiagramLetter, DiagramWord, end_permutation, is_pure, o_map, s, v
from pvbraid.signs import act

from conftest import diagrams


def purify(dw):
    """Close a diagram up to a pure one with virtual crossings."""
    order = list(end_permutation(dw))
    tail = []
    for _ in range(dw.n):
        for p in range(dw.n - 1):
            if order[p] > order[p + 1]:
                order[p], order[p + 1] = order[p + 1], order[p]
                tail.append(v(p + 1))
    return dw * DiagramWord(dw.n, tuple(tail))


def read_crossings(dw):
    """Independent reading of a diagram, crossing by crossing.

    Geometry: in s_p the strand entering on the left goes over; in s_p^-1 it
    goes under.  Under strand entering from the top-right gives a[over,under],
    from the top-left gives a[over,under]^-1.
    """
    at = list(range(1, dw.n + 1))
    out = []
    for x in dw:
        left, right = at[x.position - 1], at[x.position]
        if x.kind == "s":
            over, under = (left, right) if x.exponent == 1 else (right, left)
            under_from_right = under == right
            out.append(a(over, under, 1 if under_from_right else -1))
        at[x.position - 1], at[x.position] = right, left
    return BraidWord(dw.n, tuple(out))


def test_end_permutation_examples():
    assert end_permutation(DiagramWord(2)) == (1, 2)
    assert end_permutation(DiagramWord.of(2, s(1))) == (2, 1)
    assert end_permutation(DiagramWord.of(2, s(1), s(1))) == (1, 2)
    assert end_permutation(DiagramWord.of(3, v(1), s(2, -1))) == (2, 3, 1)


def test_o_map_examples():
    assert o_map(DiagramWord(3)) == BraidWord(3)
    assert o_map(DiagramWord.of(2, s(1), s(1))) == BraidWord.of(2, (1, 2), (2, 1))
    conj = DiagramWord.of(2, v(1), s(1), s(1), v(1))
    assert o_map(conj) == BraidWord.of(2, (2, 1), (1, 2))
    plain = o_map(DiagramWord.of(2, s(1), s(1)))
    assert o_map(conj).letters == tuple(g.virtualized() for g in plain.letters)


def test_o_map_rejects_non_pure():
    with pytest.raises(PreconditionError):
        o_map(DiagramWord.of(2, s(1)))


def test_r3_diagram_images_form_the_r3_relation():
    left = o_map(DiagramWord.classical_word(3, [1, 2, 1]) * DiagramWord.classical_word(3, [-1, -2, -1]))
    assert left.letters[:3] == (a(1, 2), a(1, 3), a(2, 3))


@given(diagrams())
def test_o_map_matches_independent_reading(dw):
    dw = purify(dw)
    assert is_pure(dw)
    assert o_map(dw) == read_crossings(dw)


@given(diagrams(), st.data())
def test_inserting_virtual_pairs_changes_nothing(dw, data):
    dw = purify(dw)
    k = data.draw(st.integers(0, len(dw)))
    p = data.draw(st.integers(1, dw.n - 1))
    bigger = DiagramWord(dw.n, dw.letters[:k] + (v(p), v(p)) + dw.letters[k:])
    assert o_map(bigger) == o_map(dw)


@given(diagrams())
def test_writhe_is_preserved(dw):
    dw = purify(dw)
    assert [g.exponent for g in o_map(dw)] == [x.exponent for x in dw if x.classical]


@pytest.mark.parametrize("seed", range(5))
def test_classical_images_are_good_and_act_trivially(seed):
    rng = random.Random(seed)
    for _ in range(100):
        n = rng.randint(2, 5)
        dw = random_pure_diagram(rng, n, 40)
        assert dw.is_classical and is_pure(dw) and len(dw) <= 40
        w = o_map(dw)
        assert all(classify(w).flags)
        assert act(w, canonical_sign_set(n)) == canonical_sign_set(n)


def test_diagram_letter_validation():
    with pytest.raises(ValueError):
        DiagramLetter("s", 1, 0)
    with pytest.raises(ValueError):
        DiagramWord.of(2, s(2))
    assert v(1).exponent is None
