import random

import pytest
from hypothesis import given, settings, strategies as st

from pvbraid import BraidWord, GroupMode, PreconditionError, a, canonical_sign_set
from pvbraid.campaigns import MOVE_KINDS, planted_move, random_pure_diagram, rule_mode
from pvbraid.classify import classify
from pvbraid.diagrams import DiagramWord, o_map, s
from pvbraid.projection import d_iterates, d_stab, delete_bad, reconstruct_classical
from pvbraid.rewriting import apply_move, neighbors
from pvbraid.signs import act

from conftest import words


def test_delete_bad_six_letter(six_letter):
    assert delete_bad(six_letter) == BraidWord.of(4, (1, 4), (1, 4, -1))
    assert delete_bad(delete_bad(six_letter)) == BraidWord(4)


def test_d_is_not_idempotent(six_letter):
    once = delete_bad(six_letter)
    assert delete_bad(once) != once


def test_d_stab_examples(six_letter):
    assert d_stab(six_letter) == BraidWord(4)
    assert d_stab(BraidWord(3)) == BraidWord(3)
    w = o_map(DiagramWord.of(2, s(1), s(1)))
    assert w == BraidWord.of(2, (1, 2), (2, 1))
    assert d_stab(w) == w
    assert [len(x) for x in d_iterates(six_letter)] == [6, 2, 0]


@given(words())
def test_d_stab_is_an_all_good_fixpoint(w):
    d = d_stab(w)
    assert all(classify(d).flags)
    assert delete_bad(d) == d
    assert len(d) <= len(w)


def test_d_stab_can_break_trivial_action():
    # acts trivially, yet only the first two letters survive
    w = BraidWord.of(3, (1, 2, -1), (1, 3, -1), (1, 2, -1), (1, 3, -1))
    B = canonical_sign_set(3)
    assert act(w, B) == B
    assert d_stab(w) == BraidWord.of(3, (1, 2, -1), (1, 3, -1))
    assert act(d_stab(w), B) != B


def test_reconstruct_examples():
    assert len(reconstruct_classical(BraidWord(3)).sigma_word) == 0
    rec = reconstruct_classical(BraidWord.of(2, (1, 2), (2, 1)))
    assert rec.sigma_word == DiagramWord.of(2, s(1), s(1))
    assert rec.virtualized_positions == []
    rec = reconstruct_classical(BraidWord.of(2, (1, 2), (1, 2)))
    assert rec.sigma_word == DiagramWord.of(2, s(1), s(1))
    assert rec.virtualized_positions == [1]
    assert rec.virtualization_witness[1].emitted == a(2, 1)


def test_reconstruct_rejects_bad_letters(six_letter):
    with pytest.raises(PreconditionError):
        reconstruct_classical(six_letter)


def test_reconstruct_rejects_nontrivial_action():
    with pytest.raises(PreconditionError):
        reconstruct_classical(BraidWord.of(2, (1, 2)))


@pytest.mark.parametrize("seed", range(3))
def test_reconstruction_round_trips(seed):
    rng = random.Random(seed)
    for _ in range(100):
        n = rng.randint(2, 5)
        dw = random_pure_diagram(rng, n, 30)
        w = o_map(dw)
        # scramble orientations; the reconstruction must record them
        w = w.replace(g.virtualized() if rng.random() < 0.5 else g for g in w.letters)
        rec = reconstruct_classical(w)
        assert rec.sigma_word.is_classical
        image = o_map(rec.sigma_word)
        for g, entry, h in zip(w.letters, rec.virtualization_witness, image.letters):
            assert entry.source == g and entry.emitted == h
            assert h.pair == g.pair and h.exponent == g.exponent
            assert entry.virtualized == (h != g)


@settings(max_examples=200)
@given(st.data())
def test_d_respects_single_relations(data):
    n = data.draw(st.integers(3, 5))
    kind = data.draw(st.sampled_from([k for k in MOVE_KINDS if rule_mode(k[0]) is not GroupMode.Gn2 and (n >= 4 or k[0] != "far_comm")]))
    rng = random.Random(data.draw(st.integers(0, 2**32)))
    w, move = planted_move(rng, n, *kind)
    mode = rule_mode(kind[0])
    w2 = apply_move(w, move, mode)
    d1, d2 = delete_bad(w), delete_bad(w2)
    assert d1 == d2 or any(x == d2 for x, _ in neighbors(d1, mode, allow_growth=True))
