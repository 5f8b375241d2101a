"""
The deletion map ``d`` (drop every bad letter), its iteration to a fixpoint,
and reconstruction of a classical diagram from an all-good word that acts
trivially on the canonical sign set.
"""

from __future__ import annotations

from dataclasses import dataclass

from .classify import classify
from .core import BraidWord, GeneratorLetter, PreconditionError, canonical_sign_set
from .diagrams import DiagramLetter, DiagramWord, crossing_letter
from .signs import act, is_realizable, prefix_states


class UnrealizableStateError(RuntimeError):
    """A prefix state of an all-good word turned out not to be realizable.

    Goodness plus induction rules this out; hitting it means a finding, not
    bad input.
    """


def delete_bad(w: BraidWord) -> BraidWord:
    ann = classify(w)
    return w.replace(g for g, good in zip(w.letters, ann.flags) if good)


def d_stab(w: BraidWord) -> BraidWord:
    """Iterate :func:`delete_bad` until the word stops changing."""
    while True:
        nxt = delete_bad(w)
        if len(nxt) == len(w):
            return nxt
        w = nxt


def d_iterates(w: BraidWord) -> list[BraidWord]:
    """``[w, d(w), d(d(w)), ...]`` up to and including the fixpoint."""
    out = [w]
    while True:
        nxt = delete_bad(out[-1])
        if len(nxt) == len(out[-1]):
            return out
        out.append(nxt)


@dataclass(frozen=True)
class WitnessEntry:
    source: GeneratorLetter
    emitted: GeneratorLetter

    @property
    def virtualized(self) -> bool:
        return self.source.over != self.emitted.over


@dataclass(frozen=True)
class ClassicalReconstruction:
    sigma_word: DiagramWord
    virtualization_witness: tuple[WitnessEntry, ...]

    @property
    def virtualized_positions(self) -> list[int]:
        return [k for k, e in enumerate(self.virtualization_witness) if e.virtualized]


def reconstruct_classical(w: BraidWord) -> ClassicalReconstruction:
    """Build a v-free diagram whose image agrees with ``w`` up to virtualizations.

    Each letter on strands ``{i, j}`` becomes a classical crossing at the
    positions those strands occupy in the realization of the preceding state,
    with the letter's exponent as writhe.
    """
    n = w.n
    B = canonical_sign_set(n)
    ann = classify(w)
    if not all(ann.flags):
        bad = [k + 1 for k, f in enumerate(ann.flags) if not f]
        raise PreconditionError(f"word has bad letters at positions {bad}")
    if act(w, B) != B:
        raise PreconditionError("word does not act trivially on the canonical sign set")

    sigmas = []
    witness = []
    for k, (g, state) in enumerate(zip(w.letters, prefix_states(w, B))):
        real = is_realizable(state)
        if real is None:
            raise UnrealizableStateError(f"state before letter {k + 1} ({g}) is not realizable: {state}")
        ranks = real.ranks
        p, q = ranks[g.over - 1], ranks[g.under - 1]
        if abs(p - q) != 1:
            raise UnrealizableStateError(f"strands of letter {k + 1} ({g}) are not consecutive")
        pos = min(p, q)
        left, right = real.order[pos - 1], real.order[pos]
        sigmas.append(DiagramLetter("s", pos, g.exponent))
        witness.append(WitnessEntry(g, crossing_letter(left, right, g.exponent)))
    return ClassicalReconstruction(DiagramWord(n, tuple(sigmas)), tuple(witness))


__all__ = [
    "UnrealizableStateError",
    "delete_bad",
    "d_stab",
    "d_iterates",
    "WitnessEntry",
    "ClassicalReconstruction",
    "reconstruct_classical",
]
