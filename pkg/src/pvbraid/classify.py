"""Good/bad classification of the letters of a braid word."""

from __future__ import annotations

from dataclasses import dataclass

from .core import BraidWord, SignSet, canonical_sign_set
from .signs import adjacent, prefix_states


@dataclass(frozen=True)
class AnnotatedWord:
    word: BraidWord
    flags: tuple[bool, ...]
    states: tuple[SignSet, ...]

    @property
    def good_positions(self) -> list[int]:
        return [k for k, f in enumerate(self.flags) if f]

    def marks(self) -> str:
        return " ".join("G" if f else "B" for f in self.flags)


def classify(w: BraidWord, initial: SignSet | None = None) -> AnnotatedWord:
    """Flag each letter good when its two strands are adjacent in the state just before it.

    The state sequence starts from the canonical sign set unless ``initial``
    is given; the lemma campaigns use that hook to quantify over all states.
    """
    S0 = canonical_sign_set(w.n) if initial is None else initial
    states = prefix_states(w, S0)
    flags = tuple(adjacent(states[k], g.over, g.under) for k, g in enumerate(w.letters))
    return AnnotatedWord(w, flags, tuple(states))


def flags(w: BraidWord, initial: SignSet | None = None) -> tuple[bool, ...]:
    return classify(w, initial).flags


__all__ = ["AnnotatedWord", "classify", "flags"]
