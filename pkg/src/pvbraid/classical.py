"""
Classical braid words in the Artin generators ``s<p>^{±1}``: bounded
relation search with traces, and Artin's action on the free group as an
exact equality test.

The Artin action is faithful, so two classical words are equal as braids
exactly when they induce the same automorphism of ``F_n``.  It is used only
as an independent oracle when checking the inclusion of classical braids at
desk scale; nothing in the projection machinery depends on it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .core import BraidError
from .diagrams import DiagramLetter, DiagramWord
from .rewriting import bidirectional_search

SIGMA_RULES = ("braid", "far_comm", "free_insert", "free_reduce")


def _free_reduce(word):
    out = []
    for x in word:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def _free_inverse(word):
    return tuple(-x for x in reversed(word))


def artin_action(dw: DiagramWord) -> tuple[tuple[int, ...], ...]:
    """Images of the free generators ``x_1..x_n`` as reduced words (``±k`` is ``x_k^{±1}``)."""
    if not dw.is_classical:
        raise BraidError("the Artin action is only used on classical diagrams")
    images = [(k,) for k in range(1, dw.n + 1)]
    for x in dw.letters:
        p = x.position - 1
        left, right = images[p], images[p + 1]
        if x.exponent == 1:
            images[p] = _free_reduce(left + right + _free_inverse(left))
            images[p + 1] = left
        else:
            images[p] = right
            images[p + 1] = _free_reduce(_free_inverse(right) + left + right)
    return tuple(images)


def classically_equal(d1: DiagramWord, d2: DiagramWord) -> bool:
    """Exact equality of two classical braids."""
    if d1.n != d2.n:
        raise BraidError(f"strand count mismatch: {d1.n} vs {d2.n}")
    return artin_action(d1) == artin_action(d2)


def _codes(dw: DiagramWord) -> tuple[int, ...]:
    return tuple(x.position * x.exponent for x in dw.letters)


def _decode(n, codes) -> DiagramWord:
    return DiagramWord(n, tuple(DiagramLetter("s", abs(c), 1 if c > 0 else -1) for c in codes))


def sigma_neighbors(w: tuple[int, ...], n: int, max_len: int | None = None) -> Iterator[tuple[tuple[int, ...], str, int]]:
    """One-step neighbours of a signed-position word under the Artin relations."""
    L = len(w)
    for p in range(L - 2):
        x, y, z = w[p:p + 3]
        if x == z and abs(x - y) == 1 and (x > 0) == (y > 0):
            yield w[:p] + (y, x, y) + w[p + 3:], "braid", p + 1
    for p in range(L - 1):
        if abs(abs(w[p]) - abs(w[p + 1])) >= 2:
            yield w[:p] + (w[p + 1], w[p]) + w[p + 2:], "far_comm", p + 1
    if max_len is None or L + 2 <= max_len:
        for p in range(L + 1):
            for q in range(1, n):
                for c in (q, -q):
                    yield w[:p] + (c, -c) + w[p:], "free_insert", p + 1
    for p in range(L - 1):
        if w[p] == -w[p + 1]:
            yield w[:p] + w[p + 2:], "free_reduce", p + 1


@dataclass(frozen=True)
class SigmaVerdict:
    status: str  # "equal" or "unknown"
    path: tuple[DiagramWord, ...] = ()
    states: int = 0


def sigma_equivalent(
    d1: DiagramWord, d2: DiagramWord, max_len: int | None = None, max_states: int = 10**5
) -> SigmaVerdict:
    """Bounded search for a chain of Artin relations joining two classical words."""
    if d1.n != d2.n:
        raise BraidError(f"strand count mismatch: {d1.n} vs {d2.n}")
    if not (d1.is_classical and d2.is_classical):
        raise BraidError("sigma_equivalent takes classical diagrams only")
    n = d1.n
    if max_len is None:
        max_len = max(len(d1), len(d2)) + 4
    if sum(x.exponent for x in d1) != sum(x.exponent for x in d2):
        return SigmaVerdict("unknown")

    def expand(x):
        return (y for y, _, _ in sigma_neighbors(x, n, max_len))

    res = bidirectional_search(_codes(d1), _codes(d2), expand, max_states)
    if res.path is None:
        return SigmaVerdict("unknown", (), res.states)
    return SigmaVerdict("equal", tuple(_decode(n, c) for c in res.path), res.states)


__all__ = [
    "SIGMA_RULES",
    "artin_action",
    "classically_equal",
    "sigma_neighbors",
    "SigmaVerdict",
    "sigma_equivalent",
]
