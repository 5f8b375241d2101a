"""
Right action of braid words on sign sets, realizability and adjacency.

A letter on the strand pair ``{i, j}`` negates ``s(i,j)`` and ``s(j,i)`` and
leaves every other sign alone.  The exponent plays no role: negation is an
involution, so ``a[i,j]``, ``a[i,j]^-1`` and ``a[j,i]`` all act the same way.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .core import BraidError, BraidWord, GeneratorLetter, SignSet, pair_bits


@dataclass(frozen=True)
class Realization:
    """A linear order of the strands inducing a sign set.

    ``order`` lists strands from left to right; ``ranks[i - 1]`` is the
    1-based position of strand ``i``, so ``s(i,j) = sign(ranks[j-1] - ranks[i-1])``.
    """

    order: tuple[int, ...]

    @property
    def ranks(self) -> tuple[int, ...]:
        r = [0] * len(self.order)
        for pos, strand in enumerate(self.order, 1):
            r[strand - 1] = pos
        return tuple(r)

    def sign_set(self) -> SignSet:
        r = self.ranks
        n = len(r)
        return SignSet.from_mapping(
            n, {(i, j): 1 if r[j - 1] > r[i - 1] else -1 for (i, j) in pair_bits(n)}
        )


def _check_letter(S: SignSet, g: GeneratorLetter):
    if g.over > S.n or g.under > S.n:
        raise BraidError(f"{g} out of range for n={S.n}")


def apply_letter(S: SignSet, g: GeneratorLetter) -> SignSet:
    _check_letter(S, g)
    return S.flip(g.over, g.under)


def act(w: BraidWord, S: SignSet) -> SignSet:
    """Apply the letters of ``w`` to ``S`` in word order."""
    if w.n != S.n:
        raise BraidError(f"strand count mismatch: word n={w.n}, sign set n={S.n}")
    for g in w.letters:
        S = apply_letter(S, g)
    return S


def prefix_states(w: BraidWord, S0: SignSet) -> list[SignSet]:
    """States before each letter and after the last one; ``len == len(w) + 1``."""
    if w.n != S0.n:
        raise BraidError(f"strand count mismatch: word n={w.n}, sign set n={S0.n}")
    states = [S0]
    for g in w.letters:
        states.append(apply_letter(states[-1], g))
    return states


def is_realizable(S: SignSet) -> Realization | None:
    n = S.n
    before = {(i, j): S.sign(i, j) == 1 for i in range(1, n + 1) for j in range(1, n + 1) if i != j}
    # a tournament is a strict total order iff it has no directed 3-cycle
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i == j or not before[i, j]:
                continue
            for k in range(1, n + 1):
                if k != i and k != j and before[j, k] and not before[i, k]:
                    return None
    # out-degree counts the strands to the right
    outdeg = {i: sum(before[i, j] for j in range(1, n + 1) if j != i) for i in range(1, n + 1)}
    return Realization(tuple(sorted(outdeg, key=lambda i: -outdeg[i])))


@lru_cache(maxsize=None)
def _adjacency_table(n: int, i: int, j: int) -> tuple[tuple[int, int, int], ...]:
    # s(i,k) == s(j,k) iff bit(i,k) ^ bit(j,k) equals [k strictly between i and j]
    bits = pair_bits(n)
    lo, hi = min(i, j), max(i, j)
    rows = []
    for k in range(1, n + 1):
        if k in (i, j):
            continue
        bik = bits[min(i, k), max(i, k)]
        bjk = bits[min(j, k), max(j, k)]
        rows.append((bik, bjk, int(lo < k < hi)))
    return tuple(rows)


def adjacent(S: SignSet, i: int, j: int) -> bool:
    """True when ``s(i,k) == s(j,k)`` for every third index ``k``."""
    if i == j:
        raise BraidError("adjacency needs two distinct indices")
    if not (1 <= i <= S.n and 1 <= j <= S.n):
        raise BraidError(f"indices ({i},{j}) out of range for n={S.n}")
    bits = S.bits
    for bik, bjk, between in _adjacency_table(S.n, i, j):
        if ((bits >> bik) ^ (bits >> bjk)) & 1 != between:
            return False
    return True


__all__ = ["Realization", "apply_letter", "act", "prefix_states", "is_realizable", "adjacent"]
