"""
Value types shared by the whole package.

A pure virtual braid word is a finite sequence of letters ``a[i,j]^e`` on
``n`` strands, where ``i`` is the overcrossing strand, ``j`` the
undercrossing strand and ``e = ±1`` the writhe of the crossing.  Strand
indices are 1-based throughout.

A sign set assigns ``±1`` to every ordered pair of distinct strands with
``s(i,j) = -s(j,i)``.  Only the strict upper triangle is stored, packed in a
bit mask (a set bit means ``s(i,j) = -1`` for ``i < j``), so antisymmetry
holds by construction and the canonical sign set is the zero mask.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence


class BraidError(ValueError):
    """Raised for malformed letters, words or sign sets."""


class PreconditionError(ValueError):
    """Raised when an operation is called outside its documented domain."""


class GroupMode(enum.Enum):
    """Which presentation a word is read in.

    ``PBn`` has the R3 and far-commutativity relations only, ``TildePBn``
    additionally identifies ``a[i,j]`` with ``a[j,i]`` and ``Gn2`` additionally
    makes every generator an involution.
    """

    PBn = "PBn"
    TildePBn = "TildePBn"
    Gn2 = "Gn2"

    @classmethod
    def parse(cls, text: str) -> "GroupMode":
        key = text.strip().lower().replace("_", "").replace("-", "")
        for mode in cls:
            if mode.value.lower() == key:
                return mode
        aliases = {"pb": cls.PBn, "tilde": cls.TildePBn, "g2": cls.Gn2}
        if key in aliases:
            return aliases[key]
        raise BraidError(f"unknown group mode {text!r}")


@dataclass(frozen=True, order=True)
class GeneratorLetter:
    over: int
    under: int
    exponent: int = 1

    def __post_init__(self):
        if self.over == self.under:
            raise BraidError(f"a[{self.over},{self.under}]: indices must differ")
        if self.over < 1 or self.under < 1:
            raise BraidError(f"a[{self.over},{self.under}]: indices are 1-based")
        if self.exponent not in (1, -1):
            raise BraidError(f"exponent must be +1 or -1, got {self.exponent}")

    @property
    def pair(self) -> tuple[int, int]:
        """The unordered strand pair, smaller index first."""
        return (self.over, self.under) if self.over < self.under else (self.under, self.over)

    def inverse(self) -> GeneratorLetter:
        return GeneratorLetter(self.over, self.under, -self.exponent)

    def virtualized(self) -> GeneratorLetter:
        """Swap the over and under strands, keeping the writhe."""
        return GeneratorLetter(self.under, self.over, self.exponent)

    def __str__(self):
        base = f"a[{self.over},{self.under}]"
        return base if self.exponent == 1 else base + "^-1"


def a(i: int, j: int, exponent: int = 1) -> GeneratorLetter:
    """Shorthand constructor, ``a(1, 3, -1)`` is ``a[1,3]^-1``."""
    return GeneratorLetter(i, j, exponent)


@dataclass(frozen=True)
class BraidWord:
    n: int
    letters: tuple[GeneratorLetter, ...] = ()

    def __post_init__(self):
        if self.n < 2:
            raise BraidError(f"strand count must be at least 2, got {self.n}")
        letters = tuple(self.letters)
        object.__setattr__(self, "letters", letters)
        for g in letters:
            if not isinstance(g, GeneratorLetter):
                raise BraidError(f"not a generator letter: {g!r}")
            if g.over > self.n or g.under > self.n:
                raise BraidError(f"{g} out of range for n={self.n}")

    @classmethod
    def of(cls, n: int, *letters: GeneratorLetter | tuple[int, int] | tuple[int, int, int]) -> BraidWord:
        """Build a word from letters or ``(i, j[, e])`` tuples."""
        out = []
        for g in letters:
            out.append(g if isinstance(g, GeneratorLetter) else GeneratorLetter(*g))
        return cls(n, tuple(out))

    def __len__(self):
        return len(self.letters)

    def __iter__(self) -> Iterator[GeneratorLetter]:
        return iter(self.letters)

    def __getitem__(self, index):
        if isinstance(index, slice):
            return BraidWord(self.n, self.letters[index])
        return self.letters[index]

    def __mul__(self, other: BraidWord) -> BraidWord:
        _check_same_n(self, other)
        return BraidWord(self.n, self.letters + other.letters)

    def __str__(self):
        return " ".join(map(str, self.letters)) or "e"

    def replace(self, letters: Iterable[GeneratorLetter]) -> BraidWord:
        return BraidWord(self.n, tuple(letters))


def _check_same_n(x, y):
    if x.n != y.n:
        raise BraidError(f"strand count mismatch: {x.n} vs {y.n}")


def inverse_word(w: BraidWord) -> BraidWord:
    """Group inverse: reverse the letters and negate every exponent."""
    return BraidWord(w.n, tuple(g.inverse() for g in reversed(w.letters)))


@lru_cache(maxsize=None)
def pair_bits(n: int) -> dict[tuple[int, int], int]:
    """Bit position of each unordered pair ``(i, j)``, ``i < j``, in lexicographic order."""
    return {p: k for k, p in enumerate(itertools.combinations(range(1, n + 1), 2))}


@dataclass(frozen=True)
class SignSet:
    n: int
    bits: int = 0

    def __post_init__(self):
        if self.n < 2:
            raise BraidError(f"strand count must be at least 2, got {self.n}")
        npairs = self.n * (self.n - 1) // 2
        if not 0 <= self.bits < (1 << npairs):
            raise BraidError(f"sign mask {self.bits} out of range for n={self.n}")

    @classmethod
    def from_upper(cls, n: int, signs: Sequence[int]) -> SignSet:
        """Build from the upper-triangle signs listed in lexicographic pair order."""
        pairs = pair_bits(n)
        if len(signs) != len(pairs):
            raise BraidError(f"expected {len(pairs)} signs for n={n}, got {len(signs)}")
        bits = 0
        for k, s in enumerate(signs):
            if s not in (1, -1):
                raise BraidError(f"signs must be +1 or -1, got {s}")
            if s == -1:
                bits |= 1 << k
        return cls(n, bits)

    @classmethod
    def from_mapping(cls, n: int, mapping: dict[tuple[int, int], int]) -> SignSet:
        """Build from any ``{(i, j): ±1}`` mapping; antisymmetric entries must agree."""
        pairs = pair_bits(n)
        signs = [0] * len(pairs)
        for (i, j), s in mapping.items():
            if i > j:
                i, j, s = j, i, -s
            k = pairs.get((i, j))
            if k is None:
                raise BraidError(f"pair ({i},{j}) out of range for n={n}")
            if signs[k] and signs[k] != s:
                raise BraidError(f"conflicting signs for pair ({i},{j})")
            signs[k] = s
        if 0 in signs:
            raise BraidError("mapping does not cover every pair")
        return cls.from_upper(n, signs)

    def sign(self, i: int, j: int) -> int:
        if i == j:
            raise BraidError("sign of a pair needs two distinct indices")
        if i < j:
            return -1 if self.bits >> self._bit(i, j) & 1 else 1
        return 1 if self.bits >> self._bit(j, i) & 1 else -1

    def __getitem__(self, ij: tuple[int, int]) -> int:
        return self.sign(*ij)

    def _bit(self, i, j):
        try:
            return pair_bits(self.n)[i, j]
        except KeyError:
            raise BraidError(f"pair ({i},{j}) out of range for n={self.n}") from None

    def upper(self) -> tuple[int, ...]:
        """Upper-triangle signs in lexicographic pair order."""
        return tuple(-1 if self.bits >> k & 1 else 1 for k in range(len(pair_bits(self.n))))

    def items(self) -> Iterator[tuple[tuple[int, int], int]]:
        for (i, j), s in zip(pair_bits(self.n), self.upper()):
            yield (i, j), s

    def flip(self, i: int, j: int) -> SignSet:
        if i > j:
            i, j = j, i
        return SignSet(self.n, self.bits ^ (1 << self._bit(i, j)))

    def __str__(self):
        body = " ".join(f"s[{i},{j}]={s:+d}" for (i, j), s in self.items())
        return f"n={self.n} {body}"


def all_sign_sets(n: int) -> Iterator[SignSet]:
    for bits in range(1 << (n * (n - 1) // 2)):
        yield SignSet(n, bits)


def canonical_sign_set(n: int) -> SignSet:
    """The sign set of the natural order: ``s(i,j) = +1`` exactly when ``j > i``."""
    if n < 2:
        raise BraidError(f"strand count must be at least 2, got {n}")
    return SignSet(n, 0)


def all_letters(n: int) -> list[GeneratorLetter]:
    """Every generator and inverse generator on ``n`` strands, sorted."""
    return sorted(
        GeneratorLetter(i, j, e)
        for i in range(1, n + 1)
        for j in range(1, n + 1)
        if i != j
        for e in (1, -1)
    )


__all__ = [
    "BraidError",
    "PreconditionError",
    "GroupMode",
    "GeneratorLetter",
    "BraidWord",
    "SignSet",
    "a",
    "all_letters",
    "all_sign_sets",
    "canonical_sign_set",
    "inverse_word",
    "pair_bits",
]
