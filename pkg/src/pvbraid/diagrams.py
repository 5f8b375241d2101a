"""
Braid diagrams as words in classical crossings ``s<p>^{±1}`` and virtual
crossings ``v<p>``, and the map ``o`` to words in the ``a[i,j]`` generators.

Crossing convention (pinned here, used by every derived example): in
``s<p>`` the strand entering at position ``p`` passes over the strand at
``p+1``; in ``s<p>^-1`` it passes under.  Reading a classical crossing top to
bottom, the overcrossing strand is ``i`` and the undercrossing strand ``j``;
the letter is ``a[i,j]`` when the under strand enters from the top-right and
``a[i,j]^-1`` when it enters from the top-left.  So ``s<p>`` emits
``a[left,right]`` and ``s<p>^-1`` emits ``a[right,left]^-1``.  The mirror
convention changes every image by a global exponent flip, which is an
automorphism of all three groups.

Strands are numbered globally by their endpoints; for a pure diagram the top
and bottom numbering agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .core import BraidError, BraidWord, GeneratorLetter, PreconditionError


@dataclass(frozen=True, order=True)
class DiagramLetter:
    kind: str  # "s" classical, "v" virtual
    position: int
    exponent: int | None = 1

    def __post_init__(self):
        if self.kind == "v":
            if self.exponent is not None:
                object.__setattr__(self, "exponent", None)
        elif self.kind == "s":
            if self.exponent not in (1, -1):
                raise BraidError(f"classical crossing exponent must be +1 or -1, got {self.exponent}")
        else:
            raise BraidError(f"unknown crossing kind {self.kind!r}")
        if self.position < 1:
            raise BraidError("crossing positions are 1-based")

    @property
    def classical(self) -> bool:
        return self.kind == "s"

    def inverse(self) -> DiagramLetter:
        if self.kind == "v":
            return self
        return DiagramLetter("s", self.position, -self.exponent)

    def __str__(self):
        if self.kind == "v":
            return f"v{self.position}"
        return f"s{self.position}" + ("" if self.exponent == 1 else "^-1")


def s(p: int, exponent: int = 1) -> DiagramLetter:
    return DiagramLetter("s", p, exponent)


def v(p: int) -> DiagramLetter:
    return DiagramLetter("v", p, None)


@dataclass(frozen=True)
class DiagramWord:
    n: int
    letters: tuple[DiagramLetter, ...] = ()

    def __post_init__(self):
        if self.n < 2:
            raise BraidError(f"strand count must be at least 2, got {self.n}")
        letters = tuple(self.letters)
        object.__setattr__(self, "letters", letters)
        for x in letters:
            if not 1 <= x.position <= self.n - 1:
                raise BraidError(f"{x} out of range for n={self.n}")

    @classmethod
    def of(cls, n: int, *letters: DiagramLetter) -> DiagramWord:
        return cls(n, letters)

    @classmethod
    def classical_word(cls, n: int, sigmas: Sequence[int]) -> DiagramWord:
        """Build a v-free word from signed positions, ``[1, -2]`` is ``s1 s2^-1``."""
        return cls(n, tuple(DiagramLetter("s", abs(p), 1 if p > 0 else -1) for p in sigmas))

    def __len__(self):
        return len(self.letters)

    def __iter__(self) -> Iterator[DiagramLetter]:
        return iter(self.letters)

    def __mul__(self, other: DiagramWord) -> DiagramWord:
        if self.n != other.n:
            raise BraidError(f"strand count mismatch: {self.n} vs {other.n}")
        return DiagramWord(self.n, self.letters + other.letters)

    def __str__(self):
        return " ".join(map(str, self.letters)) or "e"

    @property
    def is_classical(self) -> bool:
        return all(x.classical for x in self.letters)

    def inverse(self) -> DiagramWord:
        return DiagramWord(self.n, tuple(x.inverse() for x in reversed(self.letters)))


def crossing_letter(left: int, right: int, exponent: int) -> GeneratorLetter:
    """The generator read off a classical crossing between two strands.

    ``left`` and ``right`` are the strands entering at positions ``p`` and ``p+1``.
    """
    if exponent == 1:
        return GeneratorLetter(left, right, 1)
    return GeneratorLetter(right, left, -1)


def strand_positions(dw: DiagramWord) -> list[tuple[int, ...]]:
    """Occupant of each position before every letter and after the last one."""
    current = list(range(1, dw.n + 1))
    out = [tuple(current)]
    for x in dw.letters:
        p = x.position - 1
        current[p], current[p + 1] = current[p + 1], current[p]
        out.append(tuple(current))
    return out


def end_permutation(dw: DiagramWord) -> tuple[int, ...]:
    """Strand found at each bottom position; the identity iff the diagram is pure."""
    return strand_positions(dw)[-1]


def is_pure(dw: DiagramWord) -> bool:
    return end_permutation(dw) == tuple(range(1, dw.n + 1))


def o_map(dw: DiagramWord) -> BraidWord:
    """Read the classical crossings top to bottom; virtual crossings emit nothing."""
    if not is_pure(dw):
        raise PreconditionError(f"diagram {dw} is not pure")
    letters = []
    positions = strand_positions(dw)
    for k, x in enumerate(dw.letters):
        if x.classical:
            occ = positions[k]
            letters.append(crossing_letter(occ[x.position - 1], occ[x.position], x.exponent))
    return BraidWord(dw.n, tuple(letters))


__all__ = [
    "DiagramLetter",
    "DiagramWord",
    "s",
    "v",
    "crossing_letter",
    "strand_positions",
    "end_permutation",
    "is_pure",
    "o_map",
]
