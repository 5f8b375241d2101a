"""
Defining relations of PB_n and its two quotients as oriented rewrite rules,
one-step neighbourhoods, and a bounded bidirectional breadth-first search
for word equivalence.

Rule alphabet:

``free_reduce`` / ``free_insert``
    delete / insert ``g g^-1``.
``far_comm``
    swap two adjacent letters on disjoint strand pairs, any exponents.
``r3``
    ``a[i,j] a[i,k] a[j,k] = a[j,k] a[i,k] a[i,j]`` closed under both
    orientations and under inverting both sides.  Every instance, in every
    orientation, rewrites by reversing the three-letter window; the matched
    windows are the all-positive and all-negative ones whose pairs follow
    the pattern (or its reverse).
``virtualize`` (TildePBn only)
    ``a[i,j]^e -> a[j,i]^e``.
``involutive`` (Gn2 only)
    ``g g -> e`` (``square_reduce``), ``g -> g^-1`` (``flip``) and, with
    growth, ``e -> g g`` (``square_insert``).

The search never claims equality without a replayable trace; when the bounds
run out it answers ``unknown``.  Abelian invariants that survive every rule
of a mode (exponent sums per generator, per strand pair, or per generator
mod 2) certify that two words cannot be joined, in which case the search is
skipped and ``separated_by`` says why.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Hashable, Iterable, Iterator, Sequence

from .core import BraidError, BraidWord, GeneratorLetter, GroupMode, all_letters, pair_bits

RULES = ("far_comm", "free_insert", "free_reduce", "involutive", "r3", "virtualize")

DEFAULT_MAX_STATES = 10**6
DEFAULT_EXTRA_LEN = 4


@dataclass(frozen=True, order=True)
class Move:
    """One rule application; ``position`` is 1-based (insertion slots run 1..len+1)."""

    rule: str
    position: int
    letter: GeneratorLetter | None = None
    variant: str = ""

    def __str__(self):
        out = f"{self.rule}@{self.position}"
        if self.variant:
            out += f"[{self.variant}]"
        if self.letter is not None:
            out += f"({self.letter})"
        return out


class _Alphabet:
    """Integer coding of the letters on ``n`` strands plus lookup tables."""

    def __init__(self, n: int):
        self.n = n
        self.letters = all_letters(n)
        self.code = {g: c for c, g in enumerate(self.letters)}
        L = self.letters
        self.inv = [self.code[g.inverse()] for g in L]
        self.virt = [self.code[g.virtualized()] for g in L]
        bits = pair_bits(n)
        self.pair = [bits[g.pair] for g in L]
        self.disjoint = [[not (set(g.pair) & set(h.pair)) for h in L] for g in L]
        self.r3 = frozenset(self._r3_windows())

    def _r3_windows(self) -> Iterator[tuple[int, int, int]]:
        c = self.code
        rng = range(1, self.n + 1)
        for i in rng:
            for j in rng:
                for k in rng:
                    if len({i, j, k}) < 3:
                        continue
                    for e in (1, -1):
                        u = (c[GeneratorLetter(i, j, e)], c[GeneratorLetter(i, k, e)], c[GeneratorLetter(j, k, e)])
                        yield u
                        yield u[::-1]

    def encode(self, w: BraidWord) -> tuple[int, ...]:
        return tuple(self.code[g] for g in w.letters)

    def decode(self, codes: Sequence[int]) -> BraidWord:
        return BraidWord(self.n, tuple(self.letters[c] for c in codes))


@lru_cache(maxsize=None)
def _alphabet(n: int) -> _Alphabet:
    return _Alphabet(n)


def _expand(
    w: tuple[int, ...], A: _Alphabet, mode: GroupMode, allow_growth: bool, max_len: int | None = None
) -> Iterator[tuple[tuple[int, ...], tuple]]:
    """Yield ``(neighbour, move_key)`` in lexicographic (rule, position) order."""
    L = len(w)
    inv = A.inv
    # far_comm
    disjoint = A.disjoint
    for p in range(L - 1):
        x, y = w[p], w[p + 1]
        if disjoint[x][y]:
            yield w[:p] + (y, x) + w[p + 2:], ("far_comm", p + 1, None, "")
    # free_insert
    if allow_growth and (max_len is None or L + 2 <= max_len):
        ncodes = len(A.letters)
        for p in range(L + 1):
            head, tail = w[:p], w[p:]
            for c in range(ncodes):
                yield head + (c, inv[c]) + tail, ("free_insert", p + 1, c, "")
    # free_reduce
    for p in range(L - 1):
        if w[p + 1] == inv[w[p]]:
            yield w[:p] + w[p + 2:], ("free_reduce", p + 1, None, "")
    # involutive
    if mode is GroupMode.Gn2:
        for p in range(L):
            if p < L - 1 and w[p] == w[p + 1]:
                yield w[:p] + w[p + 2:], ("involutive", p + 1, None, "square_reduce")
            yield w[:p] + (inv[w[p]],) + w[p + 1:], ("involutive", p + 1, None, "flip")
        if allow_growth and (max_len is None or L + 2 <= max_len):
            for p in range(L + 1):
                head, tail = w[:p], w[p:]
                for c in range(len(A.letters)):
                    yield head + (c, c) + tail, ("involutive", p + 1, c, "square_insert")
    # r3
    r3 = A.r3
    for p in range(L - 2):
        win = w[p:p + 3]
        if win in r3:
            yield w[:p] + win[::-1] + w[p + 3:], ("r3", p + 1, None, "")
    # virtualize
    if mode is GroupMode.TildePBn:
        virt = A.virt
        for p in range(L):
            yield w[:p] + (virt[w[p]],) + w[p + 1:], ("virtualize", p + 1, None, "")


def _move_from_key(A: _Alphabet, key: tuple) -> Move:
    rule, pos, c, variant = key
    return Move(rule, pos, None if c is None else A.letters[c], variant)


def neighbors(w: BraidWord, mode: GroupMode = GroupMode.PBn, allow_growth: bool = False) -> list[tuple[BraidWord, Move]]:
    """Every word one oriented rule application away from ``w``, in (rule, position) order."""
    A = _alphabet(w.n)
    return [(A.decode(x), _move_from_key(A, key)) for x, key in _expand(A.encode(w), A, mode, allow_growth)]


def apply_move(w: BraidWord, move: Move, mode: GroupMode | None = None) -> BraidWord:
    """Apply a single move, checking that it is legal (in ``mode`` when given)."""
    L = list(w.letters)
    p = move.position - 1
    rule = move.rule

    def fail(why):
        raise BraidError(f"cannot apply {move} to {w}: {why}")

    if rule == "free_insert":
        if move.letter is None or not 0 <= p <= len(L):
            fail("bad insertion")
        L[p:p] = [move.letter, move.letter.inverse()]
    elif rule == "free_reduce":
        if not (0 <= p < len(L) - 1 and L[p + 1] == L[p].inverse()):
            fail("no inverse pair")
        del L[p:p + 2]
    elif rule == "far_comm":
        if not (0 <= p < len(L) - 1 and not set(L[p].pair) & set(L[p + 1].pair)):
            fail("letters share a strand")
        L[p], L[p + 1] = L[p + 1], L[p]
    elif rule == "r3":
        A = _alphabet(w.n)
        if not (0 <= p < len(L) - 2 and tuple(A.code[g] for g in L[p:p + 3]) in A.r3):
            fail("window is not an r3 pattern")
        L[p:p + 3] = L[p:p + 3][::-1]
    elif rule == "virtualize":
        if mode not in (None, GroupMode.TildePBn):
            fail("virtualization needs TildePBn")
        if not 0 <= p < len(L):
            fail("position out of range")
        L[p] = L[p].virtualized()
    elif rule == "involutive":
        if mode not in (None, GroupMode.Gn2):
            fail("involutive moves need Gn2")
        if move.variant == "square_reduce":
            if not (0 <= p < len(L) - 1 and L[p] == L[p + 1]):
                fail("no square")
            del L[p:p + 2]
        elif move.variant == "square_insert":
            if move.letter is None or not 0 <= p <= len(L):
                fail("bad insertion")
            L[p:p] = [move.letter, move.letter]
        elif move.variant == "flip":
            if not 0 <= p < len(L):
                fail("position out of range")
            L[p] = L[p].inverse()
        else:
            fail("unknown variant")
    else:
        fail("unknown rule")
    return BraidWord(w.n, tuple(L))


def position_map(move: Move, length: int) -> dict[int, int]:
    """Where each surviving letter of a word of ``length`` letters lands after ``move``.

    0-based.  Deleted letters are absent; inserted letters have no preimage.
    ``far_comm`` swaps its two letters and ``r3`` reverses its window.
    """
    p = move.position - 1
    out = {q: q for q in range(length)}
    grows = move.rule == "free_insert" or move.variant == "square_insert"
    shrinks = move.rule == "free_reduce" or move.variant == "square_reduce"
    if grows:
        out = {q: (q if q < p else q + 2) for q in range(length)}
    elif shrinks:
        out = {q: (q if q < p else q - 2) for q in range(length) if q not in (p, p + 1)}
    elif move.rule == "far_comm":
        out[p], out[p + 1] = p + 1, p
    elif move.rule == "r3":
        out[p], out[p + 2] = p + 2, p
    return out


def pair_exponent_sums(w: BraidWord) -> dict[tuple[int, int], int]:
    """Exponent sum over each unordered strand pair, zeros included."""
    sums = dict.fromkeys(pair_bits(w.n), 0)
    for g in w.letters:
        sums[g.pair] += g.exponent
    return sums


def generator_exponent_sums(w: BraidWord) -> Counter:
    """Exponent sum per ordered generator, zero entries dropped."""
    out = Counter()
    for g in w.letters:
        out[g.over, g.under] += g.exponent
    return Counter({k: v for k, v in out.items() if v})


def _invariant(w: BraidWord, mode: GroupMode):
    if mode is GroupMode.PBn:
        return generator_exponent_sums(w)
    if mode is GroupMode.TildePBn:
        return pair_exponent_sums(w)
    counts = Counter((g.over, g.under) for g in w.letters)
    return frozenset(k for k, v in counts.items() if v % 2)


def separating_invariant(w1: BraidWord, w2: BraidWord, mode: GroupMode) -> str | None:
    """Name of an abelian invariant of ``mode`` that differs on the two words, if any."""
    if _invariant(w1, mode) == _invariant(w2, mode):
        return None
    return {
        GroupMode.PBn: "generator exponent sums",
        GroupMode.TildePBn: "pair exponent sums",
        GroupMode.Gn2: "generator counts mod 2",
    }[mode]


# generic search -------------------------------------------------------------


@dataclass
class SearchResult:
    path: list | None
    states: int
    frontier_peak: int


def bidirectional_search(
    source: Hashable,
    target: Hashable,
    expand: Callable[[Hashable], Iterable[Hashable]],
    max_states: int,
) -> SearchResult:
    """Layered BFS from both ends; returns the state path or ``None``.

    ``expand`` must be symmetric (``y in expand(x)`` iff ``x in expand(y)``)
    and should already drop states beyond any length bound.  The side with
    the smaller frontier is grown by one full layer at a time, forward side
    on ties.
    """
    if source == target:
        return SearchResult([source], 1, 1)
    parents = ({source: None}, {target: None})
    frontiers = ([source], [target])
    peak = 1
    while frontiers[0] and frontiers[1]:
        side = 0 if len(frontiers[0]) <= len(frontiers[1]) else 1
        mine, other = parents[side], parents[1 - side]
        nxt = []
        for x in frontiers[side]:
            for y in expand(x):
                if y in mine:
                    continue
                mine[y] = x
                if y in other:
                    states = len(parents[0]) + len(parents[1])
                    return SearchResult(_join(parents, y), states, peak)
                nxt.append(y)
                if len(parents[0]) + len(parents[1]) >= max_states:
                    return SearchResult(None, len(parents[0]) + len(parents[1]), max(peak, len(nxt)))
        frontiers = (nxt, frontiers[1]) if side == 0 else (frontiers[0], nxt)
        peak = max(peak, len(frontiers[0]) + len(frontiers[1]))
    return SearchResult(None, len(parents[0]) + len(parents[1]), peak)


def _join(parents, meet):
    fwd, bwd = parents
    head = []
    x = meet
    while x is not None:
        head.append(x)
        x = fwd[x]
    head.reverse()
    x = bwd[meet]
    while x is not None:
        head.append(x)
        x = bwd[x]
    return head


# word equivalence -----------------------------------------------------------


@dataclass(frozen=True)
class TraceStep:
    move: Move
    word: BraidWord

    def __str__(self):
        return f"{self.move} -> {self.word}"


@dataclass(frozen=True)
class EquivalenceVerdict:
    status: str  # "equal" or "unknown"
    trace: tuple[TraceStep, ...] = ()
    stats: dict = field(default_factory=dict)
    separated_by: str | None = None

    @property
    def equal(self) -> bool:
        return self.status == "equal"


def replay(source: BraidWord, trace: Sequence[TraceStep], mode: GroupMode | None = None) -> BraidWord:
    """Apply the moves of a trace in turn, checking each intermediate word."""
    w = source
    for step in trace:
        w = apply_move(w, step.move, mode)
        if w != step.word:
            raise BraidError(f"trace step {step} produced {w}")
    return w


def _step_between(A: _Alphabet, x, y, mode) -> Move:
    for z, key in _expand(x, A, mode, True):
        if z == y:
            return _move_from_key(A, key)
    raise AssertionError(f"no single move from {A.decode(x)} to {A.decode(y)}")


def equivalent(
    w1: BraidWord,
    w2: BraidWord,
    mode: GroupMode = GroupMode.PBn,
    max_len: int | None = None,
    max_states: int = DEFAULT_MAX_STATES,
) -> EquivalenceVerdict:
    """Search for a chain of relations of ``mode`` joining ``w1`` to ``w2``.

    Intermediate words are capped at ``max_len`` letters (default: the longer
    input plus 4) and the two search trees at ``max_states`` words in total.
    The verdict's status depends only on the unordered pair of inputs.
    """
    if w1.n != w2.n:
        raise BraidError(f"strand count mismatch: {w1.n} vs {w2.n}")
    if max_len is None:
        max_len = max(len(w1), len(w2)) + DEFAULT_EXTRA_LEN
    if max_len < max(len(w1), len(w2)):
        raise BraidError(f"max_len={max_len} is shorter than an input word")
    sep = separating_invariant(w1, w2, mode)
    if sep is not None:
        return EquivalenceVerdict("unknown", (), {"states": 0, "frontier_peak": 0}, sep)

    A = _alphabet(w1.n)
    c1, c2 = A.encode(w1), A.encode(w2)
    swapped = (len(c2), c2) < (len(c1), c1)
    src, dst = (c2, c1) if swapped else (c1, c2)

    def expand(x):
        return (y for y, _ in _expand(x, A, mode, True, max_len) if len(y) <= max_len)

    res = bidirectional_search(src, dst, expand, max_states)
    stats = {"states": res.states, "frontier_peak": res.frontier_peak}
    if res.path is None:
        return EquivalenceVerdict("unknown", (), stats)
    path = res.path[::-1] if swapped else res.path
    steps = tuple(
        TraceStep(_step_between(A, x, y, mode), A.decode(y)) for x, y in zip(path, path[1:])
    )
    return EquivalenceVerdict("equal", steps, stats)


def r3_windows(n: int) -> list[BraidWord]:
    """Every three-letter window the ``r3`` rule rewrites, sorted."""
    A = _alphabet(n)
    return [A.decode(t) for t in sorted(A.r3)]


def relation_instances(n: int, mode: GroupMode) -> Iterator[tuple[str, BraidWord, BraidWord]]:
    """Both sides of every defining relation of ``mode`` on ``n`` strands.

    Free-group cancellation is included as ``g g^-1 = e``.
    """
    rng = range(1, n + 1)
    e = BraidWord(n)
    for g in all_letters(n):
        yield "free_reduce", BraidWord(n, (g, g.inverse())), e
    for i in rng:
        for j in rng:
            for k in rng:
                if len({i, j, k}) == 3:
                    lhs = BraidWord.of(n, (i, j), (i, k), (j, k))
                    rhs = BraidWord.of(n, (j, k), (i, k), (i, j))
                    yield "r3", lhs, rhs
    for i in rng:
        for j in rng:
            for k in rng:
                for l in rng:
                    if len({i, j, k, l}) == 4:
                        yield "far_comm", BraidWord.of(n, (i, j), (k, l)), BraidWord.of(n, (k, l), (i, j))
    if mode is GroupMode.TildePBn:
        for i in rng:
            for j in rng:
                if i != j:
                    yield "virtualize", BraidWord.of(n, (i, j)), BraidWord.of(n, (j, i))
    if mode is GroupMode.Gn2:
        for i in rng:
            for j in rng:
                if i != j:
                    yield "involutive", BraidWord.of(n, (i, j), (i, j)), e


__all__ = [
    "RULES",
    "Move",
    "TraceStep",
    "EquivalenceVerdict",
    "SearchResult",
    "neighbors",
    "apply_move",
    "position_map",
    "replay",
    "equivalent",
    "bidirectional_search",
    "pair_exponent_sums",
    "generator_exponent_sums",
    "separating_invariant",
    "relation_instances",
    "r3_windows",
]
