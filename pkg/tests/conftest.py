import pytest
from hypothesis import strategies as st

from pvbraid import BraidWord, GeneratorLetter, SignSet
from pvbraid.diagrams import DiagramLetter, DiagramWord

SIX_LETTER_TEXT = "n=4 a[1,3] a[2,4] a[1,4] a[1,4]^-1 a[2,4]^-1 a[1,3]^-1"


@pytest.fixture
def six_letter():
    return BraidWord.of(4, (1, 3), (2, 4), (1, 4), (1, 4, -1), (2, 4, -1), (1, 3, -1))


@st.composite
def letters(draw, n):
    i = draw(st.integers(1, n))
    j = draw(st.integers(1, n).filter(lambda j: j != i))
    return GeneratorLetter(i, j, draw(st.sampled_from((1, -1))))


@st.composite
def words(draw, n=None, max_size=12, min_n=2, max_n=5):
    if n is None:
        n = draw(st.integers(min_n, max_n))
    return BraidWord(n, tuple(draw(st.lists(letters(n), max_size=max_size))))


@st.composite
def sign_sets(draw, n=None, min_n=2, max_n=6):
    if n is None:
        n = draw(st.integers(min_n, max_n))
    return SignSet(n, draw(st.integers(0, (1 << (n * (n - 1) // 2)) - 1)))


@st.composite
def diagrams(draw, n=None, max_size=12, classical=False):
    if n is None:
        n = draw(st.integers(2, 5))
    kinds = ("s",) if classical else ("s", "s", "v")
    out = []
    for _ in range(draw(st.integers(0, max_size))):
        kind = draw(st.sampled_from(kinds))
        p = draw(st.integers(1, n - 1))
        out.append(DiagramLetter(kind, p, draw(st.sampled_from((1, -1))) if kind == "s" else None))
    return DiagramWord(n, tuple(out))
