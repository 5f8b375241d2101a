"""
Text formats and ASCII rendering.

Words::

    n=4 a[1,3] a[2,4] a[1,4] a[1,4]^-1 a[2,4]^-1 a[1,3]^-1

Diagrams::

    n=3 s1 s2^-1 v1

Sign sets (every unordered pair once, either orientation)::

    n=3 s[1,2]=+1 s[1,3]=-1 s[2,3]=+1

Indices are 1-based and bracketed so ``a[1,13]`` is never ambiguous.  A
header with no letters is the empty word.
"""

from __future__ import annotations

import re

from .classify import classify
from .core import BraidError, BraidWord, GeneratorLetter, SignSet
from .diagrams import DiagramLetter, DiagramWord, crossing_letter, strand_positions
from .signs import is_realizable

_HEADER = re.compile(r"\s*n\s*=\s*(\d+)")
_WORD_TOKEN = re.compile(r"\s*a\[\s*(\d+)\s*,\s*(\d+)\s*\](\^-1)?")
_DIAGRAM_TOKEN = re.compile(r"\s*(?:s(\d+)(\^-1)?|v(\d+))")
_SIGN_TOKEN = re.compile(r"\s*s\[\s*(\d+)\s*,\s*(\d+)\s*\]\s*=\s*([+-]?1)")


class ParseError(BraidError):
    pass


def _scan(text: str, token: re.Pattern, what: str):
    m = _HEADER.match(text)
    if not m:
        raise ParseError(f"{what} must start with a header 'n=<int>': {text!r}")
    n = int(m.group(1))
    pos = m.end()
    out = []
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        t = token.match(text, pos)
        if not t or (t.end() < len(text) and not text[t.end()].isspace()):
            rest = text[pos:].split()[0]
            raise ParseError(f"bad {what} token {rest!r}")
        out.append(t)
        pos = t.end()
    return n, out


def parse_word(text: str) -> BraidWord:
    n, toks = _scan(text, _WORD_TOKEN, "word")
    letters = [GeneratorLetter(int(t.group(1)), int(t.group(2)), -1 if t.group(3) else 1) for t in toks]
    return BraidWord(n, tuple(letters))


def render_word(w: BraidWord) -> str:
    return " ".join([f"n={w.n}"] + [str(g) for g in w.letters])


def render_letters(w: BraidWord) -> str:
    """Just the letters, ``e`` for the empty word."""
    return str(w)


def parse_diagram(text: str) -> DiagramWord:
    n, toks = _scan(text, _DIAGRAM_TOKEN, "diagram")
    letters = []
    for t in toks:
        if t.group(3):
            letters.append(DiagramLetter("v", int(t.group(3)), None))
        else:
            letters.append(DiagramLetter("s", int(t.group(1)), -1 if t.group(2) else 1))
    return DiagramWord(n, tuple(letters))


def render_diagram(dw: DiagramWord) -> str:
    return " ".join([f"n={dw.n}"] + [str(x) for x in dw.letters])


def parse_signs(text: str) -> SignSet:
    n, toks = _scan(text, _SIGN_TOKEN, "sign set")
    mapping = {}
    for t in toks:
        i, j = int(t.group(1)), int(t.group(2))
        if (i, j) in mapping or (j, i) in mapping:
            raise ParseError(f"pair ({i},{j}) given twice")
        mapping[i, j] = int(t.group(3))
    return SignSet.from_mapping(n, mapping)


def render_signs(S: SignSet) -> str:
    return str(S)


def sign_string(S: SignSet) -> str:
    """Upper-triangle signs as a compact ``+``/``-`` string."""
    return "".join("+" if x == 1 else "-" for x in S.upper())


# ASCII pictures ------------------------------------------------------------------

_COL = 4


def render_diagram_ascii(dw: DiagramWord) -> str:
    """One row per crossing, one column per strand position.

    A classical crossing is drawn ``\\\\/`` when the left strand passes over
    and ``\\//`` when the right strand does; a virtual crossing is ``\\o/``.
    Strand labels are the global (endpoint) numbering.
    """
    n = dw.n
    width = _COL * (n - 1) + 1

    def labels(occ):
        row = [" "] * (width + 2)
        for q, strand in enumerate(occ):
            txt = str(strand)
            row[_COL * q:_COL * q + len(txt)] = txt
        return "".join(row).rstrip()

    positions = strand_positions(dw)
    lines = [labels(positions[0])]
    for k, x in enumerate(dw.letters):
        row = [" "] * width
        for q in range(n):
            row[_COL * q] = "|"
        c = _COL * (x.position - 1)
        mid = "o" if x.kind == "v" else ("\\" if x.exponent == 1 else "/")
        row[c:c + _COL + 1] = [" ", "\\", mid, "/", " "]
        note = f"{x}"
        if x.classical:
            occ = positions[k]
            note += f"  {crossing_letter(occ[x.position - 1], occ[x.position], x.exponent)}"
        lines.append("".join(row) + "    " + note)
    lines.append(labels(positions[-1]))
    return "\n".join(lines)


def render_evolution(w: BraidWord) -> str:
    """Letter-by-letter table of marks, states before each letter, and realizations."""
    ann = classify(w)
    head = f"{'#':>3}  {'letter':<12} {'mark':<4} {'state before':<16} order"
    lines = [head]
    for k, g in enumerate(w.letters):
        S = ann.states[k]
        real = is_realizable(S)
        order = " ".join(map(str, real.order)) if real else "-"
        mark = "G" if ann.flags[k] else "B"
        lines.append(f"{k + 1:>3}  {str(g):<12} {mark:<4} {sign_string(S):<16} {order}")
    S = ann.states[-1]
    real = is_realizable(S)
    lines.append(f"{'end':>3}  {'':<12} {'':<4} {sign_string(S):<16} {' '.join(map(str, real.order)) if real else '-'}")
    return "\n".join(lines)


__all__ = [
    "ParseError",
    "parse_word",
    "render_word",
    "render_letters",
    "parse_diagram",
    "render_diagram",
    "parse_signs",
    "render_signs",
    "sign_string",
    "render_diagram_ascii",
    "render_evolution",
]
