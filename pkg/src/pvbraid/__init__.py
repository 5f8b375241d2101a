"""
Pure virtual braids in the ``a[i,j]`` presentation: the sign-set action,
good and bad crossings, the projection that deletes bad crossings, and
reconstruction of classical braids.
"""

from .classify import AnnotatedWord, classify
from .core import (
    BraidError,
    BraidWord,
    GeneratorLetter,
    GroupMode,
    PreconditionError,
    SignSet,
    a,
    canonical_sign_set,
    inverse_word,
)
from .diagrams import DiagramLetter, DiagramWord, end_permutation, o_map, s, v
from .projection import ClassicalReconstruction, d_stab, delete_bad, reconstruct_classical
from .rewriting import EquivalenceVerdict, equivalent, neighbors, pair_exponent_sums
from .signs import Realization, act, adjacent, apply_letter, is_realizable, prefix_states
from .textio import parse_diagram, parse_word, render_diagram, render_word

__version__ = "0.1.0"
