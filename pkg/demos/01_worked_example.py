"""Marks, one-step projection, its fixpoint, and a replayable equality trace
for the six-letter word on four strands."""

from pvbraid import GroupMode, classify, d_stab, delete_bad, equivalent, parse_word
from pvbraid.rewriting import replay
from pvbraid.textio import render_evolution

w = parse_word("n=4 a[1,3] a[2,4] a[1,4] a[1,4]^-1 a[2,4]^-1 a[1,3]^-1")

print(render_evolution(w))
print("marks:", classify(w).marks())

once = delete_bad(w)
print("d(w)      =", once)
print("d(d(w))   =", delete_bad(once))
print("d_stab(w) =", d_stab(w))

# w itself is trivial: the middle pair cancels, then the rest unwinds.
v = equivalent(w, parse_word("n=4"), GroupMode.PBn)
print("w == e in PBn:", v.status, f"({v.stats['states']} states)")
for step in v.trace:
    print("   ", step.move, "->", step.word)
assert replay(w, v.trace, GroupMode.PBn).letters == ()
