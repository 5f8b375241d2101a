"""Bounded word problem in the three groups: traces when equal, an
invariant when provably different, ``unknown`` when the budget runs out."""

from pvbraid import GroupMode, equivalent, parse_word

cases = [
    ("n=3 a[1,2] a[1,3] a[2,3]", "n=3 a[2,3] a[1,3] a[1,2]", GroupMode.PBn),
    ("n=4 a[1,2] a[3,4]^-1", "n=4 a[3,4]^-1 a[1,2]", GroupMode.PBn),
    ("n=3 a[1,2]", "n=3 a[2,1]", GroupMode.PBn),
    ("n=3 a[1,2]", "n=3 a[2,1]", GroupMode.TildePBn),
    ("n=3 a[1,2] a[1,2]", "n=3", GroupMode.Gn2),
    ("n=3 a[1,2] a[1,3]", "n=3 a[1,3] a[1,2]", GroupMode.PBn),
]
for left, right, mode in cases:
    v = equivalent(parse_word(left), parse_word(right), mode, max_states=10**5)
    print(f"[{mode.value}] {left}  vs  {right}: {v.status}")
    if v.separated_by:
        print("    separated by", v.separated_by)
    for step in v.trace:
        print("    ", step.move, "->", step.word)
