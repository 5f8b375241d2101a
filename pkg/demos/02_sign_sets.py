"""How a word moves the canonical sign set around, and which states come
from a linear order of the strands."""

from pvbraid import act, adjacent, canonical_sign_set, is_realizable, parse_word, prefix_states
from pvbraid.core import all_sign_sets

w = parse_word("n=4 a[1,2] a[1,3] a[2,3]^-1 a[1,4]")
S0 = canonical_sign_set(4)
for k, S in enumerate(prefix_states(w, S0)):
    real = is_realizable(S)
    print(k, S, "->", real.order if real else "not realizable")

print("action ignores exponents:", act(w, S0) == act(parse_word("n=4 a[1,2]^-1 a[1,3] a[2,3] a[1,4]^-1"), S0))

# Out of 2^(n choose 2) sign sets only n! are realizable.
for n in range(2, 6):
    states = list(all_sign_sets(n))
    print(f"n={n}: {sum(is_realizable(S) is not None for S in states)} of {len(states)} realizable")

print("pair (1,2) adjacent in the canonical state:", adjacent(S0, 1, 2))
print("pair (1,3) adjacent in the canonical state:", adjacent(S0, 1, 3))
