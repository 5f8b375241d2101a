"""Reading a pure diagram as a word, then rebuilding a classical diagram
from the word alone."""

from pvbraid import classify, o_map, parse_diagram, reconstruct_classical
from pvbraid.classical import classically_equal
from pvbraid.textio import render_diagram, render_diagram_ascii

# A classical pure braid: the full twist on three strands.
dw = parse_diagram("n=3 s1 s2 s1 s1 s2 s1")
print(render_diagram_ascii(dw))

w = o_map(dw)
print("\no(D) =", w)
print("marks:", classify(w).marks())

rec = reconstruct_classical(w)
print("rebuilt:", render_diagram(rec.sigma_word))
for e in rec.virtualization_witness:
    print(f"   {e.source!s:<10} -> {e.emitted!s:<10}", "virtualized" if e.virtualized else "")
print("same classical braid:", classically_equal(dw, rec.sigma_word))

# A virtual crossing in the middle makes some letters bad.
vw = o_map(parse_diagram("n=3 s1 v2 s1 s1 v2 s1"))
print("\nwith virtual crossings:", vw, "|", classify(vw).marks())
