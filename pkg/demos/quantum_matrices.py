"""
Quantum 2x2 matrices inside a quantum torus
===========================================

Deleting derivations embed every torus-invariant prime quotient of quantum
matrices into a quantum torus.  We restore the generators for the zero
ideal, check the defining relations, and compare a few quantum minors with
their predicted monomial form.
"""

from qschubert.qmatrix import (all_u, build_model, quantum_minor_image, relations_hold, restoration,
                               verify_theorem_main)
from qschubert.weyl import from_word

model = build_model(2, 2)
print("reduced word:", model.word, " entries:", model.positions)

emb = restoration(model, frozenset(), "direct")
for (r, c) in model.positions:
    print(f"t_{r}{c} ->", emb.t(r, c))
print("relations hold:", relations_hold(emb) == [])

det = quantum_minor_image(emb, [1, 2], [1, 2])
print("quantum determinant ->", det)

# The quotient by the determinant: the diagram is a single corner.
u = from_word(model.cartan, [2])
for k in range(1, model.N + 1):
    rep = verify_theorem_main(model, u, k)
    print(f"k={k}: predicted {rep.predicted}  computed {rep.computed}  equal={rep.equal}")

print("elements below w:", len(all_u(model)))
