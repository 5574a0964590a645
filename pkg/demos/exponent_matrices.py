"""
Exponent matrices and their inverses
====================================

The integer matrix ``a_jk`` records how the normal quantum minors factor
into torus generators.  Its principal part is unit upper-triangular, so it
is invertible over the integers.  The mirror matrix ``b_lk`` for the reverse
order is the same data read through the reversed word.
"""

from qschubert import a_matrix, b_matrix, builtin_cartan, from_word
from qschubert.exponents import a_inverse, mat_mul
from qschubert.twist import matrix_correspondence_check

cartan = builtin_cartan("B", 2)
word = (1, 2, 1, 2)
u = from_word(cartan, [2])

A = a_matrix(cartan, word, u)
print("rows (positions outside the right positive set):", A.rows)
for r, row in zip(A.rows, A.as_lists()):
    print(f"  a[{r}] = {row}")

inv = a_inverse(cartan, word, u)
print("principal part times its inverse:", mat_mul(A.principal(), inv))

B = b_matrix(cartan, word, u)
print("\nreverse matrix rows:", B.rows)
for r, row in zip(B.rows, B.as_lists()):
    print(f"  b[{r}] = {row}")

# b(word, u) is a(reversed word, u^{-1}) with indices flipped.
print("matches the reversed-word matrix:", matrix_correspondence_check(cartan, word, u))
