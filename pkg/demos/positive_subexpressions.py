"""
Positive subexpressions inside a Bruhat interval
================================================

Every ``u`` below ``w`` is the product of exactly one right-positive and one
left-positive subexpression of a fixed reduced word for ``w``.  We list them
for an interval in type A3 and confirm against brute force.
"""

from qschubert import builtin_cartan, from_word, lp, rp
from qschubert.subexpr import oracle_positive_subexpr
from qschubert.weyl import elements_below

cartan = builtin_cartan("A", 3)
word = (2, 1, 3, 2)
w = from_word(cartan, word)

# The interval [e, w] has 14 elements.
interval = sorted(elements_below(w), key=lambda x: (len(x), x.word))
print(f"{len(interval)} elements below w = s{''.join(map(str, word))}\n")

print(f"{'u':>10}  {'right':>12}  {'left':>12}")
for u in interval:
    R, L = rp(cartan, word, u), lp(cartan, word, u)
    assert R == oracle_positive_subexpr(cartan, word, u, "right")
    assert L == oracle_positive_subexpr(cartan, word, u, "left")
    label = "e" if not u.word else "s" + "".join(map(str, u.word))
    print(f"{label:>10}  {str(sorted(R)):>12}  {str(sorted(L)):>12}")

# Both index sets always have ell(u) elements.
assert all(len(rp(cartan, word, u)) == len(u) for u in interval)
