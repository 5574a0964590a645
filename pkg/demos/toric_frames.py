"""
A family of toric frames
========================

Each permutation whose prefixes are intervals gives a chain of subalgebras
and a toric frame.  The frame's generators are the positions outside
``D(pi)``; the bicharacter is an integer matrix of half-q exponents.
"""

from qschubert import builtin_cartan, frame_bicharacter, from_word, xi_enumerate

cartan = builtin_cartan("G", 2)
word = (1, 2, 1, 2)
u = from_word(cartan, [1, 2])

for pi in xi_enumerate(len(word)):
    frame = frame_bicharacter(cartan, word, u, pi)
    print(f"pi = {pi.perm}  D(pi) = {sorted(frame.D)}  generators = {frame.generators}")
    for row in frame.matrix():
        print("    ", row)

# The first and last permutations recover the right and left positive sets.
from qschubert import lp, rp
from qschubert.frames import identity_pi, reversal_pi

n = len(word)
print("D(identity) == rp:", frame_bicharacter(cartan, word, u, identity_pi(n)).D == rp(cartan, word, u))
print("D(reversal) == lp:", frame_bicharacter(cartan, word, u, reversal_pi(n)).D == lp(cartan, word, u))
