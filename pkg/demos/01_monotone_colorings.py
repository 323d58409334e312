#!/usr/bin/env python3
"""Tour of sign functions: colex indexing, monotonicity, transitivity.

A coloring assigns -1 or +1 to every r-subset of {1, ..., n}.  Within
every (r+1)-subset, deleting one element at a time (largest first)
yields a sequence of r+1 colors; the coloring is monotone when that
sequence never changes sign more than once, and transitive when equal
colors at both ends force the whole sequence constant.
"""

from itertools import combinations, product

import numpy as np

from signotopes import (
    SignFunction,
    colex_rank,
    dumps,
    is_monotone,
    is_transitive,
    link_sequence,
    monotone_violation,
)

# Edges are indexed by colex rank everywhere.
print("colex order on triples of [5]:")
print(" ", [colex_rank(e) for e in combinations(range(1, 6), 3)], "<- lex order is NOT rank order")

# A famous 4-vertex example: transitive but not monotone.
c = SignFunction.from_string(3, 4, "-+-+")
print("\ncoloring:", dumps(c).splitlines()[2])
print("deletion sequence of {1,2,3,4}:", link_sequence(c, (1, 2, 3, 4)))
print("monotone?", is_monotone(c), "| violating subset:", monotone_violation(c))
print("transitive?", is_transitive(c))

# On r+1 vertices the two notions separate sharply: 2r+2 monotone
# colorings versus 2**r + 2 transitive ones.
print("\ncounts on r+1 vertices (all 2^(r+1) colorings tried):")
for r in range(2, 7):
    edges = list(combinations(range(1, r + 2), r))
    mono = trans = 0
    for bits in product((-1, 1), repeat=len(edges)):
        cand = SignFunction(r, r + 1, np.array(bits, dtype=np.int8))
        mono += is_monotone(cand)
        trans += is_transitive(cand)
    print(f"  r={r}: monotone {mono:3d} (= 2r+2)   transitive {trans:3d} (= 2^r+2)")
