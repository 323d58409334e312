#!/usr/bin/env python3
"""Counting monotone colorings from below: compositions and free zeros.

Splitting r^h vertices into r blocks assigns each edge a composition of
r (its block occupancy).  Most compositions carry a sign; edges inside a
block recurse; transversal edges compare alternating position sums and
tie to 0.  Every assignment of signs to the 0 edges stays monotone, so
each zero doubles the coloring count.
"""

from signotopes import (
    block_coloring,
    completions,
    compositions,
    is_monotone,
    reduction,
    sign,
    zero_lower_bound,
)

print("compositions of 4 with their signs (None = signless shape):")
for sigma in compositions(4):
    try:
        base = reduction(sigma)
    except Exception:
        base = None
    print(f"  {str(sigma):12s} sign={str(sign(sigma)):5s} base form={base}")

for r, h in [(3, 2), (4, 2), (3, 3)]:
    t = block_coloring(r, h)
    transversal = len(t.transversal_zero_positions())
    print(
        f"\nblock coloring r={r}, h={h}: {t.n} vertices, "
        f"{len(t.zero_positions)} zeros ({transversal} across blocks, "
        f"guaranteed >= {zero_lower_bound(r, h)})"
    )
    if len(t.zero_positions) <= 8:
        done = list(completions(t, mode="all"))
        print(f"  all {len(done)} completions monotone: "
              f"{all(is_monotone(c) for c in done)}")
    else:
        sampled = list(completions(t, mode="sample", count=200, seed=1))
        print(f"  200 sampled completions monotone: "
              f"{all(is_monotone(c) for c in sampled)}")
