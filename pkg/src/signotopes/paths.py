"""Longest monochromatic monotone paths.

A monotone path on vertices x_1 < ... < x_k consists of all windows of r
consecutive vertices; it is monochromatic when every window has the same
color.  Lengths are counted in *vertices*, not edges.  Sequences with
fewer than r vertices carry no edge and count as paths of both colors,
which puts the DP base at r-1.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .core import SignFunction, colex_rank, edges_colex, _require_binary
from .errors import InvalidArgument


_MINUS, _PLUS = 0, 1


@dataclass(frozen=True)
class PathReport:
    """Longest monochromatic path per color, with witness vertex sequences."""

    best_minus: int
    best_plus: int
    witness_minus: tuple[int, ...]
    witness_plus: tuple[int, ...]

    @property
    def best(self) -> int:
        return max(self.best_minus, self.best_plus)


def longest_mono_paths(c: SignFunction) -> PathReport:
    """Exact longest monochromatic path lengths via DP over (r-1)-tuples.

    For each color, L(t) is the number of vertices of the longest
    monochromatic path whose last r-1 vertices are t.  Such a path arises
    by appending t's last vertex to a path ending in (v_1, *t[:-1]) for
    some v_1 < t[0], which requires the edge (v_1, *t) to carry the
    color.  Tuples are processed in colex order so predecessors are
    final.  O(n^r) time, O(n^(r-1)) memory per color.

    Witnesses are reconstructed through parent links; ties break toward
    the lexicographically smallest witness (smallest predecessor vertex,
    then smallest reconstruction among maximal tuples).
    """
    _require_binary(c)
    r, n = c.r, c.n
    base = r - 1
    m = comb(n, base)
    suffixes = list(edges_colex(n, base))
    length = ([base] * m, [base] * m)
    parent = ([-1] * m, [-1] * m)

    for t_rank, t in enumerate(suffixes):
        for u in range(1, t[0]):
            col = _MINUS if c.colors[colex_rank((u,) + t, n)] < 0 else _PLUS
            p_rank = colex_rank((u,) + t[:-1], n)
            cand = length[col][p_rank] + 1
            if cand > length[col][t_rank]:
                length[col][t_rank] = cand
                parent[col][t_rank] = p_rank

    def reconstruct(col: int) -> tuple[int, tuple[int, ...]]:
        best = max(length[col])
        paths = []
        for t_rank, val in enumerate(length[col]):
            if val != best:
                continue
            seq = list(suffixes[t_rank])
            walk = t_rank
            while parent[col][walk] != -1:
                walk = parent[col][walk]
                seq.insert(0, suffixes[walk][0])
            paths.append(tuple(seq))
        return best, min(paths)

    best_minus, wit_minus = reconstruct(_MINUS)
    best_plus, wit_plus = reconstruct(_PLUS)
    return PathReport(best_minus, best_plus, wit_minus, wit_plus)


def contains_path(c: SignFunction, m: int) -> bool:
    """Whether some monochromatic monotone path spans at least m vertices."""
    if m < c.r:
        raise InvalidArgument(f"path must span at least r={c.r} vertices, got m={m}")
    return longest_mono_paths(c).best >= m
