"""Backtracking enumeration, counting, projections, and Ramsey search.

Edges are assigned in colex order.  The constraint of an (r+1)-subset
involves its r+1 r-subsets, of which exactly one — the one obtained by
deleting the smallest element — has the largest colex rank; the
constraint is evaluated the moment that edge is colored, which is the
earliest possible time.  Branches violating a constraint are cut
immediately, so every leaf is a monotone coloring and, by induction,
every monotone coloring is reached exactly once.
"""

from __future__ import annotations

import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product
from math import comb, factorial, log2
from typing import Iterator, Sequence

import numpy as np

from .core import (
    SignFunction,
    _link_index,
    _require_binary,
    colex_rank,
    edges_colex,
)
from .errors import InvalidArgument, TooLarge

#: Default cap on the number of edges the backtracking search will handle.
SEARCH_EDGE_CAP = 64


@lru_cache(maxsize=None)
def _search_tables(r: int, n: int):
    """Per-(r, n) tables: edges, per-rank constraints, per-rank path preds.

    ``constraints[k]`` lists, for every (r+1)-subset whose colex-largest
    r-subset has rank k, the ranks of its r-subsets in deletion order
    (largest element deleted first).  ``preds[k]`` lists the ranks of the
    edges obtained from edge k by dropping its largest vertex and
    prepending a smaller one — the windows that can precede it in a
    monotone path.
    """
    edges = list(edges_colex(n, r))
    constraints: list[list[tuple[int, ...]]] = [[] for _ in edges]
    for s in combinations(range(1, n + 1), r + 1):
        ranks = tuple(
            colex_rank(s[:pos] + s[pos + 1:], n) for pos in range(r, -1, -1)
        )
        constraints[ranks[-1]].append(ranks)
    preds: list[tuple[int, ...]] = []
    for edge in edges:
        preds.append(
            tuple(colex_rank((u,) + edge[:-1], n) for u in range(1, edge[0]))
        )
    return edges, constraints, tuple(preds)


def _consistent(colors: list[int], constraint_ranks: tuple[int, ...]) -> bool:
    changes = 0
    prev = colors[constraint_ranks[0]]
    for t in constraint_ranks[1:]:
        cur = colors[t]
        if cur != prev:
            changes += 1
            if changes > 1:
                return False
            prev = cur
    return True


def enumerate_monotone(
    r: int,
    n: int,
    *,
    prefix: Sequence[int] = (),
    max_edges: int = SEARCH_EDGE_CAP,
    max_nodes: int | None = None,
    rng: random.Random | None = None,
    node_counter: list[int] | None = None,
) -> Iterator[SignFunction]:
    """Yield every monotone coloring of the r-subsets of [n] exactly once.

    ``prefix`` pins the colors of the first ``len(prefix)`` edges (the
    work-splitting hook); a prefix that is itself inconsistent yields
    nothing.  ``rng`` randomizes the color order per node, which turns
    "first leaf" into a seeded random monotone coloring.  ``max_nodes``
    bounds the number of attempted assignments (TooLarge beyond).
    """
    if r < 2:
        raise InvalidArgument(f"need r >= 2, got {r}")
    if n < r:
        raise InvalidArgument(f"need n >= r, got n={n}, r={r}")
    edge_count = comb(n, r)
    if edge_count > max_edges:
        raise TooLarge(
            f"{edge_count} edges exceeds search cap {max_edges}; "
            f"pass max_edges explicitly to override"
        )
    _, constraints, _ = _search_tables(r, n)
    if len(prefix) > edge_count or any(v not in (-1, 1) for v in prefix):
        raise InvalidArgument(f"prefix must be over -1/+1 with length <= {edge_count}")
    colors = [0] * edge_count
    nodes = node_counter if node_counter is not None else [0]

    for k, col in enumerate(prefix):
        colors[k] = col
        if not all(_consistent(colors, cr) for cr in constraints[k]):
            return

    def rec(k: int) -> Iterator[SignFunction]:
        if k == edge_count:
            yield SignFunction(r, n, np.array(colors, dtype=np.int8))
            return
        order = (-1, 1)
        if rng is not None and rng.random() < 0.5:
            order = (1, -1)
        for col in order:
            nodes[0] += 1
            if max_nodes is not None and nodes[0] > max_nodes:
                raise TooLarge(f"search exceeded node budget {max_nodes}")
            colors[k] = col
            if all(_consistent(colors, cr) for cr in constraints[k]):
                yield from rec(k + 1)
        colors[k] = 0

    yield from rec(len(prefix))


def random_monotone_coloring(r: int, n: int, seed: int, **kwargs) -> SignFunction:
    """First leaf of a seed-randomized search: a reproducible random sample."""
    rng = random.Random(seed)
    return next(enumerate_monotone(r, n, rng=rng, **kwargs))


@dataclass(frozen=True)
class CountReport:
    """Exact monotone-coloring count with bound bookkeeping.

    The two-sided bound (valid for r >= 3) sandwiches the count between
    2^(n^(r-1)/r^(4r)) and 2^(2^(r-2) n^(r-1)/(r-1)!).  At desk scale the
    lower exponent is far below 1, so the lower bound is reported as not
    binding rather than asserted.
    """

    r: int
    n: int
    count: int
    nodes: int
    seconds: float
    lower_exponent: float | None
    upper_exponent: float | None
    lower_binding: bool
    bounds_ok: bool


def _count_worker(args) -> tuple[int, int]:
    r, n, prefix, max_edges = args
    nodes = [0]
    total = sum(
        1
        for _ in enumerate_monotone(
            r, n, prefix=prefix, max_edges=max_edges, node_counter=nodes
        )
    )
    return total, nodes[0]


def count_monotone(
    r: int,
    n: int,
    *,
    max_edges: int = SEARCH_EDGE_CAP,
    halve: bool = False,
    workers: int = 1,
    split_depth: int = 2,
) -> CountReport:
    """Count monotone colorings exactly by exhaustive pruned search.

    ``halve`` counts only the colorings whose first edge is minus and
    doubles the result; the swap involution has no fixed points, so this
    reproduces the exact labeled count.  ``workers`` splits the search
    over disjoint assignment prefixes; the result does not depend on the
    worker count.
    """
    start = time.perf_counter()
    edge_count = comb(n, r)
    depth = min(split_depth, edge_count)
    if halve and depth == 0:
        raise InvalidArgument("halving needs at least one edge")
    prefixes: list[tuple[int, ...]]
    if workers > 1 and depth > 0:
        first_options = ((-1,),) if halve else ((-1,), (1,))
        prefixes = [
            head + tail
            for head in first_options
            for tail in product((-1, 1), repeat=depth - 1)
        ]
    elif halve:
        prefixes = [(-1,)]
    else:
        prefixes = [()]
    jobs = [(r, n, p, max_edges) for p in prefixes]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_count_worker, jobs))
    else:
        parts = [_count_worker(j) for j in jobs]
    count = sum(p[0] for p in parts)
    nodes = sum(p[1] for p in parts)
    if halve:
        count = 2 * count  # the color swap is an involution without fixed points
    seconds = time.perf_counter() - start

    if r >= 3:
        lower_exponent = n ** (r - 1) / r ** (4 * r)
        upper_exponent = 2 ** (r - 2) * n ** (r - 1) / factorial(r - 1)
        lower_binding = lower_exponent >= 1.0
        ok = log2(max(count, 1)) <= upper_exponent + 1e-9
        if lower_binding:
            ok = ok and log2(max(count, 1)) >= lower_exponent - 1e-9
    else:
        lower_exponent = upper_exponent = None
        lower_binding = False
        ok = True
    return CountReport(r, n, count, nodes, seconds, lower_exponent,
                       upper_exponent, lower_binding, ok)


def brute_force_monotone_count(r: int, n: int, max_edges: int = 24) -> int:
    """Independent oracle: filter all 2^C(n,r) colorings, vectorized."""
    return _brute_force_count(r, n, max_edges, transitive=False)


def brute_force_transitive_count(r: int, n: int, max_edges: int = 24) -> int:
    return _brute_force_count(r, n, max_edges, transitive=True)


def _brute_force_count(r: int, n: int, max_edges: int, transitive: bool) -> int:
    edge_count = comb(n, r)
    if edge_count > max_edges:
        raise TooLarge(f"2^{edge_count} colorings is beyond brute force")
    _, idx = _link_index(n, r)
    shifts = np.arange(edge_count, dtype=np.uint32)
    total = 0
    chunk = 1 << 14
    for start in range(0, 2 ** edge_count, chunk):
        words = np.arange(start, min(start + chunk, 2 ** edge_count), dtype=np.uint32)
        colors = (((words[:, None] >> shifts) & 1) * 2 - 1).astype(np.int8)
        seq = colors[:, idx]
        if transitive:
            applies = seq[:, :, 0] == seq[:, :, -1]
            uniform = (seq == seq[:, :, :1]).all(axis=2)
            good = (~applies | uniform).all(axis=1)
        else:
            changes = (seq[:, :, 1:] != seq[:, :, :-1]).sum(axis=2)
            good = (changes <= 1).all(axis=1)
        total += int(good.sum())
    return total


def project(c: SignFunction, i: int) -> SignFunction:
    """Restrict to edges whose largest vertex is i, dropping i.

    The result colors the (r-1)-subsets of [i-1]; projections of a
    monotone coloring are monotone.
    """
    if c.r < 3:
        raise InvalidArgument("projection needs uniformity >= 3")
    _require_binary(c)
    if not c.r <= i <= c.n:
        raise InvalidArgument(f"need r <= i <= n, got i={i}")
    colors = np.empty(comb(i - 1, c.r - 1), dtype=np.int8)
    for rank, edge in enumerate(edges_colex(i - 1, c.r - 1)):
        colors[rank] = c.colors[colex_rank(edge + (i,), c.n)]
    return SignFunction(c.r - 1, i - 1, colors)


def projection_signature(c: SignFunction) -> tuple[SignFunction, ...]:
    """All projections (i = r..n).  Distinct colorings never share one:
    every edge is recoverable from the projection onto its largest vertex.
    """
    return tuple(project(c, i) for i in range(c.r, c.n + 1))


@dataclass(frozen=True)
class RamseyReport:
    """Outcome of a monotone Ramsey search.

    ``number`` is the least N at which every monotone coloring contains a
    monochromatic monotone path on ``m`` vertices, or None when the search
    was capped first — then ``lower_bound`` says the number is at least
    that much, and ``witness`` is an avoiding coloring on the largest
    vertex count searched.  When resolved, ``witness`` avoids on N-1.
    """

    r: int
    m: int
    number: int | None
    lower_bound: int
    witness: SignFunction | None
    nodes: int


def find_avoiding_coloring(
    r: int,
    n: int,
    m: int,
    *,
    max_edges: int = SEARCH_EDGE_CAP,
    max_nodes: int | None = None,
) -> tuple[SignFunction | None, int]:
    """A monotone coloring of K^r_n without monochromatic m-vertex paths.

    Backtracking over colex-ordered edges; a branch is cut as soon as its
    assigned edges contain a monochromatic path on m vertices in either
    color (every extension would contain it too), detected by an
    incremental DP over path-ending windows.  Returns (coloring or None,
    node count).
    """
    if m < r:
        raise InvalidArgument(f"need m >= r, got m={m}, r={r}")
    edge_count = comb(n, r)
    if edge_count > max_edges:
        raise TooLarge(f"{edge_count} edges exceeds search cap {max_edges}")
    _, constraints, preds = _search_tables(r, n)
    colors = [0] * edge_count
    plen = [0] * edge_count
    nodes = [0]

    def rec(k: int) -> bool:
        if k == edge_count:
            return True
        for col in (-1, 1):
            nodes[0] += 1
            if max_nodes is not None and nodes[0] > max_nodes:
                raise TooLarge(f"search exceeded node budget {max_nodes}")
            colors[k] = col
            if not all(_consistent(colors, cr) for cr in constraints[k]):
                continue
            longest = r
            for p in preds[k]:
                if colors[p] == col and plen[p] + 1 > longest:
                    longest = plen[p] + 1
            if longest >= m:
                continue
            plen[k] = longest
            if rec(k + 1):
                return True
        colors[k] = 0
        return False

    if rec(0):
        return SignFunction(r, n, np.array(colors, dtype=np.int8)), nodes[0]
    return None, nodes[0]


def ramsey_number(
    r: int,
    m: int,
    n_max: int,
    *,
    max_edges: int = SEARCH_EDGE_CAP,
    max_nodes: int | None = None,
) -> RamseyReport:
    """Least N forcing monochromatic m-vertex paths, searched up to n_max."""
    if m < r:
        raise InvalidArgument(f"need m >= r, got m={m}, r={r}")
    witness = None
    total_nodes = 0
    for n in range(m, n_max + 1):
        avoider, nodes = find_avoiding_coloring(
            r, n, m, max_edges=max_edges, max_nodes=max_nodes
        )
        total_nodes += nodes
        if avoider is None:
            return RamseyReport(r, m, n, n, witness, total_nodes)
        witness = avoider
    return RamseyReport(r, m, None, n_max + 1, witness, total_nodes)


@dataclass(frozen=True)
class AtLeast:
    """A tower value too large to materialize: the value is >= 2^bits."""

    bits: int

    def __repr__(self) -> str:
        return f"AtLeast(2^{self.bits})"


def tow(h: int, x, max_bits: int = 10 ** 6):
    """Iterated exponentiation: height-1 applications of 2^_ to x.

    Exact when every intermediate fits in ``max_bits`` bits; otherwise a
    symbolic AtLeast(max_bits), meaning the value is at least 2^max_bits.
    Accepts nonpositive x (the intermediate values then pass through
    floats), which keeps size invariants checkable at small parameters.
    """
    if h < 1:
        raise InvalidArgument(f"need height >= 1, got {h}")
    val = x
    for _ in range(h - 1):
        if val > max_bits:
            return AtLeast(max_bits)
        val = 2 ** val
    return val
