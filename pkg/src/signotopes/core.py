"""Sign functions: -1/+1 colorings of the r-subsets of {1, ..., n}.

Every edge (r-subset) is addressed by its colex rank, computed as
``sum(C(v_i - 1, i))`` over the increasing tuple ``(v_1, ..., v_r)``.
The same indexing is used by the file format, the path DP, and the
backtracking search, so there is exactly one edge order in the package.

A coloring is *monotone* when, for every (r+1)-subset, the sequence of
colors of its r-subsets (ordered by which element is deleted, largest
deleted first) changes sign at most once.  It is *transitive* when equal
colors on the two extreme r-subsets of an (r+1)-subset force all of its
r-subsets to that color.  Monotone implies transitive; for r = 2 the two
notions coincide.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Iterator, Sequence

import numpy as np

from .errors import InvalidEdge, ParseError, TernaryNotAllowed, TooLarge

MINUS = -1
PLUS = 1
ZERO = 0

#: Largest allowed vertex count for r >= 3; keeps the C(n, r+1) index
#: tables in memory.  Raise it deliberately if you know what you are doing.
VERTEX_CAP = 64

_COLOR_TO_CHAR = {-1: "-", 1: "+", 0: "0"}
_CHAR_TO_COLOR = {"-": -1, "+": 1, "0": 0}


def colex_rank(vertices: Sequence[int], n: int | None = None) -> int:
    """Colex rank of a strictly increasing vertex tuple (0-based)."""
    prev = 0
    rank = 0
    for i, v in enumerate(vertices, start=1):
        if v <= prev:
            raise InvalidEdge(f"vertices must be strictly increasing, got {tuple(vertices)}")
        if n is not None and v > n:
            raise InvalidEdge(f"vertex {v} out of range 1..{n}")
        rank += comb(v - 1, i)
        prev = v
    if not vertices:
        raise InvalidEdge("empty vertex tuple")
    return rank


def colex_unrank(rank: int, r: int) -> tuple[int, ...]:
    """Inverse of :func:`colex_rank`: the r-subset with the given rank."""
    if rank < 0 or r < 1:
        raise InvalidEdge(f"need rank >= 0 and r >= 1, got rank={rank}, r={r}")
    rem = rank
    out = []
    for i in range(r, 0, -1):
        w = i - 1
        while comb(w + 1, i) <= rem:
            w += 1
        out.append(w + 1)
        rem -= comb(w, i)
    out.reverse()
    return tuple(out)


def edges_colex(n: int, r: int) -> Iterator[tuple[int, ...]]:
    """All r-subsets of [n] in colex order (rank order)."""
    if r == 0:
        yield ()
        return
    for v in range(r, n + 1):
        for rest in edges_colex(v - 1, r - 1):
            yield rest + (v,)


@lru_cache(maxsize=None)
def _binom_table(max_v: int, max_k: int) -> np.ndarray:
    """C(v, k) for 0 <= v <= max_v, 0 <= k <= max_k, as int64."""
    t = np.zeros((max_v + 1, max_k + 1), dtype=np.int64)
    for v in range(max_v + 1):
        for k in range(min(v, max_k) + 1):
            t[v, k] = comb(v, k)
    return t


def _subset_ranks(sets: np.ndarray, n: int) -> np.ndarray:
    """Colex ranks of each row of an (M, k) matrix of increasing tuples."""
    k = sets.shape[1]
    table = _binom_table(n, k)
    ranks = np.zeros(len(sets), dtype=np.int64)
    for j in range(k):
        ranks += table[sets[:, j] - 1, j + 1]
    return ranks


@lru_cache(maxsize=None)
def _link_index(n: int, r: int) -> tuple[np.ndarray, np.ndarray]:
    """Index tables driving the (r+1)-subset predicates.

    Returns ``(sets, idx)`` where ``sets`` lists all (r+1)-subsets of [n]
    in colex order and ``idx[t, j]`` is the colex rank of the r-subset
    obtained from ``sets[t]`` by deleting its (r+1-j)-th smallest element,
    i.e. row ``t`` of ``idx`` indexes the deletion color sequence.
    """
    m = comb(n, r + 1)
    sets = np.fromiter(
        (v for s in combinations(range(1, n + 1), r + 1) for v in s),
        dtype=np.int64,
        count=m * (r + 1),
    ).reshape(m, r + 1)
    if m:
        sets = sets[np.argsort(_subset_ranks(sets, n))]
    idx = np.zeros((m, r + 1), dtype=np.int64)
    for j in range(r + 1):
        keep = [col for col in range(r + 1) if col != r - j]
        idx[:, j] = _subset_ranks(sets[:, keep], n)
    return sets, idx


@dataclass(frozen=True, eq=False)
class SignFunction:
    """A coloring of all r-subsets of [n], stored in colex order.

    ``colors`` holds one of -1, +1 (and 0 only when ``ternary_allowed``).
    Instances are immutable; the array is marked read-only, so they are
    safe to share across workers.  Equality compares (r, n, colors) —
    the ternary flag is a permission, not data.
    """

    r: int
    n: int
    colors: np.ndarray
    ternary_allowed: bool = False

    def __post_init__(self):
        if self.r < 2:
            raise InvalidEdge(f"uniformity must be >= 2, got {self.r}")
        if self.n < self.r:
            raise InvalidEdge(f"need n >= r, got n={self.n}, r={self.r}")
        if self.r >= 3 and self.n > VERTEX_CAP:
            raise TooLarge(f"n={self.n} exceeds vertex cap {VERTEX_CAP} for r={self.r}")
        colors = np.asarray(self.colors, dtype=np.int8).copy()
        if colors.shape != (comb(self.n, self.r),):
            raise InvalidEdge(
                f"expected {comb(self.n, self.r)} colors for r={self.r}, n={self.n}, "
                f"got shape {colors.shape}"
            )
        bad = ~np.isin(colors, (-1, 0, 1))
        if bad.any():
            raise InvalidEdge(f"illegal color value {colors[bad][0]}")
        if not self.ternary_allowed and (colors == 0).any():
            raise TernaryNotAllowed("0 entries require ternary_allowed=True")
        colors.setflags(write=False)
        object.__setattr__(self, "colors", colors)

    @classmethod
    def constant(cls, r: int, n: int, color: int = MINUS) -> "SignFunction":
        return cls(r, n, np.full(comb(n, r), color, dtype=np.int8))

    @classmethod
    def from_string(cls, r: int, n: int, chars: str) -> "SignFunction":
        colors = [_CHAR_TO_COLOR[ch] for ch in chars]
        return cls(r, n, np.array(colors, dtype=np.int8), ternary_allowed="0" in chars)

    @property
    def edge_count(self) -> int:
        return len(self.colors)

    @property
    def is_binary(self) -> bool:
        return not (self.colors == 0).any()

    def color(self, vertices: Sequence[int]) -> int:
        if len(vertices) != self.r:
            raise InvalidEdge(f"expected an {self.r}-subset, got {tuple(vertices)}")
        return int(self.colors[colex_rank(vertices, self.n)])

    def color_string(self) -> str:
        return "".join(_COLOR_TO_CHAR[v] for v in self.colors.tolist())

    def swapped(self) -> "SignFunction":
        """The coloring with - and + exchanged (0 stays 0)."""
        return SignFunction(self.r, self.n, -self.colors, self.ternary_allowed)

    def reversed_order(self) -> "SignFunction":
        """The coloring under the vertex relabeling i -> n+1-i."""
        out = np.empty_like(self.colors)
        for rank, edge in enumerate(edges_colex(self.n, self.r)):
            mirror = tuple(self.n + 1 - v for v in reversed(edge))
            out[rank] = self.colors[colex_rank(mirror)]
        return SignFunction(self.r, self.n, out, self.ternary_allowed)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SignFunction):
            return NotImplemented
        return self.r == other.r and self.n == other.n and np.array_equal(self.colors, other.colors)

    def __hash__(self) -> int:
        return hash((self.r, self.n, self.colors.tobytes()))

    def __repr__(self) -> str:
        s = self.color_string()
        if len(s) > 40:
            s = s[:37] + "..."
        return f"SignFunction(r={self.r}, n={self.n}, {s!r})"


def _require_binary(c: SignFunction) -> None:
    if not c.is_binary:
        raise TernaryNotAllowed("operation requires a coloring without 0 entries")


def link_sequence(c: SignFunction, subset: Sequence[int]) -> tuple[int, ...]:
    """Deletion color sequence of an (r+1)-subset.

    Entry j is the color of the r-subset obtained by deleting the
    (r+1-j)-th smallest element, so the largest element is deleted first
    and the smallest last.
    """
    s = tuple(subset)
    if len(s) != c.r + 1:
        raise InvalidEdge(f"expected an {c.r + 1}-subset, got {s}")
    colex_rank(s, c.n)  # validates increasing and range
    seq = []
    for i in range(len(s) - 1, -1, -1):
        seq.append(int(c.colors[colex_rank(s[:i] + s[i + 1:], c.n)]))
    if any(v == 0 for v in seq):
        raise TernaryNotAllowed(f"subset {s} touches a 0-colored edge")
    return tuple(seq)


def _sign_change_counts(c: SignFunction) -> tuple[np.ndarray, np.ndarray]:
    """(sets, #sign changes per (r+1)-subset), rows in colex order."""
    sets, idx = _link_index(c.n, c.r)
    seq = c.colors[idx]
    return sets, (seq[:, 1:] != seq[:, :-1]).sum(axis=1)


def monotone_violation(c: SignFunction) -> tuple[int, ...] | None:
    """First (in colex order) (r+1)-subset whose colors change sign twice.

    Returns None when the coloring is monotone.
    """
    _require_binary(c)
    if c.n == c.r:
        return None
    sets, changes = _sign_change_counts(c)
    bad = np.nonzero(changes > 1)[0]
    if len(bad) == 0:
        return None
    return tuple(int(v) for v in sets[bad[0]])


def is_monotone(c: SignFunction) -> bool:
    return monotone_violation(c) is None


def transitive_violation(c: SignFunction) -> tuple[int, ...] | None:
    _require_binary(c)
    if c.n == c.r:
        return None
    sets, idx = _link_index(c.n, c.r)
    seq = c.colors[idx]
    applies = seq[:, 0] == seq[:, -1]
    uniform = (seq == seq[:, :1]).all(axis=1)
    bad = np.nonzero(applies & ~uniform)[0]
    if len(bad) == 0:
        return None
    return tuple(int(v) for v in sets[bad[0]])


def is_transitive(c: SignFunction) -> bool:
    return transitive_violation(c) is None


# --- file format -----------------------------------------------------------
#
# line 1: MONO 1
# line 2: r=<r> n=<n>
# line 3: C(n,r) characters over -, +, 0 in colex order
# LF line endings, trailing newline.

_HEADER_RE = re.compile(r"^r=(\d+) n=(\d+)$")


def dumps(c: SignFunction) -> str:
    return f"MONO 1\nr={c.r} n={c.n}\n{c.color_string()}\n"


def loads(text: str) -> SignFunction:
    lines = text.split("\n")
    if len(lines) < 3:
        raise ParseError("expected 3 lines (magic, header, colors)", line=len(lines), column=1)
    if lines[0] != "MONO 1":
        raise ParseError(f"bad magic line {lines[0]!r}, expected 'MONO 1'", line=1, column=1)
    m = _HEADER_RE.match(lines[1])
    if not m:
        raise ParseError(f"bad header {lines[1]!r}, expected 'r=<r> n=<n>'", line=2, column=1)
    r, n = int(m.group(1)), int(m.group(2))
    body = lines[2]
    expected = comb(n, r) if n >= r >= 2 else -1
    if expected < 0:
        raise ParseError(f"illegal parameters r={r}, n={n}", line=2, column=3)
    for col, ch in enumerate(body, start=1):
        if ch not in _CHAR_TO_COLOR:
            raise ParseError(f"illegal color character {ch!r}", line=3, column=col)
    if len(body) != expected:
        raise ParseError(
            f"expected {expected} colors for r={r}, n={n}, got {len(body)}",
            line=3,
            column=len(body) + 1,
        )
    for extra, content in enumerate(lines[3:], start=4):
        if content:
            raise ParseError(f"unexpected trailing content {content!r}", line=extra, column=1)
    return SignFunction.from_string(r, n, body)


def write_file(c: SignFunction, path) -> None:
    with open(path, "w", newline="\n") as fh:
        fh.write(dumps(c))


def read_file(path) -> SignFunction:
    with open(path, "r", newline="\n") as fh:
        return loads(fh.read())
