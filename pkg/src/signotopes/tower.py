"""Tower-sized ground sets and the long-path-free monotone coloring.

Level 2 of the tower is a 2n-element ordered set of pairs; level k >= 3
consists of all transversals picking one representative from each
equivalence class of level k-1, so its size squares-then-some:
N_2 = 2n and N_k = 2^(N_{k-1}/2).  Each element is stored as a single
integer code chosen so that, at every level,

  * the element order is plain integer order on codes,
  * the type flip (sigma) is the complement code N-1-code,
  * type - is the lower half, type + the upper half,
  * the class index of an element is min(code, N-1-code).

For levels >= 3 the code packs one bit per class of the level below
(0 = the class's type-minus representative is chosen, 1 = type-plus),
with class 0 at the most significant position; reading bits from class 0
makes lexicographic bit order coincide with integer order, which is why
the first property holds.  None of this is assumed silently: the
``check_*`` verifiers re-derive the defining properties at runtime.

``gamma(A, B)`` selects B's representative in the first class on which
A and B differ (one level down); iterating it elementwise across an
increasing r-tuple down to a bare sign yields the edge coloring, which
is monotone and has no monochromatic monotone path on 2n+r-1 vertices.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Sequence

import numpy as np

from .core import SignFunction, edges_colex
from .errors import InvalidArgument, TooLarge

#: Default cap on the number of ground-set elements.
ELEMENT_CAP = 2 ** 20

#: Default cap on the number of edges a coloring may have.
EDGE_CAP = 2 ** 21


def tower_sizes(r: int, n: int, max_exponent_bits: int = 4096) -> list[int]:
    """Sizes N_1..N_r of the tower levels; index k holds N_k (index 0 unused)."""
    if r < 2 or n < 1:
        raise InvalidArgument(f"need r >= 2 and n >= 1, got r={r}, n={n}")
    sizes = [0, 2, 2 * n]
    for level in range(3, r + 1):
        exponent = sizes[-1] // 2
        if exponent > max_exponent_bits:
            raise TooLarge(
                f"level {level} would hold 2^{exponent} elements; not materializable"
            )
        sizes.append(2 ** exponent)
    return sizes


@dataclass(frozen=True)
class TowerElement:
    """A ground-set element: its level and its code in the element order."""

    level: int
    code: int


class TowerGroundSet:
    """The level-r ground set with its order, types, classes and gamma.

    Elements returned by :meth:`elements` are in increasing element
    order; the first half has type - and the second half type +.
    """

    def __init__(self, r: int, n: int, max_elements: int = ELEMENT_CAP):
        self.r = r
        self.n = n
        self.sizes = tower_sizes(r, n)
        if self.sizes[r] > max_elements:
            raise TooLarge(
                f"ground set for r={r}, n={n} has {self.sizes[r]} elements "
                f"(cap {max_elements})"
            )
        self.size = self.sizes[r]

    # -- element structure --------------------------------------------------

    def elements(self, level: int | None = None) -> list[TowerElement]:
        level = self.r if level is None else level
        self._check_level(level)
        return [TowerElement(level, code) for code in range(self.sizes[level])]

    def type_of(self, el: TowerElement) -> int:
        """-1 or +1 by which half of the element order el sits in."""
        self._check_element(el)
        return -1 if el.code < self.sizes[el.level] // 2 else 1

    def sigma(self, el: TowerElement) -> TowerElement:
        """The order-reversing type-flipping involution."""
        self._check_element(el)
        return TowerElement(el.level, self.sizes[el.level] - 1 - el.code)

    def equivalent(self, a: TowerElement, b: TowerElement) -> bool:
        return a.level == b.level and self.class_index(a) == self.class_index(b)

    def class_index(self, el: TowerElement) -> int:
        """Position of el's equivalence class in the class order."""
        self._check_element(el)
        return min(el.code, self.sizes[el.level] - 1 - el.code)

    def classes(self, level: int | None = None) -> list[tuple[TowerElement, TowerElement]]:
        """(minus representative, plus representative) per class, in class order."""
        level = self.r if level is None else level
        self._check_level(level)
        size = self.sizes[level]
        return [
            (TowerElement(level, k), TowerElement(level, size - 1 - k))
            for k in range(size // 2)
        ]

    def pair_of(self, el: TowerElement) -> tuple[int, int]:
        """Display form of a level-2 element: the pair it denotes."""
        self._check_element(el)
        if el.level != 2:
            raise InvalidArgument(f"pair_of needs a level-2 element, got level {el.level}")
        return (2 * self.n - el.code, el.code + 1)

    def bits_of(self, el: TowerElement) -> tuple[int, ...]:
        """Chosen-representative types per class of the level below (level >= 3)."""
        self._check_element(el)
        if el.level < 3:
            raise InvalidArgument(f"bits_of needs level >= 3, got level {el.level}")
        width = self.sizes[el.level - 1] // 2
        return tuple((el.code >> (width - 1 - k)) & 1 for k in range(width))

    def members_of(self, el: TowerElement) -> frozenset:
        """The transversal an element denotes: one element per lower class.

        Level-2 elements are rendered as their pairs; deeper levels as
        TowerElements.  Display/debugging only.
        """
        if el.level < 3:
            raise InvalidArgument("members_of needs level >= 3")
        lower = el.level - 1
        size = self.sizes[lower]
        picks = [
            TowerElement(lower, k if bit == 0 else size - 1 - k)
            for k, bit in enumerate(self.bits_of(el))
        ]
        if lower == 2:
            return frozenset(self.pair_of(p) for p in picks)
        return frozenset(picks)

    # -- gamma and the coloring ----------------------------------------------

    def gamma(self, a: TowerElement, b: TowerElement) -> TowerElement:
        """B's representative in the first class where A and B differ.

        One level down.  At level 2 the first (and only) lower class is
        the sign pair, and the chosen sign is + exactly when A precedes B.
        """
        self._check_element(a)
        self._check_element(b)
        if a.level != b.level:
            raise InvalidArgument(f"levels differ: {a.level} vs {b.level}")
        if a.level < 2:
            raise InvalidArgument("gamma is defined from level 2 upward")
        if a.code == b.code:
            raise InvalidArgument("gamma needs two distinct elements")
        return TowerElement(a.level - 1, self._gamma_code(a.level, a.code, b.code))

    def _gamma_code(self, level: int, a: int, b: int) -> int:
        if level == 2:
            return 1 if a < b else 0
        width = self.sizes[level - 1] // 2
        k = width - (a ^ b).bit_length()
        if (b >> (width - 1 - k)) & 1:
            return self.sizes[level - 1] - 1 - k
        return k

    def gamma_iter(self, seq: Sequence[TowerElement], times: int) -> list[TowerElement]:
        """Apply gamma elementwise to consecutive entries, `times` times."""
        seq = list(seq)
        if not seq:
            raise InvalidArgument("empty sequence")
        level = seq[0].level
        if any(el.level != level for el in seq):
            raise InvalidArgument("mixed levels in sequence")
        if not 0 <= times <= min(len(seq) - 1, level - 1):
            raise InvalidArgument(
                f"iteration count {times} outside 0..min(k-1, r-1) for "
                f"k={len(seq)}, r={level}"
            )
        for a, b in zip(seq, seq[1:]):
            if a.code == b.code:
                raise InvalidArgument("consecutive entries must be distinct")
        codes = [el.code for el in seq]
        for step in range(times):
            codes = [
                self._gamma_code(level - step, x, y) for x, y in zip(codes, codes[1:])
            ]
        return [TowerElement(level - times, code) for code in codes]

    def coloring(self, max_edges: int = EDGE_CAP) -> SignFunction:
        """The edge coloring: iterate gamma down to a sign per r-subset.

        Vertex i of the result is the i-th element in the element order.
        """
        if self.r < 3:
            raise InvalidArgument("the coloring is defined for r >= 3")
        edge_count = comb(self.size, self.r)
        if edge_count > max_edges:
            raise TooLarge(f"{edge_count} edges exceeds cap {max_edges}")
        colors = np.empty(edge_count, dtype=np.int8)
        for rank, edge in enumerate(edges_colex(self.size, self.r)):
            codes = [v - 1 for v in edge]
            level = self.r
            while level > 1:
                codes = [self._gamma_code(level, x, y) for x, y in zip(codes, codes[1:])]
                level -= 1
            colors[rank] = 1 if codes[0] else -1
        return SignFunction(self.r, self.size, colors)

    # -- runtime verifiers for the structural facts ---------------------------

    def check_deletion_lemma(self, a: TowerElement, b: TowerElement, c: TowerElement) -> bool:
        """gamma over a detour: gamma(a,c) sits where the two-step values say.

        For levels >= 3: when gamma(a,b) and gamma(b,c) are inequivalent,
        gamma(a,c) equals whichever of them has the earlier class;
        otherwise both precede gamma(a,c) in class order.  At level 2 the
        sign of gamma(a,c) agrees with the two-step signs.
        """
        for x, y in ((a, b), (b, c), (a, c)):
            if x.code == y.code and x.level == y.level:
                raise InvalidArgument("elements must be pairwise distinct")
        gab = self.gamma(a, b)
        gbc = self.gamma(b, c)
        gac = self.gamma(a, c)
        if a.level == 2:
            if gab != gbc:
                return gac in (gab, gbc)
            return gac == gab == gbc
        if not self.equivalent(gab, gbc):
            first = gab if self.class_index(gab) < self.class_index(gbc) else gbc
            return gac == first
        return (
            self.class_index(gab) < self.class_index(gac)
            and self.class_index(gbc) < self.class_index(gac)
        )

    def check_replacement_lemma(
        self,
        a: TowerElement,
        b: TowerElement,
        a2: TowerElement,
        b2: TowerElement,
    ) -> bool:
        """Moving one gamma argument up moves the value monotonically.

        Part one: a <= a2 implies gamma(a,b) >= gamma(a2,b); part two:
        b <= b2 implies gamma(a,b) <= gamma(a,b2).  Comparisons are in
        the element order one level down.  Parts whose distinctness
        precondition fails are skipped.
        """
        if a.code == b.code:
            raise InvalidArgument("need a != b")
        gab = self.gamma(a, b).code
        ok = True
        if a2.code != b.code and a.code <= a2.code:
            ok = ok and gab >= self.gamma(a2, b).code
        if b2.code != a.code and b.code <= b2.code:
            ok = ok and gab <= self.gamma(a, b2).code
        return ok

    def check_profile_lemma(self, seq: Sequence[TowerElement]) -> bool:
        """The deletion values of an increasing s-tuple interleave evenly.

        H lists, for each deleted position from last to first, the value
        of iterating gamma down to a single element.  The consecutive
        comparisons of H must fit one of the two templates: rises only in
        odd slots with even slots tied, or falls only in even slots with
        odd slots tied.
        """
        seq = list(seq)
        s = len(seq)
        level = seq[0].level
        if not 3 <= s <= level + 1:
            raise InvalidArgument(f"need 3 <= s <= r+1, got s={s}, r={level}")
        if any(x.code >= y.code for x, y in zip(seq, seq[1:])):
            raise InvalidArgument("sequence must be strictly increasing")
        h = []
        for pos in range(s, 0, -1):
            sub = seq[: pos - 1] + seq[pos:]
            h.append(self.gamma_iter(sub, s - 2)[0].code)
        odd_ok = all(
            h[j - 1] <= h[j] if j % 2 == 1 else h[j - 1] == h[j]
            for j in range(1, s)
        )
        even_ok = all(
            h[j - 1] == h[j] if j % 2 == 1 else h[j - 1] >= h[j]
            for j in range(1, s)
        )
        return odd_ok or even_ok

    # -- internals -------------------------------------------------------------

    def _check_level(self, level: int) -> None:
        if not 1 <= level <= self.r:
            raise InvalidArgument(f"level {level} outside 1..{self.r}")

    def _check_element(self, el: TowerElement) -> None:
        self._check_level(el.level)
        if not 0 <= el.code < self.sizes[el.level]:
            raise InvalidArgument(
                f"code {el.code} outside level-{el.level} range 0..{self.sizes[el.level] - 1}"
            )


def build_ground_set(r: int, n: int, max_elements: int = ELEMENT_CAP) -> TowerGroundSet:
    return TowerGroundSet(r, n, max_elements=max_elements)


def tower_coloring(r: int, n: int, max_elements: int = ELEMENT_CAP,
                   max_edges: int = EDGE_CAP) -> SignFunction:
    return TowerGroundSet(r, n, max_elements=max_elements).coloring(max_edges=max_edges)
