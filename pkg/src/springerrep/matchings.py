"""Dotted noncrossing matchings, two-row tableaux, and their bijection.

Vertices are the integers ``1..n`` on a line.  A matching pairs them with
``n/2`` disjoint arcs, none of which interleave; a dotting marks a subset of
the arcs.  Matchings whose dotted arcs are never nested below another arc
are called standard; they index the homology basis in each degree, and the
maps :func:`phi` / :func:`theta` identify them with standard two-row
tableaux.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cache, cached_property
from math import comb


def subset_order_key(members: tuple[int, ...]) -> tuple[int, ...]:
    """Key for the total order on equal-size subsets of {1..n}.

    Subsets are compared from their largest element downward: S < S' when at
    the first disagreement (scanning decreasingly) S has the smaller entry.
    """
    return tuple(sorted(members, reverse=True))


@dataclass(frozen=True)
class NoncrossingMatching:
    """A perfect noncrossing matching of {1..n}, arcs stored as (left, right)."""

    n: int
    arcs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        arcs = tuple(sorted((min(a), max(a)) for a in self.arcs))
        object.__setattr__(self, "arcs", arcs)
        if self.n < 0 or self.n % 2:
            raise ValueError(f"vertex count must be even and nonnegative, got {self.n}")
        seen = [v for arc in arcs for v in arc]
        if sorted(seen) != list(range(1, self.n + 1)):
            raise ValueError(f"arcs {arcs} do not partition 1..{self.n}")
        for (i, j), (k, l) in itertools.combinations(arcs, 2):
            if i < k < j < l:
                raise ValueError(f"arcs ({i},{j}) and ({k},{l}) cross")
        for i, j in arcs:
            if (j - i) % 2 == 0:
                raise ValueError(f"arc ({i},{j}) has endpoints of equal parity")

    @cached_property
    def _arc_of(self) -> dict[int, tuple[int, int]]:
        return {v: arc for arc in self.arcs for v in arc}

    def arc_containing(self, vertex: int) -> tuple[int, int]:
        return self._arc_of[vertex]

    def partner(self, vertex: int) -> int:
        i, j = self._arc_of[vertex]
        return j if vertex == i else i

    def enclosers(self, arc: tuple[int, int]) -> tuple[tuple[int, int], ...]:
        """Arcs strictly enclosing ``arc``, innermost last."""
        i, j = arc
        return tuple(sorted((x, y) for (x, y) in self.arcs if x < i and j < y))

    def sort_key(self):
        return (self.n, self.arcs)


@dataclass(frozen=True)
class DottedMatching:
    """A noncrossing matching together with a set of dotted arcs."""

    matching: NoncrossingMatching
    dotted: frozenset[tuple[int, int]]

    def __post_init__(self):
        object.__setattr__(self, "dotted", frozenset(self.dotted))
        if not self.dotted <= set(self.matching.arcs):
            extra = self.dotted - set(self.matching.arcs)
            raise ValueError(f"dotted arcs {sorted(extra)} are not arcs of the matching")

    @classmethod
    def make(cls, n: int, arcs, dotted=()) -> DottedMatching:
        base = NoncrossingMatching(n, tuple(tuple(a) for a in arcs))
        return cls(base, frozenset((min(a), max(a)) for a in dotted))

    @property
    def n(self) -> int:
        return self.matching.n

    @property
    def arcs(self) -> tuple[tuple[int, int], ...]:
        return self.matching.arcs

    @property
    def k(self) -> int:
        """Number of undotted arcs (the homological degree is 2k)."""
        return len(self.arcs) - len(self.dotted)

    @property
    def undotted_arcs(self) -> tuple[tuple[int, int], ...]:
        return tuple(a for a in self.arcs if a not in self.dotted)

    @property
    def dotted_arcs(self) -> tuple[tuple[int, int], ...]:
        return tuple(a for a in self.arcs if a in self.dotted)

    def is_dotted(self, arc: tuple[int, int]) -> bool:
        return arc in self.dotted

    def with_dots(self, dotted) -> DottedMatching:
        return DottedMatching(self.matching, frozenset(dotted))

    def right_undotted(self) -> tuple[int, ...]:
        """Right endpoints of the undotted arcs, sorted (the set U_M)."""
        return tuple(sorted(j for _, j in self.undotted_arcs))

    def sort_key(self):
        flags = tuple(a in self.dotted for a in self.arcs)
        return (self.n, self.k, subset_order_key(self.right_undotted()), self.arcs, flags)


@dataclass(frozen=True)
class TwoRowTableau:
    """A standard tableau of shape (n-k, k), identified by its bottom row."""

    n: int
    bottom: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "bottom", tuple(self.bottom))
        if self.n < 0 or self.n % 2:
            raise ValueError(f"vertex count must be even and nonnegative, got {self.n}")
        b = self.bottom
        if list(b) != sorted(set(b)) or any(v < 1 or v > self.n for v in b):
            raise ValueError(f"bottom row {b} is not an increasing subset of 1..{self.n}")
        if 2 * len(b) > self.n:
            raise ValueError(f"bottom row {b} longer than half of {self.n}")
        # column condition: the i-th bottom entry must exceed the i-th top entry,
        # equivalently bottom[i] >= 2(i+1)
        for i, v in enumerate(b):
            if v < 2 * (i + 1):
                raise ValueError(f"tableau with bottom row {b} is not standard")

    @property
    def k(self) -> int:
        return len(self.bottom)

    @property
    def top(self) -> tuple[int, ...]:
        bottom = set(self.bottom)
        return tuple(v for v in range(1, self.n + 1) if v not in bottom)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.n - self.k, self.k)

    def sort_key(self):
        return (self.n, self.k, subset_order_key(self.bottom))


def check_partition(parts) -> tuple[int, ...]:
    """Normalize a partition: weakly decreasing, nonnegative, zeros stripped."""
    parts = tuple(int(p) for p in parts)
    if any(p < 0 for p in parts):
        raise ValueError(f"negative part in partition {parts}")
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise ValueError(f"partition {parts} is not weakly decreasing")
    return tuple(p for p in parts if p > 0)


def partitions_of(n: int) -> list[tuple[int, ...]]:
    """All partitions of n, in reverse lexicographic order ((n,) first)."""
    if n < 0:
        raise ValueError("n must be nonnegative")

    @cache
    def gen(remaining: int, largest: int) -> tuple[tuple[int, ...], ...]:
        if remaining == 0:
            return ((),)
        out = []
        for first in range(min(remaining, largest), 0, -1):
            out.extend((first, *rest) for rest in gen(remaining - first, first))
        return tuple(out)

    return [p for p in gen(n, n)]


def catalan(m: int) -> int:
    return comb(2 * m, m) // (m + 1)


def _check_even(n: int) -> None:
    if n < 0 or n % 2:
        raise ValueError(f"vertex count must be even and nonnegative, got {n}")


@cache
def _noncrossing_arc_tuples(lo: int, hi: int) -> tuple[tuple[tuple[int, int], ...], ...]:
    """All noncrossing matchings of the vertex interval [lo, hi], lex order."""
    if lo > hi:
        return ((),)
    out = []
    for mid in range(lo + 1, hi + 1, 2):
        for left in _noncrossing_arc_tuples(lo + 1, mid - 1):
            for right in _noncrossing_arc_tuples(mid + 1, hi):
                out.append(((lo, mid),) + left + right)
    return tuple(out)


@cache
def enumerate_noncrossing(n: int) -> tuple[NoncrossingMatching, ...]:
    """All noncrossing perfect matchings of {1..n}.

    Returned in lexicographic order of the arc tuple (arcs sorted by left
    endpoint); there are Catalan(n/2) of them.
    """
    _check_even(n)
    return tuple(NoncrossingMatching(n, arcs) for arcs in _noncrossing_arc_tuples(1, n))


def is_standard(m: DottedMatching) -> bool:
    """True when no dotted arc of ``m`` is nested below another arc."""
    return all(not m.matching.enclosers(arc) for arc in m.dotted)


def standard_bottom_sets(n: int, k: int) -> list[tuple[int, ...]]:
    """Bottom rows of the standard (n-k, k) tableaux, in undot-set order.

    A k-subset is a valid bottom row exactly when its i-th smallest entry
    is at least 2i (the column condition).
    """
    sets = [b for b in itertools.combinations(range(1, n + 1), k)
            if all(v >= 2 * (i + 1) for i, v in enumerate(b))]
    sets.sort(key=subset_order_key)
    return sets


@cache
def enumerate_standard(n: int, k: int) -> tuple[DottedMatching, ...]:
    """All standard dotted matchings on n vertices with exactly k undotted arcs.

    Canonical order: increasing in the undot set U_M (right endpoints of the
    undotted arcs) under :func:`subset_order_key`.
    """
    _check_even(n)
    if not 0 <= k <= n // 2:
        raise ValueError(f"k={k} out of range for n={n}")
    return tuple(theta(TwoRowTableau(n, b)) for b in standard_bottom_sets(n, k))


def phi(m: DottedMatching) -> TwoRowTableau:
    """Tableau whose bottom row is the right endpoints of the undotted arcs."""
    return TwoRowTableau(m.n, m.right_undotted())


def theta(t: TwoRowTableau) -> DottedMatching:
    """Standard dotted matching associated to a standard two-row tableau.

    Bottom-row entries are matched left to right, each to the nearest
    unmatched vertex on its left, by undotted arcs; what remains is swept up
    into dotted arcs between neighboring unmatched vertices.
    """
    unmatched = set(range(1, t.n + 1))
    undotted = []
    for j in t.bottom:
        i = max(v for v in unmatched if v < j)
        undotted.append((i, j))
        unmatched -= {i, j}
    dotted = []
    while unmatched:
        i = min(unmatched)
        j = min(v for v in unmatched if v > i)
        dotted.append((i, j))
        unmatched -= {i, j}
    return DottedMatching.make(t.n, undotted + dotted, dotted)


def syt_count(n: int, k: int) -> int:
    """Number of standard tableaux of shape (n-k, k): C(n,k) - C(n,k-1)."""
    if k < 0 or 2 * k > n:
        raise ValueError(f"k={k} out of range for n={n}")
    return comb(n, k) - (comb(n, k - 1) if k > 0 else 0)


def springer_dimension(partition) -> int:
    """Complex dimension of the fiber for a nilpotent of the given Jordan type."""
    parts = check_partition(partition)
    return sum(i * p for i, p in enumerate(parts))


def kostka_two_row(mu, lam) -> int:
    """Fillings of mu with content lam (weakly increasing rows, strictly
    increasing columns), for lam with at most two rows.

    For such lam the count is 0 or 1: it is 1 exactly when mu is a (at most)
    two-row partition of the same number with mu_1 >= lam_1.
    """
    mu = check_partition(mu)
    lam = check_partition(lam)
    if len(lam) > 2:
        raise ValueError(f"content partition {lam} has more than two rows")
    if sum(mu) != sum(lam):
        return 0
    if len(mu) > 2:
        return 0
    mu2 = mu[1] if len(mu) > 1 else 0
    lam2 = lam[1] if len(lam) > 1 else 0
    return 1 if mu2 <= lam2 else 0
