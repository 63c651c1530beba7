"""The symmetric-group action on the standard matching basis.

A simple transposition s_i acts on a standard matching M through one of
four local configurations at the vertices i, i+1:

  1. both vertices on dotted arcs        ->  M
  2. (i, i+1) an undotted arc            ->  -M
  3. different arcs, exactly one dotted  ->  M + M'
  4. different arcs, neither dotted      ->  M + M'

where M' rewires the two arcs through i and i+1 into the undotted arc
(i, i+1) plus an arc joining the two far endpoints, which in case 3
carries the dot.  Acting on the signed line-diagram expansion by strand
permutation gives the same answer; :func:`chart_diagram_consistency`
checks that identity exhaustively, and it is what makes the chart a
representation at all.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from math import factorial

from .errors import VerificationError
from .formal import FormalSum
from .linediagrams import expand, permute_diagram
from .matchings import DottedMatching, check_partition, enumerate_standard, partitions_of, syt_count
from .perms import Permutation
from .rewriting import reduce_to_standard


@dataclass(frozen=True)
class RepMatrix:
    """Integer matrix of a group element on the degree-(n, k) standard basis."""

    n: int
    k: int
    entries: tuple[tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return len(self.entries)

    def trace(self) -> int:
        return sum(self.entries[i][i] for i in range(self.size))

    def rows(self) -> list[list[int]]:
        return [list(r) for r in self.entries]


@cache
def act_simple(i: int, m: DottedMatching) -> FormalSum:
    """Action of the simple transposition s_i on a standard matching."""
    n = m.n
    if not 1 <= i <= n - 1:
        raise ValueError(f"generator index {i} out of range for n={n}")
    arc_left = m.matching.arc_containing(i)
    arc_right = m.matching.arc_containing(i + 1)
    if arc_left == arc_right:
        result = FormalSum.single(m, 1 if m.is_dotted(arc_left) else -1)
    elif m.is_dotted(arc_left) and m.is_dotted(arc_right):
        result = FormalSum.single(m)
    else:
        j = m.matching.partner(i)
        k = m.matching.partner(i + 1)
        far_arc = (min(j, k), max(j, k))
        spectators = [a for a in m.arcs if a not in (arc_left, arc_right)]
        spectator_dots = [a for a in m.dotted if a not in (arc_left, arc_right)]
        one_dotted = m.is_dotted(arc_left) != m.is_dotted(arc_right)
        rewired = DottedMatching.make(
            n,
            spectators + [(i, i + 1), far_arc],
            spectator_dots + ([far_arc] if one_dotted else []),
        )
        result = FormalSum([(m, 1), (rewired, 1)])
    # the chart already lands on standard matchings; reduction is a safety net
    return reduce_to_standard(result)


def act_word(word: tuple[int, ...], v: FormalSum) -> FormalSum:
    """Apply a word in the simple transpositions, rightmost letter first."""
    for letter in reversed(word):
        v = v.map_basis(lambda m: act_simple(letter, m))
    return v


def act_permutation(w: Permutation, v: FormalSum) -> FormalSum:
    """Linear action of an arbitrary permutation, via a reduced word."""
    return act_word(w.reduced_word(), v)


def _coordinates(v: FormalSum, index: dict[DottedMatching, int]) -> list[int]:
    column = [0] * len(index)
    for m, coef in v:
        column[index[m]] = coef
    return column


def _word_matrix(n: int, k: int, word: tuple[int, ...]) -> RepMatrix:
    basis = enumerate_standard(n, k)
    index = {m: r for r, m in enumerate(basis)}
    columns = [_coordinates(act_word(word, FormalSum.single(m)), index) for m in basis]
    return RepMatrix(n, k, tuple(zip(*columns)))


def rep_matrix(n: int, k: int, i: int) -> RepMatrix:
    """Matrix of s_i; column c holds the image of the c-th basis matching."""
    return _word_matrix(n, k, (i,))


def permutation_matrix(n: int, k: int, w: Permutation) -> RepMatrix:
    return _word_matrix(n, k, w.reduced_word())


@dataclass(frozen=True)
class CoxeterReport:
    n: int
    k: int
    involutions: int
    braid: int
    commuting: int


def verify_coxeter(n: int, k: int) -> CoxeterReport:
    """Check s_i^2 = 1, braid, and commuting relations on the rep matrices."""
    basis = enumerate_standard(n, k)
    index = {m: r for r, m in enumerate(basis)}

    def is_identity_word(word: tuple[int, ...]) -> bool:
        return all(act_word(word, FormalSum.single(m)) == FormalSum.single(m) for m in basis)

    involutions = braid = commuting = 0
    for i in range(1, n):
        if not is_identity_word((i, i)):
            raise VerificationError("s_i^2 != 1", {"n": n, "k": k, "i": i})
        involutions += 1
    for i in range(1, n - 1):
        if not is_identity_word((i, i + 1) * 3):
            raise VerificationError("braid relation fails", {"n": n, "k": k, "i": i, "j": i + 1})
        braid += 1
    for i in range(1, n):
        for j in range(i + 2, n):
            if not is_identity_word((i, j) * 2):
                raise VerificationError("commuting relation fails", {"n": n, "k": k, "i": i, "j": j})
            commuting += 1
    return CoxeterReport(n, k, involutions, braid, commuting)


def class_representative(n: int, cycle_type) -> Permutation:
    """Cycles on consecutive blocks: type (3,2) gives (1 2 3)(4 5)."""
    parts = check_partition(cycle_type)
    if sum(parts) != n:
        raise ValueError(f"cycle type {parts} does not partition {n}")
    images = list(range(1, n + 1))
    start = 1
    for part in parts:
        for x in range(start, start + part - 1):
            images[x - 1] = x + 1
        images[start + part - 2] = start
        start += part
    return Permutation(tuple(images))


def centralizer_order(cycle_type) -> int:
    """z_lambda = prod over part sizes j of j^m_j * m_j!."""
    parts = check_partition(cycle_type)
    z = 1
    for size in set(parts):
        mult = parts.count(size)
        z *= size**mult * factorial(mult)
    return z


def conjugacy_class_size(n: int, cycle_type) -> int:
    return factorial(n) // centralizer_order(cycle_type)


def character(n: int, k: int, cycle_type) -> int:
    """Trace of the canonical representative of the class on degree (n, k)."""
    word = class_representative(n, cycle_type).reduced_word()
    total = 0
    for m in enumerate_standard(n, k):
        total += act_word(word, FormalSum.single(m)).coefficient(m)
    return total


def irreducibility_check(n: int, k: int) -> Fraction:
    """Character inner product <chi, chi>; equals 1 exactly for irreducibles."""
    total = Fraction(0)
    for cycle_type in partitions_of(n):
        value = character(n, k, cycle_type)
        total += Fraction(value * value, centralizer_order(cycle_type))
    return total


def chart_diagram_consistency(n: int, k: int) -> bool:
    """Does the chart action match strand permutation of the expansions?

    For every standard M and generator s_i, the expansion of the chart's
    answer must equal the relabelled expansion of M.  This is the central
    identity behind the representation.
    """
    for m in enumerate_standard(n, k):
        diagram = expand(m)
        for i in range(1, n):
            via_chart = act_simple(i, m).map_basis(expand)
            via_diagram = permute_diagram(Permutation.simple(n, i), diagram)
            if via_chart != via_diagram:
                raise VerificationError(
                    "chart action disagrees with diagram permutation",
                    {"n": n, "k": k, "i": i, "arcs": m.arcs, "dotted": sorted(m.dotted)},
                )
    return True
