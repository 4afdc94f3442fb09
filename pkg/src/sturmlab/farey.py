"""Order-n Farey cells and the experiments built on them.

The ordering permutation of size n is constant on each open interval between
adjacent order-n Farey fractions, so integrating its order over (0, 1) is a
finite exact sum: one permutation per cell, evaluated at the cell's mediant.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .errors import WitnessCollision
from .irrational import IrrationalSlope
from .permtool import FracPermutation, b_stream, order
from .sturmian import factor_set


@dataclass(frozen=True)
class FareyCell:
    """Open interval between adjacent order-n Farey fractions.

    The witness is the mediant: the unique fraction of least denominator
    inside the cell, and that denominator exceeds n.
    """

    left: Fraction
    right: Fraction
    witness: Fraction


def _farey_pairs(n: int) -> Iterator[tuple[tuple[int, int], tuple[int, int]]]:
    # standard next-term recurrence for Farey neighbours
    a, b, c, d = 0, 1, 1, n
    while (c, d) != (1, 1):
        yield (a, b), (c, d)
        k = (n + b) // d
        a, b, c, d = c, d, k * c - a, k * d - b
    yield (a, b), (1, 1)


def farey_cells(n: int) -> list[FareyCell]:
    """All cells of the order-n Farey dissection of (0, 1), left to right."""
    if n < 1:
        raise ValueError("n must be >= 1")
    cells = []
    for (a, b), (c, d) in _farey_pairs(n):
        assert b * c - a * d == 1, "not adjacent Farey fractions"
        cells.append(
            FareyCell(Fraction(a, b), Fraction(c, d), Fraction(a + c, b + d))
        )
    return cells


def perm_on_cell(cell: FareyCell, n: int) -> FracPermutation:
    """Ordering permutation of 1..n on a cell, read off at its witness."""
    p, q = cell.witness.numerator, cell.witness.denominator
    keys = [(i * p) % q for i in range(1, n + 1)]
    if len(set(keys)) != n or 0 in keys:
        raise WitnessCollision(
            f"witness {cell.witness} collides on multiples up to {n}"
        )
    line = sorted(range(1, n + 1), key=lambda i: keys[i - 1])
    return FracPermutation(n, tuple(line))


def cell_containing(alpha: IrrationalSlope, n: int) -> FareyCell:
    """The order-n cell holding {alpha}, located by exact binary search."""
    cells = farey_cells(n)
    lo, hi = 0, len(cells) - 1
    while lo < hi:
        mid = (lo + hi) // 2
        if alpha.compare_frac_to_rational(cells[mid].right) > 0:
            lo = mid + 1
        else:
            hi = mid
    return cells[lo]


@dataclass(frozen=True)
class IntegralResult:
    """Exact integral of the permutation order over (0, 1) at size n."""

    n: int
    value: Fraction
    cells: int
    coverage: Fraction  # total cell length; must be exactly 1


def exact_integral(n: int) -> IntegralResult:
    cells = farey_cells(n)
    total = Fraction(0)
    coverage = Fraction(0)
    for cell in cells:
        length = cell.right - cell.left
        total += length * order(perm_on_cell(cell, n))
        coverage += length
    return IntegralResult(n, total, len(cells), coverage)


def sign_sum(alpha: IrrationalSlope, upto: int) -> tuple[int, int]:
    """(final sum, max |partial sum|) of ordering-permutation signs.

    The sign changes only at even sizes m, by the parity of floor(m*alpha);
    each step therefore costs one exact floor.
    """
    if upto < 1:
        raise ValueError("upto must be >= 1")
    cur, total, peak = 1, 0, 0
    for m in range(1, upto + 1):
        if m > 1 and m % 2 == 0 and alpha.floor_multiple(m) % 2:
            cur = -cur
        total += cur
        peak = max(peak, abs(total))
    return total, peak


def b_range_search(alpha: IrrationalSlope, target: int, k_max: int) -> int | None:
    """Least k <= k_max with B(k) == target, or None.

    Streams the incremental recurrence, so memory stays O(1) even for scans
    into the tens of millions.
    """
    if k_max < 1:
        raise ValueError("k_max must be >= 1")
    for k, b in b_stream(alpha):
        if b == target:
            return k
        if k >= k_max:
            return None


def _hamming_matrix(points: tuple[tuple[int, ...], ...]) -> list[list[int]]:
    # 0/1 vertices: squared euclidean distance is the number of differing bits
    m = len(points)
    dist = [[0] * m for _ in range(m)]
    for i in range(m):
        for j in range(i + 1, m):
            h = sum(x != y for x, y in zip(points[i], points[j]))
            dist[i][j] = dist[j][i] = h
    return dist


def _isometry_exists(da: list[list[int]], db: list[list[int]]) -> bool:
    m = len(da)
    prof_a = [tuple(sorted(row)) for row in da]
    prof_b = [tuple(sorted(row)) for row in db]
    if sorted(prof_a) != sorted(prof_b):
        return False
    cand = [[j for j in range(m) if prof_b[j] == prof_a[i]] for i in range(m)]
    assign = [-1] * m
    used = [False] * m

    def backtrack(i: int) -> bool:
        if i == m:
            return True
        for j in cand[i]:
            if used[j]:
                continue
            if all(da[i][t] == db[j][assign[t]] for t in range(i)):
                assign[i] = j
                used[j] = True
                if backtrack(i + 1):
                    return True
                used[j] = False
        return False

    return backtrack(0)


def congruence_test(alpha: IrrationalSlope, beta: IrrationalSlope, n: int) -> bool:
    """Whether the two factor simplices at size n are congruent.

    Vertices are 0/1 vectors, so all squared distances are integers and
    congruence reduces to a distance-preserving vertex bijection, found by
    backtracking with per-vertex distance-profile pruning.
    """
    va = factor_set(alpha, n).factors
    vb = factor_set(beta, n).factors
    return _isometry_exists(_hamming_matrix(va), _hamming_matrix(vb))


def complement_factors(factors: tuple[tuple[int, ...], ...]) -> tuple[tuple[int, ...], ...]:
    """Bitwise complement of each factor, re-sorted anti-lexicographically.

    Complementing all letters realises the slope reflection alpha -> 1-alpha,
    and geometrically is the point reflection through (1/2, ..., 1/2).
    """
    return tuple(sorted((tuple(1 - x for x in f) for f in factors), reverse=True))
