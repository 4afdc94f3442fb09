"""Permutations induced by ordering fractional parts {alpha}, ..., {n*alpha}.

pi(k) is the index whose fractional part is k-th smallest.  Composition is
(sigma*tau)(i) = sigma(tau(i)), i.e. the right factor acts first.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cmp_to_key
from typing import Iterator, Sequence

from .errors import RecurrenceMismatch
from .irrational import IrrationalSlope


@dataclass(frozen=True)
class FracPermutation:
    """Permutation of {1..n} in one-line notation."""

    n: int
    one_line: tuple[int, ...]

    def __post_init__(self):
        if len(self.one_line) != self.n or sorted(self.one_line) != list(
            range(1, self.n + 1)
        ):
            raise ValueError(f"not a permutation of 1..{self.n}: {self.one_line}")

    def __call__(self, i: int) -> int:
        if not 1 <= i <= self.n:
            raise ValueError(f"index {i} out of range 1..{self.n}")
        return self.one_line[i - 1]

    @classmethod
    def identity(cls, n: int) -> "FracPermutation":
        return cls(n, tuple(range(1, n + 1)))

    @classmethod
    def from_cycles(cls, n: int, cycles: Sequence[Sequence[int]]) -> "FracPermutation":
        line = list(range(1, n + 1))
        for cyc in cycles:
            for a, b in zip(cyc, cyc[1:] + type(cyc)([cyc[0]])):
                line[a - 1] = b
        return cls(n, tuple(line))

    def inverse(self) -> "FracPermutation":
        inv = [0] * self.n
        for i, v in enumerate(self.one_line, start=1):
            inv[v - 1] = i
        return FracPermutation(self.n, tuple(inv))

    def compose(self, other: "FracPermutation") -> "FracPermutation":
        """self after other: (self*other)(i) = self(other(i))."""
        if other.n != self.n:
            raise ValueError("sizes differ")
        return FracPermutation(
            self.n, tuple(self.one_line[v - 1] for v in other.one_line)
        )

    __mul__ = compose

    def embed(self, m: int) -> "FracPermutation":
        """The same permutation inside S_m, fixing n+1..m."""
        if m < self.n:
            raise ValueError("cannot embed into a smaller symmetric group")
        return FracPermutation(m, self.one_line + tuple(range(self.n + 1, m + 1)))

    def cycles(self) -> list[tuple[int, ...]]:
        """Disjoint cycles, each starting at its least element, sorted by it."""
        seen = [False] * self.n
        out = []
        for start in range(1, self.n + 1):
            if seen[start - 1]:
                continue
            cyc = [start]
            seen[start - 1] = True
            j = self(start)
            while j != start:
                cyc.append(j)
                seen[j - 1] = True
                j = self(j)
            out.append(tuple(cyc))
        return out

    def cycle_type(self) -> tuple[int, ...]:
        return tuple(sorted((len(c) for c in self.cycles()), reverse=True))

    def fixed_points(self) -> list[int]:
        return [i for i in range(1, self.n + 1) if self(i) == i]

    def cycle_string(self) -> str:
        return "".join("(" + " ".join(map(str, c)) + ")" for c in self.cycles())


def pi_direct(alpha: IrrationalSlope, n: int) -> FracPermutation:
    """Sort 1..n by fractional part of k*alpha, exactly."""
    if n < 1:
        raise ValueError("n must be >= 1")
    line = sorted(range(1, n + 1), key=cmp_to_key(alpha.frac_compare))
    return FracPermutation(n, tuple(line))


def pi_sos(alpha: IrrationalSlope, n: int) -> FracPermutation:
    """Build the ordering permutation from its three-term recurrence.

    Only the positions of the least and greatest fractional parts are found
    by comparison; the rest follows by integer steps.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if n == 1:
        return FracPermutation(1, (1,))
    first = last = 1
    for k in range(2, n + 1):
        if alpha.frac_compare(k, first) < 0:
            first = k
        if alpha.frac_compare(k, last) > 0:
            last = k
    line = [0] * n
    line[0] = first
    for k in range(1, n):
        nxt = line[k - 1]
        if line[k - 1] <= last:
            nxt += first
        if n < first + line[k - 1]:
            nxt -= last
        line[k] = nxt
    if sorted(line) != list(range(1, n + 1)):
        raise RecurrenceMismatch(f"recurrence produced a non-bijection for n={n}")
    return FracPermutation(n, tuple(line))


def b_alpha(alpha: IrrationalSlope, k: int) -> int:
    """Number of q in 1..k-1 with {q*alpha} < {k*alpha} (direct count)."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return sum(1 for q in range(1, k) if alpha.frac_compare(q, k) < 0)


def b_stream(alpha: IrrationalSlope) -> Iterator[tuple[int, int]]:
    """Yield (k, B(k)) for k = 1, 2, ... in O(1) state per step.

    Works on the slope gamma = {alpha} or its reflection 1 - {alpha},
    whichever lies below 1/2; there the second difference of B depends only
    on which of [0, g), [g, 2g), [2g, 1) contains {k*g}, and each test is a
    comparison of exact floors.
    """
    f1 = alpha.floor_multiple(1)

    def fred(k: int) -> int:
        return alpha.floor_multiple(k) - k * f1

    flip = fred(2) == 1  # floor(2{a}) = 1 iff {a} > 1/2

    def g(k: int) -> int:
        fk = fred(k)
        return k - 1 - fk if flip else fk

    def out(k: int, bg: int) -> int:
        return k - 1 - bg if flip else bg

    yield 1, 0
    b2, b1 = 0, 1  # B_gamma at k-1 and k-2 once the loop starts
    yield 2, out(2, 1)
    g2, g1 = g(1), g(2)
    k = 3
    while True:
        gk = g(k)
        if gk - g1 == 1:
            step = 1 - k  # {k g} in [0, g)
        elif gk - g2 >= 1:
            step = k - 1  # {k g} in [g, 2g)
        else:
            step = 0  # {k g} in [2g, 1)
        bk = 2 * b1 - b2 + step
        yield k, out(k, bk)
        b2, b1 = b1, bk
        g2, g1 = g1, gk
        k += 1


class BetterCount:
    """Incrementally extended table of B(k) values for one slope."""

    def __init__(self, alpha: IrrationalSlope):
        self.alpha = alpha
        self._table: list[int] = []
        self._src = b_stream(alpha)

    def value(self, k: int) -> int:
        if k < 1:
            raise ValueError("k must be >= 1")
        while len(self._table) < k:
            _, b = next(self._src)
            self._table.append(b)
        return self._table[k - 1]

    def values_upto(self, k: int) -> list[int]:
        self.value(k)
        return self._table[:k]


def rho(n: int, k: int) -> FracPermutation:
    """The (n-k)-cycle (n, n-1, ..., k+1) inside S_n; identity when k = n-1."""
    if not 0 <= k <= n - 1:
        raise ValueError(f"need 0 <= k <= n-1, got k={k}, n={n}")
    line = list(range(1, n + 1))
    for i in range(k + 2, n + 1):
        line[i - 1] = i - 1
    line[k] = n
    return FracPermutation(n, tuple(line))


def sign_direct(pi: FracPermutation) -> int:
    """Signature via cycle decomposition."""
    return -1 if (pi.n - len(pi.cycles())) % 2 else 1


def sign_formula(alpha: IrrationalSlope, m: int) -> int:
    """Signature of the ordering permutation from floor parities.

    The product of (-1)^floor(2*l*alpha) over l <= m//2.  Adding an integer
    to alpha changes each floor by an even amount, so reduction mod 1 is
    immaterial here.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    s = 1
    for l in range(1, m // 2 + 1):
        if alpha.floor_multiple(2 * l) % 2:
            s = -s
    return s


def order(pi: FracPermutation) -> int:
    return math.lcm(*(len(c) for c in pi.cycles()))


def multiplicative_order(x: int, m: int) -> int:
    if m < 1:
        raise ValueError("modulus must be >= 1")
    if m == 1:
        return 1
    x %= m
    if math.gcd(x, m) != 1:
        raise ValueError(f"{x} is not a unit mod {m}")
    t, cur = 1, x
    while cur != 1:
        cur = cur * x % m
        t += 1
    return t


@dataclass(frozen=True)
class OrderPrediction:
    """Predicted orders at sizes n-1 and n, from residue arithmetic alone.

    case is "max" when {n*alpha} is the largest fractional part, "min" when
    it is the smallest; g is the auxiliary modulus factor used in the "min"
    case.
    """

    case: str
    order_prev: int
    order_n: int
    g: int | None = None


def order_prediction(
    alpha: IrrationalSlope, n: int, pi: FracPermutation | None = None
) -> OrderPrediction | None:
    """Order prediction when the newest point is extremal, else None."""
    if n < 2:
        raise ValueError("n must be >= 2")
    if pi is None:
        pi = pi_direct(alpha, n)
    if pi(n) == n:
        t = multiplicative_order(pi(1), n)
        return OrderPrediction("max", t, t)
    if pi(1) == n:
        pn = pi(n)
        prev = multiplicative_order(-pn % n, n)
        g = next(
            g for g in range(1, pn + 2) if (pn + 1) % g == 0 and math.gcd(n, (pn + 1) // g) == 1
        )
        return OrderPrediction("min", prev, multiplicative_order(-pn % (g * n), g * n), g)
    return None


@dataclass(frozen=True)
class Gap:
    """Symbolic gap c*{alpha} + t between consecutive circle points.

    Irrationality makes (c, t) a faithful key: two gaps are equal iff their
    descriptors are.
    """

    coeff: int
    offset: int

    def __str__(self):
        if self.offset == 0:
            return f"{self.coeff}*frac"
        return f"{self.coeff}*frac{self.offset:+d}"


def three_distance_gaps(
    alpha: IrrationalSlope, n: int, ordering: Sequence[int] | None = None
) -> tuple[Gap, ...]:
    """The n+1 gaps cut from [0, 1] by {alpha}, ..., {n*alpha}, in circle order.

    ordering, if given, must list 1..n by increasing fractional part (callers
    that maintain it incrementally can skip the sort).
    """
    if ordering is None:
        ordering = pi_direct(alpha, n).one_line
    fred = alpha.floor_reduced
    seq = [0] + list(ordering)
    gaps = []
    for u, v in zip(seq, seq[1:]):
        fu = fred(u) if u else 0
        gaps.append(Gap(v - u, fu - fred(v)))
    last = seq[-1]
    gaps.append(Gap(-last, fred(last) + 1))
    return tuple(gaps)
