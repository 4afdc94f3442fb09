"""Exact irrational slopes.

Every slope is an irrational number presented through two exact channels:

* a stream of continued-fraction partial quotients, from which consecutive
  convergents give shrinking rational brackets of the value, and
* for quadratic surds, closed-form integer floors via ``math.isqrt``.

All comparisons and floors reduce to integer arithmetic on one of these
channels; no floating point is used anywhere.

Slope expressions accepted by :func:`parse_slope`:

    phi                     (-1+sqrt(5))/2
    e                       Euler's number
    1/e                     its reciprocal
    sqrt(D)                 D a non-square integer >= 2
    (A+B*sqrt(D))/C         integer literals, B may be negative
    cf:[a0;a1,a2,...]       explicit continued fraction; the trailing ``...``
                            repeats the listed quotients after a0 forever

A finite continued fraction denotes a rational and is rejected.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterator, Sequence

from .errors import (
    CoefficientsExhausted,
    InvalidSlope,
    RefinementBudgetExceeded,
    SlopeSyntaxError,
)

DEFAULT_BUDGET = 10_000

# floors for indices above this are recomputed instead of cached, so that
# streaming scans over millions of indices stay O(1) in memory
_FLOOR_CACHE_LIMIT = 100_000


@dataclass(frozen=True)
class Convergent:
    """Continued-fraction convergent p/q in lowest terms."""

    index: int
    p: int
    q: int

    @property
    def value(self) -> Fraction:
        return Fraction(self.p, self.q)


@dataclass(frozen=True)
class RationalInterval:
    """Open interval with rational endpoints, lo < hi."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        if not self.lo < self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def contains(self, x) -> bool:
        return self.lo < Fraction(x) < self.hi


def _floor_surd(p: int, q: int, d: int, r: int) -> int:
    """Exact floor of (p + q*sqrt(d)) / r for integers with r != 0.

    Uses isqrt brackets: sqrt(q^2 d) lies strictly between s and s+1 when
    q != 0 and d is not a perfect square, which pins the floor.
    """
    if r < 0:
        p, q, r = -p, -q, -r
    s = math.isqrt(q * q * d)
    num = p + s if q >= 0 else p - s - 1
    return num // r


class IrrationalSlope:
    """Base class: exact floors, comparisons and rational bracketing."""

    kind = "abstract"

    def __init__(self, budget: int | None = None):
        self.budget = DEFAULT_BUDGET if budget is None else int(budget)
        if self.budget < 1:
            raise InvalidSlope("refinement budget must be >= 1")
        self._quots: list[int] = []
        self._qiter: Iterator[int] | None = None
        # convergent recurrence seeds p[-1]/q[-1] = 1/0, p[0]/q[0] = a0/1
        self._convs: list[tuple[int, int]] = []
        self._floors: dict[int, int] = {}
        self._level = 2  # persistent refinement depth for the CF floor path
        self.stats = {"floors": 0, "refine_steps": 0}

    # -- partial quotient / convergent machinery ------------------------------

    def _quotient_iter(self) -> Iterator[int]:
        raise NotImplementedError

    def partial_quotient(self, k: int) -> int:
        if k < 0:
            raise ValueError("partial quotient index must be >= 0")
        if self._qiter is None:
            self._qiter = self._quotient_iter()
        while len(self._quots) <= k:
            try:
                a = next(self._qiter)
            except StopIteration:
                raise CoefficientsExhausted(
                    f"partial-quotient source ended before index {k}"
                ) from None
            if a is None:
                raise CoefficientsExhausted(
                    f"partial-quotient source ended before index {k}"
                )
            if len(self._quots) > 0 and a < 1:
                raise InvalidSlope(
                    f"partial quotient a{len(self._quots)} = {a} must be >= 1"
                )
            self._quots.append(a)
        return self._quots[k]

    def convergent(self, k: int) -> Convergent:
        """k-th convergent; consecutive convergents bracket the value."""
        if k < 0:
            raise ValueError("convergent index must be >= 0")
        while len(self._convs) <= k:
            j = len(self._convs)
            a = self.partial_quotient(j)
            if j == 0:
                self._convs.append((a, 1))
            elif j == 1:
                p0, q0 = self._convs[0]
                self._convs.append((a * p0 + 1, a * q0))
            else:
                p1, q1 = self._convs[j - 1]
                p0, q0 = self._convs[j - 2]
                self._convs.append((a * p1 + p0, a * q1 + q0))
        p, q = self._convs[k]
        return Convergent(k, p, q)

    def _bracket(self, level: int) -> tuple[Fraction, Fraction]:
        a = self.convergent(level).value
        b = self.convergent(level + 1).value
        return (a, b) if a < b else (b, a)

    def intervals(self) -> Iterator[RationalInterval]:
        """Yield strictly shrinking open rational brackets of the value."""
        level = 2
        while True:
            lo, hi = self._bracket(level)
            yield RationalInterval(lo, hi)
            level += 1

    def refinement(self) -> "Refiner":
        """Fresh refinement handle; handles never share position."""
        return Refiner(self)

    # -- exact floors ----------------------------------------------------------

    def _floor_affine(self, u: int, v: int, w: int) -> int:
        """Exact floor of (u*value + v)/w.  Default: refine rational brackets."""
        if w == 0:
            raise ZeroDivisionError("w must be nonzero")
        if w < 0:
            u, v, w = -u, -v, -w
        if u == 0:
            return v // w
        level = self._level
        for _ in range(self.budget):
            (lp, lq), (hp, hq) = self._endpoints(level)
            f1 = (u * lp + v * lq) // (w * lq)
            f2 = (u * hp + v * hq) // (w * hq)
            if u < 0:
                f1, f2 = f2, f1
            if f1 == f2:
                self._level = level
                return f1
            level += 1
            self.stats["refine_steps"] += 1
        raise RefinementBudgetExceeded(
            f"floor of ({u}*alpha + {v})/{w} unresolved after {self.budget} refinements"
        )

    def _endpoints(self, level: int) -> tuple[tuple[int, int], tuple[int, int]]:
        a = self.convergent(level)
        b = self.convergent(level + 1)
        if Fraction(a.p, a.q) < Fraction(b.p, b.q):
            return (a.p, a.q), (b.p, b.q)
        return (b.p, b.q), (a.p, a.q)

    def floor_multiple(self, k: int) -> int:
        """Exact floor(k * value) for k >= 1."""
        if k < 1:
            raise ValueError("k must be >= 1")
        f = self._floors.get(k)
        if f is None:
            f = self._floor_affine(k, 0, 1)
            self.stats["floors"] += 1
            if k <= _FLOOR_CACHE_LIMIT:
                self._floors[k] = f
        return f

    def floor_reduced(self, k: int) -> int:
        """floor(k * {value}) where {x} is the fractional part."""
        return self.floor_multiple(k) - k * self.floor_multiple(1)

    # -- exact comparisons -----------------------------------------------------

    def compare_multiple(self, k: int, t: int) -> int:
        """Sign of k*value - t for integer t and k != 0; never zero."""
        if k == 0:
            raise ValueError("k must be nonzero")
        if k > 0:
            return -1 if self.floor_multiple(k) < t else 1
        return -1 if self.floor_multiple(-k) >= -t else 1

    def compare_frac_to_rational(self, r: Fraction) -> int:
        """Sign of {value} - r for rational r in [0, 1]; never zero."""
        r = Fraction(r)
        # q*{a} < p  iff  q*a < p + q*floor(a)
        return self.compare_multiple(
            r.denominator, r.numerator + r.denominator * self.floor_multiple(1)
        )

    def frac_compare(self, i: int, j: int) -> int:
        """Compare {i*value} with {j*value}: -1, 0 or +1.

        {i a} < {j a} iff (i-j)a < floor(i a) - floor(j a), an integer, so one
        extra floor settles the comparison exactly.
        """
        if i < 1 or j < 1:
            raise ValueError("indices must be >= 1")
        if i == j:
            return 0
        t = self.floor_reduced(i) - self.floor_reduced(j)
        f1 = self.floor_multiple(1)
        return self.compare_multiple(i - j, t + (i - j) * f1)

    def frac_interval(self, k: int, eps) -> RationalInterval:
        """Rational bracket of {k*value} with width below eps."""
        eps = Fraction(eps)
        if eps <= 0:
            raise ValueError("eps must be positive")
        m = self.floor_multiple(k)
        level = self._level
        for _ in range(self.budget):
            lo, hi = self._bracket(level)
            klo, khi = k * lo - m, k * hi - m
            if 0 <= klo and khi <= 1 and khi - klo < eps:
                self._level = level
                return RationalInterval(klo, khi)
            level += 1
            self.stats["refine_steps"] += 1
        raise RefinementBudgetExceeded(
            f"interval for fractional part of {k}*alpha not below {eps} "
            f"after {self.budget} refinements"
        )

    def expression(self) -> str:
        """Slope expression that parses back to an equal slope."""
        raise NotImplementedError

    def __repr__(self):
        return f"<{type(self).__name__} {self.expression()}>"


class Refiner:
    """Stateful handle over a slope's shrinking interval stream."""

    def __init__(self, slope: IrrationalSlope):
        self._slope = slope
        self._level = 2

    def refine(self) -> RationalInterval:
        lo, hi = self._slope._bracket(self._level)
        self._level += 1
        return RationalInterval(lo, hi)


class QuadraticSurd(IrrationalSlope):
    """(a + b*sqrt(d)) / c with integer parameters, b != 0, d not a square.

    Floors take the isqrt fast path; the inherited continued-fraction path
    stays available and the two must agree (tested).
    """

    kind = "quadratic"

    def __init__(self, a: int, b: int, d: int, c: int, budget: int | None = None):
        super().__init__(budget)
        if c == 0:
            raise InvalidSlope("denominator c must be nonzero")
        if b == 0:
            raise InvalidSlope("b = 0 makes the value rational")
        if d < 2:
            raise InvalidSlope(f"d = {d} must be >= 2")
        if math.isqrt(d) ** 2 == d:
            raise InvalidSlope(f"d = {d} is a perfect square, value is rational")
        if c < 0:
            a, b, c = -a, -b, -c
        g = math.gcd(math.gcd(abs(a), abs(b)), c)
        self.a, self.b, self.d, self.c = a // g, b // g, d, c // g

    def _floor_affine(self, u: int, v: int, w: int) -> int:
        # (u*(a+b*sqrt(d))/c + v)/w = (u*a + v*c + u*b*sqrt(d)) / (c*w)
        if w == 0:
            raise ZeroDivisionError("w must be nonzero")
        return _floor_surd(u * self.a + v * self.c, u * self.b, self.d, self.c * w)

    def _floor_affine_cf(self, u: int, v: int, w: int) -> int:
        """Interval-refinement floor, kept as an independent route."""
        return IrrationalSlope._floor_affine(self, u, v, w)

    def _quotient_iter(self) -> Iterator[int]:
        # state (p, q, r) for x = (p + q*sqrt(d)) / r, kept gcd-reduced
        p, q, r, d = self.a, self.b, self.c, self.d
        while True:
            a = _floor_surd(p, q, d, r)
            yield a
            p -= a * r
            # 1/x = r*(p - q*sqrt(d)) / (p^2 - q^2 d)
            denom = p * p - q * q * d
            p, q, r = r * p, -r * q, denom
            if r < 0:
                p, q, r = -p, -q, -r
            g = math.gcd(math.gcd(abs(p), abs(q)), r)
            p, q, r = p // g, q // g, r // g

    def expression(self) -> str:
        if (self.a, self.b, self.d, self.c) == (-1, 1, 5, 2):
            return "phi"
        if self.a == 0 and self.b == 1 and self.c == 1:
            return f"sqrt({self.d})"
        return f"({self.a}+{self.b}*sqrt({self.d}))/{self.c}"


class EulerE(IrrationalSlope):
    """Euler's number via its partial-quotient pattern [2; 1,2,1, 1,4,1, ...]."""

    kind = "e"

    def _quotient_iter(self) -> Iterator[int]:
        yield 2
        m = 2
        while True:
            yield 1
            yield m
            yield 1
            m += 2

    def expression(self) -> str:
        return "e"


class EulerEInv(IrrationalSlope):
    """1/e: the reciprocal prepends a zero quotient to e's expansion."""

    kind = "1/e"

    def _quotient_iter(self) -> Iterator[int]:
        yield 0
        yield from EulerE()._quotient_iter()

    def expression(self) -> str:
        return "1/e"


class ExplicitCF(IrrationalSlope):
    """Slope given by explicit partial quotients plus an infinite tail rule.

    ``repeat`` cycles the given block forever; ``tail`` is a callable giving
    a_k for k >= len(initial) and may return None to signal exhaustion.
    Omitting both would denote a rational, which is rejected.
    """

    kind = "cf"

    def __init__(
        self,
        initial: Sequence[int],
        repeat: Sequence[int] | None = None,
        tail: Callable[[int], int | None] | None = None,
        budget: int | None = None,
    ):
        super().__init__(budget)
        initial = tuple(int(a) for a in initial)
        if not initial:
            raise InvalidSlope("need at least the leading partial quotient")
        for idx, a in enumerate(initial[1:], start=1):
            if a < 1:
                raise InvalidSlope(f"partial quotient a{idx} = {a} must be >= 1")
        if repeat is not None and tail is not None:
            raise InvalidSlope("give either a repeat block or a tail rule, not both")
        if repeat is not None:
            repeat = tuple(int(a) for a in repeat)
            if not repeat:
                raise InvalidSlope("repeat block must be non-empty")
            if any(a < 1 for a in repeat):
                raise InvalidSlope("repeat block quotients must be >= 1")
        elif tail is None:
            raise InvalidSlope(
                "finite continued fraction denotes a rational; "
                "give a repeat block or a tail rule"
            )
        self.initial = initial
        self.repeat = repeat
        self.tail = tail

    def _quotient_iter(self) -> Iterator[int]:
        yield from self.initial
        if self.repeat is not None:
            while True:
                yield from self.repeat
        else:
            k = len(self.initial)
            while True:
                yield self.tail(k)
                k += 1

    def expression(self) -> str:
        if self.repeat is not None and self.initial[1:] == self.repeat:
            block = ",".join(str(a) for a in self.repeat)
            return f"cf:[{self.initial[0]};{block},...]"
        # pre-periodic blocks and tail rules have no grammar form; informational only
        head = ",".join(str(a) for a in self.initial[1:])
        if self.repeat is not None:
            block = ",".join(str(a) for a in self.repeat)
            return f"cf:[{self.initial[0]};{head},({block})*]"
        return f"cf:[{self.initial[0]};{head},<tail rule>]"


# -- module-level op mirrors ----------------------------------------------------


def convergent(alpha: IrrationalSlope, k: int) -> Convergent:
    return alpha.convergent(k)


def floor_multiple(alpha: IrrationalSlope, k: int) -> int:
    return alpha.floor_multiple(k)


def frac_compare(alpha: IrrationalSlope, i: int, j: int) -> int:
    return alpha.frac_compare(i, j)


def frac_interval(alpha: IrrationalSlope, k: int, eps) -> RationalInterval:
    return alpha.frac_interval(k, eps)


def refinement(alpha: IrrationalSlope) -> Refiner:
    return alpha.refinement()


# -- slope expressions -----------------------------------------------------------

_SQRT_RE = re.compile(r"^sqrt\((\d+)\)$")
_SURD_RE = re.compile(r"^\((-?\d+)([+-]\d+)\*sqrt\((\d+)\)\)/(-?\d+)$")
_CF_RE = re.compile(r"^cf:\[(-?\d+);(.*)\]$")


def phi(budget: int | None = None) -> QuadraticSurd:
    return QuadraticSurd(-1, 1, 5, 2, budget=budget)


def parse_slope(text: str, budget: int | None = None) -> IrrationalSlope:
    """Parse a slope expression; raises SlopeSyntaxError naming the bad token."""
    expr = "".join(text.split())
    if not expr:
        raise SlopeSyntaxError("empty slope expression")
    if expr == "phi":
        return phi(budget)
    if expr == "e":
        return EulerE(budget)
    if expr == "1/e":
        return EulerEInv(budget)
    m = _SQRT_RE.match(expr)
    if m:
        return QuadraticSurd(0, 1, int(m.group(1)), 1, budget=budget)
    m = _SURD_RE.match(expr)
    if m:
        a, b, d, c = (int(m.group(i)) for i in range(1, 5))
        return QuadraticSurd(a, b, d, c, budget=budget)
    m = _CF_RE.match(expr)
    if m:
        return _parse_cf(m.group(1), m.group(2), budget)
    if expr.startswith("cf:"):
        raise SlopeSyntaxError(
            f"malformed continued fraction {text.strip()!r}: "
            "expected cf:[a0;a1,a2,...]"
        )
    if expr.startswith("sqrt") or expr.startswith("("):
        raise SlopeSyntaxError(
            f"malformed surd expression {text.strip()!r}: "
            "expected sqrt(D) or (A+B*sqrt(D))/C with integer literals"
        )
    raise SlopeSyntaxError(f"unrecognized token {text.strip()!r} in slope expression")


def _parse_cf(head: str, body: str, budget: int | None) -> ExplicitCF:
    repeat = False
    if body.endswith("..."):
        repeat = True
        body = body[:-3].rstrip(",")
    quots = []
    for tok in body.split(","):
        if tok == "":
            continue
        if not re.fullmatch(r"-?\d+", tok):
            raise SlopeSyntaxError(f"invalid partial quotient token {tok!r}")
        quots.append(int(tok))
    if repeat:
        if not quots:
            raise SlopeSyntaxError("repeating continued fraction needs quotients before '...'")
        return ExplicitCF([int(head)] + quots, repeat=quots, budget=budget)
    return ExplicitCF([int(head)] + quots, budget=budget)
