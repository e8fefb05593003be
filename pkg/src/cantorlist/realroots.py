"""Certified real roots of integer polynomials.

Everything in the decision path is exact: Sturm sequences with integer
coefficients, sign evaluation at rational points, and bisection on
rational intervals.  Floating point appears only in :class:`QuadraticSurd`
output formatting, which is a test oracle.
"""

from __future__ import annotations

import decimal
import math
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt
from typing import Sequence

from .intpoly import DomainError, Poly, derivative, divmod_poly, reflect, sign_at


class EndpointRootError(DomainError):
    """An interval endpoint is a root; the caller must move it."""


@dataclass(frozen=True)
class Interval:
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        if self.lo > self.hi:
            raise DomainError(f"empty interval [{self.lo}, {self.hi}]")

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2


@dataclass(frozen=True, eq=False)
class AlgebraicReal:
    """A real root of ``minpoly``, identified by an isolating interval.

    Degree-1 numbers carry the exact value as a degenerate interval.
    """

    minpoly: Poly
    isol: Interval

    @property
    def is_rational(self) -> bool:
        return self.isol.lo == self.isol.hi

    @property
    def exact(self) -> Fraction:
        if not self.is_rational:
            raise DomainError("irrational number has no exact rational value")
        return self.isol.lo

    def __float__(self) -> float:
        return float(refine_to(self, Fraction(1, 2**60)).isol.midpoint)

    def __repr__(self) -> str:
        if self.is_rational:
            return f"AlgebraicReal({self.minpoly}, {self.exact})"
        return f"AlgebraicReal({self.minpoly}, [{self.isol.lo}, {self.isol.hi}])"


@dataclass(frozen=True)
class SturmChain:
    chain: tuple[Poly, ...]

    def variations(self, x) -> int:
        prev = 0
        v = 0
        for p in self.chain:
            s = sign_at(p, x)
            if s:
                if prev and s != prev:
                    v += 1
                prev = s
        return v


def sign_changes(seq: Sequence[int]) -> int:
    signs = [1 if a > 0 else -1 for a in seq if a]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def descartes_bound(p: Poly) -> tuple[int, int]:
    """Upper bounds (with parity) on the numbers of positive and negative roots."""
    if p.degree < 1:
        raise DomainError("descartes_bound needs degree >= 1")
    return sign_changes(p.coeffs), sign_changes(reflect(p).coeffs)


def _integer_scaled(coeffs: list[Fraction]) -> Poly:
    """Multiply by a positive rational so that the coefficients are coprime integers."""
    den = 1
    for c in coeffs:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in coeffs]
    g = 0
    for a in ints:
        g = gcd(g, a)
    return Poly(a // g for a in ints) if g else Poly(())


def sturm_chain(p: Poly) -> SturmChain:
    if p.is_zero:
        raise DomainError("Sturm chain of the zero polynomial")
    chain = [p]
    if p.degree >= 1:
        chain.append(derivative(p))
        while True:
            _, r = divmod_poly(chain[-2], chain[-1])
            if not r:
                break
            chain.append(_integer_scaled([-c for c in r]))
    return SturmChain(tuple(chain))


def count_roots_in(s: SturmChain, iv: Interval) -> int:
    """Distinct real roots in the open interval ``(lo, hi)``."""
    p = s.chain[0]
    if iv.lo >= iv.hi:
        raise DomainError("count_roots_in needs lo < hi")
    for x in (iv.lo, iv.hi):
        if sign_at(p, x) == 0:
            raise EndpointRootError(f"{x} is a root of {p}")
    return s.variations(iv.lo) - s.variations(iv.hi)


def cauchy_bound(p: Poly) -> Fraction:
    return 1 + Fraction(max(abs(a) for a in p.coeffs[:-1]), abs(p.lc))


def _off_root(p: Poly, x: Fraction, width: Fraction) -> Fraction:
    """``x`` itself, or ``x`` nudged right by a small dyadic step if it is a root."""
    t = 2
    while sign_at(p, x) == 0:
        x = x + width / 2**t
        t += 1
    return x


def isolate_roots(p: Poly) -> list[AlgebraicReal]:
    """All real roots of a squarefree ``p``, ascending, with isolating intervals."""
    if p.degree < 1:
        raise DomainError("isolate_roots needs degree >= 1")
    if p.degree == 1:
        r = Fraction(-p.coeffs[0], p.coeffs[1])
        return [AlgebraicReal(p, Interval(r, r))]
    s = sturm_chain(p)
    m = cauchy_bound(p)
    out = []
    stack = [(Interval(-m, m), count_roots_in(s, Interval(-m, m)))]
    while stack:
        iv, n = stack.pop()
        if n == 0:
            continue
        if n == 1:
            out.append(AlgebraicReal(p, iv))
            continue
        mid = _off_root(p, iv.midpoint, iv.width)
        left, right = Interval(iv.lo, mid), Interval(mid, iv.hi)
        nl = count_roots_in(s, left)
        # right half pushed first so the left half is handled first
        stack.append((right, n - nl))
        stack.append((left, nl))
    return out


def bisect_once(a: AlgebraicReal) -> AlgebraicReal:
    if a.is_rational:
        return a
    lo, hi = a.isol.lo, a.isol.hi
    mid = (lo + hi) / 2
    sm = sign_at(a.minpoly, mid)
    if sm == 0:
        return AlgebraicReal(a.minpoly, Interval(mid, mid))
    if sm == sign_at(a.minpoly, lo):
        return AlgebraicReal(a.minpoly, Interval(mid, hi))
    return AlgebraicReal(a.minpoly, Interval(lo, mid))


def _split_at(a: AlgebraicReal, x: Fraction) -> AlgebraicReal:
    """Keep the part of the isolating interval on one side of ``x``."""
    sx = sign_at(a.minpoly, x)
    if sx == 0:
        return AlgebraicReal(a.minpoly, Interval(x, x))
    if sx == sign_at(a.minpoly, a.isol.lo):
        return AlgebraicReal(a.minpoly, Interval(x, a.isol.hi))
    return AlgebraicReal(a.minpoly, Interval(a.isol.lo, x))


def refine_to(a: AlgebraicReal, eps) -> AlgebraicReal:
    eps = Fraction(eps)
    if eps <= 0:
        raise DomainError("eps must be positive")
    while a.isol.width > eps:
        a = bisect_once(a)
    return a


def compare(a: AlgebraicReal, b: AlgebraicReal) -> int:
    """-1, 0 or 1 as ``a`` is less than, equal to, or greater than ``b``."""
    while True:
        if a.is_rational and b.is_rational:
            return (a.exact > b.exact) - (a.exact < b.exact)
        # endpoints of irrational isolating intervals are never roots
        if a.isol.hi <= b.isol.lo:
            return -1
        if b.isol.hi <= a.isol.lo:
            return 1
        if a.minpoly == b.minpoly and not a.is_rational:
            lo = max(a.isol.lo, b.isol.lo)
            hi = min(a.isol.hi, b.isol.hi)
            if count_roots_in(sturm_chain(a.minpoly), Interval(lo, hi)) > 0:
                return 0
        if a.isol.width >= b.isol.width:
            a = bisect_once(a)
        else:
            b = bisect_once(b)


def sign_of(a: AlgebraicReal) -> int:
    """Exact sign of ``a``, without refining when the interval straddles 0."""
    lo, hi = a.isol.lo, a.isol.hi
    if lo >= 0 and hi > 0:
        return 1
    if hi <= 0 and lo < 0:
        return -1
    if lo == hi == 0:
        return 0
    s0 = sign_at(a.minpoly, 0)
    if s0 == 0:
        return 0
    return 1 if s0 == sign_at(a.minpoly, lo) else -1


def truncated_decimal(a: AlgebraicReal, digits: int = 10, precision: int = 11) -> str:
    """Signed decimal truncated (toward zero) to ``digits`` fractional digits.

    The interval is refined below ``10**-precision`` and then split at
    decimal grid points until it lies between two consecutive grid points
    of spacing ``10**-digits`` on one side of 0, so the output is certified.
    Rational numbers are written exactly as ``p/q`` instead.
    """
    a = refine_to(a, Fraction(1, 10**precision))
    if a.is_rational:
        return str(a.exact)
    scale = 10**digits
    while True:
        lo, hi = a.isol.lo, a.isol.hi
        if lo < 0 < hi:
            cut = Fraction(0)
        else:
            neg = hi <= 0
            mlo, mhi = (-hi, -lo) if neg else (lo, hi)
            # largest grid point strictly below the root's upper bound
            grid = math.ceil(mhi * scale) - 1
            if Fraction(grid, scale) <= mlo:
                break
            cut = Fraction(-grid if neg else grid, scale)
        a = _split_at(a, cut)
        if a.is_rational:
            return str(a.exact)
    whole, frac = divmod(grid, scale)
    return f"{'-' if neg else '+'}{whole}.{frac:0{digits}d}"


@dataclass(frozen=True)
class QuadraticSurd:
    """The number ``(rational + coeff * sqrt(radicand)) / denom``."""

    rational: int
    coeff: int
    radicand: int
    denom: int

    def to_decimal(self, prec: int = 50) -> decimal.Decimal:
        with decimal.localcontext() as ctx:
            ctx.prec = prec
            root = decimal.Decimal(self.radicand).sqrt()
            return (self.rational + self.coeff * root) / self.denom

    def __float__(self) -> float:
        return float(self.to_decimal())

    def __str__(self) -> str:
        op = "+" if self.coeff > 0 else "-"
        return f"({self.rational}{op}{abs(self.coeff)}*sqrt({self.radicand}))/{self.denom}"


def quadratic_roots_closed_form(q: int, a1: int, N: int, s1: int, s2: int) -> tuple[QuadraticSurd, QuadraticSurd]:
    """Roots of ``q x^2 + s1*a1 x + s2*N`` as surds, smaller root first.

    ``a1 = 0`` is accepted (the pure quadratic ``q x^2 + s2*N``).
    """
    if q < 1 or a1 < 0 or N < 1 or s1 not in (1, -1) or s2 not in (1, -1):
        raise DomainError("need q >= 1, a1 >= 0, N >= 1 and unit signs")
    disc = a1 * a1 - s2 * 4 * q * N
    if disc <= 0:
        raise DomainError(f"discriminant {disc} <= 0: no two real roots")
    if isqrt(disc) ** 2 == disc:
        raise DomainError(f"discriminant {disc} is a square: the polynomial factors")
    return (QuadraticSurd(-s1 * a1, -1, disc, 2 * q), QuadraticSurd(-s1 * a1, 1, disc, 2 * q))
