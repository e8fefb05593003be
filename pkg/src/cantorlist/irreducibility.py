"""Irreducibility over the integers.

Two independent routes decide whether a canonical polynomial factors:

* :func:`is_irreducible` searches the coefficient box given by the Mignotte
  bound, restricted by the classical necessary conditions (leading
  coefficient of a factor divides ``a_k``, constant term divides ``a_0``,
  and ``g(1) | p(1)``, ``g(-1) | p(-1)``).
* :func:`oracle_factor_search` is Kronecker's method: a factor of degree
  ``d`` is pinned down by its values at ``d + 1`` integer points, each of
  which divides the corresponding value of ``p``.  It uses no coefficient
  bound at all.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import comb, gcd, isqrt
from typing import Union

from .intpoly import DomainError, Poly, exact_divide, primitive_part, sign_at


@dataclass(frozen=True)
class FactorWitness:
    factor: Poly
    cofactor: Poly

    def check(self, p: Poly) -> bool:
        return self.factor * self.cofactor == p


Verdict = Union[bool, FactorWitness]


def divisors(n: int) -> list[int]:
    """Positive divisors of ``|n|`` in increasing order (``n != 0``)."""
    n = abs(n)
    if n == 0:
        raise DomainError("divisors of 0 are unbounded")
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def rational_roots(p: Poly) -> set[Fraction]:
    """All rational roots, via the rational root theorem."""
    if p.degree < 1:
        raise DomainError("rational_roots needs degree >= 1")
    roots: set[Fraction] = set()
    coeffs = list(p.coeffs)
    if coeffs[0] == 0:
        roots.add(Fraction(0))
        while coeffs[0] == 0:
            coeffs.pop(0)
    q = Poly(coeffs)
    if q.degree < 1:
        return roots
    for num in divisors(q.coeffs[0]):
        for den in divisors(q.lc):
            for cand in (Fraction(num, den), Fraction(-num, den)):
                if sign_at(q, cand) == 0:
                    roots.add(cand)
    return roots


def mignotte_bound(p: Poly) -> int:
    """``ceil(2**k * sqrt(1 + sum a_j^2)) * a_k`` as an integer."""
    if p.degree < 2:
        raise DomainError("mignotte_bound needs degree >= 2")
    s = 1 + sum(a * a for a in p.coeffs)
    root = isqrt(s)
    if root * root < s:
        root += 1
    return (2 ** p.degree) * root * abs(p.lc)


def _coefficient_bounds(p: Poly, d: int, lead: int) -> list[int]:
    """Per-coefficient bounds for a degree-``d`` factor with leading coefficient ``lead``.

    Mignotte: ``|b_j| <= C(d-1, j) * ||p||_2 + C(d-1, j-1) * |lc p|`` for a
    factor with leading coefficient dividing ``lc p``; scaled by
    ``lead / lc p`` (at most 1) this stays valid, so we keep the unscaled form.
    """
    norm = isqrt(sum(a * a for a in p.coeffs)) + 1
    out = []
    for j in range(d + 1):
        b = (comb(d - 1, j) if j <= d - 1 else 0) * norm
        if j >= 1:
            b += comb(d - 1, j - 1) * abs(p.lc)
        out.append(b)
    return out


def _linear_witness(p: Poly) -> FactorWitness | None:
    for r in sorted(rational_roots(p), reverse=True):
        f = Poly((-r.numerator, r.denominator))
        q = exact_divide(p, f)
        if q is not None:
            return FactorWitness(f, q)
    return None


def _trial_factor(p: Poly, d: int, box: int) -> FactorWitness | None:
    """Search degree-``d`` divisors of ``p`` inside the Mignotte box.

    The constant term runs over divisors of ``a_0``, the leading coefficient
    over positive divisors of ``a_k``, and the two highest middle
    coefficients are solved from prescribed values ``g(1) | p(1)`` and
    ``g(-1) | p(-1)``.  Remaining middle coefficients range over the box.
    """
    p1 = sum(p.coeffs)
    pm1 = sum(-a if j % 2 else a for j, a in enumerate(p.coeffs))
    # no rational roots at this point, so p(1) and p(-1) are nonzero
    vals1 = [s * v for v in divisors(p1) for s in (1, -1)]
    valsm1 = [s * v for v in divisors(pm1) for s in (1, -1)]
    for lead in divisors(p.lc):
        lim = [min(b, box) for b in _coefficient_bounds(p, d, lead)]
        for c0 in (s * v for v in divisors(p.coeffs[0]) for s in (1, -1)):
            if d == 2:
                for g1 in vals1:
                    b1 = g1 - lead - c0
                    gm1 = lead - b1 + c0
                    if abs(b1) > lim[1] or gm1 == 0 or pm1 % gm1:
                        continue
                    w = _try_divisor(p, (c0, b1, lead))
                    if w is not None:
                        return w
                continue
            lo_slot, hi_slot = d - 2, d - 1
            free = [range(-lim[j], lim[j] + 1) for j in range(1, d - 2)]
            for mids in itertools.product(*free):
                known = [c0, *mids, 0, 0, lead]
                even = sum(b for j, b in enumerate(known) if j % 2 == 0)
                odd = sum(b for j, b in enumerate(known) if j % 2 == 1)
                for g1 in vals1:
                    for gm1 in valsm1:
                        if (g1 + gm1) % 2:
                            continue
                        need_even = (g1 + gm1) // 2 - even
                        need_odd = (g1 - gm1) // 2 - odd
                        if lo_slot % 2 == 0:
                            b_lo, b_hi = need_even, need_odd
                        else:
                            b_lo, b_hi = need_odd, need_even
                        if abs(b_lo) > lim[lo_slot] or abs(b_hi) > lim[hi_slot]:
                            continue
                        known[lo_slot], known[hi_slot] = b_lo, b_hi
                        w = _try_divisor(p, known)
                        if w is not None:
                            return w
    return None


def _try_divisor(p: Poly, coeffs) -> FactorWitness | None:
    g = Poly(coeffs)
    q = exact_divide(p, g)
    return None if q is None else FactorWitness(g, q)


def is_irreducible(p: Poly) -> Verdict:
    """``True`` when ``p`` is irreducible over ZZ, else a :class:`FactorWitness`."""
    if not p.is_canonical():
        raise DomainError(f"{p} is not canonical")
    k = p.degree
    if k < 1:
        raise DomainError("constant polynomials are not considered")
    if k == 1:
        return True
    w = _linear_witness(p)
    if w is not None:
        return w
    if k <= 3:
        return True
    box = mignotte_bound(p)
    for d in range(2, k // 2 + 1):
        w = _trial_factor(p, d, box)
        if w is not None:
            return w
    return True


# Kronecker oracle ----------------------------------------------------------

_POINTS = (0, 1, -1, 2, -2, 3, -3, 4, -4, 5, -5, 6, -6)


def _lagrange_basis(xs: list[int]) -> tuple[list[list[int]], int]:
    """Integer-scaled Lagrange basis: ``L_i = basis[i] / den`` (low-to-high)."""
    polys = []
    den = 1
    fracs = []
    for i, xi in enumerate(xs):
        num = Poly((1,))
        scale = 1
        for j, xj in enumerate(xs):
            if j != i:
                num = num * Poly((-xj, 1))
                scale *= xi - xj
        fracs.append((num, scale))
        den = den * abs(scale) // gcd(den, abs(scale))
    for num, scale in fracs:
        f = den // scale
        polys.append([a * f for a in num.coeffs] + [0] * (len(xs) - len(num.coeffs)))
    return polys, den


def oracle_factor_search(p: Poly) -> Verdict:
    """Kronecker's exhaustive factor search (independent of :func:`is_irreducible`)."""
    if not p.is_canonical():
        raise DomainError(f"{p} is not canonical")
    if p.degree < 2:
        raise DomainError("oracle_factor_search needs degree >= 2")
    k = p.degree
    values = {}
    for x in _POINTS:
        v = sum(a * x ** j for j, a in enumerate(p.coeffs))
        if v == 0:
            f = Poly((-x, 1))
            return FactorWitness(f, exact_divide(p, f))
        values[x] = v
    for d in range(1, k // 2 + 1):
        # d + 1 points with the fewest divisors keep the product small
        pts = sorted(_POINTS, key=lambda x: (len(divisors(values[x])), abs(x)))[: d + 1]
        basis, den = _lagrange_basis(pts)
        choices = []
        for idx, x in enumerate(pts):
            ds = divisors(values[x])
            # g and -g give the same factor; fix the sign at the first point
            choices.append(ds if idx == 0 else [s * v for v in ds for s in (1, -1)])
        for combo in itertools.product(*choices):
            coeffs = [0] * (d + 1)
            for v, b in zip(combo, basis):
                for j in range(d + 1):
                    coeffs[j] += v * b[j]
            if any(c % den for c in coeffs):
                continue
            coeffs = [c // den for c in coeffs]
            if coeffs[d] == 0:
                continue
            g = Poly(coeffs)
            g = primitive_part(g)
            if g.degree != d:
                continue
            q = exact_divide(p, g)
            if q is not None:
                return FactorWitness(g, q)
    return True
