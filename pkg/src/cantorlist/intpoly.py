"""Dense integer polynomials with exact rational evaluation.

Coefficients are stored low-to-high (``coeffs[j]`` multiplies ``x**j``) as
plain Python ints, so there is no overflow anywhere.  Rational numbers are
:class:`fractions.Fraction`, which is always reduced with a positive
denominator.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Optional, Sequence


class DomainError(ValueError):
    """Raised when an operation is applied outside its mathematical domain."""


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = [int(a) for a in coeffs]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class Poly:
    """Integer polynomial ``sum(coeffs[j] * x**j)``.

    The zero polynomial has ``coeffs == ()`` and degree -1.
    """

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int]):
        object.__setattr__(self, "coeffs", _trim(coeffs))

    @classmethod
    def from_high(cls, coeffs: Sequence[int]) -> "Poly":
        """Build from coefficients listed by falling powers (a_k first)."""
        return cls(reversed(list(coeffs)))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def high(self) -> tuple[int, ...]:
        """Coefficients by falling powers, a_k first."""
        return tuple(reversed(self.coeffs))

    def is_canonical(self) -> bool:
        return bool(self.coeffs) and self.lc > 0 and content(self) == 1

    def __neg__(self) -> "Poly":
        return Poly(-a for a in self.coeffs)

    def __add__(self, other: "Poly") -> "Poly":
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return Poly(x + y for x, y in zip(a, b))

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly | int") -> "Poly":
        if isinstance(other, int):
            return Poly(a * other for a in self.coeffs)
        if self.is_zero or other.is_zero:
            return Poly(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __call__(self, x):
        return eval_at(self, x)

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"Poly({format_poly(self)!r})"


def format_poly(p: Poly, var: str = "x") -> str:
    """Render as e.g. ``x^3-x+1`` or ``2x-1``; the zero polynomial is ``0``."""
    if p.is_zero:
        return "0"
    parts = []
    for j in range(p.degree, -1, -1):
        a = p.coeffs[j]
        if a == 0:
            continue
        sign = "-" if a < 0 else "+"
        mag = abs(a)
        if j == 0:
            body = str(mag)
        else:
            body = ("" if mag == 1 else str(mag)) + var + (f"^{j}" if j > 1 else "")
        parts.append((sign, body))
    first_sign, first_body = parts[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        out += sign + body
    return out


def content(p: Poly) -> int:
    if p.is_zero:
        raise DomainError("content of the zero polynomial is undefined")
    g = 0
    for a in p.coeffs:
        g = gcd(g, a)
    return g


def primitive_part(p: Poly) -> Poly:
    """Divide out the content and make the leading coefficient positive."""
    g = content(p)
    if p.lc < 0:
        g = -g
    return Poly(a // g for a in p.coeffs)


def eval_at(p: Poly, q) -> Fraction:
    """Exact Horner evaluation at a rational (or integer) point."""
    q = Fraction(q)
    acc = Fraction(0)
    for a in reversed(p.coeffs):
        acc = acc * q + a
    return acc


def sign_at(p: Poly, q) -> int:
    """Sign of ``p(q)`` using integer arithmetic only.

    With ``q = u/v`` and ``v > 0`` the sign equals that of
    ``sum(a_j u^j v^(k-j))``, which avoids building Fractions.
    """
    q = Fraction(q)
    u, v = q.numerator, q.denominator
    acc = 0
    vpow = 1
    # Horner on the homogenised form: acc = acc*u + a_j * v^(k-j)
    k = p.degree
    if k < 0:
        return 0
    vpows = [1] * (k + 1)
    for i in range(1, k + 1):
        vpow *= v
        vpows[i] = vpow
    for j in range(k, -1, -1):
        acc = acc * u + p.coeffs[j] * vpows[k - j]
    return (acc > 0) - (acc < 0)


def derivative(p: Poly) -> Poly:
    return Poly(j * a for j, a in enumerate(p.coeffs) if j > 0)


def divmod_poly(p: Poly, d: Poly) -> tuple[list[Fraction], list[Fraction]]:
    """Quotient and remainder over the rationals (low-to-high lists)."""
    if d.is_zero:
        raise DomainError("division by the zero polynomial")
    r = [Fraction(a) for a in p.coeffs]
    dq = d.degree
    lc = d.lc
    if len(r) - 1 < dq:
        return [], r
    q = [Fraction(0)] * (len(r) - dq)
    for i in range(len(r) - 1 - dq, -1, -1):
        t = r[i + dq] / lc
        q[i] = t
        if t:
            for j, b in enumerate(d.coeffs):
                r[i + j] -= t * b
    r = r[:dq]
    while r and r[-1] == 0:
        r.pop()
    return q, r


def exact_divide(p: Poly, d: Poly) -> Optional[Poly]:
    """Return ``q`` with ``p == d * q`` over the integers, else ``None``.

    Long division that bails out as soon as a quotient coefficient is not
    an integer, so no truncated quotient is ever produced.
    """
    if d.is_zero:
        raise DomainError("division by the zero polynomial")
    if p.is_zero:
        return Poly(())
    dq = d.degree
    if p.degree < dq:
        return None
    r = list(p.coeffs)
    lc = d.lc
    q = [0] * (p.degree - dq + 1)
    for i in range(p.degree - dq, -1, -1):
        t, rem = divmod(r[i + dq], lc)
        if rem:
            return None
        q[i] = t
        if t:
            for j, b in enumerate(d.coeffs):
                r[i + j] -= t * b
    if any(r[:dq]):
        return None
    return Poly(q)


def reflect(p: Poly) -> Poly:
    """Canonicalised ``±p(-x)``: the polynomial whose roots are the negated roots."""
    flipped = Poly(-a if j % 2 else a for j, a in enumerate(p.coeffs))
    if flipped.is_zero:
        return flipped
    return flipped if flipped.lc > 0 else -flipped
