"""Candidate polynomials of a given height and degree.

A canonical polynomial ``a_k x^k + ... + a_0`` has ``K = a_k + sum |a_j|``
and height ``n = K + k - 1``.  For fixed ``(n, k)`` the magnitude vectors
are relatively prime compositions of ``K`` spread over the ``k + 1``
coefficient slots, and each nonzero non-leading slot then gets a sign.

The generator is deliberately naive: it builds every signed polynomial and
keeps those that are irreducible and have a real root.  The shortcuts that
skip whole degrees are optional so that they can be checked, not trusted.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import gcd
from typing import Iterator

from .intpoly import DomainError, Poly, content
from .irreducibility import is_irreducible
from .realroots import AlgebraicReal, isolate_roots


def K_of(p: Poly) -> int:
    if not p.is_canonical():
        raise DomainError(f"{p} is not canonical")
    return p.lc + sum(abs(a) for a in p.coeffs[:-1])


def height_of(p: Poly) -> int:
    return K_of(p) + p.degree - 1


def radical(n: int) -> int:
    """Product of the distinct primes dividing ``n`` (``radical(1) == 1``)."""
    n = abs(n)
    if n == 0:
        raise DomainError("radical of 0")
    r = 1
    d = 2
    while d * d <= n:
        if n % d == 0:
            r *= d
            while n % d == 0:
                n //= d
        d += 1
    return r * n if n > 1 else r


@dataclass(frozen=True)
class CompositionLayout:
    n: int
    k: int
    parts: tuple[int, ...]  # b_k, ..., b_0 including interior zeros

    def __post_init__(self):
        if len(self.parts) != self.k + 1 or self.parts[0] < 1:
            raise DomainError(f"bad layout {self.parts} for degree {self.k}")
        if sum(self.parts) != self.n - self.k + 1:
            raise DomainError(f"layout {self.parts} does not have height {self.n}")

    @property
    def nonzero(self) -> tuple[int, ...]:
        return tuple(b for b in self.parts if b)

    @property
    def m(self) -> int:
        return len(self.nonzero)

    @property
    def z(self) -> int:
        return self.k + 1 - self.m

    def display(self) -> str:
        """Zeros are shown only for three or more nonzero parts."""
        shown = self.parts if self.m >= 3 else self.nonzero
        return "[" + ",".join(map(str, shown)) + "]"


@dataclass(frozen=True)
class Signature:
    signs: tuple[int, ...]

    def __str__(self) -> str:
        return "(" + ",".join("+" if s > 0 else "-" for s in self.signs) + ")"

    def apply(self, layout: CompositionLayout) -> Poly:
        signs = iter((1, *self.signs))
        high = [b * next(signs) if b else 0 for b in layout.parts]
        return Poly.from_high(high)


@dataclass(frozen=True)
class Candidate:
    layout: CompositionLayout
    signature: Signature
    poly: Poly
    roots: tuple[AlgebraicReal, ...] = field(default=(), compare=False)


def relatively_prime_partitions(K: int, m: int) -> list[tuple[int, ...]]:
    """Partitions of ``K`` into ``m`` parts with gcd 1, anti-lexicographic."""
    if K < 1 or not 1 <= m <= K:
        return []

    def gen(rest, count, cap):
        if count == 0:
            if rest == 0:
                yield ()
            return
        for first in range(min(cap, rest - (count - 1)), 0, -1):
            if first * count < rest:
                break
            for tail in gen(rest - first, count - 1, first):
                yield (first, *tail)

    out = []
    for p in gen(K, m, K):
        g = 0
        for a in p:
            g = gcd(g, a)
        if g == 1:
            out.append(p)
    return out


def distinct_permutations(parts: tuple[int, ...]) -> list[tuple[int, ...]]:
    """All distinct orderings of ``parts``, descending lexicographically."""
    return sorted(set(itertools.permutations(parts)), reverse=True)


def coprime_compositions(K: int, m: int) -> list[tuple[int, ...]]:
    """Relatively prime compositions grouped by partition, in catalog order."""
    out = []
    for p in relatively_prime_partitions(K, m):
        out.extend(distinct_permutations(p))
    return out


def zero_placements(parts: tuple[int, ...], k: int, n: int | None = None, allow_zero_constant: bool = False) -> list[CompositionLayout]:
    """Spread ``parts`` over the ``k + 1`` slots, leading slot first.

    The constant slot is occupied unless ``allow_zero_constant`` is set.
    Layouts come in descending lexicographic order of the magnitude vector.
    """
    m = len(parts)
    if m > k + 1:
        raise DomainError(f"{m} parts do not fit into degree {k}")
    if n is None:
        n = sum(parts) + k - 1
    if m == 1:
        if k >= 1 and not allow_zero_constant:
            return []
        return [CompositionLayout(n, k, (parts[0],) + (0,) * k)]
    out = []
    if allow_zero_constant:
        slot_sets = itertools.combinations(range(1, k + 1), m - 1)
    else:
        slot_sets = ((*mid, k) for mid in itertools.combinations(range(1, k), m - 2))
    for slots in slot_sets:
        vec = [0] * (k + 1)
        vec[0] = parts[0]
        for s, b in zip(slots, parts[1:]):
            vec[s] = b
        out.append(CompositionLayout(n, k, tuple(vec)))
    out.sort(key=lambda lay: lay.parts, reverse=True)
    return out


def signatures_for(layout: CompositionLayout) -> list[Signature]:
    """All sign vectors, ``+`` before ``-`` slot by slot from the top."""
    return [Signature(s) for s in itertools.product((1, -1), repeat=layout.m - 1)]


def is_skipped(n: int, k: int) -> bool:
    """Degrees that provably contribute nothing (checked by the test suite)."""
    return (n >= 2 and k == n) or (n >= 3 and k == n - 1)


def iter_layouts(n: int, k: int, shortcuts: bool = True) -> Iterator[tuple[int, int, CompositionLayout]]:
    """``(partition rank, composition rank, layout)`` in catalog order."""
    K = n - k + 1
    if K < 1 or k < 1:
        return
    allow_zero = (n, k) == (1, 1) or not shortcuts
    for m in range(1, min(K, k + 1) + 1):
        for prank, part in enumerate(relatively_prime_partitions(K, m)):
            for crank, comp in enumerate(distinct_permutations(part)):
                for lay in zero_placements(comp, k, n, allow_zero_constant=allow_zero):
                    yield (m, prank), crank, lay


def candidates_for(n: int, k: int, shortcuts: bool = True) -> list[Candidate]:
    """Irreducible canonical candidates of height ``n``, degree ``k`` with real roots.

    Candidates come in generation order: partition, composition, zero
    placement, then :func:`signatures_for`.  Final signature order is the
    business of :mod:`cantorlist.ordering`.
    """
    if n < 1 or k < 1:
        raise DomainError("height and degree must be positive")
    if shortcuts and is_skipped(n, k):
        return []
    out = []
    for _, _, lay in iter_layouts(n, k, shortcuts):
        for sig in signatures_for(lay):
            p = sig.apply(lay)
            if content(p) != 1:
                continue
            if is_irreducible(p) is not True:
                continue
            roots = isolate_roots(p)
            if roots:
                out.append(Candidate(lay, sig, p, tuple(roots)))
    return out
