"""The total order on catalog entries.

Within a height ``n`` and degree ``k`` entries are ordered by partition of
``K`` (more parts later, anti-lexicographic among equal part counts), then
by composition (descending lexicographic), then by zero placement
(descending lexicographic magnitude vector), then by signature, then by
root.  Only the signature step is not a plain sort; see
:func:`signature_order`.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Iterable, Sequence

from .enumeration import (
    Candidate,
    CompositionLayout,
    Signature,
    distinct_permutations,
    relatively_prime_partitions,
    zero_placements,
)
from .intpoly import reflect
from .realroots import AlgebraicReal, compare, sign_of


@dataclass(frozen=True, order=True)
class OrderKey:
    n: int
    k: int
    partition: int
    composition: int
    placement: int
    signature: int
    root: int


def partition_order(K: int) -> list[tuple[int, ...]]:
    out = []
    for m in range(1, K + 1):
        out.extend(relatively_prime_partitions(K, m))
    return out


def composition_order(partition: Sequence[int]) -> list[tuple[int, ...]]:
    return distinct_permutations(tuple(partition))


def _by_first_root(a, b) -> int:
    return compare(a[1][0], b[1][0])


def signature_order(
    layout: CompositionLayout, survivors: Sequence[tuple[Signature, Sequence[AlgebraicReal]]]
) -> list[tuple[Signature, AlgebraicReal]]:
    """Order the surviving signatures of one layout and flatten their roots.

    Signatures are sorted by smallest root.  A signature whose only root is
    negative is then followed directly by its mirror (the signature whose
    polynomial has the negated roots), so ``-x`` sits next to ``+x``.
    """
    ranked = sorted(survivors, key=functools.cmp_to_key(_by_first_root))
    by_poly = {sig.apply(layout): (sig, roots) for sig, roots in ranked}
    placed: set[Signature] = set()
    seq = []
    for sig, roots in ranked:
        if sig in placed:
            continue
        seq.append((sig, roots))
        placed.add(sig)
        if len(roots) == 1 and sign_of(roots[0]) < 0:
            mirror = by_poly.get(reflect(sig.apply(layout)))
            if mirror is not None and mirror[0] not in placed:
                seq.append(mirror)
                placed.add(mirror[0])
    return [(sig, r) for sig, roots in seq for r in roots]


def order_group(n: int, k: int, candidates: Iterable[Candidate]) -> list[tuple[OrderKey, Candidate, AlgebraicReal]]:
    """Sort the candidates of one ``(n, k)`` into ``(key, candidate, root)`` triples."""
    K = n - k + 1
    partitions = partition_order(K)
    by_layout: dict[CompositionLayout, list[Candidate]] = {}
    for cand in candidates:
        by_layout.setdefault(cand.layout, []).append(cand)

    def layout_rank(lay: CompositionLayout) -> tuple[int, int, int]:
        comp = lay.nonzero
        part = tuple(sorted(comp, reverse=True))
        comps = composition_order(part)
        allow_zero = lay.parts[-1] == 0
        placements = [p.parts for p in zero_placements(comp, k, n, allow_zero_constant=allow_zero)]
        return partitions.index(part), comps.index(comp), placements.index(lay.parts)

    out = []
    for lay in sorted(by_layout, key=layout_rank):
        pr, cr, zr = layout_rank(lay)
        cands = {c.signature: c for c in by_layout[lay]}
        flat = signature_order(lay, [(c.signature, c.roots) for c in by_layout[lay]])
        srank = {}
        for sig, root in flat:
            srank.setdefault(sig, len(srank))
        seen: dict[Signature, int] = {}
        for sig, root in flat:
            r = seen.get(sig, 0)
            seen[sig] = r + 1
            out.append((OrderKey(n, k, pr, cr, zr, srank[sig], r), cands[sig], root))
    return out


def assign_indices(groups: Iterable[Sequence[tuple[OrderKey, Candidate, AlgebraicReal]]]) -> list[tuple[int, OrderKey, Candidate, AlgebraicReal]]:
    """Concatenate ordered groups and number them ``c = 1, 2, ...``.

    Groups must already be in ascending ``(n, k)``; keys are checked to be
    strictly increasing so a misordered merge fails loudly.
    """
    out = []
    prev = None
    for group in groups:
        for key, cand, root in group:
            if prev is not None and not prev < key:
                raise AssertionError(f"order keys not increasing: {prev} then {key}")
            prev = key
            out.append((len(out) + 1, key, cand, root))
    return out
