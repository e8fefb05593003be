"""The numbered catalog: build, count, write out and check against references."""

from __future__ import annotations

import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import TextIO

from .enumeration import CompositionLayout, Signature, candidates_for
from .golden import apply_errata, expected_value, read_errata, read_golden
from .intpoly import Poly
from .ordering import OrderKey, assign_indices, order_group
from .realroots import AlgebraicReal, refine_to, truncated_decimal


@dataclass(frozen=True)
class CatalogEntry:
    c: int
    n: int
    k: int
    layout: CompositionLayout
    signature: Signature
    value: AlgebraicReal
    decimal: str
    poly: Poly
    key: OrderKey | None = field(default=None, compare=False, repr=False)

    @property
    def composition(self) -> str:
        return self.layout.display()

    @property
    def signs(self) -> str:
        return str(self.signature)


def _group(args):
    n, k, precision = args
    rows = []
    eps = Fraction(1, 10**precision)
    for key, cand, root in order_group(n, k, candidates_for(n, k)):
        root = refine_to(root, eps)
        dec = truncated_decimal(root, digits=precision - 1, precision=precision)
        rows.append((key, cand, root, dec))
    return rows


def build_catalog(max_height: int, jobs: int = 1, precision: int = 11) -> list[CatalogEntry]:
    """All catalog entries of height at most ``max_height``, numbered from 1.

    With ``jobs > 1`` the ``(n, k)`` groups are computed in worker
    processes; results are merged in ``(n, k)`` order so the output does not
    depend on scheduling.
    """
    if max_height < 1:
        raise ValueError("max_height must be at least 1")
    if precision < 2:
        raise ValueError("precision must be at least 2")
    tasks = [(n, k, precision) for n in range(1, max_height + 1) for k in range(1, n + 1)]
    if jobs > 1:
        # map() yields results in task order whatever the completion order
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            groups = list(pool.map(_group, tasks, chunksize=1))
    else:
        groups = [_group(t) for t in tasks]
    decimals = {}
    triples = []
    for g in groups:
        triples.append([(key, cand, root) for key, cand, root, _ in g])
        for key, _, _, dec in g:
            decimals[key] = dec
    out = []
    for c, key, cand, root in assign_indices(triples):
        out.append(CatalogEntry(c, key.n, key.k, cand.layout, cand.signature, root, decimals[key], cand.poly, key))
    return out


@dataclass
class PhiTable:
    max_height: int
    counts: dict[int, dict[int, int]]

    def cell(self, n: int, k: int) -> int:
        return self.counts.get(n, {}).get(k, 0)

    def total(self, n: int) -> int:
        return sum(self.counts.get(n, {}).values())

    def totals(self) -> list[int]:
        return [self.total(n) for n in range(1, self.max_height + 1)]

    def render(self) -> str:
        H = self.max_height
        width = max(4, len(str(max(self.totals(), default=0))) + 1)
        head = "n\\k".ljust(4) + "".join(str(k).rjust(width) for k in range(1, H + 1)) + "Phi(n)".rjust(width + 3)
        lines = [head]
        for n in range(1, H + 1):
            cells = "".join((str(self.cell(n, k)) if k <= n else "").rjust(width) for k in range(1, H + 1))
            lines.append(str(n).ljust(4) + cells + str(self.total(n)).rjust(width + 3))
        lines.append("totals: " + ", ".join(map(str, self.totals())))
        return "\n".join(lines) + "\n"


def phi_table(catalog: list[CatalogEntry]) -> PhiTable:
    counts: dict[int, dict[int, int]] = {}
    H = max((e.n for e in catalog), default=0)
    for n in range(1, H + 1):
        counts[n] = {k: 0 for k in range(1, n + 1)}
    for e in catalog:
        counts[e.n][e.k] += 1
    return PhiTable(H, counts)


# emission ------------------------------------------------------------------

class EmitError(OSError):
    pass


def _csv_lines(catalog):
    yield "c,n,k,composition,signs,value,polynomial\n"
    for e in catalog:
        yield f'{e.c},{e.n},{e.k},"{e.composition}","{e.signs}",{e.decimal},"{e.poly}"\n'


def _json_text(catalog) -> str:
    rows = []
    for e in catalog:
        rows.append({
            "c": e.c,
            "n": e.n,
            "k": e.k,
            "composition": e.composition,
            "signs": e.signs,
            "value": e.decimal,
            "polynomial": str(e.poly),
            "coefficients": list(e.poly.high()),
            "exact": str(e.value.exact) if e.value.is_rational else None,
            "interval": [str(e.value.isol.lo), str(e.value.isol.hi)],
        })
    return json.dumps(rows, indent=1) + "\n"


def _text_lines(catalog):
    """Printed-table layout: n, k and composition are only printed when they change."""
    yield f"{'c':>5}  {'n':>2}  {'k':>2}  {'composition':<18}{'signs':<16}{'omega':<18}polynomial\n"
    prev = (None, None, None)
    for e in catalog:
        n = str(e.n) if e.n != prev[0] else ""
        k = str(e.k) if (e.n, e.k) != prev[:2] else ""
        comp = e.composition if (e.n, e.k, e.layout) != prev else ""
        yield f"{e.c:>5}  {n:>2}  {k:>2}  {comp:<18}{e.signs:<16}{e.decimal:<18}{e.poly}\n"
        prev = (e.n, e.k, e.layout)


def render(catalog: list[CatalogEntry], fmt: str = "csv") -> str:
    if fmt == "csv":
        return "".join(_csv_lines(catalog))
    if fmt == "json":
        return _json_text(catalog)
    if fmt == "text":
        return "".join(_text_lines(catalog))
    raise ValueError(f"unknown format {fmt!r}")


def emit(catalog: list[CatalogEntry], fmt: str = "csv", destination: str | Path | TextIO | None = None) -> None:
    """Write the catalog as UTF-8 with LF line endings (stdout if no destination)."""
    text = render(catalog, fmt)
    if destination is None:
        sys.stdout.write(text)
        return
    if isinstance(destination, io.TextIOBase):
        destination.write(text)
        return
    try:
        with open(destination, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        raise EmitError(f"cannot write {destination}: {exc.strerror or exc}") from exc


# verification ----------------------------------------------------------------

@dataclass(frozen=True)
class Mismatch:
    c: int
    field: str
    expected: str
    actual: str

    def __str__(self) -> str:
        return f"c={self.c} {self.field}: expected {self.expected}, got {self.actual}"


@dataclass
class VerifyReport:
    checked: int = 0
    mismatches: list[Mismatch] = field(default_factory=list)
    errata_applied: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches

    @property
    def matched(self) -> int:
        return self.checked - len({m.c for m in self.mismatches})

    def render(self) -> str:
        lines = [f"checked {self.checked} entries: {self.matched} match, "
                 f"{len({m.c for m in self.mismatches})} mismatch"]
        for e in self.errata_applied:
            lines.append(f"  erratum c={e.c} ({e.kind}): {e.reason}")
        for m in self.mismatches:
            lines.append(f"  MISMATCH {m}")
        return "\n".join(lines) + "\n"


def _actual_value(e: CatalogEntry, digits: int):
    if e.value.is_rational:
        return e.value.exact
    if len(e.decimal.split(".")[1]) != digits:
        return truncated_decimal(e.value, digits=digits, precision=digits + 1)
    return e.decimal


def verify_golden(catalog: list[CatalogEntry], golden_file, errata_file=None, digits: int = 10) -> VerifyReport:
    """Compare ``catalog`` with a reference transcription, row by row on ``c``.

    Every reference row must be matched on n, k, displayed composition,
    signature and value (exact for rationals, truncated decimal otherwise).
    Catalog entries beyond the last reference row are not checked.
    """
    rows = read_golden(golden_file)
    report = VerifyReport()
    if errata_file is not None:
        rows, report.errata_applied = apply_errata(rows, read_errata(errata_file))
    by_c = {e.c: e for e in catalog}
    for row in rows:
        report.checked += 1
        e = by_c.get(row.c)
        if e is None:
            report.mismatches.append(Mismatch(row.c, "entry", "present", "missing"))
            continue
        for name, want, got in (
            ("n", str(row.n), str(e.n)),
            ("k", str(row.k), str(e.k)),
            ("composition", row.composition.replace(" ", ""), e.composition),
            ("signs", row.signs.replace(" ", ""), e.signs),
        ):
            if want != got:
                report.mismatches.append(Mismatch(row.c, name, want, got))
        want_v = expected_value(row.omega, digits)
        got_v = _actual_value(e, digits)
        if want_v is None or want_v != got_v:
            shown = row.omega if want_v is None else str(want_v)
            report.mismatches.append(Mismatch(row.c, "value", shown, str(got_v)))
    return report
