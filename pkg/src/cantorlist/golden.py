"""Reading the transcribed reference tables and their errata list.

Reference values are written either as closed forms (``-1/sqrt(2)``,
``(-3+sqrt(13))/2``, with ``phi`` the golden ratio) or as truncated
decimals.  Closed forms are truncated toward zero by sympy's exact
``floor``; rationals are kept exact.
"""

from __future__ import annotations

import csv
import json
import re
from dataclasses import dataclass, field, replace
from fractions import Fraction
from importlib import resources
from pathlib import Path

import sympy

FIELDS = ("c", "n", "k", "composition", "signs", "omega")
_DECIMAL = re.compile(r"^[+-]?\d+\.\d+$")


class GoldenParseError(ValueError):
    def __init__(self, path, line: int, msg: str):
        super().__init__(f"{path}:{line}: {msg}")
        self.path = path
        self.line = line


@dataclass(frozen=True)
class GoldenRow:
    line: int
    c: int
    n: int
    k: int
    composition: str
    signs: str
    omega: str


@dataclass(frozen=True)
class Erratum:
    c: int | None
    kind: str
    reason: str
    changes: dict = field(default_factory=dict)


def default_golden_path() -> Path:
    return Path(str(resources.files("cantorlist") / "data" / "golden_heights_1_7.csv"))


def default_errata_path() -> Path:
    return Path(str(resources.files("cantorlist") / "data" / "errata.json"))


def read_golden(path) -> list[GoldenRow]:
    path = Path(path)
    rows = []
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header is None or tuple(header[: len(FIELDS)]) != FIELDS:
            raise GoldenParseError(path, 1, f"expected header starting {','.join(FIELDS)}")
        for rec in reader:
            line = reader.line_num
            if not rec or not "".join(rec).strip():
                continue
            if len(rec) < len(FIELDS):
                raise GoldenParseError(path, line, f"expected {len(FIELDS)} fields, got {len(rec)}")
            try:
                c, n, k = int(rec[0]), int(rec[1]), int(rec[2])
            except ValueError:
                raise GoldenParseError(path, line, f"c, n, k must be integers: {rec[:3]}") from None
            comp, signs, omega = (s.strip() for s in rec[3:6])
            if not (comp.startswith("[") and comp.endswith("]")):
                raise GoldenParseError(path, line, f"bad composition {comp!r}")
            if not (signs.startswith("(") and signs.endswith(")")):
                raise GoldenParseError(path, line, f"bad signs {signs!r}")
            if not omega:
                raise GoldenParseError(path, line, "empty value")
            rows.append(GoldenRow(line, c, n, k, comp, signs, omega))
    return rows


def read_errata(path) -> list[Erratum]:
    with open(path, encoding="utf-8") as fh:
        data = json.load(fh)
    out = []
    for item in data["errata"]:
        out.append(Erratum(item.get("c"), item["kind"], item["reason"], dict(item.get("set", {}))))
    return out


def apply_errata(rows: list[GoldenRow], errata: list[Erratum]) -> tuple[list[GoldenRow], list[Erratum]]:
    """Overwrite reference fields per the errata; returns rows and the errata used."""
    by_c = {e.c: e for e in errata if e.c is not None and e.changes}
    used = []
    out = []
    for row in rows:
        e = by_c.get(row.c)
        if e is not None:
            row = replace(row, **e.changes)
            used.append(e)
        out.append(row)
    return out, used


_SYMPY_LOCALS = {"phi": sympy.GoldenRatio, "sqrt": sympy.sqrt}


def expected_value(omega: str, digits: int = 10) -> str | Fraction | None:
    """A reference value as an exact ``Fraction`` or a truncated signed decimal.

    Returns ``None`` when the string is neither a decimal nor a closed form.
    """
    s = omega.strip()
    if _DECIMAL.match(s):
        sign = "-" if s.startswith("-") else "+"
        whole, frac = s.lstrip("+-").split(".")
        return f"{sign}{int(whole)}.{(frac + '0' * digits)[:digits]}"
    try:
        expr = sympy.sympify(s, locals=_SYMPY_LOCALS)
    except (sympy.SympifyError, SyntaxError, TypeError):
        return None
    if not expr.is_real:
        return None
    if expr.is_Rational:
        return Fraction(int(expr.p), int(expr.q))
    sign = "-" if expr.is_negative else "+"
    scaled = int(sympy.floor(abs(expr) * 10**digits))
    whole, frac = divmod(scaled, 10**digits)
    return f"{sign}{whole}.{frac:0{digits}d}"
