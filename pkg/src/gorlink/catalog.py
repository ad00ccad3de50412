"""Enumeration of AG zero-schemes and the degree-by-degree catalog table.

Computable columns are derived from the h-vector alone.  Geometric facts that
are not h-vector arithmetic (delta values, some nu/mu values, footnotes,
mH-K status) come from a versioned JSON data file and are merged in only after
every overlapping column has been checked against the computed value.
"""

from __future__ import annotations

import csv
import io
import json
import os
from dataclasses import dataclass, field
from importlib import resources
from itertools import combinations_with_replacement
from pathlib import Path
from typing import Any

from .dimension import (
    b_upper,
    delta_zero_certificate,
    dim_pgor,
    mu_ci,
    mu_upper,
    nu_tilde,
)
from .errors import DataConflict, PaperDataError, SpecialLinearSystem
from .hvector import (
    HVector,
    HVectorLike,
    as_hvector,
    ci_curve_hvector,
    ci_points_hvector,
    curve_degree_genus,
    first_half,
    is_decreasing_type,
)
from .liaison import ag_from_curve, representing_curves

CSV_HEADER = (
    "d,h,A,m,htilde,dtilde,gtilde,B,B_is_upper,nu_tilde,"
    "mu_tilde_lo,mu_tilde_hi,mu_lo,mu_hi,footnotes"
)
FOOTNOTES = "abcdef"
STATUS = ("yes", "no", "unknown")


# -- enumeration ---------------------------------------------------------------


def enumerate_ag(dmax: int, nondegenerate: bool = True) -> list[HVector]:
    """All G3-admissible h-vectors of degree <= dmax, sorted by (degree, entries)."""
    if dmax < 1:
        raise ValueError("dmax must be at least 1")
    found = {HVector([1])} if not nondegenerate else set()
    for b in range(1, dmax):
        half = b // 2
        for hs in _first_halves(half, b, dmax, nondegenerate):
            h = HVector(hs[n] if n <= half else hs[b - n] for n in range(b + 1))
            if not nondegenerate or h[1] == 3:
                found.add(h)
    return sorted(found, key=lambda h: (h.degree, h.entries))


def _symmetric_degree(hs: list[int], half: int, b: int) -> int:
    # hs holds h(0..j); later first-half entries are at least hs[-1]
    full = hs + [hs[-1]] * (half + 1 - len(hs))
    total = 2 * sum(full[:half])
    return total + (full[half] if b % 2 == 0 else 2 * full[half])


def _first_halves(half: int, b: int, dmax: int, nondegenerate: bool):
    """Values h(0..half) whose difference is C2-admissible, pruned by degree."""

    def extend(hs: list[int], k_prev: int, rising: bool):
        if _symmetric_degree(hs, half, b) > dmax:
            return
        n = len(hs)
        if n == half + 1:
            yield hs
            return
        top = n + 1 if rising else k_prev
        for k in range(top, -1, -1):
            if n == 1 and nondegenerate and k != 2:
                continue
            yield from extend(hs + [hs[-1] + k], k, rising and k == n + 1)

    yield from extend([1], 1, True)


# -- paper data ----------------------------------------------------------------

_ROW_KEYS = {
    "d", "h", "A", "m", "htilde", "dg", "B", "delta", "nu_tilde", "mu_tilde",
    "mu_lo", "mu_hi", "footnotes", "mhk_status",
}
_TOP_KEYS = {"version", "rows"}


@dataclass(frozen=True)
class PaperRow:
    h: HVector
    d: int | None
    A: int | None
    m: int | None
    htilde: tuple[HVector, ...]
    dg: dict
    B: dict
    delta: dict
    nu_tilde: dict
    mu_tilde: dict
    mu_lo: int | None
    mu_hi: int | None
    footnotes: tuple[str, ...]
    mhk_status: dict


def default_data_path() -> Path:
    env = os.environ.get("GORLINK_DATA")
    if env:
        return Path(env)
    return Path(str(resources.files("gorlink") / "data" / "table1.json"))


def _opt_int(value: Any, where: str) -> int | None:
    if value is None:
        return None
    if not isinstance(value, int) or isinstance(value, bool):
        raise PaperDataError(f"{where}: expected an integer, got {value!r}")
    return value


def _parse_b(value: Any, where: str) -> tuple[int, bool]:
    if isinstance(value, str) and value.startswith("<="):
        try:
            return int(value[2:]), True
        except ValueError:
            raise PaperDataError(f"{where}: bad bound {value!r}") from None
    return _opt_int(value, where), False


def _keyed(raw: Any, where: str, convert) -> dict:
    if not isinstance(raw, dict):
        raise PaperDataError(f"{where}: expected an object keyed by h-tilde")
    out = {}
    for key, value in raw.items():
        try:
            c = HVector.parse(key)
        except Exception as exc:
            raise PaperDataError(f"{where}: bad key {key!r}") from exc
        out[c] = convert(value, f"{where}[{key}]")
    return out


def _status(value: Any, where: str) -> str:
    if value not in STATUS:
        raise PaperDataError(f"{where}: status must be one of {STATUS}, got {value!r}")
    return value


def _dg(value: Any, where: str) -> tuple[int, int]:
    if not (isinstance(value, list) and len(value) == 2 and all(isinstance(v, int) for v in value)):
        raise PaperDataError(f"{where}: expected [d, g]")
    return value[0], value[1]


def parse_paper_data(doc: Any) -> dict[HVector, PaperRow]:
    if not isinstance(doc, dict) or "rows" not in doc:
        raise PaperDataError("paper data must be an object with a 'rows' list")
    extra = set(doc) - _TOP_KEYS
    if extra:
        raise PaperDataError(f"unknown top-level fields: {sorted(extra)}")
    out: dict[HVector, PaperRow] = {}
    for i, row in enumerate(doc["rows"]):
        where = f"rows[{i}]"
        if not isinstance(row, dict) or "h" not in row:
            raise PaperDataError(f"{where}: each row needs an 'h' field")
        extra = set(row) - _ROW_KEYS
        if extra:
            raise PaperDataError(f"{where}: unknown fields {sorted(extra)}")
        try:
            h = HVector.parse(row["h"])
            htilde = tuple(HVector.parse(x) for x in row.get("htilde", []))
        except Exception as exc:
            raise PaperDataError(f"{where}: bad h-vector ({exc})") from exc
        if h in out:
            raise PaperDataError(f"{where}: duplicate row for {h}")
        fn = row.get("footnotes", [])
        if not isinstance(fn, list) or any(f not in FOOTNOTES or len(f) != 1 for f in fn):
            raise PaperDataError(f"{where}: footnotes must be letters from {FOOTNOTES!r}")
        out[h] = PaperRow(
            h=h,
            d=_opt_int(row.get("d"), f"{where}.d"),
            A=_opt_int(row.get("A"), f"{where}.A"),
            m=_opt_int(row.get("m"), f"{where}.m"),
            htilde=htilde,
            dg=_keyed(row.get("dg", {}), f"{where}.dg", _dg),
            B=_keyed(row.get("B", {}), f"{where}.B", _parse_b),
            delta=_keyed(row.get("delta", {}), f"{where}.delta", _opt_int),
            nu_tilde=_keyed(row.get("nu_tilde", {}), f"{where}.nu_tilde", _opt_int),
            mu_tilde=_keyed(row.get("mu_tilde", {}), f"{where}.mu_tilde", _opt_int),
            mu_lo=_opt_int(row.get("mu_lo"), f"{where}.mu_lo"),
            mu_hi=_opt_int(row.get("mu_hi"), f"{where}.mu_hi"),
            footnotes=tuple(sorted(set(fn))),
            mhk_status=_keyed(row.get("mhk_status", {}), f"{where}.mhk_status", _status),
        )
    return out


def load_paper_data(path: str | os.PathLike | None = None) -> dict[HVector, PaperRow]:
    p = Path(path) if path is not None else default_data_path()
    try:
        doc = json.loads(p.read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise PaperDataError(f"cannot read paper data {p}: {exc}") from exc
    return parse_paper_data(doc)


def load_glicci_catalog(path: str | os.PathLike | None = None):
    from .theorems import Partner

    if path is None:
        p = Path(str(resources.files("gorlink") / "data" / "glicci_catalog.json"))
    else:
        p = Path(path)
    try:
        doc = json.loads(p.read_text())
        return [Partner(HVector.parse(r["h"]), r.get("mu_lo")) for r in doc["partners"]]
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise PaperDataError(f"cannot read glicci catalog {p}: {exc}") from exc


# -- table rows ----------------------------------------------------------------


@dataclass
class CurveEntry:
    htilde: HVector
    d: int
    g: int
    B: int | None
    B_is_upper: bool
    delta: int | None
    nu_tilde: int | None
    mu_tilde: tuple[int | None, int | None]
    status: str | None
    flags: list[str] = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "htilde": str(self.htilde),
            "dtilde": self.d,
            "gtilde": self.g,
            "B": self.B,
            "B_is_upper": self.B_is_upper,
            "delta": self.delta,
            "nu_tilde": self.nu_tilde,
            "mu_tilde": list(self.mu_tilde),
            "status": self.status,
            "flags": self.flags,
        }


@dataclass
class CatalogRow:
    d: int
    h: HVector
    A: int
    m: int
    representing: list[CurveEntry]
    mu_range: tuple[int | None, int]
    footnotes: tuple[str, ...]
    source: str

    def as_dict(self) -> dict:
        return {
            "d": self.d,
            "h": str(self.h),
            "A": self.A,
            "m": self.m,
            "representing": [c.as_dict() for c in self.representing],
            "mu": list(self.mu_range),
            "footnotes": list(self.footnotes),
            "source": self.source,
        }


def ci_degrees(h: HVectorLike) -> tuple[int, int, int] | None:
    """(d1, d2, d3) when h is the h-vector of a complete intersection."""
    h = as_hvector(h)
    d = h.degree
    for t in combinations_with_replacement(range(1, d + 1), 3):
        if t[0] * t[1] * t[2] == d and ci_points_hvector(*t) == h:
            return t
    return None


def _conflict(h: HVector, what: str, computed, paper) -> DataConflict:
    return DataConflict(f"{h}: {what} computed {computed} but the data file says {paper}")


def _curve_entry(h: HVector, A: int, m: int, c: HVector, ci, mu_hi: int, prow: PaperRow | None):
    d, g = curve_degree_genus(c)
    flags: list[str] = []
    paper_delta = prow.delta.get(c) if prow else None

    B: int | None
    delta: int | None = None
    is_upper = False
    ci_pairs = set()
    if ci is not None:
        ci_pairs = {ci_curve_hvector(x, y).h for x, y in ((ci[0], ci[1]), (ci[0], ci[2]), (ci[1], ci[2]))}
    if c in ci_pairs:
        B, flags = A, ["ci"]
    elif c == first_half(h) and h.socle_degree >= 2 * c.socle_degree + 2:
        B, flags = A, ["general_mhk"]
    else:
        try:
            bound = b_upper(c, m, None)
        except SpecialLinearSystem:
            bound = None
            flags.append("special")
        certified = None
        if is_decreasing_type(c) and d >= 3:
            certified = delta_zero_certificate(c, m)
        if certified:
            delta = 0
            flags.append("delta_certified")
            if paper_delta is not None and paper_delta != 0:
                raise _conflict(h, f"delta for {c}", 0, paper_delta)
        elif paper_delta is not None:
            delta = paper_delta
            flags.append("delta_data")
        if bound is None:
            B = None
        elif delta is None:
            B, is_upper = min(A, bound.value), True
            flags.append("delta_unknown")
        else:
            B = bound.value - delta
            if B > A:
                raise _conflict(h, f"B for {c}", B, f"at most A={A}")

    nu = nu_tilde(c)
    if prow and c in prow.nu_tilde:
        pn = prow.nu_tilde[c]
        if nu is not None and pn is not None and pn != nu:
            raise _conflict(h, f"nu_tilde for {c}", nu, pn)
        if nu is None and pn is not None:
            nu = pn
            flags.append("nu_data")

    D = ag_from_curve(c, m).degree - g
    if nu is None:
        mt: tuple[int | None, int | None] = (None, mu_hi)
    elif D >= nu:
        mt = (nu, nu)
    else:
        mt = (max(D, 0), min(nu, mu_hi))
    if prow and c in prow.mu_tilde:
        pm = prow.mu_tilde[c]
        if pm is None:
            mt = (None, None)  # explicitly unknown in the source
        else:
            lo, hi = mt
            if (lo is not None and pm < lo) or (hi is not None and pm > hi):
                raise _conflict(h, f"mu_tilde for {c}", mt, pm)
            mt = (pm, pm)
    status = prow.mhk_status.get(c) if prow else None
    return CurveEntry(c, d, g, B, is_upper, delta, nu, mt, status, flags)


def build_row(h: HVectorLike, prow: PaperRow | None = None) -> CatalogRow:
    h = as_hvector(h)
    A = dim_pgor(h).value
    m = h.socle_degree - 1
    if prow is not None:
        for what, paper, computed in (("d", prow.d, h.degree), ("A", prow.A, A), ("m", prow.m, m)):
            if paper is not None and paper != computed:
                raise _conflict(h, what, computed, paper)
    ci = ci_degrees(h)
    hi = mu_upper(h)
    lo: int | None = None
    if ci is not None:
        lo = hi = mu_ci(ci)

    all_curves = representing_curves(h)
    if prow is not None and prow.htilde:
        curves = list(prow.htilde)
        for c in curves:
            if c not in all_curves or ag_from_curve(c, m) != h:
                raise _conflict(h, f"h-tilde {c}", "not a representing curve", "listed")
    else:
        curves = all_curves

    entries = []
    for c in curves:
        entry = _curve_entry(h, A, m, c, ci, hi, prow)
        if prow is not None:
            if c in prow.dg and prow.dg[c] != (entry.d, entry.g):
                raise _conflict(h, f"(d,g) of {c}", (entry.d, entry.g), prow.dg[c])
            if c in prow.B:
                pv, pup = prow.B[c]
                if (entry.B, entry.B_is_upper) != (pv, pup):
                    raise _conflict(h, f"B for {c}", (entry.B, entry.B_is_upper), (pv, pup))
        entries.append(entry)

    for e in entries:
        if e.mu_tilde[0] is not None:
            lo = e.mu_tilde[0] if lo is None else max(lo, e.mu_tilde[0])
    for e in entries:
        if e.B == A and not e.B_is_upper and e.mu_tilde[1] is not None:
            hi = min(hi, e.mu_tilde[1])
    if lo is not None and lo > hi:
        raise _conflict(h, "mu range", (lo, hi), "nonempty interval")
    if prow is not None:
        if prow.mu_lo is not None and prow.mu_lo != lo:
            raise _conflict(h, "mu lower bound", lo, prow.mu_lo)
        if prow.mu_hi is not None and prow.mu_hi != hi:
            raise _conflict(h, "mu upper bound", hi, prow.mu_hi)
    return CatalogRow(
        h.degree, h, A, m, entries, (lo, hi),
        prow.footnotes if prow else (), "paper_data" if prow else "computed",
    )


def build_table(dmax: int, paper_data: str | os.PathLike | dict | None = None) -> list[CatalogRow]:
    """Catalog rows for every nondegenerate AG scheme of degree <= dmax."""
    if isinstance(paper_data, dict):
        data = paper_data
    else:
        data = load_paper_data(paper_data)
    hs = enumerate_ag(dmax)
    missing = [h for h in data if h.degree <= dmax and h not in set(hs)]
    if missing:
        raise DataConflict(f"paper data lists h-vectors that are not enumerated: {missing}")
    return [build_row(h, data.get(h)) for h in hs]


# -- emitters ------------------------------------------------------------------


def _cell(v) -> str:
    return "" if v is None else str(v)


def to_csv(rows: list[CatalogRow]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER.split(","))
    for r in rows:
        for e in r.representing or [None]:
            w.writerow([
                r.d, str(r.h), r.A, r.m,
                "" if e is None else str(e.htilde),
                "" if e is None else e.d,
                "" if e is None else e.g,
                "" if e is None else _cell(e.B),
                "" if e is None else str(e.B_is_upper).lower(),
                "" if e is None else _cell(e.nu_tilde),
                "" if e is None else _cell(e.mu_tilde[0]),
                "" if e is None else _cell(e.mu_tilde[1]),
                _cell(r.mu_range[0]), _cell(r.mu_range[1]),
                ";".join(r.footnotes),
            ])
    return buf.getvalue()


def to_json(rows: list[CatalogRow]) -> str:
    return json.dumps([r.as_dict() for r in rows], indent=2, sort_keys=True) + "\n"


_MARK = {"yes": "✓", "no": "no", "unknown": "?", None: ""}


def _range(lo, hi) -> str:
    if lo is None and hi is None:
        return "?"
    if lo is None:
        return f"≤{hi}"
    return str(lo) if lo == hi else f"{lo}≤μ≤{hi}"


def to_markdown(rows: list[CatalogRow]) -> str:
    lines = [
        "| d | h | A | m | h̃ | (d̃,g̃) | B |  | ν̃ | μ̃ | μ |",
        "|---|---|---|---|---|---|---|---|---|---|---|",
    ]
    for r in rows:
        sup = "^" + ",".join(r.footnotes) if r.footnotes else ""
        for i, e in enumerate(r.representing or [None]):
            first = i == 0
            if e is None:
                cells = ["", "", "", "", "", "", ""]
            else:
                b = "" if e.B is None else (f"≤{e.B}" if e.B_is_upper else str(e.B))
                mt = e.mu_tilde
                cells = [
                    "{" + str(e.htilde) + "}", f"({e.d},{e.g})", b, _MARK[e.status],
                    _cell(e.nu_tilde) or "?",
                    "?" if mt[0] is None or mt[0] != mt[1] else str(mt[0]),
                ]
            lines.append("| " + " | ".join([
                str(r.d) if first else "",
                "{" + str(r.h) + "}" if first else "",
                str(r.A) if first else "",
                str(r.m) if first else "",
                *cells[:6],
                _range(*r.mu_range) + sup if first else "",
            ]) + " |")
    letters = {
        "a": "μ equals μ̃ because A = B or μ̃ = [A/3]",
        "b": "upper bound on μ from the surface count",
        "c": "δ = 0 by a certificate",
        "d": "the first half carries the general member, so μ̃ = ν̃",
        "e": "complete intersection case",
        "f": "see the non-representability check",
    }
    used = sorted({f for r in rows for f in r.footnotes})
    if used:
        lines.append("")
        lines.extend(f"{f}: {letters[f]}" for f in used)
    return "\n".join(lines) + "\n"


def render(rows: list[CatalogRow], fmt: str) -> str:
    return {"csv": to_csv, "json": to_json, "md": to_markdown}[fmt](rows)


__all__ = [
    "CSV_HEADER",
    "CatalogRow",
    "CurveEntry",
    "PaperRow",
    "build_row",
    "build_table",
    "ci_degrees",
    "default_data_path",
    "enumerate_ag",
    "load_glicci_catalog",
    "load_paper_data",
    "parse_paper_data",
    "render",
    "to_csv",
    "to_json",
    "to_markdown",
]
