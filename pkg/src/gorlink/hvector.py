"""h-vectors of ACM subschemes and their elementary invariants.

An h-vector is stored densely from index 0 with trailing zeros trimmed; reads
outside the stored range return 0, so formulas can index freely.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from itertools import accumulate
from math import comb
from typing import Iterable, Iterator, Sequence, Union

from .errors import (
    InvalidHVector,
    NegativeFirstHalf,
    NegativePartialSum,
    NonTerminating,
    NotC2Admissible,
    NotG3Admissible,
    NotSymmetric,
)

_TEXT_RE = re.compile(r"^\d+(,\d+)*$")


def _trim(values: Iterable[int]) -> tuple[int, ...]:
    out = list(values)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True, order=True)
class HVector:
    """A finitely supported h-vector ``{1, h(1), ..., h(b)}``."""

    entries: tuple[int, ...]

    def __init__(self, entries: Iterable[int]):
        values = tuple(entries)
        for v in values:
            if not isinstance(v, int) or isinstance(v, bool):
                raise InvalidHVector(f"h-vector entries must be integers, got {v!r}")
            if v < 0:
                raise InvalidHVector(f"h-vector entries must be nonnegative: {values}")
        values = _trim(values)
        if not values:
            raise InvalidHVector("the empty h-vector is not accepted")
        if values[0] != 1:
            raise InvalidHVector(f"h(0) must be 1, got {values[0]}")
        if 0 in values:
            raise InvalidHVector(f"h(n) must be positive for 0 <= n <= b: {values}")
        object.__setattr__(self, "entries", values)

    @classmethod
    def parse(cls, text: str) -> HVector:
        """Parse the shared textual form ``"1,3,6,3,1"``."""
        if not _TEXT_RE.match(text):
            raise InvalidHVector(
                f"cannot parse {text!r}: expected comma-separated nonnegative "
                "integers without spaces, e.g. 1,3,6,3,1"
            )
        return cls(int(x) for x in text.split(","))

    def __str__(self) -> str:
        return ",".join(map(str, self.entries))

    def __repr__(self) -> str:
        return "HVector({" + str(self) + "})"

    def __getitem__(self, n: int) -> int:
        if 0 <= n < len(self.entries):
            return self.entries[n]
        return 0

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    @property
    def socle_degree(self) -> int:
        """Largest n with h(n) > 0 (written b)."""
        return len(self.entries) - 1

    @property
    def degree(self) -> int:
        return sum(self.entries)


HVectorLike = Union[HVector, Sequence[int]]


def as_hvector(h: HVectorLike) -> HVector:
    return h if isinstance(h, HVector) else HVector(h)


def _raw(h: HVectorLike) -> tuple[int, ...]:
    return h.entries if isinstance(h, HVector) else _trim(h)


def _at(seq: Sequence[int], n: int) -> int:
    return seq[n] if 0 <= n < len(seq) else 0


# -- difference operator -------------------------------------------------------


def difference(h: HVectorLike) -> tuple[int, ...]:
    """Return the first difference, supported on ``0..b+1``."""
    values = _raw(h)
    return tuple(_at(values, n) - _at(values, n - 1) for n in range(len(values) + 1))


def integrate(diff: Sequence[int]) -> HVector:
    """Inverse of :func:`difference`."""
    sums = list(accumulate(diff))
    for n, v in enumerate(sums):
        if v < 0:
            raise NegativePartialSum(f"partial sum at n={n} is {v} < 0")
    if sums and sums[-1] != 0:
        raise NonTerminating(f"partial sums end at {sums[-1]}, not 0")
    return HVector(sums)


# -- admissibility -------------------------------------------------------------


def least_degree(h: HVectorLike, codim: int) -> int:
    """Least degree of a hypersurface containing an ACM scheme of codimension
    ``codim`` with h-vector ``h``: min{n > 0 : h(n) < C(n+codim-1, codim-1)}.
    """
    values = _raw(h)
    n = 1
    while _at(values, n) >= comb(n + codim - 1, codim - 1):
        n += 1
    return n


def c2_obstruction(h: HVectorLike) -> str | None:
    """Explain why ``h`` is not C2-admissible, or return None if it is."""
    values = _raw(h)
    if not values or values[0] != 1:
        return "h(0) must be 1"
    if any(v < 0 for v in values):
        return "negative entry"
    # s is forced: the first n > 0 where h(n) != n+1 must be a drop
    s = 1
    while s < len(values) and values[s] == s + 1:
        s += 1
    if _at(values, s) > s + 1:
        return f"h({s})={values[s]} exceeds {s + 1}"
    for n in range(s - 1, len(values) - 1):
        if values[n] < values[n + 1]:
            return f"h({n + 1})={values[n + 1]} > h({n})={values[n]} after the initial segment"
    return None


def is_c2_admissible(h: HVectorLike) -> bool:
    return c2_obstruction(h) is None


def is_decreasing_type(h: HVectorLike) -> bool:
    """Once the sequence strictly drops it keeps strictly dropping until 0."""
    if not is_c2_admissible(h):
        raise NotC2Admissible(f"{_fmt(h)} is not C2-admissible")
    values = _raw(h)
    dropping = False
    for n in range(len(values)):
        nxt = _at(values, n + 1)
        if values[n] > nxt:
            dropping = True
        elif dropping:
            return False
    return True


def is_symmetric(h: HVectorLike) -> bool:
    values = _raw(h)
    return values == values[::-1]


def _first_half_raw(values: tuple[int, ...]) -> tuple[int, ...]:
    b = len(values) - 1
    diff = difference(values)
    return _trim(diff[: b // 2 + 1])


def g3_obstruction(h: HVectorLike) -> str | None:
    """Explain why ``h`` is not G3-admissible, or return None if it is."""
    values = _raw(h)
    if not values or values[0] != 1:
        return "h(0) must be 1"
    if not is_symmetric(values):
        b = len(values) - 1
        n = next(i for i in range(b + 1) if values[i] != values[b - i])
        return f"not symmetric: h({n})={values[n]} but h({b - n})={values[b - n]}"
    k = _first_half_raw(values)
    for n, v in enumerate(k):
        if v < 0:
            return f"first half has negative entry at n={n}"
    reason = c2_obstruction(k)
    if reason is not None:
        return f"first half {_fmt(k)} is not C2-admissible: {reason}"
    return None


def is_g3_admissible(h: HVectorLike) -> bool:
    return g3_obstruction(h) is None


def first_half(h: HVectorLike) -> HVector:
    """The k-vector: k(n) = dh(n) for n <= floor(b/2), else 0."""
    values = _raw(h)
    if not is_symmetric(values):
        raise NotSymmetric(f"{_fmt(h)} is not symmetric")
    k = _first_half_raw(values)
    for n, v in enumerate(k):
        if v < 0:
            raise NegativeFirstHalf(f"first half of {_fmt(h)} is negative at n={n}")
    return HVector(k)


def symmetrize(k: HVectorLike, b: int) -> HVector:
    """Rebuild the symmetric h-vector of socle degree ``b`` from its first half."""
    kv = _raw(k)
    half = list(accumulate(_at(kv, n) for n in range(b // 2 + 1)))
    return HVector(half[n] if n <= b // 2 else half[b - n] for n in range(b + 1))


def _fmt(h: HVectorLike) -> str:
    return "{" + ",".join(map(str, _raw(h))) + "}"


# -- standard constructions ----------------------------------------------------


def general_points_hvector(d: int) -> HVector:
    """h-vector of ``d`` general points in P^3."""
    if d < 1:
        raise ValueError("d must be positive")
    s = 1
    while comb(s + 3, 3) <= d:
        s += 1
    return HVector([comb(n + 2, 2) for n in range(s)] + [d - comb(s + 2, 3)])


def _truncated_series_product(degrees: Iterable[int]) -> HVector:
    coeffs = [1]
    for d in degrees:
        if d < 1:
            raise ValueError("degrees must be positive")
        out = [0] * (len(coeffs) + d - 1)
        for i, c in enumerate(coeffs):
            for j in range(d):
                out[i + j] += c
        coeffs = out
    return HVector(coeffs)


def ci_points_hvector(d1: int, d2: int, d3: int) -> HVector:
    """h-vector of a complete intersection of surfaces of degrees d1, d2, d3."""
    return _truncated_series_product((d1, d2, d3))


def curve_degree_genus(c: HVectorLike) -> tuple[int, int]:
    """Degree and arithmetic genus of an ACM curve with h-vector ``c``."""
    if not is_c2_admissible(c):
        raise NotC2Admissible(f"{_fmt(c)} is not C2-admissible")
    values = _raw(c)
    return sum(values), 1 + sum((n - 1) * v for n, v in enumerate(values))


@dataclass(frozen=True)
class CurveClass:
    h: HVector
    d: int
    g: int
    s: int
    b: int

    @classmethod
    def of(cls, h: HVectorLike) -> CurveClass:
        hv = as_hvector(h)
        d, g = curve_degree_genus(hv)
        return cls(hv, d, g, least_degree(hv, 2), hv.socle_degree)


def ci_curve_hvector(s: int, t: int) -> CurveClass:
    """Complete intersection curve of surfaces of degrees s <= t."""
    if not 1 <= s <= t:
        raise ValueError("need 1 <= s <= t")
    return CurveClass.of(_truncated_series_product((s, t)))


@dataclass(frozen=True)
class AGClass:
    h: HVector
    d: int
    b: int
    m: int
    s: int
    k: HVector
    generation_degree: int = field(default=0)

    def as_dict(self) -> dict:
        return {
            "h": str(self.h),
            "d": self.d,
            "b": self.b,
            "m": self.m,
            "s": self.s,
            "k": str(self.k),
            "generation_degree": self.generation_degree,
        }


def scheme_invariants(h: HVectorLike) -> AGClass:
    """Invariants of an AG zero-scheme in P^3."""
    reason = g3_obstruction(h)
    if reason is not None:
        raise NotG3Admissible(f"{_fmt(h)} is not G3-admissible: {reason}")
    hv = as_hvector(h)
    b = hv.socle_degree
    s = least_degree(hv, 3)
    return AGClass(hv, hv.degree, b, b - 1, s, first_half(hv), b + 2 - s)
