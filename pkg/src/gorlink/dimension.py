"""Dimensions of PGor(h) and ACM(h), plus the point-budget invariants."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Literal, NamedTuple, Sequence

from .errors import (
    BaseCaseParseFailure,
    ChainInvalid,
    Inapplicable,
    InvalidTypeParams,
    NotC2Admissible,
    NotG3Admissible,
    OutOfRange,
    PreconditionFailure,
    SpecialLinearSystem,
)
from .hvector import (
    HVector,
    HVectorLike,
    as_hvector,
    ci_points_hvector,
    curve_degree_genus,
    g3_obstruction,
    is_c2_admissible,
    is_decreasing_type,
    least_degree,
)
from .liaison import ag_from_curve, cut_hyperplane


class ChainStep(NamedTuple):
    h: HVector
    s: int
    t: int
    h_next: HVector


@dataclass(frozen=True)
class DimensionReport:
    h: HVector
    value: int
    method: Literal["inductive", "base_case", "closed_form"]
    chain: tuple[ChainStep, ...] = ()

    def as_dict(self) -> dict:
        return {
            "h": str(self.h),
            "value": self.value,
            "method": self.method,
            "chain": [
                {"h": str(st.h), "s": st.s, "t": st.t, "h_next": str(st.h_next)}
                for st in self.chain
            ],
        }


# -- PGor ----------------------------------------------------------------------


def planar_ci_type(h: HVectorLike) -> tuple[int, int]:
    """Recover (p, q) for an AG scheme with s = 1, i.e. a complete intersection
    of two plane curves of degrees p <= q."""
    h = as_hvector(h)
    if h[1] <= 1:
        if any(v != 1 for v in h):
            raise BaseCaseParseFailure(f"{h!r} is not collinear points")
        return 1, h.degree
    if h[1] == 2:
        p = 1
        while h[p] >= p + 1:
            p += 1
        q = h.socle_degree + 2 - p
        if q >= p and ci_points_hvector(1, p, q) == h:
            return p, q
    raise BaseCaseParseFailure(f"{h!r} is not a planar complete intersection")


def planar_ci_dimension(p: int, q: int) -> int:
    if p == q == 1:
        return 3
    if p == 1:
        return q + 4
    if p == q:
        return p * p + 3 * p + 1
    return p * q + 3 * p + 2


@lru_cache(maxsize=None)
def _dim_pgor(h: HVector) -> tuple[int, tuple[ChainStep, ...]]:
    s = least_degree(h, 3)
    if s == 1:
        return planar_ci_dimension(*planar_ci_type(h)), ()
    t = h.socle_degree + 2 - s
    if t < s:
        raise ChainInvalid(f"t={t} < s={s} for {h!r}")
    h_next = cut_hyperplane(h, s, t)
    if g3_obstruction(h_next) is not None:
        raise ChainInvalid(f"intermediate {h_next!r} is not G3-admissible")
    below, chain = _dim_pgor(h_next)
    eps = 1 if t == s else 0
    value = below - h_next[s] - h_next[t] + s * t + 3 * s + 3 - eps
    return value, (ChainStep(h, s, t, h_next),) + chain


def dim_pgor(h: HVectorLike) -> DimensionReport:
    """dim PGor(h) by induction along the CI-biliaison descent."""
    h = as_hvector(h)
    reason = g3_obstruction(h)
    if reason is not None:
        raise NotG3Admissible(f"{h!r} is not G3-admissible: {reason}")
    value, chain = _dim_pgor(h)
    return DimensionReport(h, value, "inductive" if chain else "base_case", chain)


class TypeClosedForm(NamedTuple):
    value: int
    h: HVector


def type_hvector(kind: int, s: int, c: int = 0) -> HVector:
    """The three shapes of AG schemes that can link s-general points downward."""
    if s < 1 or kind not in (1, 2, 3):
        raise InvalidTypeParams(f"bad type parameters: type={kind}, s={s}")
    rise = [comb(n + 2, 2) for n in range(s)]
    if kind == 1:
        return HVector(rise + rise[-2::-1])  # {1} when s = 1
    if kind == 2:
        return HVector(rise + rise[::-1])
    if not 0 <= c <= s + 1:
        raise InvalidTypeParams(f"type 3 needs 0 <= c <= s+1, got c={c}")
    return HVector(rise + [comb(s + 1, 2) + c] + rise[::-1])


def dim_pgor_type_closed_form(kind: int, s: int, c: int = 0) -> TypeClosedForm:
    h = type_hvector(kind, s, c)
    value = {
        1: 4 * s * s - 1,
        2: 4 * s * s + 3 * s - 1,
        3: 4 * s * s + 4 * s + 4 * c - 1,
    }[kind]
    return TypeClosedForm(value, h)


# -- ACM curves ----------------------------------------------------------------


def _require_c2(c: HVector) -> None:
    if not is_c2_admissible(c):
        raise NotC2Admissible(f"{c!r} is not C2-admissible")


def plane_curve_dimension(a: int) -> int:
    return 4 * a if a <= 3 else 3 + a * (a + 3) // 2


@lru_cache(maxsize=None)
def _dim_acm(c: HVector) -> tuple[int, tuple[ChainStep, ...]]:
    s = least_degree(c, 2)
    if s == 1:
        return plane_curve_dimension(c.degree), ()
    # descending biliaison of height one on a surface of degree s
    c_next = HVector(c[n] if n <= s - 2 else c[n + 1] for n in range(len(c)))
    below, chain = _dim_acm(c_next)
    value = below + 4 * s + sum(c_next[n] for n in range(s + 1, len(c_next)))
    return value, (ChainStep(c, s, s, c_next),) + chain


def dim_acm(c: HVectorLike) -> DimensionReport:
    c = as_hvector(c)
    _require_c2(c)
    value, chain = _dim_acm(c)
    return DimensionReport(c, value, "inductive" if chain else "base_case", chain)


def dim_acm_closed(c: HVectorLike) -> int:
    """4 * degree, valid when c vanishes from s+2 on."""
    c = as_hvector(c)
    _require_c2(c)
    s = least_degree(c, 2)
    if c.socle_degree >= s + 2:
        raise Inapplicable(f"{c!r} does not vanish from n = s+2 = {s + 2}")
    return 4 * c.degree


# -- genus bound, delta, mu ----------------------------------------------------


def g_cm(d: int, s: int) -> int:
    """Maximal genus of an ACM integral curve of degree d not on a surface of
    degree s-1."""
    if s < 1 or d <= s * (s - 1):
        raise OutOfRange(f"G_CM needs d > s(s-1); got d={d}, s={s}")
    t = -(-d // s)
    r = s * t - d
    value = 1 + Fraction(d, 2) * (s + Fraction(d, s) - 4) - Fraction(r * (s - r) * (s - 1), 2 * s)
    if value.denominator != 1:
        raise ArithmeticError(f"G_CM({d},{s}) = {value} is not an integer")
    return int(value)


def delta_zero_certificate(c: HVectorLike, m: int) -> bool:
    """True when mH-K divisors on a general curve of class c lie on no other
    curve of the class, so delta = 0."""
    c = as_hvector(c)
    _require_c2(c)
    if not is_decreasing_type(c):
        raise PreconditionFailure(f"{c!r} is not of decreasing type")
    d, _ = curve_degree_genus(c)
    if d < 3:
        raise PreconditionFailure(f"{c!r} has degree {d} < 3")
    s = least_degree(c, 2)
    return m * d >= g_cm(2 * d, s)


class MuBounds(NamedTuple):
    by_dimension: int
    by_surfaces: int


def mu_upper_bounds(h: HVectorLike) -> MuBounds:
    h = as_hvector(h)
    s = least_degree(h, 3)
    return MuBounds(dim_pgor(h).value // 3, h[s] + comb(s + 2, 3))


def mu_upper(h: HVectorLike) -> int:
    """Upper bound for the number of general points on a general Z in PGor(h)."""
    return min(mu_upper_bounds(h))


def mu_ci(degrees: Sequence[int], N: int = 3) -> int:
    """Exact number of general points on a general complete intersection."""
    if not degrees or min(degrees) < 1 or N < 2:
        raise ValueError("need a nonempty list of positive degrees and N >= 2")
    s = min(degrees)
    return comb(s + N, N) - sum(1 for d in degrees if d == s)


def nu_tilde(c: HVectorLike) -> int | None:
    """General points on a general curve of class c; None when unknown.

    Only defined for integral (decreasing type) classes with s <= 3.
    """
    c = as_hvector(c)
    _require_c2(c)
    s = least_degree(c, 2)
    if s > 3 or not is_decreasing_type(c):
        return None
    alpha = comb(s + 3, 3) - 1
    return min(dim_acm(c).value // 2, alpha)


@dataclass(frozen=True)
class BBound:
    """Dimension of the family of mH-K divisors on curves of class c."""

    value: int
    is_upper: bool
    D: int
    acm: int
    delta: int | None

    def as_dict(self) -> dict:
        return {
            "value": self.value,
            "is_upper": self.is_upper,
            "D": self.D,
            "dim_acm": self.acm,
            "delta": self.delta,
        }


def b_upper(c: HVectorLike, m: int, delta: int | None = None) -> BBound:
    c = as_hvector(c)
    deg = ag_from_curve(c, m).degree
    _, g = curve_degree_genus(c)
    if deg < 2 * g - 1:
        raise SpecialLinearSystem(f"deg {deg} < 2g-1 = {2 * g - 1} for {c!r}, m={m}")
    D = deg - g
    acm = dim_acm(c).value
    if delta is None:
        return BBound(D + acm, True, D, acm, None)
    return BBound(D + acm - delta, False, D, acm, delta)


@dataclass
class PointBudget:
    h: HVector
    mu_upper: int
    mu_lower: int | None = None
    nu_tilde: int | None = None
    lin_sys_dim: int | None = None
    B_upper: int | None = None
    delta: int | None = None
    notes: list[str] = field(default_factory=list)
