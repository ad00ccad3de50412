"""Necessary-condition tests for descending liaisons of general points.

Verdicts are one-directional: ``ruled_out=True`` is a proof that no descending
move exists, ``ruled_out=False`` only means the numeric test cannot exclude one.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Iterable, Literal, Protocol

from .dimension import b_upper, dim_pgor, dim_pgor_type_closed_form
from .errors import NoPartnerAvailable, SpecialLinearSystem
from .hvector import HVector, HVectorLike, as_hvector, curve_degree_genus, general_points_hvector
from .liaison import g_link, representing_curves


def general_points_split(n: int) -> tuple[int, int]:
    """(s, a) with n = C(s+2, 3) + a and 0 <= a < C(s+2, 2)."""
    if n < 1:
        raise ValueError("n must be positive")
    s = 1
    while comb(s + 3, 3) <= n:
        s += 1
    return s, n - comb(s + 2, 3)


@dataclass(frozen=True)
class Witness:
    kind: str
    params: dict
    dim: int
    bound: int
    contained: bool | None = None

    def as_dict(self) -> dict:
        out = {"type": self.kind, "params": self.params, "dim": self.dim, "bound": self.bound}
        if self.contained is not None:
            out["contained"] = self.contained
        return out


@dataclass(frozen=True)
class DescentVerdict:
    n: int
    s: int
    a: int
    ruled_out: bool
    witnesses: tuple[Witness, ...]
    method: Literal["simple", "refined"] = "simple"
    killed: tuple[Witness, ...] = ()

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "s": self.s,
            "a": self.a,
            "ruled_out": self.ruled_out,
            "witnesses": [w.as_dict() for w in self.witnesses],
            "method": self.method,
        }


def _contains(big: HVector, small: HVector) -> bool:
    return all(small[n] <= big[n] for n in range(len(small)))


def verify_no_descending_liaison(n: int) -> DescentVerdict:
    """Test whether n general points can be G-linked to fewer points.

    A partner Z must have dim PGor(h_Z) >= 3n; only three shapes of h_Z are
    possible, and each is checked here.
    """
    s, a = general_points_split(n)
    hw = general_points_hvector(n)
    need = 3 * n
    candidates = [(1, 0)]
    if a > 0:
        candidates.append((2, 0))
    half = comb(s + 1, 2)
    candidates.extend((3, c) for c in range(s + 2) if 2 * a > half + c)
    witnesses = []
    for kind, c in candidates:
        value, hz = dim_pgor_type_closed_form(kind, s, c)
        if dim_pgor(hz).value != value:
            raise AssertionError(f"closed form disagrees with recursion for type {kind}, s={s}, c={c}")
        if value >= need:
            params = {"s": s} if kind != 3 else {"s": s, "c": c}
            witnesses.append(Witness(f"type{kind}", params, value, need, _contains(hz, hw)))
    return DescentVerdict(n, s, a, not witnesses, tuple(witnesses), "simple")


def verify_no_descending_biliaison(n: int, refined: bool = False) -> DescentVerdict:
    """Test whether n general points admit Z ~ W + H on an ACM curve with W
    smaller than Z.

    The curve must have h-vector {1, 2, ..., s, a} and contain n general
    points, forcing 2 * deg C >= n.  The refined test additionally discards
    boundary cases 2 * deg C == n where W = Z - H would be a general divisor
    of degree below the genus, hence not effective.
    """
    s, b = general_points_split(n)
    witnesses = []
    killed = []
    for a in range(min(s + 1, b) + 1):
        curve = HVector(list(range(1, s + 1)) + [a])
        d, g = curve_degree_genus(curve)
        if 2 * d < n:
            continue
        w = Witness("curve", {"h_C": str(curve), "a": a, "d": d, "g": g}, 4 * d, 2 * n)
        if refined and 2 * d == n and n - d < g:
            killed.append(w)
            continue
        witnesses.append(w)
    return DescentVerdict(
        n, s, b, not witnesses, tuple(witnesses), "refined" if refined else "simple", tuple(killed)
    )


def sweep(fn, start: int, stop: int, **kwargs) -> list[DescentVerdict]:
    """Run a verdict function over the closed range start..stop."""
    return [fn(n, **kwargs) for n in range(start, stop + 1)]


# -- glicci ascent -------------------------------------------------------------


class PartnerLike(Protocol):
    h: HVector
    mu_lo: int | None


@dataclass(frozen=True)
class Partner:
    h: HVector
    mu_lo: int | None

    @property
    def d(self) -> int:
        return self.h.degree


@dataclass(frozen=True)
class GlicciStep:
    n: int
    partner: HVector
    residual: int
    residual_h: HVector


@dataclass
class GlicciChain:
    n: int
    steps: list[GlicciStep] = field(default_factory=list)
    terminal: int | None = None

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "steps": [
                {
                    "n": st.n,
                    "partner": str(st.partner),
                    "d": st.partner.degree,
                    "residual": st.residual,
                    "residual_h": str(st.residual_h),
                }
                for st in self.steps
            ],
            "terminal": self.terminal,
        }


def glicci_descent(n: int, catalog: Iterable[PartnerLike]) -> GlicciChain:
    """Descend from n general points by G-links inside catalog AG classes that
    can pass through them, until one or two points remain.

    A partner of degree d is usable for n points when d/2 < n < d and n does
    not exceed its mu lower bound; the smallest usable degree is taken.
    """
    partners = sorted(
        (Partner(as_hvector(r.h), r.mu_lo) for r in catalog if r.mu_lo is not None),
        key=lambda p: (p.d, p.h.entries),
    )
    chain = GlicciChain(n)
    current = n
    while current > 2:
        choice = next(
            (p for p in partners if p.d < 2 * current and current < p.d and current <= p.mu_lo),
            None,
        )
        if choice is None:
            raise NoPartnerAvailable(f"no catalog partner links {current} general points downward")
        residual_h = g_link(choice.h, general_points_hvector(current))
        residual = choice.d - current
        expected = general_points_hvector(residual)
        if residual_h != expected:
            raise AssertionError(f"residual {residual_h!r} is not {expected!r}")
        chain.steps.append(GlicciStep(current, choice.h, residual, residual_h))
        current = residual
    chain.terminal = current
    return chain


# -- non-representability --------------------------------------------------------


@dataclass(frozen=True)
class RepresentabilityCheck:
    h: HVector
    dim_pgor: int
    bounds: tuple[tuple[HVector, int | None], ...]
    not_representable: bool


def representability_bounds(h: HVectorLike) -> RepresentabilityCheck:
    h = as_hvector(h)
    m = h.socle_degree - 1
    A = dim_pgor(h).value
    bounds = []
    for c in representing_curves(h):
        try:
            bounds.append((c, b_upper(c, m, None).value))
        except SpecialLinearSystem:
            bounds.append((c, None))
    certified = bool(bounds) and all(v is not None and v < A for _, v in bounds)
    return RepresentabilityCheck(h, A, tuple(bounds), certified)


def prop30_check(h: HVectorLike) -> bool:
    """True when no mH-K family on any candidate curve class can fill PGor(h),
    so a general member is not an mH-K divisor on an integral ACM curve."""
    return representability_bounds(h).not_representable


__all__ = [
    "DescentVerdict",
    "GlicciChain",
    "GlicciStep",
    "Partner",
    "RepresentabilityCheck",
    "Witness",
    "general_points_split",
    "glicci_descent",
    "prop30_check",
    "representability_bounds",
    "sweep",
    "verify_no_descending_biliaison",
    "verify_no_descending_liaison",
]
