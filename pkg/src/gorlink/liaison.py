"""h-vector transforms under G-liaison, biliaison and the mH-K construction."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from .errors import (
    ChainInvalid,
    EmptyResidual,
    InvalidHVector,
    NegativeResidual,
    NotC2Admissible,
    NotG3Admissible,
)
from .hvector import (
    HVector,
    HVectorLike,
    as_hvector,
    ci_curve_hvector,
    curve_degree_genus,
    difference,
    first_half,
    g3_obstruction,
    integrate,
    is_c2_admissible,
    is_g3_admissible,
    least_degree,
)


@dataclass(frozen=True)
class LiaisonStep:
    kind: Literal["g_link", "biliaison"]
    partner: HVector
    input: HVector
    output: HVector
    height: int = 0


def _require_g3(h: HVector) -> None:
    reason = g3_obstruction(h)
    if reason is not None:
        raise NotG3Admissible(f"{h!r} is not G3-admissible: {reason}")


def _require_c2(h: HVector) -> None:
    if not is_c2_admissible(h):
        raise NotC2Admissible(f"{h!r} is not C2-admissible")


def _residual(values: list[int], what: str) -> HVector:
    if any(v < 0 for v in values):
        raise NegativeResidual(f"{what}: negative residual entries {values}")
    if not any(values):
        raise EmptyResidual(f"{what}: the residual is empty")
    try:
        return HVector(values)
    except InvalidHVector as exc:
        raise NegativeResidual(f"{what}: residual {values} is not an h-vector") from exc


def g_link(hX: HVectorLike, hV1: HVectorLike) -> HVector:
    """h-vector of the scheme linked to ``hV1`` by the AG scheme ``hX``."""
    hX, hV1 = as_hvector(hX), as_hvector(hV1)
    _require_g3(hX)
    b = hX.socle_degree
    if hV1.socle_degree > b:
        raise NegativeResidual(f"{hV1!r} does not fit inside {hX!r}")
    return _residual([hX[n] - hV1[b - n] for n in range(b + 1)], "g_link")


def link_step(hX: HVectorLike, hV1: HVectorLike) -> LiaisonStep:
    hX, hV1 = as_hvector(hX), as_hvector(hV1)
    return LiaisonStep("g_link", hX, hV1, g_link(hX, hV1))


def _ascend(curve: HVector, h: HVector) -> HVector:
    size = max(len(curve), len(h) + 1)
    return HVector(curve[n] + h[n - 1] for n in range(size))


def _descend(curve: HVector, h: HVector) -> HVector:
    size = max(len(curve), len(h))
    return _residual([h[n + 1] - curve[n + 1] for n in range(size)], "descending biliaison")


def biliaison(hX_curve: HVectorLike, hV1: HVectorLike, height: int = 1) -> HVector:
    """Elementary biliaison of the given height on an ACM curve.

    A height of +-k is k unit steps on the same curve.
    """
    curve, h = as_hvector(hX_curve), as_hvector(hV1)
    _require_c2(curve)
    step = _ascend if height > 0 else _descend
    for _ in range(abs(height)):
        h = step(curve, h)
    return h


def ag_from_curve(c: HVectorLike, m: int, t: int = 1) -> HVector:
    """h-vector of a divisor mH-K on an ACM scheme of dimension ``t`` with
    h-vector ``c``.
    """
    c = as_hvector(c)
    _require_c2(c)
    top = max(len(c), m + t + 2)
    diff = [c[n] - c[m + t + 1 - n] for n in range(top)]
    hz = integrate(diff)
    if not is_g3_admissible(hz) or hz.socle_degree != m + t:
        raise NotG3Admissible(f"mH-K with c={c!r}, m={m} gives inconsistent {hz!r}")
    if t == 1:
        d, g = curve_degree_genus(c)
        assert hz.degree == m * d - 2 * g + 2
    return hz


def representing_curves(hZ: HVectorLike) -> list[HVector]:
    """All C2-admissible c with ag_from_curve(c, b-1) == hZ, sorted."""
    hZ = as_hvector(hZ)
    _require_g3(hZ)
    b = hZ.socle_degree
    dh = difference(hZ)
    # c(n) for n <= (b+1)//2 is free; its partner c(b+1-n) is then forced
    free = (b + 1) // 2 + 1
    found = []
    for prefix in _c2_prefixes(free):
        values = list(prefix) + [0] * (b + 2 - free)
        ok = True
        for n in range(free):
            p = b + 1 - n
            if p < free:
                if values[n] - values[p] != dh[n]:
                    ok = False
                    break
                continue
            values[p] = values[n] - dh[n]
            if values[p] < 0:
                ok = False
                break
        if not ok or not is_c2_admissible(values):
            continue
        found.append(HVector(values))
    return sorted(set(found), key=lambda h: h.entries)


def _c2_prefixes(length: int):
    """All length-``length`` prefixes of C2-admissible h-vectors (zeros allowed
    at the end)."""

    def extend(prefix: list[int], rising: bool):
        n = len(prefix)
        if n == length:
            yield tuple(prefix)
            return
        hi = n + 1 if rising else prefix[-1]
        for v in range(hi, -1, -1):
            yield from extend(prefix + [v], rising and v == n + 1)

    yield from extend([1], True)


def general_mhk_predicate(hZ: HVectorLike) -> bool:
    """Whether the general member of PGor(hZ) is mH-K on a curve carrying the
    first half of ``hZ``."""
    hZ = as_hvector(hZ)
    _require_g3(hZ)
    return hZ.socle_degree >= 2 * first_half(hZ).socle_degree + 2


def effectivity_thresholds(c: HVectorLike, N: int = 3) -> tuple[int, int]:
    """(m_effective, m_very_ample) for mH-K on a codimension 2 ACM scheme."""
    c = as_hvector(c)
    _require_c2(c)
    b = c.socle_degree
    return 2 * b - N + 1, 2 * b - N + 2


def quadric_intersection_class(a: int) -> tuple[HVector, int]:
    """Intersection of curves of types (a, a-1) and (a-1, a) on a smooth quadric."""
    if a < 2:
        raise ValueError("a must be at least 2")
    c = HVector([1] + [2] * (a - 1))
    m = 2 * a - 3
    hz = ag_from_curve(c, m)
    assert hz.degree == 2 * a * a - 2 * a + 1
    return hz, m


@dataclass(frozen=True)
class ChainLink:
    h: HVector
    s: int
    t: int | None  # None marks the terminal link

    @property
    def terminal(self) -> bool:
        return self.t is None


def ci_biliaison_chain(hZ: HVectorLike) -> list[ChainLink]:
    """Descend by CI-biliaisons Z' ~ Z - H on curves F_s cap F_t until s = 1
    or the degree is 1."""
    h = as_hvector(hZ)
    _require_g3(h)
    chain = []
    while True:
        s = least_degree(h, 3)
        if s == 1 or h.degree == 1:
            chain.append(ChainLink(h, s, None))
            return chain
        t = h.socle_degree + 2 - s
        if t < s:
            raise ChainInvalid(f"t={t} < s={s} for {h!r}")
        chain.append(ChainLink(h, s, t))
        nxt = cut_hyperplane(h, s, t)
        if not is_g3_admissible(nxt):
            raise ChainInvalid(f"intermediate {nxt!r} is not G3-admissible")
        h = nxt


def cut_hyperplane(h: HVector, s: int, t: int) -> HVector:
    """h'(n) = h(n+1) - h_{s,t}(n+1)."""
    hc = ci_curve_hvector(s, t).h
    values = [h[n + 1] - hc[n + 1] for n in range(max(len(h), len(hc)))]
    if any(v < 0 for v in values):
        raise ChainInvalid(f"CI({s},{t}) cut of {h!r} is negative: {values}")
    try:
        return HVector(values)
    except InvalidHVector as exc:
        raise ChainInvalid(f"CI({s},{t}) cut of {h!r} is not an h-vector") from exc


__all__ = [
    "ChainLink",
    "LiaisonStep",
    "ag_from_curve",
    "biliaison",
    "ci_biliaison_chain",
    "cut_hyperplane",
    "effectivity_thresholds",
    "g_link",
    "general_mhk_predicate",
    "link_step",
    "quadric_intersection_class",
    "representing_curves",
]
