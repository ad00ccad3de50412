import pytest
from hypothesis import given, strategies as st

from gorlink.errors import (
    InvalidHVector,
    NegativeFirstHalf,
    NegativePartialSum,
    NonTerminating,
    NotC2Admissible,
    NotSymmetric,
)
from gorlink.hvector import (
    HVector,
    ci_curve_hvector,
    ci_points_hvector,
    curve_degree_genus,
    difference,
    first_half,
    general_points_hvector,
    integrate,
    is_c2_admissible,
    is_decreasing_type,
    is_g3_admissible,
    least_degree,
    scheme_invariants,
    symmetrize,
)

H = HVector.parse


def test_parse_and_format_round_trip():
    h = H("1,3,6,3,1")
    assert str(h) == "1,3,6,3,1"
    assert repr(h) == "HVector({1,3,6,3,1})"
    assert h.socle_degree == 4 and h.degree == 14


@pytest.mark.parametrize("text", ["", "1, 3", "1,-3", "a", "1,,2", "1,3,"])
def test_parse_rejects_bad_text(text):
    with pytest.raises(InvalidHVector, match="1,3,6,3,1"):
        H(text)


@pytest.mark.parametrize("values", [[], [0], [2, 1], [1, 0, 1], [1, -1]])
def test_invariants_rejected(values):
    with pytest.raises(InvalidHVector):
        HVector(values)


def test_trailing_zeros_trimmed_and_out_of_range_reads():
    h = HVector([1, 2, 0, 0])
    assert h.entries == (1, 2)
    assert h[5] == 0 and h[-1] == 0


@pytest.mark.parametrize("h, diff", [
    ("1,3,6,3,1", (1, 2, 3, -3, -2, -1)),
    ("1", (1, -1)),
    ("1,3,3,1", (1, 2, 0, -2, -1)),
])
def test_difference(h, diff):
    assert difference(H(h)) == diff


@pytest.mark.parametrize("diff, h", [
    ((1, 2, 3, -3, -2, -1), "1,3,6,3,1"),
    ((1, -1), "1"),
    ((1, 2, 3, 4, -4, -3, -2, -1), "1,3,6,10,6,3,1"),
])
def test_integrate(diff, h):
    assert integrate(diff) == H(h)


def test_integrate_errors():
    with pytest.raises(NegativePartialSum):
        integrate([1, -2, 1])
    with pytest.raises(NonTerminating):
        integrate([1, 1])


@pytest.mark.parametrize("h, ok", [("1,2,3,4", True), ("1,2,3,5", False), ("1,2,1,1", True)])
def test_c2(h, ok):
    assert is_c2_admissible(H(h)) is ok


@pytest.mark.parametrize("h, ok", [("1,2,3", True), ("1,2,1,1", False), ("1,2,2,1", True)])
def test_decreasing_type(h, ok):
    assert is_decreasing_type(H(h)) is ok


def test_decreasing_type_requires_c2():
    with pytest.raises(NotC2Admissible):
        is_decreasing_type(H("1,3"))


@pytest.mark.parametrize("h, ok", [("1,3,6,10,6,3,1", True), ("1,3,6,4,6,3,1", False), ("1,3,1", True)])
def test_g3(h, ok):
    assert is_g3_admissible(H(h)) is ok


@pytest.mark.parametrize("h, k", [("1,3,6,3,1", "1,2,3"), ("1,3,3,1", "1,2"), ("1", "1")])
def test_first_half(h, k):
    assert first_half(H(h)) == H(k)


def test_first_half_errors():
    with pytest.raises(NotSymmetric):
        first_half(H("1,3,2"))
    with pytest.raises(NegativeFirstHalf):
        first_half(H("1,3,6,4,6,3,1"))


@pytest.mark.parametrize("n, h", [(20, "1,3,6,10"), (12, "1,3,6,2"), (1, "1")])
def test_general_points(n, h):
    assert general_points_hvector(n) == H(h)


@pytest.mark.parametrize("s, t, h, d, g", [(2, 3, "1,2,2,1", 6, 4), (1, 1, "1", 1, 0), (2, 2, "1,2,1", 4, 1)])
def test_ci_curve(s, t, h, d, g):
    c = ci_curve_hvector(s, t)
    assert (c.h, c.d, c.g) == (H(h), d, g)


@pytest.mark.parametrize("degs, h", [((1, 1, 1), "1"), ((2, 2, 2), "1,3,3,1"), ((1, 2, 3), "1,2,2,1")])
def test_ci_points(degs, h):
    assert ci_points_hvector(*degs) == H(h)


@pytest.mark.parametrize("c, dg", [("1,2,3", (6, 3)), ("1,2,3,4", (10, 11)), ("1,2,1,1", (5, 3))])
def test_curve_degree_genus(c, dg):
    assert curve_degree_genus(H(c)) == dg


@pytest.mark.parametrize("h, d, b, m, s, k", [
    ("1,3,6,3,1", 14, 4, 3, 3, "1,2,3"),
    ("1,3,1", 5, 2, 1, 2, "1,2"),
    ("1", 1, 0, -1, 1, "1"),
])
def test_scheme_invariants(h, d, b, m, s, k):
    inv = scheme_invariants(H(h))
    assert (inv.d, inv.b, inv.m, inv.s, inv.k) == (d, b, m, s, H(k))


def test_least_degree_codim():
    assert least_degree(H("1,3,6,10,6,3,1"), 3) == 4
    assert least_degree(H("1,2,3,4"), 2) == 4
    assert least_degree(H("1,2,2"), 2) == 2


@st.composite
def c2_vectors(draw):
    s = draw(st.integers(1, 6))
    out = list(range(1, s + 1))
    v = out[-1]
    for _ in range(draw(st.integers(0, 6))):
        v = draw(st.integers(0, v))
        if v == 0:
            break
        out.append(v)
    return HVector(out)


@given(c2_vectors(), st.integers(0, 12))
def test_symmetrize_inverts_first_half(k, extra):
    b = 2 * k.socle_degree + extra
    h = symmetrize(k, b)
    assert is_g3_admissible(h)
    assert first_half(h) == k
