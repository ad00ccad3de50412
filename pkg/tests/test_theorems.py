import pytest

from gorlink.catalog import load_glicci_catalog
from gorlink.errors import NoPartnerAvailable
from gorlink.hvector import HVector, general_points_hvector
from gorlink.theorems import (
    general_points_split,
    glicci_descent,
    prop30_check,
    verify_no_descending_biliaison,
    verify_no_descending_liaison,
)

H = HVector.parse


def test_split():
    assert general_points_split(20) == (4, 0)
    assert general_points_split(39) == (5, 4)


def test_liaison_examples():
    assert verify_no_descending_liaison(56).ruled_out
    v = verify_no_descending_liaison(36)
    assert not v.ruled_out
    assert any(w.kind == "type2" and w.dim == 114 and w.bound == 108 for w in v.witnesses)
    assert verify_no_descending_liaison(39).ruled_out


def test_small_n_not_overclaimed():
    # three points link to two inside {1,3,1}
    assert not verify_no_descending_liaison(3).ruled_out


def test_biliaison_examples():
    assert verify_no_descending_biliaison(56).ruled_out
    assert not verify_no_descending_biliaison(40).ruled_out
    assert not verify_no_descending_biliaison(20).ruled_out
    v = verify_no_descending_biliaison(20, refined=True)
    assert v.ruled_out and v.killed[0].params["d"] == 10


def test_glicci_examples():
    cat = load_glicci_catalog()
    chain = glicci_descent(12, cat)
    assert [(s.partner.degree, s.residual) for s in chain.steps][:2] == [(20, 8), (14, 6)]
    chain = glicci_descent(3, cat)
    assert [(s.partner, s.residual) for s in chain.steps] == [(H("1,3,1"), 2)]
    assert chain.terminal == 2
    with pytest.raises(NoPartnerAvailable):
        glicci_descent(20, cat)


def test_glicci_residuals_are_general():
    cat = load_glicci_catalog()
    for n in range(3, 20):
        for st in glicci_descent(n, cat).steps:
            assert st.residual_h == general_points_hvector(st.residual)


@pytest.mark.parametrize("h, ok", [("1,3,6,10,6,3,1", True), ("1,3,6,3,1", False), ("1,3,1", False)])
def test_prop30(h, ok):
    assert prop30_check(H(h)) is ok
