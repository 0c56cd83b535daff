from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gvlocal.sheaf import (
    HilbertPoly1D,
    Order,
    SubobjectCase,
    compare_reduced,
    lemma_iv_audit,
    moduli_enumeration,
    reduced_poly,
    stability_audit_SXbeta,
)

F = Fraction
pos = st.fractions(min_value=F(1, 20), max_value=50, max_denominator=20)
rat = st.fractions(min_value=-50, max_value=50, max_denominator=20)


def test_reduced_poly_examples():
    for i, lc in [(1, 1), (3, 2), (6, 5)]:
        assert reduced_poly(HilbertPoly1D(i * lc, 1)) == (1, F(1, i * lc))
    assert reduced_poly(HilbertPoly1D(7, 0)) == (1, 0)
    assert reduced_poly(HilbertPoly1D(1, 1)) == (1, 1)
    with pytest.raises(ValueError, match="not pure dimension one"):
        reduced_poly(HilbertPoly1D(0, 1))


def test_compare_examples():
    assert compare_reduced(HilbertPoly1D(3, 0), HilbertPoly1D(5, 1)) is Order.LESS
    p = HilbertPoly1D(4, 3)
    assert compare_reduced(p, p) is Order.EQUAL
    assert compare_reduced(HilbertPoly1D(2, 1), HilbertPoly1D(4, 1)) is Order.GREATER


def test_compare_is_eventual_order():
    g, f = HilbertPoly1D(2, 1), HilbertPoly1D(4, 1)
    n = 10**6
    assert g(n) / g.slope > f(n) / f.slope


@given(pos, rat, pos, rat, pos)
def test_compare_scale_invariant(s1, c1, s2, c2, t):
    a, b = HilbertPoly1D(s1, c1), HilbertPoly1D(s2, c2)
    assert compare_reduced(a, b) is compare_reduced(HilbertPoly1D(t * s1, t * c1), b)


@given(pos, rat, pos, rat, pos, rat)
def test_compare_total_preorder(s1, c1, s2, c2, s3, c3):
    a, b, c = HilbertPoly1D(s1, c1), HilbertPoly1D(s2, c2), HilbertPoly1D(s3, c3)
    ab, bc = compare_reduced(a, b), compare_reduced(b, c)
    assert compare_reduced(b, a) is {Order.LESS: Order.GREATER, Order.GREATER: Order.LESS,
                                     Order.EQUAL: Order.EQUAL}[ab]
    if ab is not Order.GREATER and bc is not Order.GREATER:
        assert compare_reduced(a, c) is not Order.GREATER


def test_sxbeta_examples():
    v = stability_audit_SXbeta(1, 5, 5)
    assert v.relation is Order.EQUAL and v.is_whole and v.equality_forces_whole
    v = stability_audit_SXbeta(0, 2, 5)
    assert not v.destabilizing
    v = stability_audit_SXbeta(1, F(5, 2), 5)
    assert v.destabilizing and not v.is_whole


@given(st.integers(-5, 0), pos, pos)
def test_sxbeta_nonpositive_chi_never_destabilizes(chi, a, b):
    lo, hi = sorted((a, b))
    assert not stability_audit_SXbeta(chi, lo, hi).destabilizing


@given(st.integers(-5, 5), st.integers(1, 30), st.integers(1, 30))
def test_sxbeta_equality_forces_whole(chi, a, b):
    lo, hi = sorted((a, b))
    assert stability_audit_SXbeta(chi, lo, hi).equality_forces_whole


def test_sxbeta_precondition():
    with pytest.raises(ValueError):
        stability_audit_SXbeta(1, 3, 2)


def test_lemma_iv_examples():
    audit = lemma_iv_audit(2, 1)
    (row,) = audit.subcurve_rows()
    assert row.margin == F(1, 2) and row.sub == HilbertPoly1D(1, 0)
    assert lemma_iv_audit(1, 3).subcurve_rows() == []
    audit = lemma_iv_audit(6, 5)
    assert [r.margin for r in audit.subcurve_rows()] == [F(1, 30)] * 5
    assert audit.passed


@pytest.mark.parametrize("i", range(1, 7))
@pytest.mark.parametrize("lc", range(1, 6))
def test_lemma_iv_all(i, lc):
    audit = lemma_iv_audit(i, lc, point_lengths=(1, 2, 3))
    assert audit.passed
    for r in audit.subcurve_rows():
        assert r.sub == HilbertPoly1D((i - r.case.j) * lc, 0)
        assert r.margin == F(1, i * lc)
    for r in audit.rows:
        if r.case.kind == "zero_dimensional":
            assert r.sub.chi == 1 - r.case.chi_correction
        if r.case.kind == "embedded":
            assert r.margin > F(1, i * lc)


def test_subobject_validation():
    with pytest.raises(ValueError):
        SubobjectCase("subcurve", 2, 2, 1)
    with pytest.raises(ValueError):
        SubobjectCase("other", 2, 1, 1)


def test_moduli():
    assert moduli_enumeration(2, 6).sheaf == 2
    assert moduli_enumeration(7, 6).is_empty
    assert str(moduli_enumeration(1, 1)) == "{O_C1}"
    for length in range(1, 7):
        for d in range(1, 10):
            assert moduli_enumeration(d, length).is_empty == (d > length)
