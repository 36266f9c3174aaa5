"""Smoke tests for the compiled module: exact combinatorics, a numeric
identity, and the round trip through the text syntax."""

import math

import pytest

import mdzeta as mz


def test_field_arithmetic():
    f = mz.make_field(2)
    assert f.basis == "sqrt"
    a = mz.make_element(f, 2, 1)
    b = mz.make_element(f, 2, -1)
    assert (a * b).norm() == 4  # N(2) = 4
    assert a.conj() == b
    assert a.norm() == 2
    assert a.is_totally_positive()
    assert not mz.make_element(f, 1, 1).is_totally_positive()
    e1, e2 = mz.make_element(f, 5, 1).embed()
    assert e1.real == pytest.approx(5 + math.sqrt(2), rel=1e-15)
    assert e2.real == pytest.approx(5 - math.sqrt(2), rel=1e-15)

    with pytest.raises(mz.MdzetaError):
        mz.make_field(12)


def test_sqrt_decimal_oracle():
    assert mz.sqrt_decimal(2, 30) == "1.414213562373095048801688724209"


def test_cone_enumeration():
    f = mz.make_field(2)
    cone = mz.make_real_cone(f, mz.make_element(f, 2, 1), mz.make_element(f, 2, -1))
    pts = mz.enumerate_real(cone, 10)
    assert len(pts) == 10 * 9 // 2
    qi = mz.make_field(-1)
    assert len(mz.enumerate_cplus(qi, 2)) == 6
    assert mz.classify(qi, mz.make_element(qi, 0, 1)) == "plus"
    assert mz.classify(qi, mz.make_element(qi, -3, 0)) == "minus"


def test_shuffle_coefficients():
    combo = mz.integral_shuffle((2, 2), (2, 2))
    assert mz.shuffle_diagram_count((2, 2), (2, 2)) == 36
    expect = {
        "z1(2,2;2,2)": "2", "z1(1,3;1,3)": "8", "z1(1,3;2,2)": "4", "z1(2,2;1,3)": "4",
        "zr(2,2;2,2)": "2", "zr(1,3;1,3)": "8", "zr(1,3;2,2)": "4", "zr(2,2;1,3)": "4",
    }
    assert dict((s, c) for c, s in combo.terms()) == expect


def test_stuffle_expansions():
    assert str(mz.stuffle_imaginary((2, 2), (2, 2))) == "z(4;4) + 2*z1(2,2;2,2)"
    assert len(mz.stuffle_real((1, 2), (3, 4))) == 9
    assert str(mz.mzv_stuffle([2], [2])) == "2*mzv(2,2) + mzv(4)"


def test_combo_text_round_trip():
    combo = mz.integral_shuffle((1, 2), (2, 1))
    assert mz.parse_combo(str(combo)) == combo
    assert mz.canonical_symbol(" z1( 2,2 ; 2,2 ) ") == "z1(2,2;2,2)"


def test_relation_and_printed_diff():
    r = mz.derive_relation(mz.Signature.Imaginary, (2, 2), (2, 2))
    assert mz.compare_with_printed(r) == [("zr(1,3;1,3)", "-8", "-2")]
    real = mz.derive_relation(mz.Signature.Real, (2, 2), (2, 2))
    assert mz.compare_with_printed(real) == []


def test_numeric_identity():
    # 4 zeta(1,3) = zeta(4)
    z13 = mz.eval_mzv([1, 3], 5000)
    z4 = mz.eval_mzv([4], 5000)
    assert abs(4 * z13.value.real - z4.value.real) <= 1e-6

    qi = mz.make_field(-1)
    cplus = mz.make_upper_cone(qi)
    res = mz.eval_symbol(cplus, "z1(2,2;2,2)", mz.Truncation.radius(15))
    assert res.value.real > 0
    assert res.value.imag == 0.0


def test_verification_report():
    r = mz.derive_relation(mz.Signature.Imaginary, (2, 2), (2, 2))
    rep = mz.verify_numeric(r, mz.make_upper_cone(mz.make_field(-1)),
                            mz.Truncation.radius(16))
    assert rep.verdict == "pass"
    assert rep.residuals[-1] < rep.residuals[0]
    assert rep.printed_residuals[-1] > 10 * rep.residuals[-1]
    assert "per_symbol" in rep.to_json()
