from fractions import Fraction

import pytest

from realwaring.binform import BinaryForm, from_raw_coeffs
from realwaring.delta import restrict_deltas
from realwaring.errors import DimensionError, ParityError, ZeroFormError
from realwaring.params import (
    in_G,
    is_suitable,
    wd_parameters,
    wd_parameters_even,
    wd_parameters_odd,
)

from conftest import random_forms


def test_detailed_example_a2(p2):
    sp = wd_parameters_odd(p2)
    assert sp.s == (1, 25, 625) and sp.delta == 1
    assert sp.trace.m == 12 and sp.trace.escalations == 0


def test_detailed_example_a1(p1):
    sp = wd_parameters_odd(p1)
    assert sp.s == (1, 17, 0) and sp.delta == 0
    assert sp.trace.bounds == {"delta_{d-1}": 8}


def test_remark_form_degenerate_branch(rem23):
    sp = wd_parameters_odd(rem23)
    assert sp.delta == 0
    assert sp.trace.bounds == {"delta_{d-1}": 2}
    assert sp.trace.m == 2
    assert sp.s == (5, 0)


def test_quadratic():
    sp = wd_parameters_even(BinaryForm.from_cvec([1, 0, 1]))
    assert sp.trace.bounds == {"delta_d": 1, "delta_{d-1,0}^-": 1}
    assert sp.s == (3, Fraction(-1, 3)) and sp.delta == 1


def test_y_squared():
    sp = wd_parameters_even(BinaryForm.from_cvec([1, 0, 0]))
    assert sp.delta == 0
    assert sp.trace.bounds == {"delta_{d-1}": 1}
    assert sp.s == (3, 0)


def test_quartic_example_suitable(ex25):
    sp = wd_parameters_even(ex25)
    assert sp.s[1] == 1
    assert sp.delta == (0 if restrict_deltas(ex25).d_is_zero else 1)
    assert is_suitable(ex25, sp.s)


def test_parity_errors(p2, ex25):
    with pytest.raises(ParityError):
        wd_parameters_even(p2)
    with pytest.raises(ParityError):
        wd_parameters_odd(ex25)


def test_zero_form_error():
    with pytest.raises(ZeroFormError):
        wd_parameters(BinaryForm.from_cvec([0, 0, 0]))


def test_escalation_small_coefficients():
    # all bound polynomials have tiny coefficients, so m = nu - 1 = 1 and s = 3
    # makes a guard vanish; the selector must move on to s = 7
    p = BinaryForm.from_cvec([Fraction(-1, 1000), Fraction(3, 1000), 0,
                              Fraction(1, 1000), Fraction(-3, 1000)])
    sp = wd_parameters(p)
    assert sp.trace.m == 1
    assert sp.trace.escalations == 1
    assert sp.s == (7, 1, Fraction(15, 19))
    assert all(v != 0 for _, v in sp.trace.psi_checks)
    assert is_suitable(p, sp.s)


def test_suitable_detailed_example(p2):
    assert is_suitable(p2, [1, 25, 625])


def test_suitable_repeated_parameter(p2):
    rep = is_suitable(p2, [1, 1, 0])
    assert not rep
    assert "s_1 = s_2" in rep.reasons


def test_suitable_wrong_last(p2):
    rep = is_suitable(p2, [1, 25, 624])
    assert not rep and rep.reasons[0].startswith("last slot")


def test_suitable_strictness(ex25):
    assert not is_suitable(ex25, [0, 2, 4], strict=True)
    assert "s* = 0" in is_suitable(ex25, [0, 2, 4], strict=True).reasons
    assert is_suitable(ex25, [0, 2, 4], strict=False)


def test_suitable_dimension(p2):
    with pytest.raises(DimensionError):
        is_suitable(p2, [1, 2])


def test_in_G_example(ex22):
    assert in_G(ex22, [1, 2])


def test_in_G_D(ex22):
    rep = in_G(ex22, [1, 1])
    assert not rep and any(r.startswith("D:") for r in rep.reasons)


def test_in_G_A(ex22):
    rep = in_G(ex22, [0, 2])
    assert not rep and any(r.startswith("A:") for r in rep.reasons)


def test_in_G_B_even():
    # x^2 - y^2: Delta_1 + 2 s Delta_2 = 1 - s^2, so s = 1 puts R onto s
    p = BinaryForm.from_cvec([-1, 0, 1])
    rep = in_G(p, [1])
    assert rep.reasons == ["B: Delta_(d-1) + 2 s Delta_d = 0"]
    assert in_G(p, [2])


def test_in_G_even_D(ex25):
    rep = in_G(ex25, [2, 2])
    assert "D: s - s_1 = 0" in rep.reasons


def test_in_G_omega(rem23):
    rep = in_G(rem23, [3])
    assert "Omega: Delta_d = 0" in rep.reasons


def test_deterministic(p2, ex25):
    assert wd_parameters(p2) == wd_parameters(p2)
    assert wd_parameters(ex25) == wd_parameters(ex25)


def test_random_forms_suitable_and_in_G():
    for p in random_forms(100, seed=99, lo=-20, hi=20):
        sp = wd_parameters(p)
        assert is_suitable(p, sp.s, strict=False), (p, sp)
        if sp.delta:
            assert in_G(p, sp.point)
            assert all(v != 0 for _, v in sp.trace.psi_checks)
            assert sp.trace.m == max([Fraction(p.degree // 2 - 1), *sp.trace.bounds.values()])
