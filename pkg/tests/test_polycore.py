import pytest

from dynres.errors import DivisionNotExact, NotPerfectPower
from dynres.polycore import (
    BiPoly,
    IntPoly,
    eval_at_bipoly,
    interpolate_int,
    interpolate_intpolys,
    nth_root,
)


def test_intpoly_basics():
    p = IntPoly([1, 2, 1], "c")
    assert p.degree == 2
    assert p.lc == 1
    assert p.coeff(0) == 1 and p.coeff(5) == 0
    assert (p + p).coeffs == (2, 4, 2)
    assert (p - p).is_zero
    assert (2 * p).coeffs == (2, 4, 2)
    assert (p * IntPoly([-1, 1], "c")).coeffs == (-1, -1, 1, 1)
    assert (IntPoly.gen("c") ** 3).coeffs == (0, 0, 0, 1)
    # trailing zeros are stripped on construction
    assert IntPoly([1, 0, 0], "c").coeffs == (1,)
    assert IntPoly([], "c").is_zero
    assert IntPoly([], "c").degree is None


def test_intpoly_division():
    p = IntPoly([1, 2, 1], "c")
    assert p.exact_div(IntPoly([1, 1], "c")).coeffs == (1, 1)
    with pytest.raises(DivisionNotExact):
        IntPoly([1, 0, 1], "c").exact_div(IntPoly([1, 1], "c"))
    assert IntPoly([2, 4], "c").divexact_scalar(2).coeffs == (1, 2)
    with pytest.raises(DivisionNotExact):
        IntPoly([1, 2], "c").divexact_scalar(2)


def test_intpoly_shift_derivative():
    p = IntPoly([3, 0, 5], "c")
    assert p.shift(2).coeffs == (0, 0, 3, 0, 5)
    assert p.derivative().coeffs == (0, 10)
    with pytest.raises(ValueError):
        p.shift(-1)


def test_bipoly_algebra():
    z = BiPoly.gen("z")
    c = BiPoly.cgen("z")
    f = z * z + c
    assert f.degree == 2
    assert f.deg_c == 1
    assert f.is_monic
    assert f.coeff(0).coeffs == (0, 1)
    assert f.coeff(2).coeffs == (1,)
    g = f * f - f
    assert g.degree == 4
    assert (f ** 3).degree == 6
    assert (f - f).is_zero
    assert (f - f).degree is None


def test_bipoly_compose_and_eval():
    z = BiPoly.gen("z")
    c = BiPoly.cgen("z")
    f = z * z + c
    ff = f.compose(f)
    assert ff == z ** 4 + 2 * c * z ** 2 + c * c + c
    assert f.eval_main_int(1).coeffs == (1, 1)
    assert f.specialize_c_int(2) == IntPoly([2, 0, 1], "z")
    # specialize_c returns plain numbers, ascending
    assert f.specialize_c(2) == (2, 0, 1)
    from fractions import Fraction
    vals = f.specialize_c(Fraction(1, 4))
    assert vals == (Fraction(1, 4), 0, 1)


def test_bipoly_rem_monic():
    z = BiPoly.gen("z")
    c = BiPoly.cgen("z")
    f = z * z + c
    r = f.rem_monic(z - 1)
    assert r == c + 1
    # reduction by a non-monic divisor is refused
    with pytest.raises(ValueError):
        f.rem_monic(2 * z - 1)


def test_bipoly_exact_div():
    z = BiPoly.gen("z")
    c = BiPoly.cgen("z")
    num = (z - c) * (z * z + 3)
    assert num.exact_div(z - c) == z * z + 3
    with pytest.raises(DivisionNotExact):
        (num + 1).exact_div(z - c)


def test_bipoly_scale_c():
    z = BiPoly.gen("z")
    c = BiPoly.cgen("z")
    f = z + c
    assert f.scale_c(IntPoly.const(3, "c")) == 3 * z + 3 * c
    assert f.scale_c(IntPoly([0, 1], "c")) == c * z + c * c


def test_eval_at_bipoly():
    p = IntPoly([1, 0, 1], "x")  # 1 + x^2
    z = BiPoly.gen("z")
    c = BiPoly.cgen("z")
    assert eval_at_bipoly(p, z + c) == (z + c) * (z + c) + 1


def test_nth_root_exact():
    z = BiPoly.gen("z")
    c = BiPoly.cgen("z")
    r = z ** 3 + c * z - 7 * c
    for n in (2, 3, 5):
        assert nth_root(r ** n, n) == r
    assert nth_root(r, 1) == r


def test_nth_root_failures():
    z = BiPoly.gen("z")
    c = BiPoly.cgen("z")
    r = z * z + c
    with pytest.raises(NotPerfectPower):
        nth_root(r * r + 1, 2)
    with pytest.raises(NotPerfectPower):
        nth_root(r, 2)  # odd degree
    with pytest.raises(ValueError):
        nth_root(2 * r, 1 - 2)
    with pytest.raises(ValueError):
        nth_root(2 * (r ** 2), 2)  # not monic


def test_interpolate_int():
    # values of 3c^2 - c + 5 at 0..4
    vals = [3 * t * t - t + 5 for t in range(5)]
    assert interpolate_int(vals, "c").coeffs == (5, -1, 3)
    assert interpolate_int([7], "c").coeffs == (7,)
    with pytest.raises(DivisionNotExact):
        # no integer polynomial passes through these
        interpolate_int([0, 1, 0, 0, 0, 0, 1])


def test_interpolate_intpolys():
    z = BiPoly.gen("z")
    c = BiPoly.cgen("z")
    f = z * z * 3 + (c * c - 1) * z + 5 * c
    vals = [f.specialize_c_int(t) for t in range(f.deg_c + 1)]
    assert interpolate_intpolys(vals, "z", "c") == f
