import pytest

from dynres.errors import BoundTooSmall, ZeroPolynomial
from dynres.polycore import BiPoly, IntPoly
from dynres.resultants import (
    charpoly_int,
    charpoly_interp,
    charpoly_powersum,
    charpoly_resultant,
    charpoly_sylvester,
    degc_cap,
    det_int,
    det_intpoly,
    resultant,
    resultant_int,
    resultant_interp,
    resultant_sylvester,
)


def test_det_int():
    assert det_int([[1, 2], [3, 4]]) == -2
    assert det_int([[1, 0, 0], [0, 1, 0], [0, 0, 1]]) == 1
    assert det_int([[2, 0, 1], [1, 3, -1], [0, 5, 4]]) == 39
    # a singular matrix
    assert det_int([[1, 2], [2, 4]]) == 0


def test_det_intpoly():
    c = IntPoly.gen("c")
    one = IntPoly.const(1, "c")
    assert det_intpoly([[c, one], [one, c]], "c") == c * c - 1


def test_resultant_int_orientation():
    # Res(z - a, z - b) = a - b: the second argument is evaluated at
    # the roots of the first
    assert resultant_int([-5, 1], [-3, 1]) == 2
    assert resultant_int([-3, 1], [-5, 1]) == -2
    assert resultant_int([-7, 0, 0, 1], [7]) == 343
    assert resultant_int([3], [5]) == 1


def test_resultant_int_multiplicative():
    # Res(FG, H) = Res(F, H) Res(G, H)
    F = [-1, 1]          # z - 1
    G = [2, 3, 1]        # (z + 1)(z + 2)
    H = [1, 1, 1]
    FG = [-2, -1, 2, 1]
    assert (resultant_int(FG, H)
            == resultant_int(F, H) * resultant_int(G, H))


def test_charpoly_int():
    # roots of z^2 - 2 are +-sqrt(2); squaring them gives (x - 2)^2
    assert charpoly_int([-2, 0, 1], [0, 0, 1]).coeffs == (4, -4, 1)
    assert charpoly_int([-2, 0, 1], [0, 1]).coeffs == (-2, 0, 1)
    with pytest.raises(ValueError):
        charpoly_int([-2, 0, 2], [0, 1])


def test_charpoly_routes_agree():
    z = BiPoly.gen("z")
    c = BiPoly.cgen("z")
    F = z ** 4 + c * z ** 2 - z + 2 * c + 1
    G = 3 * z ** 2 + c * z - 5
    a = charpoly_sylvester(F, G)
    b = charpoly_powersum(F, G)
    d = charpoly_interp(F, G)
    assert a == b == d
    assert a.is_monic
    assert a.degree == 4


def test_charpoly_known_value():
    z = BiPoly.gen("z")
    c = BiPoly.cgen("z")
    x = BiPoly.gen("x")
    cx = BiPoly.cgen("x")
    # Res_z(z^2 + c, x - 2z) = x^2 + 4c
    assert charpoly_resultant(z * z + c, 2 * z) == x * x + 4 * cx


def test_charpoly_nonmonic_sylvester():
    z = BiPoly.gen("z")
    c = BiPoly.cgen("z")
    x = BiPoly.gen("x")
    cx = BiPoly.cgen("x")
    # Res_z(2z - c, x - z) = 2x - c, with the leading-coefficient power
    assert charpoly_sylvester(2 * z - c, z) == 2 * x - cx


def test_resultant_routes_agree():
    z = BiPoly.gen("z")
    c = BiPoly.cgen("z")
    F = z ** 3 + (c * c) * z - 2 * c + 1
    G = z ** 2 - c * z + 3
    assert resultant_sylvester(F, G) == resultant_interp(F, G)
    assert resultant(F, G, method="sylvester") == resultant(F, G)


def test_degc_cap():
    z = BiPoly.gen("z")
    c = BiPoly.cgen("z")
    F = z * z + c
    G = z ** 3 + (c * c) * z
    assert degc_cap(F, G) == 1 * 3 + 2 * 2


def test_bound_too_small():
    z = BiPoly.gen("z")
    c = BiPoly.cgen("z")
    with pytest.raises(BoundTooSmall):
        resultant_interp(z - c, z - 1, degc_bound=0)
    with pytest.raises(BoundTooSmall):
        charpoly_interp(z - c, c * c, degc_bound=1)
    # the honest bound works
    assert resultant_interp(z - c, z - 1, degc_bound=1) == IntPoly([-1, 1], "c")


def test_zero_polynomial_refused():
    z = BiPoly.gen("z")
    zero = z - z
    with pytest.raises(ZeroPolynomial):
        resultant_sylvester(zero, z)
    with pytest.raises(ZeroPolynomial):
        resultant_interp(z, zero)


def test_specialization_commutes():
    z = BiPoly.gen("z")
    c = BiPoly.cgen("z")
    F = z ** 3 - c * z + 1
    G = z ** 2 + 2 * c
    R = resultant(F, G)
    for c0 in (-3, -1, 0, 1, 2, 5):
        fc = [F.coeff(i)(c0) for i in range(4)]
        gc = [G.coeff(i)(c0) for i in range(3)]
        assert R(c0) == resultant_int(fc, gc)
