"""Newton polygons over the degree valuation in c.

The valuation here is v(p) = -deg_c(p) on nonzero integer polynomials
in c, with v(0) treated as +infinity (such points simply do not appear
on the polygon).  For a polynomial P(x) over Z[c] the polygon is the
lower convex hull of the points (i, -deg_c a_i) over the nonzero
coefficients a_i.  With this normalization a segment of slope t and
horizontal length l records l roots whose c-degree is t; a polynomial
whose roots all grow like c^t has a single segment of slope t.

Roots at x = 0 have no finite point to sit on; their number is kept
separately as zero_order.
"""
from __future__ import annotations

import dataclasses
from fractions import Fraction

from .families import Family, iterate, multiplier_derivative, multiplier_poly
from .invariants import _cleared_rational_eval, _orbit_product
from .numtheory import dynatomic_degree
from .polycore import BiPoly, IntPoly
from .report import Verdict
from .resultants import charpoly_resultant


def _cross(o, a, b) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


@dataclasses.dataclass(frozen=True)
class NewtonPolygon:
    zero_order: int
    vertices: tuple[tuple[int, int], ...]

    @classmethod
    def of(cls, P: BiPoly) -> "NewtonPolygon":
        if P.is_zero:
            raise ValueError("the zero polynomial has no polygon")
        pts = [(i, -a.degree) for i, a in enumerate(P.coeffs) if not a.is_zero]
        hull: list[tuple[int, int]] = []
        for p in pts:
            while len(hull) >= 2 and _cross(hull[-2], hull[-1], p) <= 0:
                hull.pop()
            hull.append(p)
        return cls(zero_order=pts[0][0], vertices=tuple(hull))

    @property
    def slopes(self) -> list[tuple[Fraction, int]]:
        """(slope, horizontal length) per segment, slopes increasing."""
        out = []
        for (x0, y0), (x1, y1) in zip(self.vertices, self.vertices[1:]):
            out.append((Fraction(y1 - y0, x1 - x0), x1 - x0))
        return out

    def single_slope(self) -> Fraction | None:
        """The common slope if the polygon is one segment, else None."""
        segs = self.slopes
        if self.zero_order == 0 and len(segs) == 1:
            return segs[0][0]
        return None

    @property
    def max_slope(self) -> Fraction | None:
        segs = self.slopes
        return segs[-1][0] if segs else None

    def to_dict(self) -> dict:
        return {"zero_order": self.zero_order,
                "vertices": [list(v) for v in self.vertices]}


# ---------------------------------------------------------------------------
# claimed shapes


def iterate_polygon_check(d: int, k: int) -> Verdict:
    """f^k - z for z^d + c: one segment from (0, -d^(k-1)) to (d^k, 0)."""
    fam = Family("unicritical", d)
    z = BiPoly.gen("z")
    np_ = NewtonPolygon.of(iterate(fam, k) - z)
    want = ((0, -d ** (k - 1)), (d ** k, 0))
    ok = np_.zero_order == 0 and np_.vertices == want
    return Verdict(check="iterate-polygon-single-slope",
                   params={"d": d, "k": k},
                   passed=ok,
                   residual=None if ok else "vertices %s" % (np_.vertices,))


def delta_polygon_check(d: int, m: int, allow_large: bool = False) -> Verdict:
    """delta_m for z^d + c: one segment of slope m (d-1) / d."""
    fam = Family("unicritical", d)
    delta = multiplier_poly(fam, m, allow_large).delta
    np_ = NewtonPolygon.of(delta)
    dm = dynatomic_degree(d, m)
    want = ((0, -(d - 1) * dm // d), (dm // m, 0))
    ok = np_.zero_order == 0 and np_.vertices == want
    return Verdict(check="delta-polygon-single-slope",
                   params={"d": d, "m": m},
                   passed=ok,
                   residual=None if ok else "vertices %s" % (np_.vertices,))


def resultant_polygon_check(d: int, k: int, m: int) -> Verdict:
    """Res_z(f^k - z, x - (f^m)') for z^d + c: one segment of slope
    m (d-1) / d in x."""
    fam = Family("unicritical", d)
    z = BiPoly.gen("z")
    res = charpoly_resultant(iterate(fam, k) - z, multiplier_derivative(fam, m))
    np_ = NewtonPolygon.of(res)
    want = ((0, -m * (d - 1) * d ** (k - 1)), (d ** k, 0))
    ok = np_.zero_order == 0 and np_.vertices == want
    return Verdict(check="resultant-polygon-single-slope",
                   params={"d": d, "k": k, "m": m},
                   passed=ok,
                   residual=None if ok else "vertices %s" % (np_.vertices,))


def orbit_slope_bound_check(d: int, k: int) -> list[Verdict]:
    """For (z-c) z^d + c: the k-th iterate and the orbit product minus
    one have all polygon slopes at most 1."""
    fam = Family("shifted", d)
    out = []
    for name, poly in (("iterate", iterate(fam, k)),
                       ("orbit-product", _orbit_product(d, k) - 1)):
        np_ = NewtonPolygon.of(poly)
        ms = np_.max_slope
        ok = ms is not None and ms <= 1
        out.append(Verdict(check="orbit-slope-bound",
                           params={"d": d, "k": k, "poly": name},
                           passed=ok,
                           residual=None if ok else "max slope %s" % ms))
    return out


def linear_resultant_polygon_check(d: int, k: int) -> list[Verdict]:
    """G_k = Res_z(F_k, x - ((d+1) z - dc)) has every slope equal to 1,
    and its x-constant term is the cleared evaluation of F_k at
    dc / (d+1).

    With the product convention used here, G_k(0) carries no extra
    sign; the opposite resultant argument order would multiply it by
    (-1) ** deg F_k.
    """
    F_k = _orbit_product(d, k) - 1
    z = BiPoly.gen("z")
    dc = BiPoly.cgen("z") * d
    G = charpoly_resultant(F_k, z * (d + 1) - dc)
    np_ = NewtonPolygon.of(G)
    slope = np_.single_slope()
    v1 = Verdict(check="linear-resultant-polygon-slope",
                 params={"d": d, "k": k},
                 passed=slope == 1,
                 residual=None if slope == 1 else
                 "zero_order %d, slopes %s" % (np_.zero_order, np_.slopes))
    expect = _cleared_rational_eval(F_k, IntPoly((0, d), "c"), d + 1)
    got = G.coeff(0)
    v2 = Verdict(check="linear-resultant-constant-term",
                 params={"d": d, "k": k},
                 passed=got == expect,
                 residual=None if got == expect else str(got - expect))
    return [v1, v2]


def polygon_export(d: int, kmax: int, kind: str = "unicritical") -> dict:
    """Vertex data of the iterate polygons, for the delimited reports."""
    fam = Family(kind, d)
    z = BiPoly.gen("z")
    out = {}
    for k in range(1, kmax + 1):
        np_ = NewtonPolygon.of(iterate(fam, k) - z)
        out["%s-iterate-%d" % (fam.label().replace(" ", "-"), k)] = np_.to_dict()
    return out
