"""Resultants in the main variable, by three independent routes.

Route one is the Sylvester matrix evaluated with fraction-free Bareiss
elimination.  It is slow but entirely elementary, so it serves as the
oracle for everything else.

Route two is evaluation-interpolation: specialize c at consecutive
integers starting from 0, take exact integer resultants per node, and
reassemble by exact Lagrange interpolation.  A degree bound for c is
required; one extra node is always computed and checked against the
interpolated answer, and a mismatch raises BoundTooSmall rather than
returning a wrong polynomial.

Route three applies only to resultants of the shape Res(F, x - G) with
F monic: the answer is the characteristic polynomial of multiplication
by G on the quotient ring modulo F, recovered from exact power sums and
Newton's identities.  No fractions appear; every division is by a small
integer and is checked.

The three routes are cross-tested against each other in the test suite
and must agree wherever they are all defined.
"""
from __future__ import annotations

from .errors import BoundTooSmall, DivisionNotExact, ZeroPolynomial
from .polycore import BiPoly, IntPoly, interpolate_int, interpolate_intpolys

SYLVESTER_MAX_DEG = 12


# ---------------------------------------------------------------------------
# fraction-free determinants


def bareiss_det(rows, is_zero, exact_div, zero, one):
    """Determinant of a square matrix over an integral domain.

    ``rows`` is a list of lists and is consumed.  Division by the
    previous pivot is exact at every step (Bareiss); ``exact_div`` must
    raise if that ever fails, which would indicate corrupted input.
    """
    n = len(rows)
    if n == 0:
        return one
    sign = 1
    prev = one
    for k in range(n - 1):
        if is_zero(rows[k][k]):
            for i in range(k + 1, n):
                if not is_zero(rows[i][k]):
                    rows[k], rows[i] = rows[i], rows[k]
                    sign = -sign
                    break
            else:
                return zero
        pivot = rows[k][k]
        for i in range(k + 1, n):
            head = rows[i][k]
            for j in range(k + 1, n):
                num = rows[i][j] * pivot - head * rows[k][j]
                rows[i][j] = exact_div(num, prev)
            rows[i][k] = zero
        prev = pivot
    det = rows[n - 1][n - 1]
    if sign < 0:
        det = -det
    return det


def _int_div(a: int, b: int) -> int:
    q, r = divmod(a, b)
    if r:
        raise DivisionNotExact("Bareiss division left remainder")
    return q


def det_int(rows: list[list[int]]) -> int:
    return bareiss_det(rows, lambda a: a == 0, _int_div, 0, 1)


def _poly_div(a, b):
    return a.exact_div(b)


def det_intpoly(rows: list[list[IntPoly]], cvar: str = "c") -> IntPoly:
    zero = IntPoly((), cvar)
    one = IntPoly.const(1, cvar)
    return bareiss_det(rows, lambda a: a.is_zero, _poly_div, zero, one)


def det_bipoly(rows: list[list[BiPoly]], main_var: str = "x",
               cvar: str = "c") -> BiPoly:
    zero = BiPoly((), main_var, cvar)
    one = BiPoly.const(1, main_var, cvar)
    return bareiss_det(rows, lambda a: a.is_zero, _poly_div, zero, one)


# ---------------------------------------------------------------------------
# Sylvester matrices


def _sylvester_rows(fc, gc, zero):
    """Sylvester matrix rows from ascending coefficient lists."""
    n = len(fc) - 1
    m = len(gc) - 1
    size = n + m
    rows = []
    fdesc = list(reversed(fc))
    gdesc = list(reversed(gc))
    for i in range(m):
        rows.append([zero] * i + fdesc + [zero] * (m - 1 - i))
    for i in range(n):
        rows.append([zero] * i + gdesc + [zero] * (n - 1 - i))
    assert all(len(r) == size for r in rows)
    return rows


def resultant_int(fc: list[int], gc: list[int]) -> int:
    """Integer resultant with the formal degrees len(fc)-1, len(gc)-1."""
    if len(fc) - 1 <= 0 and len(gc) - 1 <= 0:
        return 1
    rows = _sylvester_rows(fc, gc, 0)
    return det_int(rows)


# ---------------------------------------------------------------------------
# power-sum characteristic polynomials


def _powersums_of_roots(fc, nsums, zero):
    """Power sums t_0..t_{nsums-1} of the roots of a monic polynomial.

    Newton's identities, run over any commutative ring containing the
    coefficients (integers or IntPoly)."""
    n = len(fc) - 1
    t = [zero + n]
    for k in range(1, nsums):
        acc = zero + fc[n - k] * k if k <= n else zero
        for i in range(1, min(k, n + 1)):
            if k - i < len(t):
                acc = acc + fc[n - i] * t[k - i]
        t.append(-acc)
    return t


def _int_polymul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _int_polyrem_monic(a, f):
    """Remainder of a modulo monic f, ascending int lists."""
    n = len(f) - 1
    a = list(a)
    for i in range(len(a) - 1, n - 1, -1):
        top = a[i]
        if top:
            for j in range(n):
                a[i - n + j] -= top * f[j]
            a[i] = 0
    del a[n:]
    return a


def charpoly_int(fc: list[int], gc: list[int]) -> IntPoly:
    """The monic polynomial whose roots are G(alpha) over roots alpha of F.

    F must be monic.  Equals Res_z(F, x - G) taken with the formal
    z-degree of G, which for monic F is independent of that degree.
    """
    if not fc or fc[-1] != 1:
        raise ValueError("charpoly_int needs a monic F")
    n = len(fc) - 1
    if n == 0:
        return IntPoly((1,), "x")
    t = _powersums_of_roots(fc, n, 0)
    g = _int_polyrem_monic(gc, fc)
    s = []
    power = [1]
    for _ in range(n):
        power = _int_polyrem_monic(_int_polymul(power, g), fc)
        s.append(sum(power[k] * t[k] for k in range(len(power))))
    e = [1]
    for i in range(1, n + 1):
        acc = 0
        for j in range(1, i + 1):
            term = e[i - j] * s[j - 1]
            acc = acc + term if j % 2 else acc - term
        q, r = divmod(acc, i)
        if r:
            raise DivisionNotExact("Newton identity division failed")
        e.append(q)
    coeffs = [0] * (n + 1)
    for i in range(n + 1):
        coeffs[n - i] = e[i] if i % 2 == 0 else -e[i]
    return IntPoly(coeffs, "x")


def charpoly_powersum(F: BiPoly, G: BiPoly) -> BiPoly:
    """Symbolic power-sum charpoly: Res in the main variable of (F, x - G).

    Stays inside Z[c] throughout; divisions occur only by the small
    integers of Newton's identities and are checked exact.
    """
    if not F.is_monic:
        raise ValueError("power-sum route needs F monic in the main variable")
    cvar = F.cvar
    n = F.degree
    zero = IntPoly((), cvar)
    if n == 0:
        return BiPoly((1,), "x", cvar)
    fc = [F.coeff(i) for i in range(n + 1)]
    t = _powersums_of_roots(fc, n, zero)
    g = G.rem_monic(F)
    s = []
    power = BiPoly((1,), F.main_var, cvar)
    for _ in range(n):
        power = (power * g).rem_monic(F)
        acc = zero
        for k in range(len(power.coeffs)):
            acc = acc + power.coeff(k) * t[k]
        s.append(acc)
    e = [IntPoly.const(1, cvar)]
    for i in range(1, n + 1):
        acc = zero
        for j in range(1, i + 1):
            term = e[i - j] * s[j - 1]
            acc = acc + term if j % 2 else acc - term
        e.append(acc.divexact_scalar(i))
    coeffs = [zero] * (n + 1)
    for i in range(n + 1):
        coeffs[n - i] = e[i] if i % 2 == 0 else -e[i]
    return BiPoly(coeffs, "x", cvar)


# ---------------------------------------------------------------------------
# symbolic Sylvester routes


def resultant_sylvester(F: BiPoly, G: BiPoly) -> IntPoly:
    """Oracle resultant in the main variable, entries in Z[c]."""
    if F.is_zero or G.is_zero:
        raise ZeroPolynomial("resultant of the zero polynomial")
    cvar = F.cvar
    n, m = F.degree, G.degree
    if n == 0 and m == 0:
        return IntPoly.const(1, cvar)
    fc = [F.coeff(i) for i in range(n + 1)]
    gc = [G.coeff(i) for i in range(m + 1)]
    rows = _sylvester_rows(fc, gc, IntPoly((), cvar))
    return det_intpoly(rows, cvar)


def charpoly_sylvester(F: BiPoly, G: BiPoly) -> BiPoly:
    """Oracle for Res(F, x - G): Sylvester entries live in Z[c][x].

    Uses the formal main-variable degree of G, padding with an
    lc(F)-power exactly as the specialization rule demands.
    """
    if F.is_zero:
        raise ZeroPolynomial("resultant of the zero polynomial")
    cvar = F.cvar
    n = F.degree
    m = max(G.degree if not G.is_zero else 0, 1)
    zero = BiPoly((), "x", cvar)

    def lift(p: IntPoly) -> BiPoly:
        return BiPoly((p,), "x", cvar)

    fc = [lift(F.coeff(i)) for i in range(n + 1)]
    # x - G as a polynomial in the old main variable.
    hc = [-lift(G.coeff(i)) for i in range(m + 1)]
    hc[0] = hc[0] + BiPoly((0, 1), "x", cvar)
    rows = _sylvester_rows(fc, hc, zero)
    return det_bipoly(rows, "x", cvar)


# ---------------------------------------------------------------------------
# evaluation-interpolation routes


def _degc(p: BiPoly) -> int:
    d = p.deg_c
    return 0 if d is None else d


def degc_cap(F: BiPoly, G: BiPoly) -> int:
    """Safe c-degree bound for Res(F, G) straight from the Sylvester shape."""
    return _degc(F) * max(G.degree or 0, 1) + _degc(G) * max(F.degree or 0, 1)


def resultant_interp(F: BiPoly, G: BiPoly, degc_bound: int | None = None) -> IntPoly:
    """Res in the main variable via per-node integer resultants.

    With an explicit bound, one extra node verifies it; otherwise the
    bound is grown geometrically up to the Sylvester cap.
    """
    if F.is_zero or G.is_zero:
        raise ZeroPolynomial("resultant of the zero polynomial")
    n, m = F.degree, G.degree
    cap = degc_cap(F, G)
    values: list[int] = []

    def value_at(c0: int) -> int:
        fc = [F.coeff(i)(c0) for i in range(n + 1)]
        gc = [G.coeff(i)(c0) for i in range(m + 1)]
        return resultant_int(fc, gc)

    def ensure(count: int) -> None:
        while len(values) < count:
            values.append(value_at(len(values)))

    if degc_bound is not None:
        ensure(degc_bound + 2)
        result = interpolate_int(values[: degc_bound + 1], F.cvar)
        if result(degc_bound + 1) != values[degc_bound + 1]:
            raise BoundTooSmall("degree bound %d failed verification" % degc_bound)
        return result

    b = min(16, cap)
    while True:
        ensure(b + 2)
        try:
            result = interpolate_int(values[: b + 1], F.cvar)
        except DivisionNotExact:
            result = None
        if result is not None and result(b + 1) == values[b + 1]:
            return result
        if b >= cap:
            raise BoundTooSmall("hit the Sylvester cap %d without converging" % cap)
        b = min(2 * b, cap)


def charpoly_interp(F: BiPoly, G: BiPoly, degc_bound: int | None = None) -> BiPoly:
    """Res(F, x - G) for monic F via per-node integer charpolys."""
    if not F.is_monic:
        raise ValueError("interpolation charpoly needs F monic")
    n = F.degree
    m = max(G.degree or 0, 1)
    cap = _degc(F) * m + _degc(G) * n
    values: list[IntPoly] = []

    def value_at(c0: int) -> IntPoly:
        fc = [F.coeff(i)(c0) for i in range(n + 1)]
        gc = [G.coeff(i)(c0) for i in range(len(G.coeffs))]
        return charpoly_int(fc, gc)

    def ensure(count: int) -> None:
        while len(values) < count:
            values.append(value_at(len(values)))

    def attempt(b: int) -> BiPoly | None:
        ensure(b + 2)
        try:
            result = interpolate_intpolys(values[: b + 1], "x", F.cvar)
        except DivisionNotExact:
            return None
        if result.specialize_c_int(b + 1) != values[b + 1]:
            return None
        return result

    if degc_bound is not None:
        result = attempt(degc_bound)
        if result is None:
            raise BoundTooSmall("degree bound %d failed verification" % degc_bound)
        return result

    b = min(16, cap)
    while True:
        result = attempt(b)
        if result is not None:
            return result
        if b >= cap:
            raise BoundTooSmall("hit the Sylvester cap %d without converging" % cap)
        b = min(2 * b, cap)


# ---------------------------------------------------------------------------
# dispatchers


def resultant(F: BiPoly, G: BiPoly, method: str = "auto",
              degc_bound: int | None = None) -> IntPoly:
    """Resultant of F and G in their main variable, exact over Z[c]."""
    if method == "sylvester":
        return resultant_sylvester(F, G)
    if method == "interp":
        return resultant_interp(F, G, degc_bound)
    if method != "auto":
        raise ValueError("unknown method %r" % method)
    if max(F.degree or 0, G.degree or 0) <= SYLVESTER_MAX_DEG:
        return resultant_sylvester(F, G)
    return resultant_interp(F, G, degc_bound)


def charpoly_resultant(F: BiPoly, G: BiPoly, method: str = "auto",
                       degc_bound: int | None = None) -> BiPoly:
    """Res(F, x - G) as a polynomial in x over Z[c]."""
    if method == "sylvester":
        return charpoly_sylvester(F, G)
    if method == "powersum":
        return charpoly_powersum(F, G)
    if method == "interp":
        return charpoly_interp(F, G, degc_bound)
    if method != "auto":
        raise ValueError("unknown method %r" % method)
    if not F.is_monic:
        if (F.degree or 0) <= SYLVESTER_MAX_DEG:
            return charpoly_sylvester(F, G)
        raise ValueError("large non-monic charpoly resultants are not supported")
    if (F.degree or 0) <= SYLVESTER_MAX_DEG:
        return charpoly_powersum(F, G)
    return charpoly_interp(F, G, degc_bound)
