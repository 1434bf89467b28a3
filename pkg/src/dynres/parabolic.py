"""Classification of rational parameters by cycle type.

For z^d + c with rational c the question is whether some cycle is
non-repelling: superattracting (multiplier 0), attracting (modulus
below 1), or parabolic (multiplier a root of unity).  A unicritical map
has at most one non-repelling cycle, so the first find settles the
parameter.

Everything is decided in exact rational arithmetic:

* candidate parameters come from an integrality constraint on the
  denominator together with exact escape bounds on the numerator;
* parabolicity of delta_m at c is the exact divisibility of the
  specialized polynomial by a cyclotomic polynomial (irreducible, so
  divisibility and a common root are the same thing);
* attracting multipliers are found by a Sturm count on (-1, 1), with a
  bisection-narrowed rational interval kept as the witness;
* a strictly preperiodic rational critical orbit certifies that every
  cycle is repelling, which is how c = -2 is settled.

Floating point appears nowhere.
"""
from __future__ import annotations

import dataclasses
from fractions import Fraction
from math import gcd

from .families import Family, multiplier_poly
from .numtheory import cyclotomic
from .polycore import IntPoly


def naive_height(c: Fraction) -> int:
    """max(|numerator|, denominator) of the reduced fraction."""
    c = Fraction(c)
    return max(abs(c.numerator), c.denominator)


# ---------------------------------------------------------------------------
# escape certificates, all exact


def escape_certificate(fam: Family, c: Fraction) -> str | None:
    """An exact reason why the critical orbit escapes, or None.

    A returned certificate rules out every non-repelling cycle at once.
    """
    c = Fraction(c)
    p, q = abs(c.numerator), c.denominator
    d = fam.d
    if fam.kind == "unicritical":
        if p ** (d - 1) > 2 * q ** (d - 1):
            return "modulus-growth"
        if d == 2 and c > Fraction(1, 4):
            # z^2 + c - z = (z - 1/2)^2 + (c - 1/4), so the real orbit
            # of 0 increases by at least c - 1/4 each step.
            return "real-monotone-escape"
        return None
    if fam.kind == "linearterm":
        if d ** d * p ** d > (2 * d + 2) * ((d + 1) * q) ** d:
            return "modulus-growth"
        if d ** d * p ** d > 2 * (d + 1) ** (d + 1) * q ** d and p > q:
            return "critical-orbit-escape"
        return None
    raise ValueError("no escape bound stated for the %s family" % fam.kind)


def parabolic_height_test(fam: Family, c: Fraction) -> bool:
    """Whether c clears the exact height bound required of a rational
    parameter with a parabolic cycle."""
    H = naive_height(c)
    d = fam.d
    if fam.kind == "unicritical":
        return H ** (d - 1) <= 2 * d ** d
    if fam.kind == "linearterm":
        return H ** d <= (2 * d + 2) * (d + 1) ** d
    raise ValueError("no height bound stated for the %s family" % fam.kind)


def enumerate_candidates(d: int) -> list[Fraction]:
    """All rational c that survive the exact filters for z^d + c.

    The denominator must satisfy q^(d-1) | d^d, and the numerator the
    escape bound |c|^(d-1) <= 2 (for d = 2 also c <= 1/4).  Everything
    else is certified to have no non-repelling cycle, so only these
    need classification.
    """
    fam = Family("unicritical", d)
    qs = [q for q in range(1, d ** d + 1) if d ** d % q ** (d - 1) == 0]
    out = set()
    for q in qs:
        # |p| / q <= 2^(1/(d-1)) exactly: p^(d-1) <= 2 q^(d-1)
        pmax = 1
        while (pmax + 1) ** (d - 1) <= 2 * q ** (d - 1):
            pmax += 1
        for p in range(-pmax, pmax + 1):
            if gcd(p, q) != 1:
                continue
            c = Fraction(p, q)
            if escape_certificate(fam, c) is None:
                out.add(c)
    return sorted(out)


# ---------------------------------------------------------------------------
# exact critical orbit


def critical_orbit_certificate(fam: Family, c: Fraction,
                               max_steps: int = 32,
                               height_cap: int = 10 ** 9):
    """(preperiod, period) when the rational orbit of 0 closes up.

    Returns None when the orbit neither repeats nor is cut off by the
    height cap within max_steps.  A period with preperiod 0 means the
    critical point itself is periodic (a superattracting cycle); a
    positive preperiod certifies that every cycle is repelling.
    """
    if fam.kind != "unicritical":
        raise ValueError("stated for the unicritical family")
    c = Fraction(c)
    seen = {Fraction(0): 0}
    z = Fraction(0)
    for step in range(1, max_steps + 1):
        z = z ** fam.d + c
        if naive_height(z) > height_cap:
            return None
        if z in seen:
            pre = seen[z]
            return pre, step - pre
        seen[z] = step
    return None


# ---------------------------------------------------------------------------
# Sturm counting over Q


def _fpoly_trim(p: list[Fraction]) -> list[Fraction]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _fpoly_rem(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a = list(a)
    while len(a) >= len(b):
        k = a[-1] / b[-1]
        s = len(a) - len(b)
        for i, bi in enumerate(b):
            a[s + i] -= k * bi
        a = _fpoly_trim(a[:-1] + [a[-1]])
        a = _fpoly_trim(a)
        if not a:
            break
    return a


def _fpoly_deriv(p: list[Fraction]) -> list[Fraction]:
    return [i * a for i, a in enumerate(p)][1:]


def _fpoly_eval(p: list[Fraction], t: Fraction) -> Fraction:
    acc = Fraction(0)
    for a in reversed(p):
        acc = acc * t + a
    return acc


def _squarefree_part(p: list[Fraction]) -> list[Fraction]:
    a, b = list(p), _fpoly_deriv(p)
    while b:
        a, b = b, _fpoly_rem(a, b)
    if len(a) <= 1:
        return list(p)
    g = a
    q = list(p)
    # divide p by g exactly
    out = [Fraction(0)] * (len(q) - len(g) + 1)
    while len(q) >= len(g):
        k = q[-1] / g[-1]
        out[len(q) - len(g)] = k
        for i, gi in enumerate(g):
            q[len(q) - len(g) + i] -= k * gi
        q = _fpoly_trim(q)
        if not q:
            break
    return out


def sturm_count(p: list[Fraction], a: Fraction, b: Fraction) -> int:
    """Distinct real roots of p in the half-open interval (a, b]."""
    p = _squarefree_part(_fpoly_trim(list(p)))
    if len(p) <= 1:
        return 0
    chain = [p, _fpoly_deriv(p)]
    while chain[-1]:
        nxt = [-x for x in _fpoly_rem(chain[-2], chain[-1])]
        if not nxt:
            break
        chain.append(nxt)

    def variations(t: Fraction) -> int:
        signs = [v for q in chain if (v := _fpoly_eval(q, t)) != 0]
        return sum(1 for u, v in zip(signs, signs[1:]) if (u > 0) != (v > 0))

    return variations(a) - variations(b)


def _bisect_root_interval(p: list[Fraction], a: Fraction, b: Fraction,
                          width: Fraction = Fraction(1, 64)):
    """Narrow (a, b] to a short subinterval still holding a root."""
    while b - a > width:
        mid = (a + b) / 2
        if sturm_count(p, a, mid) > 0:
            b = mid
        else:
            a = mid
    return a, b


# ---------------------------------------------------------------------------
# classification


@dataclasses.dataclass
class Classification:
    c: Fraction
    status: str
    period: int | None = None
    root_order: int | None = None
    witness: dict = dataclasses.field(default_factory=dict)
    notes: list[str] = dataclasses.field(default_factory=list)

    def line(self) -> str:
        extra = ""
        if self.period is not None:
            extra += " m=%d" % self.period
        if self.root_order is not None:
            extra += " j=%d" % self.root_order
        return "%s: %s%s" % (self.c, self.status, extra)


def _specialized_delta(fam: Family, m: int, c: Fraction,
                       allow_large: bool) -> tuple[list[Fraction], IntPoly]:
    """delta_m at c as exact fractions, plus a cleared integer copy."""
    coeffs = list(multiplier_poly(fam, m, allow_large).delta.specialize_c(c))
    coeffs = [Fraction(a) for a in coeffs]
    den = 1
    for a in coeffs:
        den = den * a.denominator // gcd(den, a.denominator)
    cleared = IntPoly([int(a * den) for a in coeffs], "x")
    return coeffs, cleared


def chebyshev_note(c: Fraction) -> str | None:
    if Fraction(c) == -2:
        return ("conjugate to the degree-2 Chebyshev map on [-2, 2]; "
                "the critical orbit lands on a repelling fixed point")
    return None


def classify(fam: Family, c: Fraction, m_max: int = 6, j_max: int = 12,
             allow_large: bool = False) -> Classification:
    """Decide the cycle type of a rational parameter.

    Tests periods m <= m_max and root-of-unity orders j <= j_max; a
    clean miss is reported as repelling-all-tested when a preperiodic
    critical orbit certifies it, and unresolved otherwise.
    """
    if fam.kind != "unicritical":
        raise ValueError("classification is implemented for z^d + c")
    c = Fraction(c)
    notes = []
    note = chebyshev_note(c)
    if note:
        notes.append(note)

    cert = escape_certificate(fam, c)
    if cert is not None:
        return Classification(c=c, status="excluded-by-escape",
                              witness={"certificate": cert}, notes=notes)

    orbit = critical_orbit_certificate(fam, c)
    if orbit is not None and orbit[0] == 0:
        return Classification(c=c, status="superattracting",
                              period=orbit[1],
                              witness={"critical_orbit": "periodic"},
                              notes=notes)

    for m in range(1, m_max + 1):
        fractions, cleared = _specialized_delta(fam, m, c, allow_large)
        if fractions and fractions[0] == 0:
            return Classification(c=c, status="superattracting", period=m,
                                  witness={"delta_at_0": "0"}, notes=notes)
        for j in range(1, j_max + 1):
            cyc = cyclotomic(j)
            try:
                quotient = cleared.exact_div(cyc)
            except ArithmeticError:
                continue
            return Classification(
                c=c, status="parabolic", period=m, root_order=j,
                witness={"delta": str(cleared), "cyclotomic_factor": str(cyc),
                         "quotient": str(quotient)},
                notes=notes)
        count = sturm_count(fractions, Fraction(-1), Fraction(1))
        # Roots at exactly -1 belong to cyc_2 and were caught above, so
        # the half-open Sturm count equals the open-interval count here.
        if count > 0:
            a, b = _bisect_root_interval(fractions, Fraction(-1), Fraction(1))
            return Classification(
                c=c, status="attracting", period=m,
                witness={"delta": str(cleared), "roots_in_disc": count,
                         "interval": [str(a), str(b)]},
                notes=notes)

    if orbit is not None and orbit[0] > 0:
        return Classification(
            c=c, status="repelling-all-tested",
            witness={"critical_orbit": "preperiodic",
                     "preperiod": orbit[0], "eventual_period": orbit[1],
                     "m_max": m_max, "j_max": j_max},
            notes=notes)
    return Classification(c=c, status="unresolved",
                          witness={"m_max": m_max, "j_max": j_max},
                          notes=notes)


# ---------------------------------------------------------------------------
# the logistic family, for cross-checking


def logistic_bridge(a: Fraction) -> Fraction:
    """Parameter of z^2 + c conjugate to the logistic map a x (1 - x)."""
    a = Fraction(a)
    return (2 * a - a * a) / 4


def classify_logistic(a: Fraction, m_max: int = 6,
                      j_max: int = 12) -> Classification:
    out = classify(Family("unicritical", 2), logistic_bridge(a),
                   m_max=m_max, j_max=j_max)
    out.notes.append("logistic parameter a = %s" % Fraction(a))
    return out
