"""Dense exact polynomial arithmetic over Z and over Z[c].

Two layers.  ``IntPoly`` is a univariate polynomial with integer
coefficients, stored dense in ascending order with trailing zeros
stripped.  ``BiPoly`` is a polynomial in a main variable (``z`` while
iterating maps, ``x`` for multiplier polynomials) whose coefficients are
``IntPoly`` values in the parameter ``c``.

Everything is exact.  There is no floating point anywhere in this
module, no modular shortcut, and every division either succeeds exactly
or raises :class:`~dynres.errors.DivisionNotExact`.

The zero polynomial has ``degree None``; read it as "minus infinity".
A plain ``-1`` would invite silent arithmetic on a sentinel, so it is
deliberately not an int.
"""
from __future__ import annotations

import dataclasses
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import DivisionNotExact, NotPerfectPower, ZeroPolynomial


def _strip(coeffs: Sequence) -> tuple:
    n = len(coeffs)
    while n > 0 and not coeffs[n - 1]:
        n -= 1
    return tuple(coeffs[:n])


@dataclasses.dataclass(init=False, eq=True)
class IntPoly:
    """Polynomial in one variable over the integers.

    >>> p = IntPoly([1, 2, 1], "c")
    >>> q = IntPoly([-1, 1], "c")
    >>> (p * q).coeffs
    (-1, -1, 1, 1)
    >>> p.exact_div(IntPoly([1, 1], "c")).coeffs
    (1, 1)
    """

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = (), var: str = "t"):
        cs = [int(a) for a in coeffs]
        self.coeffs = _strip(cs)
        # Display tag only; it takes no part in equality or hashing.
        self.var = var

    @classmethod
    def const(cls, a: int, var: str = "t") -> "IntPoly":
        return cls((a,), var)

    @classmethod
    def gen(cls, var: str = "t") -> "IntPoly":
        return cls((0, 1), var)

    @property
    def degree(self) -> int | None:
        """Degree, or None for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self) -> int:
        if not self.coeffs:
            raise ZeroPolynomial("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def coeff(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def _coerce(self, other) -> "IntPoly | None":
        if isinstance(other, IntPoly):
            return other
        if isinstance(other, int):
            return IntPoly.const(other, self.var)
        return None

    def __add__(self, other) -> "IntPoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = max(len(self.coeffs), len(o.coeffs))
        return IntPoly(
            [self.coeff(i) + o.coeff(i) for i in range(n)], self.var
        )

    __radd__ = __add__

    def __neg__(self) -> "IntPoly":
        return IntPoly([-a for a in self.coeffs], self.var)

    def __sub__(self, other) -> "IntPoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> "IntPoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other) -> "IntPoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not self.coeffs or not o.coeffs:
            return IntPoly((), self.var)
        out = [0] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    out[i + j] += a * b
        return IntPoly(out, self.var)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "IntPoly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = IntPoly.const(1, self.var)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def shift(self, k: int) -> "IntPoly":
        """Multiply by var**k."""
        if k < 0:
            raise ValueError("negative shift")
        if not self.coeffs:
            return self
        return IntPoly((0,) * k + self.coeffs, self.var)

    def exact_div(self, divisor: "IntPoly") -> "IntPoly":
        """Exact quotient in Z[var]; raises DivisionNotExact otherwise."""
        if divisor.is_zero:
            raise ZeroPolynomial("division by the zero polynomial")
        if self.is_zero:
            return IntPoly((), self.var)
        rem = list(self.coeffs)
        dd = len(divisor.coeffs) - 1
        dl = divisor.coeffs[-1]
        if len(rem) - 1 < dd:
            raise DivisionNotExact("degree too small for exact division")
        q = [0] * (len(rem) - dd)
        for i in range(len(rem) - 1, dd - 1, -1):
            if rem[i] == 0:
                continue
            c, r = divmod(rem[i], dl)
            if r:
                raise DivisionNotExact(
                    "leading coefficient %d not divisible by %d" % (rem[i], dl)
                )
            q[i - dd] = c
            for j, b in enumerate(divisor.coeffs):
                rem[i - dd + j] -= c * b
        if any(rem):
            raise DivisionNotExact("nonzero remainder")
        return IntPoly(q, self.var)

    def divexact_scalar(self, n: int) -> "IntPoly":
        """Divide every coefficient by the integer n, exactly."""
        if n == 0:
            raise ZeroPolynomial("scalar division by zero")
        out = []
        for a in self.coeffs:
            c, r = divmod(a, n)
            if r:
                raise DivisionNotExact("coefficient %d not divisible by %d" % (a, n))
            out.append(c)
        return IntPoly(out, self.var)

    def derivative(self) -> "IntPoly":
        return IntPoly(
            [i * a for i, a in enumerate(self.coeffs)][1:], self.var
        )

    def __call__(self, value: Union[int, Fraction]):
        """Evaluate by Horner's rule at an integer or Fraction."""
        acc: Union[int, Fraction] = 0
        for a in reversed(self.coeffs):
            acc = acc * value + a
        return acc

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            a = self.coeffs[i]
            if not a:
                continue
            if i == 0:
                mono = str(a)
            else:
                var = self.var if i == 1 else "%s^%d" % (self.var, i)
                if a == 1:
                    mono = var
                elif a == -1:
                    mono = "-" + var
                else:
                    mono = "%d*%s" % (a, var)
            parts.append(mono)
        return " + ".join(parts).replace("+ -", "- ")


@dataclasses.dataclass(init=False, eq=True)
class BiPoly:
    """Polynomial in a main variable with IntPoly coefficients in c.

    >>> z = BiPoly.gen("z")
    >>> c = BiPoly.cgen("z")
    >>> f = z * z + c          # the quadratic family
    >>> f.degree
    2
    >>> f.deg_c
    1
    """

    coeffs: tuple[IntPoly, ...]

    def __init__(self, coeffs: Iterable = (), main_var: str = "z",
                 cvar: str = "c"):
        lifted = []
        for a in coeffs:
            if isinstance(a, IntPoly):
                lifted.append(IntPoly(a.coeffs, cvar))
            elif isinstance(a, int):
                lifted.append(IntPoly.const(a, cvar))
            else:
                raise ValueError("BiPoly coefficients must be IntPoly or int")
        self.coeffs = _strip(lifted)
        self.main_var = main_var
        self.cvar = cvar

    @classmethod
    def const(cls, a, main_var: str = "z", cvar: str = "c") -> "BiPoly":
        return cls((a,), main_var, cvar)

    @classmethod
    def gen(cls, main_var: str = "z", cvar: str = "c") -> "BiPoly":
        return cls((0, 1), main_var, cvar)

    @classmethod
    def cgen(cls, main_var: str = "z", cvar: str = "c") -> "BiPoly":
        """The parameter c as a constant in the main variable."""
        return cls((IntPoly.gen(cvar),), main_var, cvar)

    @property
    def degree(self) -> int | None:
        return len(self.coeffs) - 1 if self.coeffs else None

    @property
    def deg_c(self) -> int | None:
        degs = [a.degree for a in self.coeffs if not a.is_zero]
        return max(degs) if degs else None

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self) -> IntPoly:
        if not self.coeffs:
            raise ZeroPolynomial("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1].coeffs == (1,)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def coeff(self, i: int) -> IntPoly:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return IntPoly((), self.cvar)

    def _coerce(self, other) -> "BiPoly | None":
        if isinstance(other, BiPoly):
            return other
        if isinstance(other, (IntPoly, int)):
            return BiPoly((other,), self.main_var, self.cvar)
        return None

    def __add__(self, other) -> "BiPoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = max(len(self.coeffs), len(o.coeffs))
        return BiPoly(
            [self.coeff(i) + o.coeff(i) for i in range(n)],
            self.main_var, self.cvar,
        )

    __radd__ = __add__

    def __neg__(self) -> "BiPoly":
        return BiPoly([-a for a in self.coeffs], self.main_var, self.cvar)

    def __sub__(self, other) -> "BiPoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> "BiPoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other) -> "BiPoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not self.coeffs or not o.coeffs:
            return BiPoly((), self.main_var, self.cvar)
        zero = IntPoly((), self.cvar)
        out = [zero] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero:
                continue
            for j, b in enumerate(o.coeffs):
                if not b.is_zero:
                    out[i + j] = out[i + j] + a * b
        return BiPoly(out, self.main_var, self.cvar)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "BiPoly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = BiPoly.const(1, self.main_var, self.cvar)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def shift_main(self, k: int) -> "BiPoly":
        if k < 0:
            raise ValueError("negative shift")
        if not self.coeffs:
            return self
        zero = IntPoly((), self.cvar)
        return BiPoly((zero,) * k + self.coeffs, self.main_var, self.cvar)

    def exact_div(self, divisor: "BiPoly") -> "BiPoly":
        """Exact quotient in Z[c][main]; raises DivisionNotExact otherwise."""
        if divisor.is_zero:
            raise ZeroPolynomial("division by the zero polynomial")
        if self.is_zero:
            return BiPoly((), self.main_var, self.cvar)
        rem = list(self.coeffs)
        dd = len(divisor.coeffs) - 1
        dl = divisor.coeffs[-1]
        if len(rem) - 1 < dd:
            raise DivisionNotExact("degree too small for exact division")
        zero = IntPoly((), self.cvar)
        q = [zero] * (len(rem) - dd)
        for i in range(len(rem) - 1, dd - 1, -1):
            if rem[i].is_zero:
                continue
            qc = rem[i].exact_div(dl)
            q[i - dd] = qc
            for j, b in enumerate(divisor.coeffs):
                rem[i - dd + j] = rem[i - dd + j] - qc * b
        if any(not r.is_zero for r in rem):
            raise DivisionNotExact("nonzero remainder")
        return BiPoly(q, self.main_var, self.cvar)

    def rem_monic(self, mod: "BiPoly") -> "BiPoly":
        """Remainder modulo a polynomial monic in the main variable."""
        if not mod.is_monic:
            raise ValueError("modulus must be monic in the main variable")
        dd = len(mod.coeffs) - 1
        if dd == 0:
            return BiPoly((), self.main_var, self.cvar)
        rem = list(self.coeffs)
        for i in range(len(rem) - 1, dd - 1, -1):
            top = rem[i]
            if top.is_zero:
                continue
            for j in range(dd):
                b = mod.coeffs[j]
                if not b.is_zero:
                    rem[i - dd + j] = rem[i - dd + j] - top * b
            rem[i] = IntPoly((), self.cvar)
        return BiPoly(rem[:dd], self.main_var, self.cvar)

    def compose(self, inner: "BiPoly") -> "BiPoly":
        """Substitute inner for the main variable."""
        acc = BiPoly((), inner.main_var, self.cvar)
        for a in reversed(self.coeffs):
            acc = acc * inner + BiPoly((a,), inner.main_var, self.cvar)
        return acc

    def derivative(self) -> "BiPoly":
        return BiPoly(
            [a * i for i, a in enumerate(self.coeffs)][1:],
            self.main_var, self.cvar,
        )

    def eval_main_int(self, value: int) -> IntPoly:
        """Evaluate the main variable at an integer, leaving a c-polynomial."""
        acc = IntPoly((), self.cvar)
        for a in reversed(self.coeffs):
            acc = acc * value + a
        return acc

    def specialize_c_int(self, c0: int) -> IntPoly:
        """Specialize c to an integer, leaving a main-variable polynomial."""
        return IntPoly([a(c0) for a in self.coeffs], self.main_var)

    def specialize_c(self, c0: Union[int, Fraction]) -> tuple:
        """Coefficients in the main variable after c -> c0, as exact numbers."""
        return _strip([a(c0) for a in self.coeffs])

    def divexact_scalar(self, n: int) -> "BiPoly":
        return BiPoly(
            [a.divexact_scalar(n) for a in self.coeffs],
            self.main_var, self.cvar,
        )

    def scale_c(self, s: IntPoly) -> "BiPoly":
        """Multiply by a polynomial in c alone."""
        return BiPoly([a * s for a in self.coeffs], self.main_var, self.cvar)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            a = self.coeffs[i]
            if a.is_zero:
                continue
            if i == 0:
                parts.append("(%s)" % a)
            elif i == 1:
                parts.append("(%s)*%s" % (a, self.main_var))
            else:
                parts.append("(%s)*%s^%d" % (a, self.main_var, i))
        return " + ".join(parts)


def eval_at_bipoly(p: IntPoly, value: BiPoly) -> BiPoly:
    """Evaluate an integer polynomial at a BiPoly argument."""
    acc = BiPoly((), value.main_var, value.cvar)
    for a in reversed(p.coeffs):
        acc = acc * value + BiPoly.const(a, value.main_var, value.cvar)
    return acc


def _binomial_row(n: int) -> list[int]:
    row = [1]
    for k in range(n):
        row.append(row[-1] * (n - k) // (k + 1))
    return row


def nth_root(p: BiPoly, n: int) -> BiPoly:
    """Exact n-th root of a polynomial monic in its main variable.

    Coefficients are matched from the top down; each one is determined by
    a single exact division by n.  The candidate is then re-expanded and
    compared against the input, so a wrong root can never be returned.

    >>> z = BiPoly.gen("z")
    >>> c = BiPoly.cgen("z")
    >>> r = z * z + c * z - 3
    >>> nth_root(r * r * r, 3) == r
    True
    """
    if n <= 0:
        raise ValueError("root index must be positive")
    if n == 1:
        return p
    if not p.is_monic:
        raise ValueError("nth_root requires a polynomial monic in the main variable")
    deg = p.degree
    if deg % n != 0:
        raise NotPerfectPower("degree %d is not divisible by %d" % (deg, n))
    k = deg // n
    zero = IntPoly((), p.cvar)

    # Maintain root^s for s = 0..n while filling in coefficients of the
    # root from x^k downward.  Adding a term a*x^i updates each power by
    # the binomial expansion; descending order keeps lower powers intact
    # until they have been used.
    root_coeffs = [zero] * k + [IntPoly.const(1, p.cvar)]
    powers = [BiPoly.const(1, p.main_var, p.cvar)]
    base = BiPoly([zero] * k + [IntPoly.const(1, p.cvar)], p.main_var, p.cvar)
    for s in range(1, n + 1):
        powers.append(powers[-1] * base)

    binom = [_binomial_row(s) for s in range(n + 1)]
    for j in range(1, k + 1):
        i = k - j
        target = p.coeff(n * k - j)
        have = powers[n].coeff(n * k - j)
        try:
            a = (target - have).divexact_scalar(n)
        except DivisionNotExact as exc:
            raise NotPerfectPower("coefficient match fails: %s" % exc) from exc
        root_coeffs[i] = a
        if a.is_zero:
            continue
        a_pows = [IntPoly.const(1, p.cvar), a]
        for s in range(n, 0, -1):
            acc = powers[s]
            for t in range(1, s + 1):
                while len(a_pows) <= t:
                    a_pows.append(a_pows[-1] * a)
                term = powers[s - t].scale_c(a_pows[t] * binom[s][t]).shift_main(i * t)
                acc = acc + term
            powers[s] = acc
    root = BiPoly(root_coeffs, p.main_var, p.cvar)
    if powers[n] != p:
        raise NotPerfectPower("re-expansion check failed")
    return root


def interpolate_int(values: Sequence[int], var: str = "c") -> IntPoly:
    """Integer polynomial through (0, v0), (1, v1), ..., (N, vN).

    Exact Lagrange assembly over consecutive integer nodes.  All
    arithmetic is integral; the single final division by N! must be
    exact or the data did not come from an integer polynomial of degree
    at most N, in which case DivisionNotExact propagates.
    """
    n = len(values) - 1
    if n < 0:
        raise ValueError("need at least one value")
    w = _master_poly(n)
    quotients = _master_quotients(n, w)
    fact = 1
    for i in range(2, n + 1):
        fact *= i
    acc = [0] * (n + 1)
    binom = _binomial_row(n)
    for i, y in enumerate(values):
        if y == 0:
            continue
        scale = y * binom[i] * (1 if (n - i) % 2 == 0 else -1)
        qi = quotients[i]
        for j, b in enumerate(qi):
            acc[j] += scale * b
    out = []
    for a in acc:
        q, r = divmod(a, fact)
        if r:
            raise DivisionNotExact("interpolation values are not polynomial of this degree")
        out.append(q)
    return IntPoly(out, var)


def _master_poly(n: int) -> list[int]:
    """Coefficients of (c-0)(c-1)...(c-n)."""
    w = [1]
    for j in range(n + 1):
        nxt = [0] * (len(w) + 1)
        for i, a in enumerate(w):
            nxt[i + 1] += a
            nxt[i] -= a * j
        w = nxt
    return w


def _master_quotients(n: int, w: list[int]) -> list[list[int]]:
    """Synthetic division of the master polynomial by (c - i) for each node."""
    out = []
    for i in range(n + 1):
        q = [0] * (len(w) - 1)
        carry = 0
        for j in range(len(w) - 1, 0, -1):
            carry = w[j] + carry * i
            q[j - 1] = carry
        out.append(q)
    return out


def interpolate_intpolys(values: Sequence[IntPoly], main_var: str = "x",
                         cvar: str = "c") -> BiPoly:
    """BiPoly through (i, values[i]) for consecutive integer nodes in c.

    Each main-variable coefficient is interpolated with the same shared
    node polynomials, so the cost of the node setup is paid once.
    """
    n = len(values) - 1
    if n < 0:
        raise ValueError("need at least one value")
    w = _master_poly(n)
    quotients = _master_quotients(n, w)
    fact = 1
    for i in range(2, n + 1):
        fact *= i
    binom = _binomial_row(n)
    width = max((len(v.coeffs) for v in values), default=0)
    out_coeffs = []
    for xi in range(width):
        acc = [0] * (n + 1)
        for i in range(n + 1):
            y = values[i].coeff(xi)
            if y == 0:
                continue
            scale = y * binom[i] * (1 if (n - i) % 2 == 0 else -1)
            qi = quotients[i]
            for j, b in enumerate(qi):
                acc[j] += scale * b
        cs = []
        for a in acc:
            q, r = divmod(a, fact)
            if r:
                raise DivisionNotExact(
                    "interpolation values are not polynomial of this degree")
            cs.append(q)
        out_coeffs.append(IntPoly(cs, cvar))
    return BiPoly(out_coeffs, main_var, cvar)
