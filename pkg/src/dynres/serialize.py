"""Canonical text encodings of exact polynomials.

The JSON form is

    {"var": ["c", "x"], "terms": [{"exps": [e_c, e_x], "coef": "..."}]}

with terms sorted by main-variable exponent descending, then by
c-exponent descending, and coefficients as decimal strings so that
arbitrary precision survives any JSON reader.  One variable name means
a univariate polynomial with one exponent per term.  Encoding is
deterministic: encode(decode(s)) == s for anything encode produced,
byte for byte.

The CSV form is one term per row in the same order, with a header
naming the columns; it exists for spreadsheet-style consumers and is
write-only.
"""
from __future__ import annotations

import csv
import io
import json

from .polycore import BiPoly, IntPoly


def poly_terms(obj) -> list[tuple]:
    """Nonzero terms in canonical order.

    IntPoly gives (exponent, coefficient) pairs; BiPoly gives
    (e_c, e_main, coefficient) triples.  Order: main exponent
    descending, then c exponent descending.
    """
    if isinstance(obj, IntPoly):
        return [(e, a) for e in range(len(obj.coeffs) - 1, -1, -1)
                if (a := obj.coeff(e)) != 0]
    if isinstance(obj, BiPoly):
        out = []
        for i in range(len(obj.coeffs) - 1, -1, -1):
            a = obj.coeff(i)
            for e in range(len(a.coeffs) - 1, -1, -1):
                if a.coeff(e) != 0:
                    out.append((e, i, a.coeff(e)))
        return out
    raise ValueError("poly_terms expects IntPoly or BiPoly")


def encode_json(obj) -> str:
    if isinstance(obj, IntPoly):
        doc = {"var": [obj.var],
               "terms": [{"exps": [e], "coef": str(a)}
                         for e, a in poly_terms(obj)]}
    elif isinstance(obj, BiPoly):
        doc = {"var": [obj.cvar, obj.main_var],
               "terms": [{"exps": [ec, em], "coef": str(a)}
                         for ec, em, a in poly_terms(obj)]}
    else:
        raise ValueError("encode_json expects IntPoly or BiPoly")
    return json.dumps(doc, separators=(",", ":")) + "\n"


def decode_json(text: str):
    doc = json.loads(text)
    names = doc["var"]
    if len(names) == 1:
        coeffs: dict[int, int] = {}
        for term in doc["terms"]:
            (e,) = term["exps"]
            coeffs[e] = coeffs.get(e, 0) + int(term["coef"])
        size = max(coeffs, default=-1) + 1
        out = [0] * size
        for e, a in coeffs.items():
            out[e] = a
        return IntPoly(out, names[0])
    if len(names) == 2:
        cvar, main = names
        bump: dict[tuple[int, int], int] = {}
        for term in doc["terms"]:
            ec, em = term["exps"]
            bump[(em, ec)] = bump.get((em, ec), 0) + int(term["coef"])
        degm = max((em for em, _ in bump), default=-1)
        cols = []
        for i in range(degm + 1):
            degc = max((ec for em, ec in bump if em == i), default=-1)
            col = [0] * (degc + 1)
            for (em, ec), a in bump.items():
                if em == i:
                    col[ec] = a
            cols.append(IntPoly(col, cvar))
        return BiPoly(cols, main, cvar)
    raise ValueError("expected one or two variable names")


def encode_csv(obj) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    if isinstance(obj, IntPoly):
        writer.writerow(["e_%s" % obj.var, "coef"])
        for e, a in poly_terms(obj):
            writer.writerow([e, a])
    elif isinstance(obj, BiPoly):
        writer.writerow(["e_%s" % obj.cvar, "e_%s" % obj.main_var, "coef"])
        for ec, em, a in poly_terms(obj):
            writer.writerow([ec, em, a])
    else:
        raise ValueError("encode_csv expects IntPoly or BiPoly")
    return buf.getvalue()
