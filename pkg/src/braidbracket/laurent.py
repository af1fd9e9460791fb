"""Exact sparse Laurent polynomial arithmetic over the integers.

A Laurent polynomial in one variable is a dict mapping integer exponents to
nonzero integer coefficients.  Two-variable polynomials (used for the
lightened bracket in (A, chi) and the Euler characteristic in (A, H)) are
dicts keyed by exponent pairs.  All arithmetic is exact; zero coefficients
are never stored.
"""

from __future__ import annotations

from typing import Dict, Tuple

Laurent = Dict[int, int]
Laurent2 = Dict[Tuple[int, int], int]  # (first exponent, second exponent) -> coeff


def lp(*pairs: Tuple[int, int]) -> Laurent:
    """Build a Laurent polynomial from (exponent, coefficient) pairs."""
    out: Laurent = {}
    for e, c in pairs:
        if c:
            out[e] = out.get(e, 0) + c
            if out[e] == 0:
                del out[e]
    return out


def lp_add(p: Laurent, q: Laurent) -> Laurent:
    r = dict(p)
    for e, c in q.items():
        s = r.get(e, 0) + c
        if s:
            r[e] = s
        elif e in r:
            del r[e]
    return r


def lp_mul(p: Laurent, q: Laurent) -> Laurent:
    if not p or not q:
        return {}
    r: Laurent = {}
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            e = e1 + e2
            s = r.get(e, 0) + c1 * c2
            if s:
                r[e] = s
            elif e in r:
                del r[e]
    return r


def lp_pow(p: Laurent, k: int) -> Laurent:
    if k < 0:
        raise ValueError("negative powers of a Laurent polynomial are not defined here")
    res: Laurent = {0: 1}
    base = p
    while k:
        if k & 1:
            res = lp_mul(res, base)
        base = lp_mul(base, base)
        k >>= 1
    return res


def lp_shift(p: Laurent, shift: int) -> Laurent:
    """Multiply by A^shift."""
    return {e + shift: c for e, c in p.items()}


def lp_scale(p: Laurent, factor: int) -> Laurent:
    if factor == 0:
        return {}
    return {e: c * factor for e, c in p.items()}


def lp_str(p: Laurent, var: str = "A") -> str:
    """Human-readable form, highest exponent first."""
    if not p:
        return "0"
    pieces = []
    for e in sorted(p, reverse=True):
        c = p[e]
        if e == 0:
            mon = ""
        elif e == 1:
            mon = var
        else:
            mon = f"{var}^{e}"
        if mon == "":
            term = str(c)
        elif c == 1:
            term = mon
        elif c == -1:
            term = "-" + mon
        else:
            term = f"{c}{mon}"
        pieces.append(term)
    out = pieces[0]
    for t in pieces[1:]:
        out += " - " + t[1:] if t.startswith("-") else " + " + t
    return out


def lp2_add_term(r: Laurent2, key: Tuple[int, int], c: int) -> None:
    """In-place add of a single monomial to a two-variable polynomial."""
    if not c:
        return
    s = r.get(key, 0) + c
    if s:
        r[key] = s
    elif key in r:
        del r[key]


def lp2_scale(p: Laurent2, factor: int) -> Laurent2:
    if factor == 0:
        return {}
    return {k: c * factor for k, c in p.items()}


def lp2_str(p: Laurent2, v1: str = "A", v2: str = "H") -> str:
    if not p:
        return "0"
    pieces = []
    for (e1, e2) in sorted(p, reverse=True):
        c = p[(e1, e2)]
        mon = ""
        if e1:
            mon += v1 if e1 == 1 else f"{v1}^{e1}"
        if e2:
            mon += v2 if e2 == 1 else f"{v2}^{e2}"
        if mon == "":
            term = str(c)
        elif c == 1:
            term = mon
        elif c == -1:
            term = "-" + mon
        else:
            term = f"{c}{mon}"
        pieces.append(term)
    out = pieces[0]
    for t in pieces[1:]:
        out += " - " + t[1:] if t.startswith("-") else " + " + t
    return out


# (-A^2 - A^-2), the loop value of a d-circle.
DELTA: Laurent = {2: -1, -2: -1}
