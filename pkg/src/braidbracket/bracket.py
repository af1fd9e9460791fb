"""The refined bracket, its lightened image, and the classical oracle.

``bracket_br`` evaluates the state sum

    sum over states s of  A^(sigma(s)) * (-A^2 - A^-2)^(d(s)) * c(s)

in the free Z[A, A^-1]-module on plane configurations, where d(s) counts
the circles whose half break-point count is odd and c(s) is the nesting
configuration of the remaining (h-type) circles.  The sum is not
normalized; multiplying by (-A)^(-3w) gives the Jones-style version.

``kauffman_oracle`` recomputes the classical unnormalized Kauffman bracket
by an independent route (its own dart pairing and plain circle counting,
no break points, no nesting) so the two pipelines can be cross-checked
through the chi = -A^2 - A^-2 specialization.
"""

from __future__ import annotations

import threading
from typing import Dict, List, Optional, Tuple

from .diagram import OrientedDiagram, SIDE_R
from .laurent import DELTA, Laurent, lp_add, lp_mul, lp_pow, lp_scale, lp_shift
from .states import (
    Configuration,
    DEFAULT_CAP,
    SizeCapError,
    Smoothing,
    configuration_of,
    resolve,
    seifert_state,
    sigma,
)

BracketElement = Dict[str, Laurent]          # canonical configuration -> coefficient
LightenedBracket = Dict[Tuple[int, int], int]  # (A exponent, chi exponent) -> coeff


def bracket_br(
    diagram: OrientedDiagram,
    cap: int = DEFAULT_CAP,
    threads: int = 1,
) -> BracketElement:
    """Exact refined bracket as a map {configuration: Laurent polynomial}."""
    n = len(diagram.active_crossings)
    if n > cap:
        raise SizeCapError(n, cap)
    total = 1 << n
    if threads <= 1 or total < 64:
        return _bracket_range(diagram, 0, total, n)
    chunk = (total + threads - 1) // threads
    parts: List[Optional[BracketElement]] = [None] * threads
    workers = []
    for w in range(threads):
        lo, hi = w * chunk, min((w + 1) * chunk, total)

        def run(w=w, lo=lo, hi=hi):
            parts[w] = _bracket_range(diagram, lo, hi, n)

        th = threading.Thread(target=run)
        th.start()
        workers.append(th)
    for th in workers:
        th.join()
    out: BracketElement = {}
    for part in parts:  # merge in chunk order: associative, deterministic
        if part:
            for key, poly in part.items():
                merged = lp_add(out.get(key, {}), poly)
                if merged:
                    out[key] = merged
                elif key in out:
                    del out[key]
    return out


def _bracket_range(diagram, lo: int, hi: int, n: int) -> BracketElement:
    out: BracketElement = {}
    for bits in range(lo, hi):
        state = resolve(diagram, Smoothing(bits, n))
        d_count = sum(1 for c in state.circles if c.circle_type == "d")
        key = configuration_of(state).canonical
        term = lp_shift(lp_pow(DELTA, d_count), sigma(state))
        merged = lp_add(out.get(key, {}), term)
        if merged:
            out[key] = merged
        elif key in out:
            del out[key]
    return out


def bracket_equal(a: BracketElement, b: BracketElement) -> bool:
    return a == b


def bracket_to_json(b: BracketElement) -> dict:
    return {
        "terms": [
            {"config": cfg, "poly": {str(e): str(c) for e, c in sorted(poly.items())}}
            for cfg, poly in sorted(b.items())
        ]
    }


def skein_expand(
    diagram: OrientedDiagram, v: int
) -> Tuple[OrientedDiagram, OrientedDiagram]:
    """Partial smoothings (D0, D1) of crossing ``v``, kept as decorations.

    The returned diagrams still carry the crossing but with its smoothing
    frozen; the disoriented choice permanently reverses orientation along
    its two new arcs, so downstream break-point counts see them exactly as
    live smoothings would.  ``bracket_br`` then satisfies
    ``<D> = A <D0> + A^-1 <D1>`` on the nose.
    """
    if v not in diagram.active_crossings:
        raise ValueError(f"crossing {v} is not an active crossing")
    out = []
    for bit in (0, 1):
        b = diagram.to_builder()
        b.fused[v] = bit
        out.append(b.build())
    return out[0], out[1]


def add_marked_circle(diagram: OrientedDiagram, break_points: int = 2) -> OrientedDiagram:
    """Disjoint union with a plain circle carrying decorative break points.

    The circle is placed in the outer face.  With ``break_points == 2`` it
    is a d-circle, so the bracket gets multiplied by (-A^2 - A^-2).
    """
    if break_points < 0 or break_points % 2:
        raise ValueError("break point count must be even and nonnegative")
    b = diagram.to_builder()
    ai = b.add_anchor()
    loop = b.add_edge(("a", ai, 0), ("a", ai, 1), seam=0)
    b.anchor_bp[ai] = break_points
    if b.outer is None:
        b.outer = (loop, SIDE_R)
    else:
        b.placements.append(((loop, SIDE_R), b.outer))
    return b.build()


def lighten(b: BracketElement) -> LightenedBracket:
    """Replace each configuration by chi^(number of its circles)."""
    out: LightenedBracket = {}
    for cfg, poly in b.items():
        m = cfg.count("(")
        for e, c in poly.items():
            key = (e, m)
            s = out.get(key, 0) + c
            if s:
                out[key] = s
            elif key in out:
                del out[key]
    return out


def normalize(diagram: OrientedDiagram, x):
    """Multiply by (-A)^(-3 w(D)); accepts either bracket form."""
    w = diagram.writhe()
    sign = -1 if w % 2 else 1
    shift = -3 * w
    if not x:
        return {}
    some_key = next(iter(x))
    if isinstance(some_key, str):  # BracketElement
        return {cfg: lp_scale(lp_shift(p, shift), sign) for cfg, p in x.items()}
    return {(e + shift, m): sign * c for (e, m), c in x.items()}


def specialize_chi_to_delta(lightened: LightenedBracket) -> Laurent:
    """Substitute chi = -A^2 - A^-2; lands on the classical Kauffman bracket."""
    out: Laurent = {}
    powers: Dict[int, Laurent] = {}
    for (e, m), c in lightened.items():
        if m not in powers:
            powers[m] = lp_pow(DELTA, m)
        out = lp_add(out, lp_scale(lp_shift(powers[m], e), c))
    return out


def kauffman_oracle(diagram: OrientedDiagram, cap: int = DEFAULT_CAP) -> Laurent:
    """Classical unnormalized Kauffman bracket: sum A^sigma * delta^(#circles).

    Independent of the refined pipeline: smoothing pairings are rebuilt
    inline and circles are counted by a plain union-find over darts.
    """
    active = diagram.active_crossings
    n = len(active)
    if n > cap:
        raise SizeCapError(n, cap)
    nd = diagram.ndarts
    alpha = diagram.alpha
    base_parent = list(range(nd))

    def find(parent, x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    # unions that do not depend on the smoothing choice
    for d in range(nd):
        a, b = d, alpha[d]
        ra, rb = find(base_parent, a), find(base_parent, b)
        if ra != rb:
            base_parent[max(ra, rb)] = min(ra, rb)
    for d in range(4 * diagram.n, nd, 2):
        ra, rb = find(base_parent, d), find(base_parent, d + 1)
        if ra != rb:
            base_parent[max(ra, rb)] = min(ra, rb)
    for c, bit in diagram.fused.items():
        b4 = 4 * c
        pairs = (
            ((b4, b4 + 1), (b4 + 2, b4 + 3))
            if (diagram.over_parity[c] + bit) & 1
            else ((b4 + 3, b4), (b4 + 1, b4 + 2))
        )
        for a, b in pairs:
            ra, rb = find(base_parent, a), find(base_parent, b)
            if ra != rb:
                base_parent[max(ra, rb)] = min(ra, rb)

    out: Laurent = {}
    for bits in range(1 << n):
        parent = list(base_parent)
        for i, c in enumerate(active):
            b4 = 4 * c
            if (diagram.over_parity[c] + ((bits >> i) & 1)) & 1:
                pairs = ((b4, b4 + 1), (b4 + 2, b4 + 3))
            else:
                pairs = ((b4 + 3, b4), (b4 + 1, b4 + 2))
            for a, b in pairs:
                ra, rb = find(parent, a), find(parent, b)
                if ra != rb:
                    parent[max(ra, rb)] = min(ra, rb)
        loops = len({find(parent, d) for d in range(nd)}) if nd else 0
        s = n - 2 * bits.bit_count()
        out = lp_add(out, lp_shift(lp_pow(DELTA, loops), s))
    return out


def seifert_leading_term(
    diagram: OrientedDiagram, cap: int = DEFAULT_CAP
) -> Tuple[Configuration, Laurent]:
    """Unique maximal-circle-count term of the bracket.

    Asserts the guarantees that make it well defined: the maximal
    configuration is unique, equals the Seifert state's configuration, and
    its coefficient is exactly A^(w(D)).
    """
    b = bracket_br(diagram, cap=cap)
    if not b:
        raise ValueError("empty bracket")
    best = max(b, key=lambda cfg: cfg.count("("))
    top = best.count("(")
    rivals = [cfg for cfg in b if cfg.count("(") == top]
    if len(rivals) != 1:
        raise AssertionError(f"maximal configuration not unique: {sorted(rivals)}")
    sei_cfg = configuration_of(seifert_state(diagram))
    if sei_cfg.canonical != best:
        raise AssertionError(
            f"leading configuration {best!r} differs from Seifert {sei_cfg.canonical!r}"
        )
    w = diagram.writhe()
    if b[best] != {w: 1}:
        raise AssertionError(f"leading coefficient {b[best]} is not A^{w}")
    return sei_cfg, dict(b[best])
