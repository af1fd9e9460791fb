"""Integer homology of the tri-graded complex via Smith normal form.

For each tridegree, H = ker(outgoing d) / im(incoming d); the Betti number
is dim C - rank(out) - rank(in) and the torsion coefficients are the
invariant factors of the incoming matrix that exceed 1.  Everything is
exact arbitrary-precision integer arithmetic; an independent fraction-free
rank (Bareiss) is provided as an oracle for the SNF-derived ranks.
"""

from __future__ import annotations

from typing import Dict, List, Tuple

from .diagram import OrientedDiagram
from .laurent import DELTA, Laurent2, lp_pow
from .states import DEFAULT_CAP
from .bracket import bracket_br, lighten, normalize
from .chain_complex import DifferentialMatrix, Grading, differential_matrices

HomologyTable = Dict[Grading, Tuple[int, Tuple[int, ...]]]  # (betti, torsion)


def smith_normal_form(matrix: List[List[int]]) -> List[int]:
    """Nonzero invariant factors d1 | d2 | ... of an integer matrix."""
    if not matrix or not matrix[0]:
        return []
    m = [list(row) for row in matrix]
    rows, cols = len(m), len(m[0])
    factors: List[int] = []
    t = 0
    while t < rows and t < cols:
        # locate a minimal-magnitude nonzero entry in the remaining block
        piv = None
        best = None
        for i in range(t, rows):
            mi = m[i]
            for j in range(t, cols):
                v = mi[j]
                if v:
                    a = v if v > 0 else -v
                    if best is None or a < best:
                        best, piv = a, (i, j)
                        if a == 1:
                            break
            if best == 1:
                break
        if piv is None:
            break
        i, j = piv
        if i != t:
            m[t], m[i] = m[i], m[t]
        if j != t:
            for row in m:
                row[t], row[j] = row[j], row[t]
        while True:
            p = m[t][t]
            dirty = False
            for i in range(t + 1, rows):
                v = m[i][t]
                if v:
                    q = v // p
                    if q:
                        mt = m[t]
                        mi = m[i]
                        for j in range(t, cols):
                            mi[j] -= q * mt[j]
                    if m[i][t]:
                        dirty = True
            for j in range(t + 1, cols):
                v = m[t][j]
                if v:
                    q = v // p
                    if q:
                        for row in m:
                            row[j] -= q * row[t]
                    if m[t][j]:
                        dirty = True
            if not dirty:
                break
            # a nonzero remainder is strictly smaller than |p|: re-pivot on it
            best = None
            piv = None
            for i in range(t, rows):
                for j in range(t, cols):
                    v = m[i][j]
                    if v:
                        a = abs(v)
                        if best is None or a < best:
                            best, piv = a, (i, j)
            i, j = piv
            if i != t:
                m[t], m[i] = m[i], m[t]
            if j != t:
                for row in m:
                    row[t], row[j] = row[j], row[t]
        # the pivot must divide the rest of the block
        p = m[t][t]
        fixed = True
        for i in range(t + 1, rows):
            for j in range(t + 1, cols):
                if m[i][j] % p:
                    mt, mi = m[t], m[i]
                    for jj in range(t, cols):
                        mt[jj] += mi[jj]
                    fixed = False
                    break
            if not fixed:
                break
        if not fixed:
            continue
        factors.append(abs(p))
        t += 1
    for a, b in zip(factors, factors[1:]):
        assert b % a == 0, "invariant factors out of divisibility order"
    return factors


def _sparse_invariant_factors(entries: Dict[Tuple[int, int], int]) -> List[int]:
    """Invariant factors of a sparse integer matrix.

    Differential blocks are overwhelmingly eliminable on unit pivots, so
    rows with a +-1 entry are pivoted away sparsely (each contributing an
    invariant factor 1) and only the small remainder goes through the
    dense Smith reduction.
    """
    rows: Dict[int, Dict[int, int]] = {}
    for (r, c), v in entries.items():
        if v:
            rows.setdefault(r, {})[c] = v
    col_rows: Dict[int, set] = {}
    for r, row in rows.items():
        for c in row:
            col_rows.setdefault(c, set()).add(r)
    queue = [(r, c) for r, row in rows.items() for c, v in row.items() if v in (1, -1)]
    units = 0
    qi = 0
    while qi < len(queue):
        r, c = queue[qi]
        qi += 1
        row = rows.get(r)
        if row is None:
            continue
        piv = row.get(c)
        if piv not in (1, -1):
            continue
        for r2 in list(col_rows.get(c, ())):
            if r2 == r:
                continue
            row2 = rows.get(r2)
            if row2 is None:
                col_rows[c].discard(r2)
                continue
            coef = row2.get(c)
            if not coef:
                col_rows[c].discard(r2)
                continue
            mult = coef * piv
            for cc, vv in row.items():
                nv = row2.get(cc, 0) - mult * vv
                if nv:
                    row2[cc] = nv
                    col_rows.setdefault(cc, set()).add(r2)
                    if nv in (1, -1):
                        queue.append((r2, cc))
                elif cc in row2:
                    del row2[cc]
            if not row2:
                del rows[r2]
        for cc in row:
            s = col_rows.get(cc)
            if s is not None:
                s.discard(r)
        del rows[r]
        col_rows.pop(c, None)
        units += 1
    rest: List[int] = []
    if rows:
        rids = sorted(rows)
        cset = sorted({c for row in rows.values() for c in row})
        cmap = {c: i for i, c in enumerate(cset)}
        dense = [[0] * len(cset) for _ in rids]
        for i, r in enumerate(rids):
            for c, v in rows[r].items():
                dense[i][cmap[c]] = v
        rest = smith_normal_form(dense)
    return [1] * units + rest


def rank_bareiss(matrix: List[List[int]]) -> int:
    """Rank over Q by fraction-free elimination; independent of SNF."""
    if not matrix or not matrix[0]:
        return 0
    m = [list(row) for row in matrix]
    rows, cols = len(m), len(m[0])
    rank = 0
    prev = 1
    r = 0
    for c in range(cols):
        piv = None
        for i in range(r, rows):
            if m[i][c]:
                piv = i
                break
        if piv is None:
            continue
        if piv != r:
            m[r], m[piv] = m[piv], m[r]
        p = m[r][c]
        for i in range(r + 1, rows):
            mic = m[i][c]
            mi, mr = m[i], m[r]
            for j in range(c, cols):
                mi[j] = (mi[j] * p - mic * mr[j]) // prev
        prev = p
        rank += 1
        r += 1
        if r == rows:
            break
    return rank


def homology_groups(
    diagram: OrientedDiagram,
    cap: int = DEFAULT_CAP,
    matrices: DifferentialMatrix = None,
) -> HomologyTable:
    """Betti numbers and torsion per (i, j, k); trivial groups are omitted."""
    dm = matrices if matrices is not None else differential_matrices(diagram, cap)
    table: HomologyTable = {}
    snf_cache: Dict[Grading, List[int]] = {}

    def factors_at(g: Grading) -> List[int]:
        if g not in snf_cache:
            block = dm.matrices.get(g)
            snf_cache[g] = _sparse_invariant_factors(block) if block else []
        return snf_cache[g]

    for g, states in dm.basis.items():
        i, j, k = g
        dim = len(states)
        rank_out = len(factors_at(g))
        incoming = factors_at((i + 1, j, k))
        betti = dim - rank_out - len(incoming)
        torsion = tuple(f for f in incoming if f > 1)
        assert betti >= 0
        if betti or torsion:
            table[g] = (betti, torsion)
    return table


def homology_to_json(table: HomologyTable, euler: Laurent2 = None) -> dict:
    obj = {
        "groups": [
            {"i": i, "j": j, "k": k, "betti": b, "torsion": list(tor)}
            for (i, j, k), (b, tor) in sorted(table.items())
        ]
    }
    if euler is not None:
        obj["euler"] = {f"({a},{h})": c for (a, h), c in sorted(euler.items())}
    return obj


def euler_characteristic(table: HomologyTable) -> Laurent2:
    """Sum of (-1)^i (-A^2)^j (-H^2)^k betti over the table, in (A, H)."""
    out: Laurent2 = {}
    for (i, j, k), (betti, _) in table.items():
        if not betti:
            continue
        sign = -1 if (i + j + k) % 2 else 1
        key = (2 * j, 2 * k)
        s = out.get(key, 0) + sign * betti
        if s:
            out[key] = s
        elif key in out:
            del out[key]
    return out


def lightened_in_h(diagram: OrientedDiagram, cap: int = DEFAULT_CAP) -> Laurent2:
    """Normalized lightened bracket with chi expanded as -H^2 - H^-2."""
    lightened = normalize(diagram, lighten(bracket_br(diagram, cap=cap)))
    out: Laurent2 = {}
    powers: Dict[int, Dict[int, int]] = {}
    for (a, m), c in lightened.items():
        if m not in powers:
            powers[m] = lp_pow(DELTA, m)  # same coefficients read in H
        for h, hc in powers[m].items():
            key = (a, h)
            s = out.get(key, 0) + c * hc
            if s:
                out[key] = s
            elif key in out:
                del out[key]
    return out


def check_euler_identity(diagram: OrientedDiagram, cap: int = DEFAULT_CAP) -> bool:
    """Graded Euler characteristic of the homology vs the lightened bracket.

    Both sides are compared in the H variable: chi powers of the bracket
    expand through chi = -H^2 - H^-2, while each homology class at level k
    contributes the monomial (-H^2)^k.
    """
    return lightened_in_h(diagram, cap=cap) == euler_characteristic(
        homology_groups(diagram, cap=cap)
    )
