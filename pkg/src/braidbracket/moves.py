"""Braid-like Reidemeister rewriting on embedded diagrams.

Move patterns are matched on faces of the combinatorial map:

* ``IIa_remove``: a bigon face whose two crossings have opposite signs,
  whose strands run coherently (parallel), one strand passing over at both
  crossings.  Removal splices the strands through fresh anchors, which are
  then dissolved back into plain edges (or kept when a strand closes into
  a free loop).
* ``IIa_insert``: any two coherently oriented strand sides of a common
  face; the band is pulled across the face and crossed twice, in either
  over/under order.
* ``III`` (variants ``IIIa`` .. ``IIIf``): a triangle face with three
  distinct crossings whose boundary is not cyclically oriented and whose
  over-relation is not cyclic; the triangle is flipped to the other side.
  The variant letter encodes (number of boundary edges traversed with the
  flow, position of the doubly-over strand), an enumeration fixed by this
  library.
* ``RI_insert`` and ``IIb_insert`` are deliberately *excluded* from
  braid-like equivalence and exist as negative controls.

All surgeries rebuild the diagram through the builder and revalidate the
embedding; face references (outer face, component placements) are carried
across the surgery by naming faces through surviving edges.
"""

from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from .diagram import (
    BraidWord,
    DiagramBuilder,
    FaceRef,
    OrientedDiagram,
    SIDE_L,
    SIDE_R,
    braid_closure,
    parse_braid_word,
)


class SiteInvalidError(Exception):
    """The move site no longer matches the diagram it is applied to."""


class GenerationError(Exception):
    """No applicable move was available while generating a pair."""


BRAID_LIKE_KINDS = ("IIa_remove", "IIa_insert", "III")
III_VARIANTS = ("IIIa", "IIIb", "IIIc", "IIId", "IIIe", "IIIf")


@dataclass(frozen=True)
class MoveSite:
    kind: str
    anchor: Tuple
    fingerprint: str

    def __repr__(self):
        return f"MoveSite({self.kind}, {self.anchor})"


def _fingerprint(diagram: OrientedDiagram) -> str:
    blob = repr(
        (
            diagram.signs,
            diagram.over_parity,
            diagram.nanchors,
            diagram.edges,
            diagram.placements,
            diagram.outer_ref,
            sorted(diagram.fused.items()),
            sorted(diagram.anchor_bp.items()),
        )
    ).encode()
    return hashlib.sha256(blob).hexdigest()[:16]


def _global_face_darts(diagram: OrientedDiagram) -> Dict[int, List[int]]:
    out: Dict[int, List[int]] = {}
    for d in range(diagram.ndarts):
        out.setdefault(diagram.global_face_of_dart(d), []).append(d)
    return out


def _is_over_at(diagram: OrientedDiagram, dart: int) -> bool:
    v = dart >> 2
    return (dart & 3) % 2 == diagram.over_parity[v]


def _check_iia_remove(diagram: OrientedDiagram, anchor) -> bool:
    if len(anchor) != 2:
        return False
    u0, u1 = anchor
    if not (0 <= u0 < diagram.ndarts and 0 <= u1 < diagram.ndarts):
        return False
    darts = _global_face_darts(diagram).get(diagram.global_face_of_dart(u0))
    if sorted(darts or ()) != sorted((u0, u1)):
        return False
    v0, v1 = diagram.vertex_of(u0), diagram.vertex_of(u1)
    if v0 >= diagram.n or v1 >= diagram.n or v0 == v1:
        return False
    if v0 in diagram.fused or v1 in diagram.fused:
        return False
    e0, e1 = diagram.edge_of[u0], diagram.edge_of[u1]
    if e0 == e1:
        return False
    if diagram.signs[v0] != -diagram.signs[v1]:
        return False
    if diagram.is_tail[u0] == diagram.is_tail[u1]:
        return False
    return _is_over_at(diagram, u0) == _is_over_at(diagram, diagram.alpha[u0])


def _check_pair_insert(diagram: OrientedDiagram, anchor, coherent: bool) -> bool:
    if len(anchor) != 3:
        return False
    a, b, flag = anchor
    if not (0 <= a < diagram.ndarts and 0 <= b < diagram.ndarts) or a == b:
        return False
    if not isinstance(flag, bool):
        return False
    if diagram.global_face_of_dart(a) != diagram.global_face_of_dart(b):
        return False
    if diagram.edge_of[a] == diagram.edge_of[b]:
        return False
    if diagram.comp_of_vertex[diagram.vertex_of(a)] != diagram.comp_of_vertex[
        diagram.vertex_of(b)
    ]:
        return False
    if coherent:
        return diagram.is_tail[a] is False and diagram.is_tail[b] is True
    return diagram.is_tail[a] == diagram.is_tail[b]


def _tri_frames(diagram: OrientedDiagram, orbit):
    """Per-vertex frames (r, u, o1, o2) of a triangle face walk."""
    u0, u1, u2 = orbit
    frames = []
    for j, u in enumerate(orbit):
        r = diagram.alpha[orbit[(j - 1) % 3]]
        o1 = diagram.sigma(u)
        o2 = diagram.sigma(o1)
        frames.append((r, u, o1, o2))
    return frames


def _check_iii(diagram: OrientedDiagram, anchor) -> Optional[str]:
    """Returns the variant letter of a braid-like triangle, or None."""
    if len(anchor) != 3:
        return None
    u0 = anchor[0]
    if not 0 <= u0 < diagram.ndarts:
        return None
    orbit = [u0]
    d = u0
    for _ in range(2):
        d = diagram.sigma(diagram.alpha[d])
        orbit.append(d)
    if tuple(orbit) != tuple(anchor):
        return None
    if diagram.sigma(diagram.alpha[orbit[2]]) != u0:
        return None
    darts = _global_face_darts(diagram).get(diagram.global_face_of_dart(u0))
    if sorted(darts or ()) != sorted(orbit):
        return None
    vs = [diagram.vertex_of(u) for u in orbit]
    if len(set(vs)) != 3 or any(v >= diagram.n for v in vs):
        return None
    if any(v in diagram.fused for v in vs):
        return None
    es = [diagram.edge_of[u] for u in orbit]
    if len(set(es)) != 3:
        return None
    along = [diagram.is_tail[u] for u in orbit]
    if along[0] == along[1] == along[2]:
        return None  # cyclically oriented triangle: not a braid move
    # strand S_j runs through edge(orbit[j]); who is over at each vertex?
    wins = [0, 0, 0]
    for j in range(3):
        if _is_over_at(diagram, orbit[j]):
            wins[j] += 1          # S_j over at its first vertex vs[j]
        else:
            wins[(j - 1) % 3] += 1  # the arriving strand S_{j-1} is over
    if sorted(wins) != [0, 1, 2]:
        return None  # cyclic over-relation admits no slide
    top = wins.index(2)
    count_along = sum(along)
    marked = along.index(True) if count_along == 1 else along.index(False)
    family = 0 if count_along == 1 else 3
    # offset fixed so the positive braid-relation triangle comes out as IIIa
    return III_VARIANTS[family + (top - marked + 1) % 3]


def find_sites(diagram: OrientedDiagram, kind: str) -> List[MoveSite]:
    """All sites matching the move's left-hand side, deterministically ordered.

    ``kind`` is one of IIa_remove, IIa_insert, IIb_insert, RI_insert, a
    specific III variant (IIIa..IIIf) or the umbrella kind ``III``.  Pair
    insertions are restricted to two strand sides of the same connected
    component (a band between split components would not have a canonical
    side to pass nested pieces on).
    """
    fp = _fingerprint(diagram)
    sites: List[MoveSite] = []
    if kind == "IIa_remove":
        for root, darts in sorted(_global_face_darts(diagram).items()):
            if len(darts) != 2:
                continue
            anchor = tuple(sorted(darts))
            if _check_iia_remove(diagram, anchor):
                sites.append(MoveSite(kind, anchor, fp))
    elif kind in ("IIa_insert", "IIb_insert"):
        coherent = kind == "IIa_insert"
        for root, darts in sorted(_global_face_darts(diagram).items()):
            ds = sorted(darts)
            for i in range(len(ds)):
                for j in range(i + 1, len(ds)):
                    x, y = ds[i], ds[j]
                    if coherent:
                        if diagram.is_tail[x] == diagram.is_tail[y]:
                            continue
                        a, b = (x, y) if not diagram.is_tail[x] else (y, x)
                    else:
                        if diagram.is_tail[x] != diagram.is_tail[y]:
                            continue
                        a, b = x, y
                    for flag in (False, True):
                        anchor = (a, b, flag)
                        if _check_pair_insert(diagram, anchor, coherent):
                            sites.append(MoveSite(kind, anchor, fp))
    elif kind == "RI_insert":
        for e in range(len(diagram.edges)):
            for side in (0, 1):
                for over_first in (False, True):
                    sites.append(MoveSite(kind, (e, side, over_first), fp))
    elif kind == "III" or kind in III_VARIANTS:
        for root, darts in sorted(_global_face_darts(diagram).items()):
            if len(darts) != 3:
                continue
            u0 = min(darts)
            orbit = (
                u0,
                diagram.sigma(diagram.alpha[u0]),
                diagram.sigma(diagram.alpha[diagram.sigma(diagram.alpha[u0])]),
            )
            variant = _check_iii(diagram, orbit)
            if variant is None:
                continue
            if kind == "III" or kind == variant:
                sites.append(MoveSite(variant, orbit, fp))
    else:
        raise ValueError(f"unknown move kind {kind!r}")
    sites.sort(key=lambda s: (s.kind, s.anchor))
    return sites


# -- surgeries -----------------------------------------------------------


def _port_of(diagram: OrientedDiagram, dart: int):
    if dart < 4 * diagram.n:
        return ("x", dart >> 2, dart & 3)
    return ("a", (dart - 4 * diagram.n) >> 1, dart & 1)


def _end_role(diagram: OrientedDiagram, dart: int) -> str:
    return "tail" if diagram.is_tail[dart] else "head"


def _side_ref_of_dart(diagram: OrientedDiagram, dart: int) -> FaceRef:
    """(edge, side) naming the face to the right of the dart."""
    return (diagram.edge_of[dart], SIDE_R if diagram.is_tail[dart] else SIDE_L)


def _remap_dying_refs(
    diagram: OrientedDiagram,
    builder: DiagramBuilder,
    dying_edges: set,
    fallback: Optional[FaceRef],
) -> None:
    """Re-express outer/placement refs that point at edges about to die."""
    face_darts = _global_face_darts(diagram)

    def fix(ref: FaceRef) -> FaceRef:
        if ref[0] not in dying_edges:
            return ref
        gf = diagram.global_face_of_ref(ref)
        for d in face_darts.get(gf, ()):
            if diagram.edge_of[d] not in dying_edges:
                return _side_ref_of_dart(diagram, d)
        if fallback is None:
            raise SiteInvalidError("face reference lost by the surgery")
        return fallback

    if builder.outer is not None:
        builder.outer = fix(builder.outer)
    builder.placements = [(fix(a), fix(b)) for a, b in builder.placements]


def _builder_components(builder: DiagramBuilder) -> Dict[Tuple[str, int], int]:
    """Vertex components of the builder's current (mutated) structure."""
    verts = [("x", i) for i, c in enumerate(builder.crossings) if c is not None]
    verts += [("a", i) for i in range(builder.nanchors)]
    idx = {v: i for i, v in enumerate(verts)}
    parent = list(range(len(verts)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for rec in builder.edges.values():
        if rec is None:
            continue
        a = idx[rec["tail"][:2]]
        b = idx[rec["head"][:2]]
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[rb] = ra
    return {v: find(i) for v, i in idx.items()}


def _edge_vertex(builder: DiagramBuilder, eid: int) -> Tuple[str, int]:
    return builder.edges[eid]["tail"][:2]


def _cleanup_anchors(builder: DiagramBuilder) -> None:
    """Dissolve anchors that merely subdivide a strand (keep loops, marks)."""
    changed = True
    while changed:
        changed = False
        ends: Dict[int, dict] = {}
        for eid, rec in builder.edges.items():
            if rec is None:
                continue
            for role in ("tail", "head"):
                kind, idx, _pos = rec[role]
                if kind == "a":
                    ends.setdefault(idx, {})[role] = eid
        for ai, roles in ends.items():
            if builder.anchor_bp.get(ai):
                continue
            e_out, e_in = roles.get("tail"), roles.get("head")
            if e_out is None or e_in is None or e_out == e_in:
                continue  # free loop (or half-wired during surgery)
            rec_in, rec_out = builder.edges[e_in], builder.edges[e_out]
            merged = builder.add_edge(
                rec_in["tail"], rec_out["head"], rec_in["seam"] + rec_out["seam"]
            )
            builder.remove_edge(e_in)
            builder.remove_edge(e_out)
            builder._remap_refs(e_in, merged)
            builder._remap_refs(e_out, merged)
            _drop_anchor(builder, ai)
            changed = True
            break


def _drop_anchor(builder: DiagramBuilder, ai: int) -> None:
    last = builder.nanchors - 1
    if ai != last:
        for rec in builder.edges.values():
            if rec is None:
                continue
            for role in ("tail", "head"):
                kind, idx, pos = rec[role]
                if kind == "a" and idx == last:
                    rec[role] = ("a", ai, pos)
        if last in builder.anchor_bp:
            builder.anchor_bp[ai] = builder.anchor_bp.pop(last)
    builder.nanchors -= 1


def _apply_iia_remove(diagram: OrientedDiagram, anchor) -> OrientedDiagram:
    u0, u1 = anchor
    b = diagram.to_builder()
    b.from_braid = False
    e0, e1 = diagram.edge_of[u0], diagram.edge_of[u1]
    corridor_refs: List[FaceRef] = []
    splices: List[Tuple[int, int, int]] = []
    for u in (u0, u1):
        v = diagram.vertex_of(u)
        bigon_positions = {u & 3, diagram.alpha[u1 if u == u0 else u0] & 3}
        outs = [4 * v + p for p in range(4) if p not in bigon_positions]
        assert len(outs) == 2
        x1, x2 = outs
        y = x2 if ((x2 & 3) - (x1 & 3)) % 4 == 1 else x1
        corridor_refs.append(_side_ref_of_dart(diagram, y))
        for x in outs:
            partner_bigon = 4 * v + (((x & 3) + 2) & 3)
            q = diagram.alpha[partner_bigon]
            o = 4 * diagram.vertex_of(q) + (((q & 3) + 2) & 3)
            if diagram.is_tail[x]:
                continue  # record each strand once, from its entering end
            assert diagram.is_tail[o], "strand orientation broken through bigon"
            # seam marks on the dying bigon edge stay with the strand
            splices.append(
                (
                    diagram.edge_of[x],
                    diagram.edge_of[o],
                    diagram.edges[diagram.edge_of[partner_bigon]][2],
                )
            )
    assert len(splices) == 2
    _remap_dying_refs(diagram, b, {e0, e1}, corridor_refs[0])
    for e_in, e_out, seam in splices:
        ai = b.add_anchor()
        b.edges[e_in]["head"] = ("a", ai, 0)
        b.edges[e_out]["tail"] = ("a", ai, 1)
        b.edges[e_in]["seam"] += seam
    b.remove_crossing(diagram.vertex_of(u0))
    b.remove_crossing(diagram.vertex_of(u1))
    b.remove_edge(e0)
    b.remove_edge(e1)
    comps = _builder_components(b)
    ra = comps[_edge_vertex(b, corridor_refs[0][0])]
    rb = comps[_edge_vertex(b, corridor_refs[1][0])]
    if ra != rb:
        b.placements.append((corridor_refs[0], corridor_refs[1]))
    _cleanup_anchors(b)
    return b.build()


def _apply_pair_insert(
    diagram: OrientedDiagram, anchor, coherent: bool
) -> OrientedDiagram:
    a, bdart, a_over = anchor
    b = diagram.to_builder()
    b.from_braid = False
    e_u, e_v = diagram.edge_of[a], diagram.edge_of[bdart]
    if coherent:
        # u runs "down" with the face on its left, v "down" with it on the right
        x = b.add_crossing(sign=1, over_parity=1 if a_over else 0)
        y = b.add_crossing(sign=1, over_parity=0 if a_over else 1)
        b.split_edge(e_u, mid_tail=("x", y, 2), mid_head=("x", x, 1))
        b.split_edge(e_v, mid_tail=("x", y, 3), mid_head=("x", x, 0))
        b.add_edge(("x", x, 3), ("x", y, 0))  # u through the band
        b.add_edge(("x", x, 2), ("x", y, 1))  # v through the band
        b.crossings[x]["sign"] = -1 if a_over else 1
        b.crossings[y]["sign"] = 1 if a_over else -1
    elif not diagram.is_tail[a]:
        # anti-parallel, both face sides left of flow: u down, v up
        x = b.add_crossing(sign=1, over_parity=1 if a_over else 0)  # upper
        y = b.add_crossing(sign=1, over_parity=0 if a_over else 1)  # lower
        b.split_edge(e_u, mid_tail=("x", y, 2), mid_head=("x", x, 1))
        b.split_edge(e_v, mid_tail=("x", x, 0), mid_head=("x", y, 3))
        b.add_edge(("x", x, 3), ("x", y, 0))  # u: x then y
        b.add_edge(("x", y, 1), ("x", x, 2))  # v: y then x
        b.crossings[x]["sign"] = 1 if a_over else -1
        b.crossings[y]["sign"] = -1 if a_over else 1
    else:
        # anti-parallel, both sides right of flow: u up, v down
        p = b.add_crossing(sign=1, over_parity=0 if a_over else 1)  # lower
        q = b.add_crossing(sign=1, over_parity=1 if a_over else 0)  # upper
        b.split_edge(e_u, mid_tail=("x", q, 1), mid_head=("x", p, 2))
        b.split_edge(e_v, mid_tail=("x", p, 3), mid_head=("x", q, 0))
        b.add_edge(("x", p, 0), ("x", q, 3))  # u: p then q
        b.add_edge(("x", q, 2), ("x", p, 1))  # v: q then p
        b.crossings[p]["sign"] = -1 if a_over else 1
        b.crossings[q]["sign"] = 1 if a_over else -1
    return b.build()


def _apply_iii(diagram: OrientedDiagram, anchor) -> OrientedDiagram:
    orbit = tuple(anchor)
    b = diagram.to_builder()
    b.from_braid = False
    frames = _tri_frames(diagram, orbit)
    vs = [diagram.vertex_of(u) for u in orbit]
    es = [diagram.edge_of[u] for u in orbit]
    dirs = [diagram.is_tail[u] for u in orbit]
    seams = [diagram.edges[e][2] for e in es]
    over_slots = []
    for j in range(3):
        r, u, o1, o2 = frames[j]
        if (u & 3) % 2 == diagram.over_parity[vs[j]]:
            over_slots.append("u")
        else:
            assert (r & 3) % 2 == diagram.over_parity[vs[j]]
            over_slots.append("r")
    w = [
        b.add_crossing(diagram.signs[vs[j]], 0 if over_slots[j] == "r" else 1)
        for j in range(3)
    ]
    # outside edge ends move: o1 of v_j -> slot 3 of W_{j-1}, o2 -> slot 2 of W_{j+1}
    for j in range(3):
        _, _, o1, o2 = frames[j]
        for dart, target in ((o1, ("x", w[(j - 1) % 3], 3)), (o2, ("x", w[(j + 1) % 3], 2))):
            b.edges[diagram.edge_of[dart]][_end_role(diagram, dart)] = target
    new_edges = []
    for j in range(3):
        if dirs[j]:
            eid = b.add_edge(("x", w[(j + 1) % 3], 0), ("x", w[j], 1), seams[j])
        else:
            eid = b.add_edge(("x", w[j], 1), ("x", w[(j + 1) % 3], 0), seams[j])
        new_edges.append(eid)
    new_tri_ref: FaceRef = (new_edges[0], SIDE_L if dirs[0] else SIDE_R)

    face_darts = _global_face_darts(diagram)
    tri_face = diagram.global_face_of_dart(orbit[0])

    def fix(ref: FaceRef) -> FaceRef:
        if ref[0] not in set(es):
            return ref
        gf = diagram.global_face_of_ref(ref)
        if gf == tri_face:
            return new_tri_ref
        for d in face_darts.get(gf, ()):
            if diagram.edge_of[d] not in set(es):
                return _side_ref_of_dart(diagram, d)
        raise SiteInvalidError("face reference lost by the triangle slide")

    if b.outer is not None:
        b.outer = fix(b.outer)
    b.placements = [(fix(p), fix(q)) for p, q in b.placements]
    for v in vs:
        b.remove_crossing(v)
    for e in es:
        b.remove_edge(e)
    return b.build()


def _apply_ri_insert(diagram: OrientedDiagram, anchor) -> OrientedDiagram:
    e, side, over_first = anchor
    if not 0 <= e < len(diagram.edges):
        raise SiteInvalidError(f"edge {e} out of range")
    b = diagram.to_builder()
    b.from_braid = False
    z = b.add_crossing(sign=1, over_parity=0)
    if side == 0:  # loop on the left of the flow
        b.split_edge(e, mid_tail=("x", z, 2), mid_head=("x", z, 1))
        b.add_edge(("x", z, 3), ("x", z, 0))
        b.crossings[z]["over_parity"] = 1 if over_first else 0
        b.crossings[z]["sign"] = -1 if over_first else 1
    else:  # loop on the right of the flow
        b.split_edge(e, mid_tail=("x", z, 3), mid_head=("x", z, 0))
        b.add_edge(("x", z, 2), ("x", z, 1))
        b.crossings[z]["over_parity"] = 0 if over_first else 1
        b.crossings[z]["sign"] = 1 if over_first else -1
    return b.build()


def apply_move(diagram: OrientedDiagram, site: MoveSite) -> OrientedDiagram:
    """Apply a move found by ``find_sites``; stale sites are rejected."""
    if site.fingerprint != _fingerprint(diagram):
        raise SiteInvalidError("site was found on a different diagram")
    kind = site.kind
    if kind == "IIa_remove":
        if not _check_iia_remove(diagram, site.anchor):
            raise SiteInvalidError("bigon pattern no longer present")
        return _apply_iia_remove(diagram, site.anchor)
    if kind in ("IIa_insert", "IIb_insert"):
        coherent = kind == "IIa_insert"
        if not _check_pair_insert(diagram, site.anchor, coherent):
            raise SiteInvalidError("pair-insertion pattern invalid")
        return _apply_pair_insert(diagram, site.anchor, coherent)
    if kind in III_VARIANTS or kind == "III":
        if _check_iii(diagram, site.anchor) is None:
            raise SiteInvalidError("triangle pattern no longer present")
        return _apply_iii(diagram, site.anchor)
    if kind == "RI_insert":
        return _apply_ri_insert(diagram, site.anchor)
    raise ValueError(f"unknown move kind {kind!r}")


def site_to_json(site: MoveSite) -> dict:
    return {"kind": site.kind, "anchor": list(site.anchor)}


def apply_move_script(diagram: OrientedDiagram, script) -> OrientedDiagram:
    """Replay a move script: a JSON list of {"kind", "anchor"} records.

    Every record must match a live pattern on the diagram it is applied
    to, so scripts either replay exactly or fail with SiteInvalidError.
    """
    import json as _json

    if isinstance(script, (str, bytes)):
        script = _json.loads(script)
    current = diagram
    for rec in script:
        site = MoveSite(rec["kind"], tuple(rec["anchor"]), _fingerprint(current))
        current = apply_move(current, site)
    return current


def random_equivalent_pair(
    seed: int,
    n_moves: int,
    base: BraidWord,
    max_crossings: int = 10,
) -> Tuple[OrientedDiagram, OrientedDiagram]:
    """A deterministic braid-like-isotopic pair (closure(base), moved copy).

    Moves are drawn uniformly from all applicable braid-like sites;
    insertions are withheld once the diagram reaches ``max_crossings``.
    """
    if n_moves < 0:
        raise GenerationError("move count must be nonnegative")
    start = braid_closure(base)
    rng = random.Random(seed)
    current = start
    for _ in range(n_moves):
        sites = list(find_sites(current, "IIa_remove"))
        sites += find_sites(current, "III")
        if current.n + 2 <= max_crossings:
            sites += find_sites(current, "IIa_insert")
        if not sites:
            raise GenerationError("no applicable braid-like move")
        current = apply_move(current, sites[rng.randrange(len(sites))])
    return start, current


def figure4_family(m: int) -> OrientedDiagram:
    """Unknot diagrams with m cancelling curl pairs (writhe 0, fixed Whitney
    index): regularly isotopic to the round circle but generally not
    braid-like isotopic to it, nor to each other."""
    if m < 0:
        raise ValueError("family index must be nonnegative")
    diagram = parse_braid_word("B1")
    edge = 0
    for variant_side in (0, 1):  # left loops (+1 writhe), then right (-1)
        for _ in range(m):
            sites = [
                s
                for s in find_sites(diagram, "RI_insert")
                if s.anchor == (edge, variant_side, False)
            ]
            diagram = apply_move(diagram, sites[0])
            edge = len(diagram.edges) - 2  # downstream half of the split edge
    return diagram
