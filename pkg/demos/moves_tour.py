"""Tour of the move engine: rewriting, invariance, negative controls.

Run:  python demos/moves_tour.py
"""

from braidbracket import (
    apply_move,
    bracket_br,
    find_sites,
    homology_groups,
    parse_braid_word,
    random_equivalent_pair,
)
from braidbracket.diagram import BraidWord

# Cancelling a sigma sigma^-1 pair: the bigon is removable on both sides
# of the annulus, and either removal leaves two nested circles.
pair = parse_braid_word("B2 1 -1")
for site in find_sites(pair, "IIa_remove"):
    print(f"removing bigon {site.anchor}: "
          f"{bracket_br(apply_move(pair, site))}")

# The triangle slide realizes the braid relation on closures.
rel = parse_braid_word("B3 1 2 1")
site = find_sites(rel, "III")[0]
moved = apply_move(rel, site)
target = parse_braid_word("B3 2 1 2")
print(f"slide {site.kind} on [1,2,1] gives the [2,1,2] closure: "
      f"{moved.canonical_code() == target.canonical_code()}")

# Seeded random walks through braid-like moves leave both invariants
# fixed, no matter how the diagram is mangled along the way.
base = BraidWord(2, (1, 1, 1))
for seed in (0, 1, 2):
    d1, d2 = random_equivalent_pair(seed, 10, base, max_crossings=9)
    print(f"seed {seed}: {d1.n} -> {d2.n} crossings, "
          f"bracket equal {bracket_br(d1) == bracket_br(d2)}, "
          f"homology equal {homology_groups(d1) == homology_groups(d2)}")

# The excluded moves are genuinely excluded: one curl insertion (RI) or
# one antiparallel pair insertion (IIb) already changes the bracket.
circle = parse_braid_word("B1")
curl = apply_move(circle, find_sites(circle, "RI_insert")[0])
print(f"RI insertion changes the bracket: "
      f"{bracket_br(curl) != bracket_br(circle)}")
tref = parse_braid_word("B2 1 1 1")
clasp = apply_move(tref, find_sites(tref, "IIb_insert")[0])
print(f"IIb insertion keeps writhe ({clasp.writhe()}) "
      f"but changes the bracket: {bracket_br(clasp) != bracket_br(tref)}")
