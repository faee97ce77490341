"""The Cech nerve of the simplicial circle, level by level.

Each level is a simplicial set; the degeneracy filtration splits it, up to
homology, into summands indexed by admissible degeneracy words.  Degrees at
or above the vertical truncation are unreliable and are not printed.
"""
from suspsplit import cech_nerve, verify_theorem_splitting
from suspsplit.constructions import simplicial_circle

X = cech_nerve(simplicial_circle(3), 3)

for n in range(1, 4):
    rep = verify_theorem_splitting(X, n)
    print(f"level {n}: passed={rep.passed}")
    for J, hwb in rep.block_map.blocks:
        g = hwb.groups
        print("   ", J or "()", {d: g.describe(d) for d in g.degrees if d >= 0 and g.reliable(d)})
