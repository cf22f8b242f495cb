"""Directed distances in realized complexes.

Vertex-to-vertex distance is modelled by shortest directed paths on the
1-skeleton (one unit arc per edge, oriented by the 0- and 1-endpoints).
Interior points get certified upper bounds from chains of comparable
waypoints inside shared cubes.
"""

from fractions import Fraction as F

from transcube import (
    DPath,
    PointPresentation,
    Precubical,
    SkeletonDigraph,
    chain_distance_sample,
    dpath_length,
    free_sts,
    naturalize,
    representable,
    segment_path,
    vertex_distance,
)

# Inside one square the skeleton distance agrees with the directed L1
# metric: two steps up, no way sideways.
r2 = representable(2)
ids = {r2.labels[c].table[0]: c for c in r2.cubes[0]}
print("skeleton arcs:", SkeletonDigraph.of(r2).arcs)
print("(0,0) -> (1,1):", vertex_distance(r2, ids[0b00], ids[0b11]))
print("(0,1) -> (1,0):", vertex_distance(r2, ids[0b10], ids[0b01]))

# Two glued edges a -> b -> c: distances route through the shared vertex.
k = free_sts(
    Precubical(
        1,
        {0: (0, 1, 2), 1: (3, 4)},
        {(3, 1, 0): 0, (3, 1, 1): 1, (4, 1, 0): 1, (4, 1, 1): 2},
    )
)
e1 = next(c for c in k.cubes[1] if k.labels[c].base == 3)
e2 = next(c for c in k.cubes[1] if k.labels[c].base == 4)
p = PointPresentation(e1, (F(1, 2),))
q = PointPresentation(e2, (F(1, 4),))
print("\nmidpoint of the first edge to a point of the second:", chain_distance_sample(k, p, q))
print("and back:", chain_distance_sample(k, q, p))

# Path lengths are total height climbed and can never undercut the skeleton.
top = next(c for c in r2.cubes[2] if r2.labels[c].is_identity())
zigzag = naturalize(
    segment_path(2, [(0, (0, 0)), (1, (F(1, 2), F(1, 4))), (2, (1, 1))])
)
path = DPath(((top, zigzag),))
print("\nzigzag length:", dpath_length(path))
print("skeleton floor:", vertex_distance(r2, ids[0b00], ids[0b11]))
