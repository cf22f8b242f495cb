"""Directed paths, the height clock, and transport.

A directed path never decreases any coordinate and travels vertex to
vertex.  It is natural when its parameter equals the height climbed so far;
every directed path reparametrizes onto that clock.  Transport through a
topologized map stays piecewise linear because new breakpoints are inserted
exactly where coordinates cross.
"""

from fractions import Fraction as F

from transcube import (
    DPath,
    Precubical,
    free_sts,
    dpath_length,
    induced_path_map,
    is_dpath,
    is_natural,
    max_min_collapse,
    moore_compose,
    naturalize,
    segment_path,
    symmetry,
    transport,
    Vertex,
    compose,
)
from transcube.paths import dpath_endpoints, naturality_certificate

# The diagonal of the square at unit speed is directed but not natural: at
# time 1 it has climbed height 2.
diagonal = segment_path(2, [(0, (0, 0)), (1, (1, 1))])
print("directed:", bool(is_dpath(diagonal)), "- natural:", is_natural(diagonal))

natural = naturalize(diagonal)
print("naturalized breakpoints:", natural.breakpoints)
print("now natural:", is_natural(natural))

# Transport through the swap fixes the diagonal; through the collapse it
# folds paths onto the sorted side of the square.
print("\nswap fixes the diagonal:", transport(symmetry(1, 2), natural) == natural)
skew = segment_path(2, [(0, (0, 0)), (1, (F(1, 4), F(3, 4))), (2, (1, F(3, 4))), (3, (1, 1))])
moved = transport(max_min_collapse(), skew)
print("crossing inserted at t = 5/3:", any(t == F(5, 3) for t, _ in moved.breakpoints))

# Moore composition in an ambient complex: two edges a -> b -> c.
k = free_sts(
    Precubical(
        1,
        {0: (0, 1, 2), 1: (3, 4)},
        {(3, 1, 0): 0, (3, 1, 1): 1, (4, 1, 0): 1, (4, 1, 1): 2},
    )
)
edge = segment_path(1, [(0, (0,)), (1, (1,))])
e1 = next(c for c in k.cubes[1] if k.labels[c].base == 3)
e2 = next(c for c in k.cubes[1] if k.labels[c].base == 4)
walk = moore_compose(k, DPath(((e1, edge),)), DPath(((e2, edge),)))
print("\ntwo-edge walk length:", dpath_length(walk))
print("endpoints:", dpath_endpoints(k, walk))
print("certificate:", naturality_certificate(walk))

# Between two comparable vertices, a map induces an endomap of the spanned
# face, and the assignment respects composition (a cocycle law).
fold = max_min_collapse()
alpha, beta = Vertex(2, 0), Vertex(2, 0b10)
induced = induced_path_map(fold, alpha, beta)
print("\ninduced map on the edge above", alpha, ":", induced.literal())
lhs = induced_path_map(compose(fold, symmetry(1, 2)), alpha, beta)
rhs = compose(
    induced_path_map(fold, symmetry(1, 2)(alpha), symmetry(1, 2)(beta)),
    induced_path_map(symmetry(1, 2), alpha, beta),
)
print("cocycle law:", lhs.table == rhs.table)
