"""Finite symmetric transverse sets: build, glue, certify.

A symmetric transverse set grades its cubes by dimension and lets every
cotransverse map act contravariantly.  Representables, boundaries, free
generation from precubical data, pushouts and cell-by-cell assembly are all
computed with explicit finite tables.
"""

from transcube import (
    CubeMap,
    boundary,
    certify_cellular,
    coface,
    free_sts,
    min_max_collapse,
    pushout,
    representable,
    terminal_sts,
)
from transcube.sts import cube_precubical, endo_fixed_cubes, inclusion_map, yoneda_map

# The representable of the square: 4 vertices, 4 edges, and 4 squares (the
# identity, the swap, and the two degenerate collapses).
r2 = representable(2)
print("square representable counts:", r2.counts())
print("its boundary:", boundary(2).counts())

# Free generation multiplies each generating cube by the endomaps of its
# dimension: the free set on the precubical square is the representable.
free_square = free_sts(cube_precubical(2))
print("\nfree on the precubical square:", free_square.counts())

# Glue the 3-cube to its own boundary along the boundary restriction of the
# folding map: the bottom square of the glued cube becomes degenerate.
fold = CubeMap.from_literal("3>3:0,4,4,6,4,5,6,7")
r3, b3 = representable(3), boundary(3)
glued = pushout(inclusion_map(b3, r3), yoneda_map(fold, b3, b3))
x = glued.sts
print("\nglued complex counts:", x.counts())
top = next(glued.from_left(c) for c in r3.cubes[3] if r3.labels[c].is_identity())
bottom_face = x.act(coface(3, 0, 3), top)
side_square = next(
    glued.from_right(c) for c in b3.cubes[2] if b3.labels[c].table == coface(1, 0, 3).table
)
print(
    "bottom face of the glued cube is a degenerate square:",
    bottom_face == x.act(min_max_collapse(), side_square),
)

# Cellular assembly with a certificate: a directed interval from a script.
script = [
    {"dim": 0, "attach": {}},
    {"dim": 0, "attach": {}},
    {"dim": 1, "attach": {0: 0, 1: 1}},
]
interval, certificate, _ = certify_cellular(script, max_dim=1)
print("\ninterval cubes:", interval.counts(), "cells:", certificate.cell_counts)

# The terminal set (one cube per dimension) admits no such certificate: any
# assembled set has |squares| = 4 * (2-cells), never 1, and its unique
# square is fixed by every endomap, which a fresh generator never is.
t = terminal_sts(2)
print("\nterminal counts:", t.counts())
print(
    "endomaps fixing the terminal square:",
    [e.literal() for e in endo_fixed_cubes(t, 2)],
)
