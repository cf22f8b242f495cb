"""Boundary hom quotients and latching objects, computed two ways.

The degree-n boundary hom-set glues pairs (outer map, inner map) routed
through every cube of dimension below n.  Union-find over the generated
identifications collapses it onto a closed form; the same machinery
computes latching objects of set-valued functors, which coincide with
evaluation at the boundary of the representable.
"""

from transcube import (
    boundary_hom,
    compare_latching_to_boundary,
    latching,
    matching_emptiness_check,
    weighted_coend_eval,
)
from transcube.reedy import boundary_hom_closed_form, constant_obj, hom_obj
from transcube.sts import boundary, representable

# The quotient sizes match the closed form: empty when the source exceeds
# the target or the degree bound, the full hom-set otherwise.
print("boundary hom cardinalities (p, q, degree n):")
for (p, q, n) in [(1, 2, 2), (0, 2, 2), (2, 3, 3), (2, 1, 3), (2, 3, 2)]:
    quot = boundary_hom(p, q, n)
    print(f"  ({p},{q},{n}): {len(quot):2d}   closed form {boundary_hom_closed_form(p, q, n)}")

# Matching data degenerates: out of [n], every degree-n boundary hom-set is
# empty, which is why the degreewise structure reduces to the projective one.
print("\nmatching emptiness at (2, m):", all(matching_emptiness_check(2, m) for m in range(4)))

# A set-valued functor evaluated at a complex via a coend.  For the functor
# of vertices, evaluation returns exactly the vertices of the complex.
vertices_functor = hom_obj(0, 2)
print(
    "\nvertices functor at the square representable:",
    len(weighted_coend_eval(vertices_functor, representable(2))),
)

# Latching objects: computed as a weighted coend over the boundary homs and
# independently as evaluation at the boundary; the two always agree.
const = constant_obj(("*",), 3)
for n in range(4):
    lat = latching(const, n)
    cmp = compare_latching_to_boundary(const, n)
    print(f"latching of the constant functor at n={n}: {len(lat)} (bijective: {cmp.bijective})")

# n = 1 has two classes: the boundary of the interval is two disconnected
# points, so even the constant functor keeps them apart.
print("\nboundary of the interval:", boundary(1).counts())
